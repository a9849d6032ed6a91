// Copyright 2026 The Centerline Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "centerline/centering.hpp"
#include "centerline/model.hpp"
#include "centerline/segmentation.hpp"

// The four antecedent-proposal strategies, the candidate filters, and the
// document-level resolution driver.
//
// All strategies walk utterances in order and markables left to right. For an
// anaphor they produce an ordered candidate list; binding and compatibility
// filters run over it and the first survivor wins. There is no scoring and
// no salience weighting.
//
// The functional strategy distinguishes an anaphor in the first clause of an
// utterance (propose the previous Cf in order, then, as a fallback, the
// utterance-internal markables to its left) from one in a subsequent clause
// (stage 2a: already context-bound elements of the utterance left to right;
// stage 2b: the previous Cf; stage 2c: the remaining elements to its left).
// A stage never re-proposes an entity an earlier stage already produced.

namespace centerline {

enum class Strategy { functional, linear, inter_first, intra_first };

inline const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::functional: return "functional";
    case Strategy::linear: return "linear";
    case Strategy::inter_first: return "inter";
    case Strategy::intra_first: return "intra";
  }
  return "?";
}

struct ResolutionConfig {
  Strategy strategy = Strategy::functional;
  bool semantics_enabled = false;
  bool binding_filter_enabled = true;
  bool chain_correct = false;
  // Hook for syntactic overrides (control phenomena etc.); a candidate is
  // dropped when the predicate returns false. Unset means always pass.
  std::function<bool(const Markable& anaphor, const Markable& candidate)> binding_override;
};

enum class CandidateSource { intra_bound, prev_cf, intra_rest, intra_left };

struct Candidate {
  const Markable* markable = nullptr;
  EntityId entity;  // as known to the resolution state
  CandidateSource source = CandidateSource::prev_cf;
  int rank = 0;
};

// ---------------------------------------------------------------------------
// Filters.

// Clause-mate exclusion for pronouns; everything inter-clausal passes.
inline bool binding_filter(const Markable& anaphor, const Markable& cand) {
  return !(anaphor.kind == MarkKind::pronoun && cand.clause == anaphor.clause);
}

// Agreement tags must not clash; with semantics enabled the anaphor's sem tag
// must not clash with the candidate entity's sem tag. A missing tag on either
// side never blocks.
inline bool compatibility_filter(const Markable& anaphor, const Markable& cand,
                                 const std::optional<std::string>& entity_sem,
                                 const ResolutionConfig& cfg) {
  if (anaphor.agr && cand.agr && *anaphor.agr != *cand.agr) return false;
  if (cfg.semantics_enabled && anaphor.sem && entity_sem && *anaphor.sem != *entity_sem)
    return false;
  return true;
}

// ---------------------------------------------------------------------------
// Proposal strategies. Lists are built before filtering; the driver filters.

namespace detail {

// Markables of u strictly preceding the anaphor in reading order.
inline std::vector<const Markable*> markables_left_of(const Utterance& u,
                                                      const Markable& anaphor) {
  std::vector<const Markable*> out;
  for (const Markable* m : utterance_markables(u)) {
    if (m->id == anaphor.id) break;
    out.push_back(m);
  }
  return out;
}

inline void append(std::vector<Candidate>& list, const Markable* m, EntityId entity,
                   CandidateSource src) {
  list.push_back({m, std::move(entity), src, static_cast<int>(list.size())});
}

inline void append_deduped(std::vector<Candidate>& list,
                           std::unordered_set<std::string>& seen, const Markable* m,
                           EntityId entity, CandidateSource src) {
  if (!seen.insert(entity.value).second) return;
  append(list, m, std::move(entity), src);
}

inline bool in_first_clause(const Utterance& u, const Markable& anaphor) {
  return !u.clauses.empty() && u.clauses.front()->id == anaphor.clause;
}

}  // namespace detail

// Functional strategy. First-clause anaphors: the previous Cf in order, then
// the intra-left fallback. Subsequent-clause anaphors: stages 2a/2b/2c. The
// list is duplicate-free over entities.
inline std::vector<Candidate> propose_functional(const Markable& anaphor,
                                                 const Utterance& u,
                                                 const ResolutionState& state) {
  std::vector<Candidate> out;
  std::unordered_set<std::string> seen;
  std::vector<const Markable*> left = detail::markables_left_of(u, anaphor);

  if (detail::in_first_clause(u, anaphor)) {
    for (const auto& e : state.prev_cf)
      detail::append_deduped(out, seen, e.markable, e.entity, CandidateSource::prev_cf);
    for (const Markable* m : left)
      detail::append_deduped(out, seen, m, realized_entity(*m, state),
                             CandidateSource::intra_left);
    return out;
  }

  for (const Markable* m : left)
    if (context_bound(*m, state))
      detail::append_deduped(out, seen, m, realized_entity(*m, state),
                             CandidateSource::intra_bound);
  for (const auto& e : state.prev_cf)
    detail::append_deduped(out, seen, e.markable, e.entity, CandidateSource::prev_cf);
  for (const Markable* m : left)
    detail::append_deduped(out, seen, m, realized_entity(*m, state),
                           CandidateSource::intra_rest);
  return out;
}

// Linear strategy, over the clause-at-a-time segmentation: the previous
// clause's Cf in order, then the clause-internal markables to the left.
inline std::vector<Candidate> propose_linear(const Markable& anaphor,
                                             const Utterance& u_clause,
                                             const ResolutionState& state) {
  std::vector<Candidate> out;
  for (const auto& e : state.prev_cf)
    detail::append(out, e.markable, e.entity, CandidateSource::prev_cf);
  for (const Markable* m : detail::markables_left_of(u_clause, anaphor))
    detail::append(out, m, realized_entity(*m, state), CandidateSource::intra_left);
  return out;
}

// Sentence-external preference: the previous Cf first, then everything
// utterance-internal to the left.
inline std::vector<Candidate> propose_inter_first(const Markable& anaphor,
                                                  const Utterance& u,
                                                  const ResolutionState& state) {
  std::vector<Candidate> out;
  for (const auto& e : state.prev_cf)
    detail::append(out, e.markable, e.entity, CandidateSource::prev_cf);
  for (const Markable* m : detail::markables_left_of(u, anaphor))
    detail::append(out, m, realized_entity(*m, state), CandidateSource::intra_left);
  return out;
}

// Sentence-internal preference: utterance-internal markables to the left
// first (the driver's binding filter prunes them), then the previous Cf.
inline std::vector<Candidate> propose_intra_first(const Markable& anaphor,
                                                  const Utterance& u,
                                                  const ResolutionState& state) {
  std::vector<Candidate> out;
  for (const Markable* m : detail::markables_left_of(u, anaphor))
    detail::append(out, m, realized_entity(*m, state), CandidateSource::intra_left);
  for (const auto& e : state.prev_cf)
    detail::append(out, e.markable, e.entity, CandidateSource::prev_cf);
  return out;
}

inline std::vector<Candidate> propose(const Markable& anaphor, const Utterance& u,
                                      const ResolutionState& state, Strategy strategy) {
  switch (strategy) {
    case Strategy::functional: return propose_functional(anaphor, u, state);
    case Strategy::linear: return propose_linear(anaphor, u, state);
    case Strategy::inter_first: return propose_inter_first(anaphor, u, state);
    case Strategy::intra_first: return propose_intra_first(anaphor, u, state);
  }
  return {};
}

inline std::string stage_label(Strategy strategy, CandidateSource src, bool first_clause) {
  if (strategy == Strategy::functional) {
    switch (src) {
      case CandidateSource::intra_bound: return "2a";
      case CandidateSource::prev_cf: return first_clause ? "step1" : "2b";
      case CandidateSource::intra_rest: return "2c";
      case CandidateSource::intra_left: return "fallback";
    }
  }
  return src == CandidateSource::prev_cf ? "inter" : "intra";
}

// ---------------------------------------------------------------------------
// Reports.

enum class Outcome { correct, wrong, unresolved };

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::correct: return "correct";
    case Outcome::wrong: return "wrong";
    case Outcome::unresolved: return "unresolved";
  }
  return "?";
}

struct ReportRow {
  std::string mark_id;
  MarkKind kind = MarkKind::none;
  std::optional<EntityId> predicted;
  std::optional<std::string> antecedent;  // chosen antecedent markable id
  std::optional<std::string> stage;
  EntityId gold;
  Outcome outcome = Outcome::unresolved;
  bool false_positive = false;  // filled in by evaluation
};

struct ReportCenter {
  EntityId entity;
  std::string markable;
  std::string surface;
};

struct UtteranceRecord {
  int index = 0;
  std::string matrix_clause;
  std::optional<ReportCenter> cb;
  std::vector<ReportCenter> cf;
};

struct ResolutionReport {
  std::string doc_id;
  ResolutionConfig config;
  std::vector<ReportRow> rows;  // one per anaphoric markable, reading order
  std::vector<UtteranceRecord> utterances;

  const ReportRow* find(const std::string& mark_id) const {
    for (const auto& r : rows)
      if (r.mark_id == mark_id) return &r;
    return nullptr;
  }
};

// Candidate lists as produced during a pass, for inspection and oracles.
struct ResolveTrace {
  struct Proposal {
    std::string anaphor;
    std::vector<Candidate> candidates;  // before filtering
  };
  std::vector<Proposal> proposals;
};

// ---------------------------------------------------------------------------
// Driver.

// Resolves a whole document under one configuration. Gold entities of
// anaphoric markables are never consulted by proposal or filter logic; they
// only enter the report rows for scoring. Unhandled anaphor kinds are
// recorded as unresolved.
inline ResolutionReport resolve_document(const Document& doc, const ResolutionConfig& cfg,
                                         ResolveTrace* trace = nullptr) {
  std::vector<Utterance> utterances = cfg.strategy == Strategy::linear
                                          ? clause_segmentation_linear(doc)
                                          : segment(doc);
  ResolutionState state;
  state.chain_correct = cfg.chain_correct;

  ResolutionReport report;
  report.doc_id = doc.id;
  report.config = cfg;

  auto passes = [&](const Markable& anaphor, const Candidate& c) {
    if (cfg.binding_filter_enabled && !binding_filter(anaphor, *c.markable)) return false;
    if (cfg.binding_override && !cfg.binding_override(anaphor, *c.markable)) return false;
    return compatibility_filter(anaphor, *c.markable, doc.entity_sem(c.entity), cfg);
  };

  for (const Utterance& u : utterances) {
    state.begin_utterance(u.index);
    for (const Markable* m : utterance_markables(u)) {
      if (is_anaphoric(m->kind)) {
        ReportRow row;
        row.mark_id = m->id;
        row.kind = m->kind;
        row.gold = m->entity;
        if (is_resolvable(m->kind)) {
          std::vector<Candidate> cands = propose(*m, u, state, cfg.strategy);
          if (trace) trace->proposals.push_back({m->id, cands});
          const Candidate* survivor = nullptr;
          for (const Candidate& c : cands) {
            if (passes(*m, c)) {
              survivor = &c;
              break;
            }
          }
          if (survivor) {
            std::string stage = stage_label(cfg.strategy, survivor->source,
                                            detail::in_first_clause(u, *m));
            state.resolved[m->id] = {survivor->entity, survivor->markable->id, stage};
            row.predicted = survivor->entity;
            row.antecedent = survivor->markable->id;
            row.stage = stage;
            row.outcome = survivor->entity == m->entity ? Outcome::correct : Outcome::wrong;
          } else {
            state.unresolved.insert(m->id);
          }
        } else {
          state.unresolved.insert(m->id);
        }
        report.rows.push_back(std::move(row));
      }
      note_processed(state, *m);
    }

    std::vector<CenterEntry> cf = compute_cf(u, state);
    std::optional<CenterEntry> cb = compute_cb(state.prev_cf, u, state);
    UtteranceRecord rec;
    rec.index = u.index;
    rec.matrix_clause = u.matrix->id;
    if (cb) rec.cb = ReportCenter{cb->entity, cb->markable->id, cb->markable->surface};
    for (const auto& e : cf)
      rec.cf.push_back({e.entity, e.markable->id, e.markable->surface});
    report.utterances.push_back(std::move(rec));
    state.finish_utterance(std::move(cf));
  }
  return report;
}

// One report per strategy (enum order), sharing the other toggles.
inline std::vector<ResolutionReport> resolve_all_strategies(const Document& doc,
                                                            ResolutionConfig cfg) {
  std::vector<ResolutionReport> out;
  for (Strategy s : {Strategy::functional, Strategy::linear, Strategy::inter_first,
                     Strategy::intra_first}) {
    cfg.strategy = s;
    out.push_back(resolve_document(doc, cfg));
  }
  return out;
}

}  // namespace centerline
