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

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "centerline/model.hpp"

// Deterministic synthetic corpora. The paper-style German corpora are not
// distributable, so the repository ships (a) a strategy-differential corpus
// built from small discourse patterns with known per-strategy outcomes and
// (b) three documents engineered to fixed anaphor-distribution and
// antecedent-typology totals.

namespace centerline {

// Incremental document construction with auto-numbered ids.
class CorpusBuilder {
 public:
  explicit CorpusBuilder(std::string doc_id) { doc_.id = std::move(doc_id); }

  EntityId entity(const std::string& name, std::optional<std::string> sem = {}) {
    EntityId id{name};
    if (!doc_.find_entity(id)) doc_.entities.push_back({id, std::move(sem)});
    return id;
  }

  // Starts a new sentence; subsequent clause() calls attach to it.
  CorpusBuilder& sentence(std::optional<std::string> raw_text = {}) {
    Sentence s;
    s.id = "s" + std::to_string(next_sentence_++);
    s.raw_text = std::move(raw_text);
    doc_.sentences.push_back(std::move(s));
    return *this;
  }

  CorpusBuilder& clause(ClauseKind kind) {
    Clause c;
    c.id = "c" + std::to_string(next_clause_++);
    c.kind = kind;
    c.pos = static_cast<int>(doc_.sentences.back().clauses.size());
    doc_.sentences.back().clauses.push_back(std::move(c));
    return *this;
  }

  struct MarkSpec {
    std::string surface;
    EntityId entity;
    MarkKind kind = MarkKind::none;
    std::optional<std::string> agr;
    Role role = Role::other;
    std::optional<std::string> sem;
  };

  CorpusBuilder& markable(const MarkSpec& spec) {
    Clause& c = doc_.sentences.back().clauses.back();
    Markable m;
    m.id = "m" + std::to_string(next_markable_++);
    m.clause = c.id;
    m.pos = static_cast<int>(c.markables.size());
    m.surface = spec.surface;
    m.entity = spec.entity;
    m.kind = spec.kind;
    m.agr = spec.agr;
    m.role = spec.role;
    m.sem = spec.sem;
    c.markables.push_back(std::move(m));
    return *this;
  }

  Document take() { return std::move(doc_); }

 private:
  Document doc_;
  int next_sentence_ = 0;
  int next_clause_ = 0;
  int next_markable_ = 0;
};

namespace synthetic_detail {

inline std::string noun(std::mt19937& rng, int tag) {
  static const char* kNouns[] = {"Drucker", "Server",  "Monitor", "Sensor", "Router",
                                 "Scanner", "Adapter", "Akku",    "Lautsprecher",
                                 "Prozessor"};
  std::uniform_int_distribution<size_t> pick(0, std::size(kNouns) - 1);
  return std::string(kNouns[pick(rng)]) + "-" + std::to_string(tag);
}

// Both strategies and the anaphor agree everywhere in these patterns, so the
// masculine tag keeps agreement out of the way unless a pattern needs a clash.
constexpr const char* kMasc = "masc-sg";
constexpr const char* kFem = "fem-sg";

// All strategies succeed: plain continuation across a sentence boundary.
inline void pattern_continuation(CorpusBuilder& b, std::mt19937& rng, int tag) {
  EntityId g = b.entity("ok" + std::to_string(tag));
  std::string w = noun(rng, tag);
  b.sentence().clause(ClauseKind::main).markable(
      {w, g, MarkKind::none, kMasc, Role::subject, {}});
  b.sentence().clause(ClauseKind::main).markable(
      {"er", g, MarkKind::pronoun, kMasc, Role::subject, {}});
}

// All strategies succeed: the anaphor opens the first main clause of a
// compound sentence, so the previous sentence's Cf is up.
inline void pattern_continuation_compound(CorpusBuilder& b, std::mt19937& rng, int tag) {
  EntityId g = b.entity("okc" + std::to_string(tag));
  EntityId f = b.entity("okcf" + std::to_string(tag));
  b.sentence().clause(ClauseKind::main).markable(
      {noun(rng, tag), g, MarkKind::none, kMasc, Role::subject, {}});
  b.sentence()
      .clause(ClauseKind::main)
      .markable({"er", g, MarkKind::pronoun, kMasc, Role::subject, {}})
      .clause(ClauseKind::main)
      .markable({noun(rng, tag + 9000), f, MarkKind::none, kMasc, Role::other, {}});
}

// Only the sentence-external preference fails; with `shared_surface` the
// wrong pick is surface-identical to the true antecedent (a false positive).
inline void pattern_inter_error(CorpusBuilder& b, std::mt19937& rng, int tag,
                                bool shared_surface) {
  EntityId right = b.entity("inB" + std::to_string(tag));
  EntityId decoy = b.entity("inA" + std::to_string(tag));
  std::string surf = noun(rng, tag);
  b.sentence().clause(ClauseKind::main).markable(
      {noun(rng, tag + 1000), right, MarkKind::none, kMasc, Role::other, {}});
  b.sentence().clause(ClauseKind::main).markable(
      {shared_surface ? surf : noun(rng, tag + 2000), decoy, MarkKind::none, kMasc,
       Role::subject, {}});
  b.sentence()
      .clause(ClauseKind::subordinate)
      .markable({surf, right, MarkKind::none, kMasc, Role::other, {}})
      .clause(ClauseKind::matrix)
      .markable({"er", right, MarkKind::pronoun, kMasc, Role::subject, {}});
}

// Only the clause-at-a-time segmentation fails: the preposed clause fills the
// clause-level Cf with an agreement-incompatible distractor, stranding the
// pronoun.
inline void pattern_linear_error(CorpusBuilder& b, std::mt19937& rng, int tag) {
  EntityId g = b.entity("lnG" + std::to_string(tag));
  EntityId d = b.entity("lnD" + std::to_string(tag));
  b.sentence().clause(ClauseKind::main).markable(
      {noun(rng, tag), g, MarkKind::none, kMasc, Role::subject, {}});
  b.sentence()
      .clause(ClauseKind::subordinate)
      .markable({"Platine-" + std::to_string(tag), d, MarkKind::none, kFem, Role::other, {}})
      .clause(ClauseKind::matrix)
      .markable({"er", g, MarkKind::pronoun, kMasc, Role::subject, {}});
}

// Only the sentence-internal preference fails: a compatible but unbound
// distractor precedes a nominal anaphor whose antecedent sits in the previous
// sentence. With sem tags the semantics toggle rescues it.
inline void pattern_intra_error(CorpusBuilder& b, std::mt19937& rng, int tag,
                                bool sem_tagged) {
  std::optional<std::string> obj =
      sem_tagged ? std::make_optional<std::string>("OBJECT") : std::nullopt;
  std::optional<std::string> evt =
      sem_tagged ? std::make_optional<std::string>("EVENT") : std::nullopt;
  EntityId g = b.entity("itG" + std::to_string(tag), obj);
  EntityId d = b.entity("itD" + std::to_string(tag), evt);
  std::string w = noun(rng, tag);
  b.sentence().clause(ClauseKind::main).markable(
      {w, g, MarkKind::none, kMasc, Role::subject, {}});
  b.sentence()
      .clause(ClauseKind::main)
      .markable({noun(rng, tag + 3000), d, MarkKind::none, kMasc, Role::other, {}})
      .markable({w, g, MarkKind::nominal, kMasc, Role::other, obj});
}

// Unhandled anaphor kind: unresolved under every strategy.
inline void pattern_unhandled(CorpusBuilder& b, std::mt19937& rng, int tag,
                              MarkKind kind) {
  EntityId e = b.entity("un" + std::to_string(tag));
  b.sentence().clause(ClauseKind::main).markable(
      {noun(rng, tag), e, MarkKind::none, kMasc, Role::subject, {}});
  b.sentence().clause(ClauseKind::main).markable(
      {"dabei", e, kind, {}, Role::other, {}});
}

// Every strategy picks the same false antecedent: the gold entity was never
// realized before the pronoun.
inline void pattern_chain_opening(CorpusBuilder& b, std::mt19937& rng, int tag) {
  EntityId j = b.entity("cwJ" + std::to_string(tag));
  EntityId w = b.entity("cwW" + std::to_string(tag));
  b.sentence().clause(ClauseKind::main).markable(
      {noun(rng, tag), w, MarkKind::none, kMasc, Role::subject, {}});
  b.sentence().clause(ClauseKind::main).markable(
      {"er", j, MarkKind::pronoun, kMasc, Role::subject, {}});
}

}  // namespace synthetic_detail

inline constexpr std::uint32_t kStrategyCorpusSeed = 0x5eed01;

// Strategy-differential corpus: 47 anaphors whose per-strategy outcomes are
// fixed by construction, so that the functional strategy scores strictly
// above the intra-first, linear, and inter-first strategies (in that order),
// with and without semantic constraints.
inline Document make_strategy_corpus(std::uint32_t seed = kStrategyCorpusSeed) {
  namespace sd = synthetic_detail;
  std::mt19937 rng(seed);
  CorpusBuilder b("synthetic");

  enum class P { ok, ok_compound, inter_fp, inter_plain, linear, intra, intra_sem,
                 unhandled, chain_opening };
  std::vector<P> plan;
  auto add = [&](P p, int count) { plan.insert(plan.end(), count, p); };
  add(P::ok, 20);
  add(P::ok_compound, 3);
  add(P::inter_fp, 4);
  add(P::inter_plain, 3);
  add(P::linear, 6);
  add(P::intra, 2);
  add(P::intra_sem, 2);
  add(P::unhandled, 5);
  add(P::chain_opening, 2);
  std::shuffle(plan.begin(), plan.end(), rng);

  const MarkKind unhandled_kinds[] = {MarkKind::prepositional, MarkKind::plural,
                                      MarkKind::set_member, MarkKind::sentence_anaphor,
                                      MarkKind::global_focus};
  int tag = 0, unhandled_seen = 0;
  for (P p : plan) {
    ++tag;
    switch (p) {
      case P::ok: sd::pattern_continuation(b, rng, tag); break;
      case P::ok_compound: sd::pattern_continuation_compound(b, rng, tag); break;
      case P::inter_fp: sd::pattern_inter_error(b, rng, tag, true); break;
      case P::inter_plain: sd::pattern_inter_error(b, rng, tag, false); break;
      case P::linear: sd::pattern_linear_error(b, rng, tag); break;
      case P::intra: sd::pattern_intra_error(b, rng, tag, false); break;
      case P::intra_sem: sd::pattern_intra_error(b, rng, tag, true); break;
      case P::unhandled:
        sd::pattern_unhandled(b, rng, tag, unhandled_kinds[unhandled_seen++ % 5]);
        break;
      case P::chain_opening: sd::pattern_chain_opening(b, rng, tag); break;
    }
  }
  return b.take();
}

// ---------------------------------------------------------------------------
// Distribution-engineered documents.

struct SigmaSpec {
  std::string id;
  int text_level;      // anaphors with the antecedent in an earlier sentence
  int bound_subject;   // intra-sentential: bound antecedent, subject
  int bound_other;     // intra-sentential: bound antecedent, non-subject
  int unbound_other;   // intra-sentential: unbound antecedent, non-subject
  long words;          // whitespace tokens across all raw_text lines
};

inline Document make_sigma_document(const SigmaSpec& spec) {
  CorpusBuilder b(spec.id);
  int n_sentences =
      2 + spec.text_level + spec.bound_subject + spec.bound_other + spec.unbound_other;
  long base = spec.words / n_sentences;
  long rem = spec.words % n_sentences;
  int sentence_no = 0;
  auto raw = [&]() {
    long tokens = base + (sentence_no++ < rem ? 1 : 0);
    std::string text;
    for (long i = 0; i < tokens; ++i) {
      if (i) text += ' ';
      text += "wort";
    }
    return text;
  };
  namespace sd = synthetic_detail;

  EntityId topic = b.entity("topic");
  b.sentence(raw()).clause(ClauseKind::main).markable(
      {"Thema", topic, MarkKind::none, sd::kMasc, Role::subject, {}});

  EntityId chain = b.entity("chain");
  b.sentence(raw()).clause(ClauseKind::main).markable(
      {"Leitgeraet", chain, MarkKind::none, sd::kMasc, Role::subject, {}});
  for (int i = 0; i < spec.text_level; ++i)
    b.sentence(raw()).clause(ClauseKind::main).markable(
        {"er", chain, MarkKind::pronoun, sd::kMasc, Role::subject, {}});

  auto intra = [&](const EntityId& e, Role ante_role) {
    b.sentence(raw())
        .clause(ClauseKind::subordinate)
        .markable({"Bezug", e, MarkKind::none, sd::kMasc, ante_role, {}})
        .clause(ClauseKind::matrix)
        .markable({"er", e, MarkKind::pronoun, sd::kMasc, Role::subject, {}});
  };
  for (int i = 0; i < spec.bound_subject; ++i) intra(topic, Role::subject);
  for (int i = 0; i < spec.bound_other; ++i) intra(topic, Role::other);
  for (int i = 0; i < spec.unbound_other; ++i)
    intra(b.entity(spec.id + "-fresh" + std::to_string(i)), Role::other);

  return b.take();
}

// Three documents whose stats rows sum to 498/65/563 anaphors over 7877 words
// and whose intra-sentential antecedent typology sums to 58/7/32/33.
inline std::vector<Document> make_sigma_corpora() {
  return {
      make_sigma_document({"it", 284, 16, 4, 4, 5542}),
      make_sigma_document({"spiegel", 90, 6, 4, 2, 1468}),
      make_sigma_document({"mueller", 124, 10, 18, 1, 867}),
  };
}

}  // namespace centerline
