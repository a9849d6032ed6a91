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
#include <cctype>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

// Core discourse model: annotated documents, the utterance/clause hierarchy,
// centering state, and the running state of a resolution pass. All types are
// plain immutable values; nothing here touches files or formatting.

namespace centerline {

// A discourse entity (the identity of a coreference chain).
struct EntityId {
  std::string value;
  bool operator==(const EntityId&) const = default;
  bool operator<(const EntityId& o) const { return value < o.value; }
};

enum class ClauseKind { matrix, subordinate, main };
enum class Role { subject, other };

// Anaphor classification. `none` marks a non-anaphoric mention; pronoun and
// nominal anaphors are the only kinds the resolver handles, the rest are
// tallied as unresolved.
enum class MarkKind {
  none,
  pronoun,
  nominal,
  prepositional,
  plural,
  set_member,
  sentence_anaphor,
  global_focus,
};

inline bool is_anaphoric(MarkKind k) { return k != MarkKind::none; }
inline bool is_resolvable(MarkKind k) {
  return k == MarkKind::pronoun || k == MarkKind::nominal;
}

// One occurrence of a referring expression.
struct Markable {
  std::string id;
  std::string clause;  // id of the owning clause
  int pos = 0;         // left-to-right order within the clause
  std::string surface;
  EntityId entity;  // gold entity; masked from all proposal/filter logic
  std::optional<std::string> agr;  // agreement tag
  Role role = Role::other;
  MarkKind kind = MarkKind::none;
  std::optional<std::string> sem;  // semantic type tag
  bool operator==(const Markable&) const = default;
};

struct Clause {
  std::string id;
  ClauseKind kind = ClauseKind::main;
  int pos = 0;  // order within the sentence
  std::vector<Markable> markables;
  bool operator==(const Clause&) const = default;
};

struct Sentence {
  std::string id;
  std::vector<Clause> clauses;
  std::optional<std::string> raw_text;
  bool operator==(const Sentence&) const = default;
};

struct EntityDecl {
  EntityId id;
  std::optional<std::string> sem;
  bool operator==(const EntityDecl&) const = default;
};

struct Document {
  std::string id;
  std::vector<EntityDecl> entities;  // declaration order
  std::vector<Sentence> sentences;
  bool operator==(const Document&) const = default;

  const EntityDecl* find_entity(const EntityId& e) const {
    for (const auto& d : entities)
      if (d.id == e) return &d;
    return nullptr;
  }
  std::optional<std::string> entity_sem(const EntityId& e) const {
    const EntityDecl* d = find_entity(e);
    return d ? d->sem : std::nullopt;
  }
};

// A centering update unit: a simple sentence, a complex sentence, or one main
// clause of a compound sentence. Holds pointers into the owning Document.
struct Utterance {
  int index = 0;
  int sentence_index = 0;
  std::vector<const Clause*> clauses;  // surface order
  const Clause* matrix = nullptr;
};

// One entry of a Cb/Cf pairing: the entity plus the markable realizing it.
struct CenterEntry {
  EntityId entity;
  const Markable* markable = nullptr;
};

struct CenteringState {
  std::optional<CenterEntry> cb;
  std::vector<CenterEntry> cf;
};

// ---------------------------------------------------------------------------
// Document traversal helpers.

inline std::vector<const Clause*> sentence_clauses_ordered(const Sentence& s) {
  std::vector<const Clause*> out;
  out.reserve(s.clauses.size());
  for (const auto& c : s.clauses) out.push_back(&c);
  std::stable_sort(out.begin(), out.end(),
                   [](const Clause* a, const Clause* b) { return a->pos < b->pos; });
  return out;
}

inline std::vector<const Markable*> clause_markables_ordered(const Clause& c) {
  std::vector<const Markable*> out;
  out.reserve(c.markables.size());
  for (const auto& m : c.markables) out.push_back(&m);
  std::stable_sort(out.begin(), out.end(),
                   [](const Markable* a, const Markable* b) { return a->pos < b->pos; });
  return out;
}

// Markables of an utterance in reading order: clause pos, then markable pos.
inline std::vector<const Markable*> utterance_markables(const Utterance& u) {
  std::vector<const Markable*> out;
  for (const Clause* c : u.clauses)
    for (const Markable* m : clause_markables_ordered(*c)) out.push_back(m);
  return out;
}

// Flat document reading order over all markables.
inline std::vector<const Markable*> document_markables(const Document& doc) {
  std::vector<const Markable*> out;
  for (const auto& s : doc.sentences)
    for (const Clause* c : sentence_clauses_ordered(s))
      for (const Markable* m : clause_markables_ordered(*c)) out.push_back(m);
  return out;
}

// Lookup tables over a document; build once, reuse. The document must
// outlive the index.
struct DocumentIndex {
  const Document* doc = nullptr;
  std::vector<const Markable*> order;  // reading order
  std::unordered_map<std::string, int> mark_pos;          // markable id -> order index
  std::unordered_map<std::string, int> mark_sentence;     // markable id -> sentence index
  std::unordered_map<std::string, const Markable*> mark;  // markable id -> markable
  std::unordered_map<std::string, const Clause*> clause;  // clause id -> clause
  std::unordered_map<std::string, int> clause_sentence;   // clause id -> sentence index

  explicit DocumentIndex(const Document& d) : doc(&d) {
    for (size_t si = 0; si < d.sentences.size(); ++si) {
      for (const Clause* c : sentence_clauses_ordered(d.sentences[si])) {
        clause.emplace(c->id, c);
        clause_sentence.emplace(c->id, static_cast<int>(si));
        for (const Markable* m : clause_markables_ordered(*c)) {
          mark_pos.emplace(m->id, static_cast<int>(order.size()));
          mark_sentence.emplace(m->id, static_cast<int>(si));
          mark.emplace(m->id, m);
          order.push_back(m);
        }
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Resolution-pass state. Mutated only by the single sequential driver in
// resolution.hpp; everything else reads it.

struct ResolvedEntry {
  EntityId entity;         // predicted entity
  std::string antecedent;  // chosen antecedent markable id
  std::string stage;       // proposal stage that produced it
};

struct MentionEvent {
  const Markable* markable = nullptr;
  EntityId entity;  // the entity this markable realizes, as known to the pass
  int utterance = 0;
};

struct ResolutionState {
  bool chain_correct = false;  // resolved anaphors contribute gold downstream

  std::unordered_map<std::string, ResolvedEntry> resolved;
  std::unordered_set<std::string> unresolved;  // failed or unhandled kinds
  std::vector<CenterEntry> prev_cf;            // Cf of the previous utterance
  std::vector<const Markable*> current_partial;  // current utterance, processed so far

  std::vector<MentionEvent> mentions;           // processing order
  std::unordered_map<std::string, int> order;   // markable id -> mention seq
  int utterance_index = -1;

  void begin_utterance(int index) {
    utterance_index = index;
    current_partial.clear();
  }
  void finish_utterance(std::vector<CenterEntry> cf) {
    prev_cf = std::move(cf);
    current_partial.clear();
  }
};

// Entity a failed anaphor contributes to the Cf: a fresh singleton, derived
// from the markable id so reruns are stable.
inline EntityId fresh_entity(const Markable& m) { return EntityId{"~" + m.id}; }

// The entity a processed markable realizes: gold for non-anaphors, the
// prediction for resolved anaphors, a fresh singleton otherwise.
inline EntityId realized_entity(const Markable& m, const ResolutionState& state) {
  if (!is_anaphoric(m.kind)) return m.entity;
  auto it = state.resolved.find(m.id);
  if (it != state.resolved.end())
    return state.chain_correct ? m.entity : it->second.entity;
  return fresh_entity(m);
}

inline void note_processed(ResolutionState& state, const Markable& m) {
  state.order.emplace(m.id, static_cast<int>(state.mentions.size()));
  state.mentions.push_back({&m, realized_entity(m, state), state.utterance_index});
  state.current_partial.push_back(&m);
}

// Whether a markable is given by prior discourse: a successfully resolved
// anaphor, or a non-anaphor whose entity was already realized by an earlier
// markable (earlier utterance, or earlier in the current one). Never reads
// the gold entity of an anaphoric markable.
inline bool context_bound(const Markable& m, const ResolutionState& state) {
  if (is_anaphoric(m.kind)) return state.resolved.count(m.id) > 0;
  auto it = state.order.find(m.id);
  int my_seq = it == state.order.end() ? std::numeric_limits<int>::max() : it->second;
  for (int i = 0; i < static_cast<int>(state.mentions.size()) && i < my_seq; ++i)
    if (state.mentions[i].entity == m.entity) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Structural validation.

struct Violation {
  std::string offender;  // id of the offending record
  std::string rule;
  std::string message;
  bool operator==(const Violation&) const = default;
};

namespace detail {

// Unquoted-token fields (ids, tags) must survive the line format: non-empty,
// no whitespace or control characters, and not the absent marker "-".
inline bool valid_token(const std::string& s) {
  if (s.empty() || s == "-") return false;
  for (unsigned char c : s)
    if (c <= 0x20 || c == 0x7f) return false;
  return true;
}

inline bool single_line(const std::string& s) {
  return s.find('\n') == std::string::npos && s.find('\r') == std::string::npos;
}

inline void check_token(const std::string& value, const std::string& owner,
                        const std::string& what, std::vector<Violation>& out) {
  if (!valid_token(value))
    out.push_back({owner, "token-shape",
                   what + " '" + value + "' of '" + owner +
                       "' is not a plain token (non-empty, no whitespace, not '-')"});
}

}  // namespace detail

// Checks every structural invariant of the model. Violations are data, not
// faults: the list is empty iff the document is well formed.
inline std::vector<Violation> validate_document(const Document& doc) {
  std::vector<Violation> out;

  if (!detail::valid_token(doc.id))
    out.push_back({doc.id, "doc-id", "document id '" + doc.id + "' is not a plain token"});

  std::unordered_set<std::string> entity_ids;
  for (const auto& e : doc.entities) {
    detail::check_token(e.id.value, e.id.value, "entity id", out);
    if (e.sem) detail::check_token(*e.sem, e.id.value, "sem tag", out);
    if (!entity_ids.insert(e.id.value).second)
      out.push_back({e.id.value, "duplicate-id",
                     "entity '" + e.id.value + "' declared more than once"});
  }

  std::unordered_set<std::string> sentence_ids, clause_ids, markable_ids;
  for (const auto& s : doc.sentences) {
    detail::check_token(s.id, s.id, "sentence id", out);
    if (!sentence_ids.insert(s.id).second)
      out.push_back({s.id, "duplicate-id", "sentence id '" + s.id + "' reused"});
    if (s.raw_text && !detail::single_line(*s.raw_text))
      out.push_back({s.id, "token-shape", "raw text of '" + s.id + "' spans lines"});
    if (s.clauses.empty())
      out.push_back({s.id, "sentence-empty", "sentence '" + s.id + "' has no clauses"});

    // Clause positions must be consecutive from 0.
    std::vector<int> positions;
    int n_matrix = 0, n_subord = 0, n_main = 0;
    for (const auto& c : s.clauses) {
      detail::check_token(c.id, c.id, "clause id", out);
      if (!clause_ids.insert(c.id).second)
        out.push_back({c.id, "duplicate-id", "clause id '" + c.id + "' reused"});
      positions.push_back(c.pos);
      switch (c.kind) {
        case ClauseKind::matrix: ++n_matrix; break;
        case ClauseKind::subordinate: ++n_subord; break;
        case ClauseKind::main: ++n_main; break;
      }

      std::unordered_set<int> mark_positions;
      for (const auto& m : c.markables) {
        detail::check_token(m.id, m.id, "markable id", out);
        if (!markable_ids.insert(m.id).second)
          out.push_back({m.id, "duplicate-id", "markable id '" + m.id + "' reused"});
        if (m.clause != c.id)
          out.push_back({m.id, "dangling-clause",
                         "markable '" + m.id + "' references clause '" + m.clause +
                             "' but is stored in '" + c.id + "'"});
        if (m.pos < 0)
          out.push_back({m.id, "markable-pos", "markable '" + m.id + "' has negative pos"});
        if (!mark_positions.insert(m.pos).second)
          out.push_back({m.id, "markable-pos",
                         "markable '" + m.id + "' duplicates pos " +
                             std::to_string(m.pos) + " in clause '" + c.id + "'"});
        if (m.surface.empty())
          out.push_back({m.id, "surface-empty", "markable '" + m.id + "' has empty surface"});
        else if (!detail::single_line(m.surface))
          out.push_back({m.id, "token-shape", "surface of '" + m.id + "' spans lines"});
        if (!entity_ids.count(m.entity.value))
          out.push_back({m.entity.value, "entity-undeclared",
                         "markable '" + m.id + "' references undeclared entity '" +
                             m.entity.value + "'"});
        if (m.agr) detail::check_token(*m.agr, m.id, "agr tag", out);
        if (m.sem) detail::check_token(*m.sem, m.id, "sem tag", out);
      }
    }

    std::sort(positions.begin(), positions.end());
    for (size_t i = 0; i < positions.size(); ++i) {
      if (positions[i] != static_cast<int>(i)) {
        out.push_back({s.id, "clause-pos",
                       "clause positions of sentence '" + s.id +
                           "' are not consecutive from 0"});
        break;
      }
    }

    // Kind mix: a simple sentence (one clause, main or matrix), a complex
    // sentence (one matrix + only subordinates), or a compound sentence
    // (main clauses only). Anything else is ill-formed.
    bool ok;
    if (s.clauses.size() == 1) {
      ok = n_subord == 0;
    } else if (n_main > 0) {
      ok = n_matrix == 0 && n_subord == 0;
    } else {
      ok = n_matrix == 1 && n_subord >= 1;
    }
    if (!s.clauses.empty() && !ok)
      out.push_back({s.id, "clause-kinds",
                     "sentence '" + s.id + "' mixes clause kinds illegally (" +
                         std::to_string(n_matrix) + " matrix, " + std::to_string(n_subord) +
                         " subordinate, " + std::to_string(n_main) + " main)"});
  }

  return out;
}

}  // namespace centerline

template <>
struct std::hash<centerline::EntityId> {
  size_t operator()(const centerline::EntityId& e) const noexcept {
    return std::hash<std::string>{}(e.value);
  }
};
