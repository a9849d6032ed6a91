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

#include <stdexcept>
#include <vector>

#include "centerline/model.hpp"

// Sentence classification and the two ways of cutting a document into
// centering update units: the utterance segmentation (simple/complex
// sentences are one unit, compound sentences one unit per main clause) and
// the flat clause-at-a-time segmentation used by the linear strategy.

namespace centerline {

enum class SentenceClass { simple, complex, compound };

inline SentenceClass classify_sentence(const Sentence& s) {
  int n_matrix = 0, n_subord = 0, n_main = 0;
  for (const auto& c : s.clauses) {
    switch (c.kind) {
      case ClauseKind::matrix: ++n_matrix; break;
      case ClauseKind::subordinate: ++n_subord; break;
      case ClauseKind::main: ++n_main; break;
    }
  }
  if (s.clauses.size() == 1 && n_subord == 0) return SentenceClass::simple;
  if (n_main >= 2 && n_matrix == 0 && n_subord == 0) return SentenceClass::compound;
  if (n_matrix == 1 && n_subord >= 1 && n_main == 0) return SentenceClass::complex;
  throw std::invalid_argument("sentence '" + s.id + "' has an illegal clause-kind mix");
}

// Utterance sequence of a document. Simple and complex sentences become one
// utterance whose matrix is the matrix clause (or the sole clause); each main
// clause of a compound sentence becomes its own utterance.
inline std::vector<Utterance> segment(const Document& doc) {
  std::vector<Utterance> out;
  for (size_t si = 0; si < doc.sentences.size(); ++si) {
    const Sentence& s = doc.sentences[si];
    std::vector<const Clause*> ordered = sentence_clauses_ordered(s);
    switch (classify_sentence(s)) {
      case SentenceClass::simple: {
        Utterance u;
        u.index = static_cast<int>(out.size());
        u.sentence_index = static_cast<int>(si);
        u.clauses = ordered;
        u.matrix = ordered.front();
        out.push_back(std::move(u));
        break;
      }
      case SentenceClass::complex: {
        Utterance u;
        u.index = static_cast<int>(out.size());
        u.sentence_index = static_cast<int>(si);
        u.clauses = ordered;
        for (const Clause* c : ordered)
          if (c->kind == ClauseKind::matrix) u.matrix = c;
        out.push_back(std::move(u));
        break;
      }
      case SentenceClass::compound: {
        for (const Clause* c : ordered) {
          Utterance u;
          u.index = static_cast<int>(out.size());
          u.sentence_index = static_cast<int>(si);
          u.clauses = {c};
          u.matrix = c;
          out.push_back(std::move(u));
        }
        break;
      }
    }
  }
  return out;
}

// Flat segmentation: every clause of every sentence is its own utterance (and
// its own matrix), in surface order.
inline std::vector<Utterance> clause_segmentation_linear(const Document& doc) {
  std::vector<Utterance> out;
  for (size_t si = 0; si < doc.sentences.size(); ++si) {
    classify_sentence(doc.sentences[si]);  // reject illegal kind mixes
    for (const Clause* c : sentence_clauses_ordered(doc.sentences[si])) {
      Utterance u;
      u.index = static_cast<int>(out.size());
      u.sentence_index = static_cast<int>(si);
      u.clauses = {c};
      u.matrix = c;
      out.push_back(std::move(u));
    }
  }
  return out;
}

}  // namespace centerline
