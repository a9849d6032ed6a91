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

#include <optional>
#include <unordered_set>
#include <vector>

#include "centerline/model.hpp"

// Forward-looking centers under the functional ranking (context-bound
// elements outrank everything else) and the backward-looking center.

namespace centerline {

// Cf of an utterance, computed over the matrix clause only. Every anaphor of
// u must already be through resolution. Entries are ordered context-bound
// before unbound, within each class by surface position; duplicate entities
// keep the highest-ranked occurrence. Failed anaphors enter as fresh
// singletons so they stay available as antecedents.
inline std::vector<CenterEntry> compute_cf(const Utterance& u,
                                           const ResolutionState& state) {
  std::vector<CenterEntry> bound, rest;
  for (const Markable* m : clause_markables_ordered(*u.matrix)) {
    CenterEntry e{realized_entity(*m, state), m};
    (context_bound(*m, state) ? bound : rest).push_back(e);
  }
  std::vector<CenterEntry> out;
  std::unordered_set<std::string> seen;
  for (const auto& list : {bound, rest})
    for (const auto& e : list)
      if (seen.insert(e.entity.value).second) out.push_back(e);
  return out;
}

// Cb of an utterance: the highest-ranked entity of the previous Cf realized
// by any markable of u, paired with its realizing markable. A matrix-clause
// realization is preferred; otherwise the earliest one. Absent when nothing
// of prev_cf is realized (in particular for the first utterance).
inline std::optional<CenterEntry> compute_cb(const std::vector<CenterEntry>& prev_cf,
                                             const Utterance& u,
                                             const ResolutionState& state) {
  for (const auto& entry : prev_cf) {
    const Markable* matrix_hit = nullptr;
    const Markable* any_hit = nullptr;
    for (const Clause* c : u.clauses) {
      for (const Markable* m : clause_markables_ordered(*c)) {
        if (realized_entity(*m, state) != entry.entity) continue;
        if (!any_hit) any_hit = m;
        if (c == u.matrix && !matrix_hit) matrix_hit = m;
      }
    }
    if (any_hit) return CenterEntry{entry.entity, matrix_hit ? matrix_hit : any_hit};
  }
  return std::nullopt;
}

}  // namespace centerline
