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

#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "centerline/model.hpp"
#include "centerline/resolution.hpp"

// Scoring of resolution reports against gold chains, the error taxonomy,
// false-positive detection, antecedent typology, corpus statistics, and the
// text/TSV table emitters.

namespace centerline {

// Closest preceding markable sharing the anaphor's gold entity, or null when
// the anaphor opens its chain.
inline const Markable* gold_antecedent(const DocumentIndex& idx, const Markable& anaphor) {
  auto it = idx.mark_pos.find(anaphor.id);
  if (it == idx.mark_pos.end()) return nullptr;
  for (int i = it->second - 1; i >= 0; --i)
    if (idx.order[i]->entity == anaphor.entity) return idx.order[i];
  return nullptr;
}

// ---------------------------------------------------------------------------
// Success rates.

struct ScoreCell {
  long correct = 0;
  double rate = 0.0;  // correct / n; 0 when n = 0 (rendered "-")
};

struct ScoreRow {
  std::string label;
  long n = 0;
  std::array<std::optional<ScoreCell>, 4> cells;  // indexed by Strategy

  void set(Strategy s, long correct) {
    cells[static_cast<size_t>(s)] =
        ScoreCell{correct, n > 0 ? static_cast<double>(correct) / n : 0.0};
  }
  const std::optional<ScoreCell>& cell(Strategy s) const {
    return cells[static_cast<size_t>(s)];
  }
};

// Per-document success rate: correct iff predicted entity equals gold;
// unresolved counts as wrong. N covers every anaphoric markable.
inline ScoreRow score(const ResolutionReport& report, const Document& doc) {
  if (report.doc_id != doc.id)
    throw std::invalid_argument("report for '" + report.doc_id +
                                "' scored against document '" + doc.id + "'");
  ScoreRow row;
  row.label = doc.id;
  row.n = static_cast<long>(report.rows.size());
  long correct = 0;
  for (const auto& r : report.rows)
    if (r.outcome == Outcome::correct) ++correct;
  row.set(report.config.strategy, correct);
  return row;
}

// Sums rows cell-wise into an aggregate row.
inline ScoreRow sum_scores(const std::vector<ScoreRow>& rows, const std::string& label) {
  ScoreRow total;
  total.label = label;
  for (const auto& r : rows) total.n += r.n;
  for (size_t s = 0; s < 4; ++s) {
    bool any = false;
    long correct = 0;
    for (const auto& r : rows)
      if (r.cells[s]) {
        any = true;
        correct += r.cells[s]->correct;
      }
    if (any) total.set(static_cast<Strategy>(s), correct);
  }
  return total;
}

// ---------------------------------------------------------------------------
// False positives and the error taxonomy.

// A wrong resolution whose chosen antecedent markable looks exactly like the
// true one: same surface string as the gold antecedent.
inline bool detect_false_positive(const ReportRow& row, const DocumentIndex& idx) {
  if (row.outcome != Outcome::wrong || !row.antecedent) return false;
  auto chosen = idx.mark.find(*row.antecedent);
  auto anaphor = idx.mark.find(row.mark_id);
  if (chosen == idx.mark.end() || anaphor == idx.mark.end()) return false;
  const Markable* gold = gold_antecedent(idx, *anaphor->second);
  return gold != nullptr && gold->surface == chosen->second->surface;
}

inline void annotate_false_positives(ResolutionReport& report, const Document& doc) {
  DocumentIndex idx(doc);
  for (auto& row : report.rows) row.false_positive = detect_false_positive(row, idx);
}

struct ErrorTaxonomy {
  long prepositional = 0;
  long plural = 0;
  long set_member = 0;
  long sentence_anaphor = 0;
  long global_focus = 0;
  long any_strategy_wrong = 0;   // resolvable kinds wrong under every strategy
  long strategy_specific = 0;    // wrong here, right somewhere else
  long false_positive = 0;       // among the wrong ones, surface-identical picks

  long total() const {
    return prepositional + plural + set_member + sentence_anaphor + global_focus +
           any_strategy_wrong + strategy_specific;
  }
};

// Buckets each strategy's wrong/unresolved anaphors. The reports must cover
// all four strategies over the same document.
inline std::array<ErrorTaxonomy, 4> classify_errors(
    const std::vector<ResolutionReport>& reports, const Document& doc) {
  std::array<const ResolutionReport*, 4> by_strategy{};
  for (const auto& r : reports) {
    if (r.doc_id != doc.id)
      throw std::invalid_argument("report/document mismatch in classify_errors");
    by_strategy[static_cast<size_t>(r.config.strategy)] = &r;
  }
  for (const auto* r : by_strategy)
    if (!r) throw std::invalid_argument("classify_errors needs all four strategies");

  DocumentIndex idx(doc);
  auto is_wrong = [](const ReportRow& r) { return r.outcome != Outcome::correct; };

  std::array<ErrorTaxonomy, 4> out{};
  for (size_t s = 0; s < 4; ++s) {
    const ResolutionReport& rep = *by_strategy[s];
    for (const auto& row : rep.rows) {
      ErrorTaxonomy& tax = out[s];
      if (!is_resolvable(row.kind)) {
        switch (row.kind) {
          case MarkKind::prepositional: ++tax.prepositional; break;
          case MarkKind::plural: ++tax.plural; break;
          case MarkKind::set_member: ++tax.set_member; break;
          case MarkKind::sentence_anaphor: ++tax.sentence_anaphor; break;
          case MarkKind::global_focus: ++tax.global_focus; break;
          default: break;
        }
        continue;
      }
      if (!is_wrong(row)) continue;
      bool everywhere = true;
      for (const auto* other : by_strategy)
        if (!is_wrong(*other->find(row.mark_id))) everywhere = false;
      if (everywhere)
        ++tax.any_strategy_wrong;
      else
        ++tax.strategy_specific;
      if (detect_false_positive(row, idx)) ++tax.false_positive;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Antecedent typology and corpus statistics (gold-side analyses).

struct TypologyRow {
  std::string label;
  long context_bound = 0;
  long not_bound = 0;
  long subject = 0;
  long not_subject = 0;

  long total() const { return context_bound + not_bound; }
};

// Over gold intra-sentential anaphors: is the gold antecedent given by prior
// discourse, and is it the subject?
inline TypologyRow antecedent_typology(const Document& doc) {
  DocumentIndex idx(doc);
  TypologyRow row;
  row.label = doc.id;
  for (const Markable* m : idx.order) {
    if (!is_anaphoric(m->kind)) continue;
    const Markable* ante = gold_antecedent(idx, *m);
    if (!ante || idx.mark_sentence.at(ante->id) != idx.mark_sentence.at(m->id)) continue;
    bool bound = is_anaphoric(ante->kind);
    if (!bound) {
      int ante_sentence = idx.mark_sentence.at(ante->id);
      for (const Markable* other : idx.order) {
        if (other->entity == ante->entity &&
            idx.mark_sentence.at(other->id) < ante_sentence) {
          bound = true;
          break;
        }
      }
    }
    (bound ? row.context_bound : row.not_bound) += 1;
    (ante->role == Role::subject ? row.subject : row.not_subject) += 1;
  }
  return row;
}

inline TypologyRow sum_typology(const std::vector<TypologyRow>& rows,
                                const std::string& label) {
  TypologyRow total;
  total.label = label;
  for (const auto& r : rows) {
    total.context_bound += r.context_bound;
    total.not_bound += r.not_bound;
    total.subject += r.subject;
    total.not_subject += r.not_subject;
  }
  return total;
}

struct StatsRow {
  std::string label;
  long text_ana = 0;  // gold antecedent in an earlier sentence (or chain-opening)
  long sent_ana = 0;  // gold antecedent in the same sentence
  long total = 0;
  long words = 0;  // whitespace tokens of the raw sentence texts
};

inline StatsRow document_stats(const Document& doc) {
  DocumentIndex idx(doc);
  StatsRow row;
  row.label = doc.id;
  for (const Markable* m : idx.order) {
    if (!is_anaphoric(m->kind)) continue;
    const Markable* ante = gold_antecedent(idx, *m);
    bool same_sentence =
        ante && idx.mark_sentence.at(ante->id) == idx.mark_sentence.at(m->id);
    (same_sentence ? row.sent_ana : row.text_ana) += 1;
  }
  row.total = row.text_ana + row.sent_ana;
  for (const auto& s : doc.sentences) {
    if (!s.raw_text) continue;
    bool in_token = false;
    for (char c : *s.raw_text) {
      bool ws = c == ' ' || c == '\t';
      if (!ws && !in_token) ++row.words;
      in_token = !ws;
    }
  }
  return row;
}

inline std::vector<StatsRow> corpus_stats(const std::vector<Document>& docs) {
  std::vector<StatsRow> rows;
  rows.reserve(docs.size());
  for (const auto& d : docs) rows.push_back(document_stats(d));
  return rows;
}

inline StatsRow sum_stats(const std::vector<StatsRow>& rows, const std::string& label) {
  StatsRow total;
  total.label = label;
  for (const auto& r : rows) {
    total.text_ana += r.text_ana;
    total.sent_ana += r.sent_ana;
    total.total += r.total;
    total.words += r.words;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Formatting. Percentages are one decimal, rounded half up.

inline std::string format_pct(long correct, long n) {
  if (n == 0) return "-";
  double tenths = std::floor(1000.0 * correct / n + 0.5);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", tenths / 10.0);
  return buf;
}

inline std::string format_count_pct(long correct, long n) {
  return std::to_string(correct) + " (" + format_pct(correct, n) + ")";
}

// How far a printed percentage sits from the exact division, in percentage
// points, and whether that exceeds one display unit (0.1 pp) — beyond which
// no rounding convention can explain the printed value.
inline double printed_deviation_pp(long correct, long n, double printed_pct) {
  return std::abs(printed_pct - 100.0 * correct / n);
}

inline bool deviates_from_exact(long correct, long n, double printed_pct) {
  return printed_deviation_pp(correct, n, printed_pct) > 0.1 + 1e-9;
}

struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

namespace detail {

inline size_t display_width(const std::string& s) {
  size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;  // count UTF-8 lead bytes
  return w;
}

inline std::string pad(const std::string& s, size_t width, bool left_align) {
  std::string fill(width - display_width(s), ' ');
  return left_align ? s + fill : fill + s;
}

}  // namespace detail

// Fixed-width rendering; first column left-aligned, the rest right-aligned.
// `color` wraps the header in ANSI bold and changes nothing else.
inline std::string render_table(const TextTable& t, bool color = false) {
  std::vector<size_t> widths(t.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size() && i < widths.size(); ++i)
      widths[i] = std::max(widths[i], detail::display_width(row[i]));
  };
  widen(t.header);
  for (const auto& r : t.rows) widen(r);

  auto line = [&](const std::vector<std::string>& row) {
    std::string out;
    for (size_t i = 0; i < widths.size(); ++i) {
      if (i) out += "  ";
      out += detail::pad(i < row.size() ? row[i] : "", widths[i], i == 0);
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
  };

  std::string out;
  if (color) out += "\x1b[1m";
  out += line(t.header);
  if (color) out += "\x1b[0m";
  out += '\n';
  for (const auto& r : t.rows) {
    out += line(r);
    out += '\n';
  }
  return out;
}

inline std::string render_tsv(const TextTable& t) {
  std::string out;
  auto line = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += '\t';
      out += row[i];
    }
    out += '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out;
}

// Success-rate matrix, strategies as columns.
inline TextTable score_table(const std::vector<ScoreRow>& rows) {
  TextTable t;
  t.header = {"corpus", "N", "linear", "inter", "intra", "functional"};
  const Strategy order[] = {Strategy::linear, Strategy::inter_first,
                            Strategy::intra_first, Strategy::functional};
  for (const auto& r : rows) {
    std::vector<std::string> cells{r.label, std::to_string(r.n)};
    for (Strategy s : order) {
      const auto& c = r.cell(s);
      cells.push_back(c ? format_count_pct(c->correct, r.n) : "-");
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

// Single-strategy score listing.
inline TextTable evaluation_table(const std::vector<ScoreRow>& rows, Strategy s) {
  TextTable t;
  t.header = {"corpus", "N", "correct", "rate"};
  for (const auto& r : rows) {
    const auto& c = r.cell(s);
    long correct = c ? c->correct : 0;
    t.rows.push_back({r.label, std::to_string(r.n), std::to_string(correct),
                      format_pct(correct, r.n)});
  }
  return t;
}

inline TextTable stats_table(const std::vector<StatsRow>& rows) {
  TextTable t;
  t.header = {"corpus", "text-ana", "sent-ana", "anaphors", "words"};
  for (const auto& r : rows)
    t.rows.push_back({r.label, std::to_string(r.text_ana), std::to_string(r.sent_ana),
                      std::to_string(r.total), std::to_string(r.words)});
  return t;
}

inline TextTable typology_table(const std::vector<TypologyRow>& rows) {
  TextTable t;
  t.header = {"corpus", "bound", "not-bound", "subj", "not-subj"};
  for (const auto& r : rows)
    t.rows.push_back({r.label, std::to_string(r.context_bound),
                      std::to_string(r.not_bound), std::to_string(r.subject),
                      std::to_string(r.not_subject)});
  return t;
}

inline TextTable taxonomy_table(const std::array<ErrorTaxonomy, 4>& tax) {
  TextTable t;
  t.header = {"bucket", "functional", "linear", "inter", "intra"};
  const Strategy order[] = {Strategy::functional, Strategy::linear,
                            Strategy::inter_first, Strategy::intra_first};
  auto add = [&](const std::string& name, auto get) {
    std::vector<std::string> cells{name};
    for (Strategy s : order)
      cells.push_back(std::to_string(get(tax[static_cast<size_t>(s)])));
    t.rows.push_back(std::move(cells));
  };
  add("prepositional", [](const ErrorTaxonomy& x) { return x.prepositional; });
  add("plural", [](const ErrorTaxonomy& x) { return x.plural; });
  add("set-member", [](const ErrorTaxonomy& x) { return x.set_member; });
  add("sentence", [](const ErrorTaxonomy& x) { return x.sentence_anaphor; });
  add("global-focus", [](const ErrorTaxonomy& x) { return x.global_focus; });
  add("any-strategy", [](const ErrorTaxonomy& x) { return x.any_strategy_wrong; });
  add("strategy-specific", [](const ErrorTaxonomy& x) { return x.strategy_specific; });
  add("false-positive", [](const ErrorTaxonomy& x) { return x.false_positive; });
  return t;
}

}  // namespace centerline
