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

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "centerline/model.hpp"
#include "centerline/resolution.hpp"

// Line-oriented annotation format, one record per line. `#` starts a comment
// line, blank lines are ignored, `-` marks an absent optional value.
//
//   DOC  <doc-id>
//   ENT  <entity-id> sem=<tag|->
//   SENT <sent-id> [txt="<raw text>"]
//   CL   <clause-id> kind=<matrix|subord|main> pos=<int>
//   M    <mark-id> cl=<clause-id> pos=<int> surf="<string>" ent=<entity-id>
//        agr=<tag|-> role=<subj|other> kind=<none|pron|nom|prep|plural|setmem|sent|global>
//        [sem=<tag|->]
//
// CL lines bind to the most recent SENT; M lines may appear anywhere after
// their CL. Quoted strings escape `"` and `\` with a backslash; nothing else
// is escaped. Parsing never throws on malformed text: problems come back as
// diagnostics, and a document that parsed without error-severity diagnostics
// satisfies every model invariant.

namespace centerline {

enum class Severity { error, warning };

struct ParseDiagnostic {
  int line = 1;
  std::string message;
  Severity severity = Severity::error;
};

struct ParseResult {
  Document document;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const {
    for (const auto& d : diagnostics)
      if (d.severity == Severity::error) return false;
    return true;
  }
};

namespace iodetail {

// One whitespace-separated field; a quoted run (value opening with `"`) may
// contain spaces and escapes and extends to the closing quote.
struct FieldScanner {
  std::string_view line;
  size_t i = 0;
  bool unterminated = false;

  std::optional<std::string> next() {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) return std::nullopt;
    std::string field;
    bool in_quote = false;
    while (i < line.size()) {
      char c = line[i];
      if (in_quote) {
        field += c;
        ++i;
        if (c == '\\' && i < line.size()) {
          field += line[i];
          ++i;
        } else if (c == '"') {
          in_quote = false;
        }
      } else {
        if (c == ' ' || c == '\t') break;
        field += c;
        ++i;
        if (c == '"') in_quote = true;
      }
    }
    if (in_quote) unterminated = true;
    return field;
  }
};

inline bool unquote(const std::string& raw, std::string& out) {
  if (raw.size() < 2 || raw.front() != '"' || raw.back() != '"') return false;
  out.clear();
  size_t end = raw.size() - 1;  // the closing quote
  size_t i = 1;
  while (i < end) {
    char c = raw[i];
    if (c == '\\') {
      if (i + 1 >= end) return false;  // escape would swallow the closing quote
      char e = raw[i + 1];
      if (e != '\\' && e != '"') return false;
      out += e;
      i += 2;
    } else if (c == '"') {
      return false;  // bare quote inside the value
    } else {
      out += c;
      ++i;
    }
  }
  return true;
}

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

struct KeyValue {
  std::string key;
  std::string raw_value;
};

}  // namespace iodetail

// ---------------------------------------------------------------------------
// Parsing.

inline ParseResult parse_document(std::string_view text) {
  ParseResult result;
  Document& doc = result.document;
  std::vector<ParseDiagnostic>& diags = result.diagnostics;

  bool have_doc = false;
  bool missing_doc_reported = false;
  int current_sentence = -1;
  // Clause id -> (sentence idx, clause idx); indices stay valid, the vectors
  // only grow.
  std::unordered_map<std::string, std::pair<int, int>> clause_at;
  std::unordered_map<std::string, int> line_of;  // record id -> declaring line

  auto error = [&](int line, std::string msg) {
    diags.push_back({line, std::move(msg), Severity::error});
  };
  auto warning = [&](int line, std::string msg) {
    diags.push_back({line, std::move(msg), Severity::warning});
  };

  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? text.size() - start : end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    bool last = end == std::string_view::npos;
    start = last ? text.size() + 1 : end + 1;

    size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    if (line[first] == '#') {
      std::string_view body = line.substr(first + 1);
      size_t p = body.find("format=");
      if (p != std::string_view::npos && body.substr(p + 7) != "1")
        warning(line_no, "unsupported format version '" +
                             std::string(body.substr(p + 7)) + "'");
      continue;
    }

    iodetail::FieldScanner scan{line};
    std::string tag = *scan.next();

    if (!have_doc && tag != "DOC" && !missing_doc_reported) {
      error(line_no, "missing DOC header");
      missing_doc_reported = true;
    }

    auto id_field = scan.next();
    if (!id_field) {
      error(line_no, tag + " record without an id");
      continue;
    }

    // Remaining fields are key=value.
    std::vector<iodetail::KeyValue> kvs;
    bool line_ok = true;
    while (auto f = scan.next()) {
      size_t eq = f->find('=');
      if (eq == std::string::npos || eq == 0) {
        error(line_no, "malformed field '" + *f + "'");
        line_ok = false;
        continue;
      }
      kvs.push_back({f->substr(0, eq), f->substr(eq + 1)});
    }
    if (scan.unterminated) {
      error(line_no, "unterminated quoted string");
      continue;
    }

    auto take = [&](const std::string& key) -> std::optional<std::string> {
      for (auto it = kvs.begin(); it != kvs.end(); ++it) {
        if (it->key == key) {
          std::string v = it->raw_value;
          kvs.erase(it);
          return v;
        }
      }
      return std::nullopt;
    };
    auto leftover_warnings = [&]() {
      for (const auto& kv : kvs)
        warning(line_no, "unknown key '" + kv.key + "'");
    };
    auto plain = [&](const std::string& key, bool required,
                     std::optional<std::string>& out) {
      auto v = take(key);
      if (!v) {
        if (required) {
          error(line_no, "missing field " + key + "=");
          line_ok = false;
        }
        out = std::nullopt;
        return;
      }
      if (!v->empty() && v->front() == '"') {
        error(line_no, "field " + key + "= must not be quoted");
        line_ok = false;
        out = std::nullopt;
        return;
      }
      out = *v == "-" ? std::nullopt : std::make_optional(*v);
    };
    auto quoted = [&](const std::string& key, bool required,
                      std::optional<std::string>& out) {
      auto v = take(key);
      out = std::nullopt;
      if (!v) {
        if (required) {
          error(line_no, "missing field " + key + "=");
          line_ok = false;
        }
        return;
      }
      std::string s;
      if (!iodetail::unquote(*v, s)) {
        error(line_no, "field " + key + "= must be a quoted string");
        line_ok = false;
        return;
      }
      out = s;
    };
    auto integer = [&](const std::string& key, int& out) {
      std::optional<std::string> v;
      plain(key, true, v);
      if (!v) {
        line_ok = false;
        return;
      }
      size_t used = 0;
      try {
        out = std::stoi(*v, &used);
      } catch (...) {
        used = 0;
      }
      if (used != v->size()) {
        error(line_no, "non-integer " + key + " '" + *v + "'");
        line_ok = false;
      }
    };

    std::string id = *id_field;

    if (tag == "DOC") {
      if (have_doc) {
        error(line_no, "duplicate DOC header");
      } else {
        have_doc = true;
        doc.id = id;
      }
      leftover_warnings();
    } else if (tag == "ENT") {
      std::optional<std::string> sem;
      plain("sem", true, sem);
      leftover_warnings();
      if (line_ok) {
        doc.entities.push_back({EntityId{id}, sem});
        line_of.emplace(id, line_no);
      }
    } else if (tag == "SENT") {
      std::optional<std::string> txt;
      quoted("txt", false, txt);
      leftover_warnings();
      if (line_ok) {
        doc.sentences.push_back({id, {}, txt});
        current_sentence = static_cast<int>(doc.sentences.size()) - 1;
        line_of.emplace(id, line_no);
      }
    } else if (tag == "CL") {
      std::optional<std::string> kind;
      int pos = 0;
      plain("kind", true, kind);
      integer("pos", pos);
      leftover_warnings();
      ClauseKind ck = ClauseKind::main;
      if (kind == "matrix") ck = ClauseKind::matrix;
      else if (kind == "subord") ck = ClauseKind::subordinate;
      else if (kind == "main") ck = ClauseKind::main;
      else if (kind) {
        error(line_no, "unknown clause kind '" + *kind + "'");
        line_ok = false;
      } else if (line_ok) {
        error(line_no, "kind= of clause '" + id + "' must not be '-'");
        line_ok = false;
      }
      if (current_sentence < 0) {
        error(line_no, "CL record before any SENT");
        line_ok = false;
      }
      if (line_ok) {
        auto& clauses = doc.sentences[current_sentence].clauses;
        clauses.push_back({id, ck, pos, {}});
        if (!clause_at.count(id))
          clause_at.emplace(id, std::make_pair(current_sentence,
                                               static_cast<int>(clauses.size()) - 1));
        line_of.emplace(id, line_no);
      }
    } else if (tag == "M") {
      Markable m;
      m.id = id;
      std::optional<std::string> cl, surf, ent, role, kind;
      plain("cl", true, cl);
      integer("pos", m.pos);
      quoted("surf", true, surf);
      plain("ent", true, ent);
      plain("agr", true, m.agr);  // key required, value may be `-`
      plain("role", true, role);
      plain("kind", true, kind);
      plain("sem", false, m.sem);
      leftover_warnings();

      auto require_value = [&](const std::optional<std::string>& v, const char* key) {
        if (!v && line_ok) {
          error(line_no, std::string(key) + "= of markable '" + id + "' must not be '-'");
          line_ok = false;
        }
      };
      require_value(cl, "cl");
      require_value(ent, "ent");
      require_value(role, "role");
      require_value(kind, "kind");

      if (role == "subj") m.role = Role::subject;
      else if (role == "other") m.role = Role::other;
      else if (role) {
        error(line_no, "unknown role '" + *role + "'");
        line_ok = false;
      }
      static const std::unordered_map<std::string, MarkKind> kKinds = {
          {"none", MarkKind::none},          {"pron", MarkKind::pronoun},
          {"nom", MarkKind::nominal},        {"prep", MarkKind::prepositional},
          {"plural", MarkKind::plural},      {"setmem", MarkKind::set_member},
          {"sent", MarkKind::sentence_anaphor}, {"global", MarkKind::global_focus}};
      if (kind) {
        auto it = kKinds.find(*kind);
        if (it == kKinds.end()) {
          error(line_no, "unknown markable kind '" + *kind + "'");
          line_ok = false;
        } else {
          m.kind = it->second;
        }
      }
      if (surf) m.surface = *surf;
      if (ent) m.entity = EntityId{*ent};
      if (cl) {
        m.clause = *cl;
        auto at = clause_at.find(*cl);
        if (at == clause_at.end()) {
          error(line_no,
                "markable '" + id + "' references undeclared clause '" + *cl + "'");
          line_ok = false;
        } else if (line_ok) {
          doc.sentences[at->second.first].clauses[at->second.second].markables.push_back(m);
          line_of.emplace(id, line_no);
        }
      }
    } else {
      error(line_no, "unknown record tag '" + tag + "'");
    }

    if (last) break;
  }

  if (!have_doc && !missing_doc_reported) error(1, "missing DOC header");

  // Fold structural violations in as error diagnostics, pointing back at the
  // declaring line where known.
  if (have_doc) {
    for (const auto& v : validate_document(doc)) {
      auto it = line_of.find(v.offender);
      error(it == line_of.end() ? 1 : it->second, v.message);
    }
  }
  return result;
}

inline ParseResult parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ParseResult r;
    r.diagnostics.push_back({1, "cannot read file '" + path + "'", Severity::error});
    return r;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

// ---------------------------------------------------------------------------
// Serialization. Canonical order: DOC, ENT lines, then per sentence the SENT
// line, its CL lines, and its M lines; optional fields print `-`, the
// markable sem= key is emitted only when set.

inline std::string serialize_document(const Document& doc) {
  std::ostringstream out;
  out << "DOC " << doc.id << "\n";
  for (const auto& e : doc.entities)
    out << "ENT " << e.id.value << " sem=" << (e.sem ? *e.sem : "-") << "\n";
  for (const auto& s : doc.sentences) {
    out << "SENT " << s.id;
    if (s.raw_text) out << " txt=" << iodetail::quote(*s.raw_text);
    out << "\n";
    for (const auto& c : s.clauses) {
      const char* kind = c.kind == ClauseKind::matrix      ? "matrix"
                         : c.kind == ClauseKind::subordinate ? "subord"
                                                             : "main";
      out << "CL " << c.id << " kind=" << kind << " pos=" << c.pos << "\n";
    }
    for (const auto& c : s.clauses) {
      for (const auto& m : c.markables) {
        const char* kind = "none";
        switch (m.kind) {
          case MarkKind::none: kind = "none"; break;
          case MarkKind::pronoun: kind = "pron"; break;
          case MarkKind::nominal: kind = "nom"; break;
          case MarkKind::prepositional: kind = "prep"; break;
          case MarkKind::plural: kind = "plural"; break;
          case MarkKind::set_member: kind = "setmem"; break;
          case MarkKind::sentence_anaphor: kind = "sent"; break;
          case MarkKind::global_focus: kind = "global"; break;
        }
        out << "M " << m.id << " cl=" << m.clause << " pos=" << m.pos
            << " surf=" << iodetail::quote(m.surface) << " ent=" << m.entity.value
            << " agr=" << (m.agr ? *m.agr : "-")
            << " role=" << (m.role == Role::subject ? "subj" : "other")
            << " kind=" << kind;
        if (m.sem) out << " sem=" << *m.sem;
        out << "\n";
      }
    }
  }
  return out.str();
}

// Resolution report rows as TSV: doc, markable, strategy, predicted entity,
// gold entity, stage, outcome, false-positive flag.
inline std::string serialize_report_tsv(const ResolutionReport& report) {
  std::ostringstream out;
  for (const auto& r : report.rows) {
    out << report.doc_id << '\t' << r.mark_id << '\t'
        << strategy_name(report.config.strategy) << '\t'
        << (r.predicted ? r.predicted->value : "-") << '\t' << r.gold.value << '\t'
        << (r.stage ? *r.stage : "-") << '\t' << outcome_name(r.outcome) << '\t'
        << (r.false_positive ? "fp" : "-") << "\n";
  }
  return out.str();
}

}  // namespace centerline
