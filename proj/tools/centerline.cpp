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

// Command-line front end: validate annotation files, print corpus statistics
// and antecedent typologies, run one resolution strategy, score it, or
// compare all four strategies side by side.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "centerline/evaluation.hpp"
#include "centerline/io.hpp"
#include "centerline/model.hpp"
#include "centerline/resolution.hpp"

namespace {

using namespace centerline;

struct Options {
  std::vector<std::string> inputs;
  std::string strategy;
  bool semantics = false;
  bool no_binding = false;
  bool chain_correct = false;
  std::string format = "table";
  std::string output;
};

bool color_enabled() {
  const char* v = std::getenv("CENTERLINE_COLOR");
  return v != nullptr && std::string(v) == "1";
}

std::optional<Strategy> parse_strategy(const std::string& name) {
  if (name == "functional") return Strategy::functional;
  if (name == "linear") return Strategy::linear;
  if (name == "inter") return Strategy::inter_first;
  if (name == "intra") return Strategy::intra_first;
  return std::nullopt;
}

// Parses every input; diagnostics go to stderr. Returns false when any file
// is unreadable, malformed, or structurally invalid.
bool load_documents(const std::vector<std::string>& paths, std::vector<Document>& out) {
  bool ok = true;
  for (const auto& path : paths) {
    ParseResult r = parse_file(path);
    for (const auto& d : r.diagnostics)
      std::cerr << path << ":" << d.line << ": "
                << (d.severity == Severity::error ? "error" : "warning") << ": "
                << d.message << "\n";
    if (!r.ok()) {
      ok = false;
      continue;
    }
    out.push_back(std::move(r.document));
  }
  return ok;
}

int emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(opt.output, std::ios::binary);
  if (!f) {
    std::cerr << "cannot write '" << opt.output << "'\n";
    return 1;
  }
  f << text;
  return 0;
}

std::string render(const Options& opt, const TextTable& t) {
  return opt.format == "tsv" ? render_tsv(t) : render_table(t, opt.output.empty() &&
                                                                   color_enabled());
}

ResolutionConfig make_config(const Options& opt, Strategy s) {
  ResolutionConfig cfg;
  cfg.strategy = s;
  cfg.semantics_enabled = opt.semantics;
  cfg.binding_filter_enabled = !opt.no_binding;
  cfg.chain_correct = opt.chain_correct;
  return cfg;
}

int cmd_validate(const Options& opt) {
  std::vector<Document> docs;
  bool ok = load_documents(opt.inputs, docs);
  if (ok)
    for (size_t i = 0; i < docs.size(); ++i)
      std::cout << opt.inputs[i] << ": OK\n";
  return ok ? 0 : 1;
}

int cmd_stats(const Options& opt) {
  std::vector<Document> docs;
  if (!load_documents(opt.inputs, docs)) return 1;
  std::vector<StatsRow> rows = corpus_stats(docs);
  if (rows.size() > 1) rows.push_back(sum_stats(rows, "Σ"));
  return emit(opt, render(opt, stats_table(rows)));
}

int cmd_typology(const Options& opt) {
  std::vector<Document> docs;
  if (!load_documents(opt.inputs, docs)) return 1;
  std::vector<TypologyRow> rows;
  for (const auto& d : docs) rows.push_back(antecedent_typology(d));
  if (rows.size() > 1) rows.push_back(sum_typology(rows, "Σ"));
  return emit(opt, render(opt, typology_table(rows)));
}

int cmd_resolve(const Options& opt, Strategy strategy) {
  std::vector<Document> docs;
  if (!load_documents(opt.inputs, docs)) return 1;
  std::string out;
  for (const auto& doc : docs) {
    ResolutionReport report = resolve_document(doc, make_config(opt, strategy));
    annotate_false_positives(report, doc);
    out += serialize_report_tsv(report);
  }
  return emit(opt, out);
}

int cmd_evaluate(const Options& opt, Strategy strategy) {
  std::vector<Document> docs;
  if (!load_documents(opt.inputs, docs)) return 1;
  std::vector<ScoreRow> rows;
  for (const auto& doc : docs)
    rows.push_back(score(resolve_document(doc, make_config(opt, strategy)), doc));
  if (rows.size() > 1) rows.push_back(sum_scores(rows, "Σ"));
  return emit(opt, render(opt, evaluation_table(rows, strategy)));
}

int cmd_compare(const Options& opt) {
  std::vector<Document> docs;
  if (!load_documents(opt.inputs, docs)) return 1;
  std::string out;
  for (bool semantics : {false, true}) {
    std::vector<ScoreRow> rows;
    for (const auto& doc : docs) {
      ResolutionConfig cfg = make_config(opt, Strategy::functional);
      cfg.semantics_enabled = semantics;
      ScoreRow row;
      for (const auto& report : resolve_all_strategies(doc, cfg)) {
        ScoreRow one = score(report, doc);
        row.label = one.label;
        row.n = one.n;
        for (size_t s = 0; s < 4; ++s)
          if (one.cells[s]) row.set(static_cast<Strategy>(s), one.cells[s]->correct);
      }
      rows.push_back(std::move(row));
    }
    if (rows.size() > 1) rows.push_back(sum_scores(rows, "Σ"));
    out += semantics ? "semantics on\n" : "semantics off\n";
    out += render(opt, score_table(rows));
    if (!semantics) out += "\n";
  }
  return emit(opt, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"centering-based anaphora resolution over annotated discourse"};
  app.require_subcommand(1);

  Options opt;
  std::string command;

  auto add_common = [&](CLI::App* sub, bool takes_strategy, bool strategy_required) {
    sub->add_option("inputs", opt.inputs, "annotation files")
        ->required()
        ->check(CLI::ExistingFile);
    if (takes_strategy) {
      auto* o = sub->add_option("--strategy", opt.strategy,
                                "functional|linear|inter|intra");
      if (strategy_required) o->required();
    }
    sub->add_flag("--semantics", opt.semantics, "enable semantic constraints");
    sub->add_flag("--no-binding", opt.no_binding, "disable the binding filter");
    sub->add_flag("--chain-correct", opt.chain_correct,
                  "replace resolved antecedent entities by gold downstream");
    sub->add_option("--format", opt.format, "table|tsv")
        ->check(CLI::IsMember({"table", "tsv"}));
    sub->add_option("-o,--output", opt.output, "write to file instead of stdout");
    sub->callback([&, sub] { command = sub->get_name(); });
  };

  add_common(app.add_subcommand("validate", "check files against the format"), false,
             false);
  add_common(app.add_subcommand("stats", "anaphor distribution per file"), false, false);
  add_common(app.add_subcommand("typology", "intra-sentential antecedent typology"),
             false, false);
  add_common(app.add_subcommand("resolve", "run one strategy, emit the TSV report"),
             true, true);
  add_common(app.add_subcommand("evaluate", "success rate of one strategy"), true, true);
  add_common(app.add_subcommand("compare", "success rates of all four strategies"),
             false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::optional<Strategy> strategy = parse_strategy(opt.strategy);
  if ((command == "resolve" || command == "evaluate") && !strategy) {
    std::cerr << "unknown strategy '" << opt.strategy << "'\n";
    return 2;
  }

  if (command == "validate") return cmd_validate(opt);
  if (command == "stats") return cmd_stats(opt);
  if (command == "typology") return cmd_typology(opt);
  if (command == "resolve") return cmd_resolve(opt, *strategy);
  if (command == "evaluate") return cmd_evaluate(opt, *strategy);
  if (command == "compare") return cmd_compare(opt);
  return 2;
}
