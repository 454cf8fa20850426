// Copyright 2026 The Framescore Authors.
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

#include "framescore/cli.h"

#include <signal.h>

#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "framescore/annotation.h"
#include "framescore/bleu.h"
#include "framescore/correlation.h"
#include "framescore/errors.h"
#include "framescore/metrics.h"
#include "framescore/overlay.h"
#include "framescore/report.h"
#include "framescore/service.h"
#include "framescore/workspace.h"

namespace framescore {
namespace {

struct Options {
  std::string document;
  std::string overlay;
  std::string format = "table";
  std::string candidate;
  std::string reference;
  std::string tokenize = "auto";
  std::vector<std::string> inputs;
  std::string data;
  std::string ui;
  std::string host = "127.0.0.1";
  int port = 8080;
};

ReportFormat Format(const Options &opts) { return *ParseReportFormat(opts.format); }

// Reads and parses a document, prefixing errors with the path.
AnnotatedDocument LoadDocument(const std::string &path) {
  const std::string text = ReadFile(path);
  try {
    return ParseDocument(text);
  } catch (const Error &e) {
    throw Error(path + ": " + e.what());
  }
}

OverlaySet LoadOverlay(const std::string &path) {
  const std::string text = ReadFile(path);
  try {
    return ParseOverlaySet(text);
  } catch (const Error &e) {
    throw Error(path + ": " + e.what());
  }
}

void PrintDiagnostics(const ValidationReport &report, std::ostream &os) {
  for (const auto &d : report.errors) os << "error: " << FormatDiagnostic(d) << "\n";
  for (const auto &d : report.warnings) os << "warning: " << FormatDiagnostic(d) << "\n";
}

int RunScore(const Options &opts, std::ostream &out, std::ostream &err) {
  const AnnotatedDocument doc = LoadDocument(opts.document);
  std::optional<OverlaySet> overlays;
  if (!opts.overlay.empty()) overlays = LoadOverlay(opts.overlay);
  const ValidationReport report =
      overlays ? ValidateDocument(doc, *overlays) : ValidateDocument(doc);
  if (!report.ok()) {
    err << opts.document << ": document is not scoreable\n";
    PrintDiagnostics(report, err);
    return kExitFailure;
  }
  const DocumentScores scores = ScoreDocument(doc, overlays ? &*overlays : nullptr);
  out << RenderScoreReport(doc, scores, Format(opts));
  return kExitOk;
}

int RunValidate(const Options &opts, std::ostream &out, std::ostream &) {
  std::vector<Diagnostic> parse_warnings;
  const std::string text = ReadFile(opts.document);
  AnnotatedDocument doc;
  try {
    doc = ParseDocument(text, &parse_warnings);
  } catch (const Error &e) {
    out << "error: " << opts.document << ": " << e.what() << "\n";
    return kExitFailure;
  }
  ValidationReport report;
  if (!opts.overlay.empty()) {
    report = ValidateDocument(doc, LoadOverlay(opts.overlay));
  } else {
    report = ValidateDocument(doc);
  }
  report.warnings.insert(report.warnings.begin(), parse_warnings.begin(),
                         parse_warnings.end());
  PrintDiagnostics(report, out);
  out << opts.document << ": " << doc.sentences.size() << " sentence(s), "
      << report.errors.size() << " error(s), " << report.warnings.size()
      << " warning(s)\n";
  return report.ok() ? kExitOk : kExitFailure;
}

int RunBleu(const Options &opts, std::ostream &out, std::ostream &err) {
  const AnnotatedDocument candidate = LoadDocument(opts.candidate);
  const AnnotatedDocument reference = LoadDocument(opts.reference);

  std::vector<int> missing_in_reference;
  std::vector<int> missing_in_candidate;
  for (const auto &s : candidate.sentences) {
    if (!reference.FindSentence(s.id)) missing_in_reference.push_back(s.id);
  }
  for (const auto &s : reference.sentences) {
    if (!candidate.FindSentence(s.id)) missing_in_candidate.push_back(s.id);
  }
  if (!missing_in_reference.empty() || !missing_in_candidate.empty()) {
    auto list = [](const std::vector<int> &ids) {
      std::string s;
      for (int id : ids) s += (s.empty() ? "" : ", ") + std::to_string(id);
      return s;
    };
    err << "sentence ids differ between candidate and reference\n";
    if (!missing_in_reference.empty()) {
      err << "  missing from " << opts.reference << ": " << list(missing_in_reference)
          << "\n";
    }
    if (!missing_in_candidate.empty()) {
      err << "  missing from " << opts.candidate << ": " << list(missing_in_candidate)
          << "\n";
    }
    return kExitFailure;
  }

  std::optional<Tokenization> fixed;
  if (opts.tokenize != "auto") fixed = ParseTokenization(opts.tokenize);

  BleuReport report;
  report.doc_id = candidate.doc_id;
  report.system_id = candidate.system_id;
  double sum = 0.0;
  for (const auto &s : candidate.sentences) {
    const std::string &ref_text = reference.FindSentence(s.id)->target_text;
    BleuConfig config;
    config.tokenization =
        fixed ? *fixed : ChooseTokenization(ref_text + " " + s.target_text);
    const std::vector<Tokens> refs = {Tokenize(ref_text, config.tokenization)};
    BleuScore score =
        SentenceBleu(Tokenize(s.target_text, config.tokenization), refs, config);
    sum += score.score;
    report.per_sentence.emplace_back(s.id, std::move(score));
  }
  if (!report.per_sentence.empty()) report.average = sum / report.per_sentence.size();
  out << RenderBleuReport(report, Format(opts));
  return kExitOk;
}

int RunCorrelate(const Options &opts, std::ostream &out, std::ostream &err) {
  if (opts.inputs.size() < 2) {
    err << "correlate needs at least one metric report and a human score CSV\n";
    return kExitUsage;
  }
  const std::string &csv_path = opts.inputs.back();
  SentenceSystemScores human;
  try {
    human = ParseHumanScores(ReadFile(csv_path));
  } catch (const ParseError &e) {
    err << csv_path << ": " << e.what() << "\n";
    return kExitFailure;
  }

  std::map<std::string, SentenceSystemScores> metrics;
  for (std::size_t i = 0; i + 1 < opts.inputs.size(); ++i) {
    const std::string &path = opts.inputs[i];
    MetricReport report;
    try {
      report = ParseMetricReport(ReadFile(path));
    } catch (const ParseError &e) {
      throw Error(path + ": " + e.what());
    } catch (const SchemaError &e) {
      throw Error(path + ": " + e.what());
    }
    for (const auto &[metric, sentences] : report.values) {
      for (const auto &[sentence, value] : sentences) {
        if (!metrics[metric][sentence].emplace(report.system_id, value).second) {
          err << path << ": system '" << report.system_id << "' already has a "
              << metric << " score for sentence " << sentence << "\n";
          return kExitFailure;
        }
      }
    }
  }
  for (const auto &[metric, sentences] : metrics) {
    for (const auto &[sentence, systems] : sentences) {
      auto h = human.find(sentence);
      for (const auto &[system, value] : systems) {
        if (h == human.end() || !h->second.count(system)) {
          err << csv_path << ": no human score for system '" << system
              << "' on sentence " << sentence << "\n";
          return kExitFailure;
        }
      }
    }
  }
  out << RenderCorrelationReport(CorrelateMetrics(metrics, human), Format(opts));
  return kExitOk;
}

int RunServe(const Options &opts, std::ostream &out, std::ostream &err) {
  std::string data = opts.data;
  if (data.empty()) {
    const char *env = std::getenv("FRAMESCORE_DATA_DIR");
    data = env != nullptr && *env != '\0' ? env : "data";
  }
  Workspace workspace(data);
  std::optional<std::filesystem::path> ui;
  if (!opts.ui.empty()) ui = opts.ui;
  AdjudicationServer server(workspace, ui);
  const int port = server.Bind(opts.host, opts.port);
  if (port < 0) {
    err << "cannot bind " << opts.host << ":" << opts.port << "\n";
    return kExitFailure;
  }

  // Stop cleanly on SIGINT/SIGTERM: block them here so every thread inherits
  // the mask, and wait for them on a dedicated thread.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.Stop();
  });

  out << "serving " << workspace.ListDocuments().size() << " document(s) from " << data
      << " on http://" << opts.host << ":" << port << "\n"
      << std::flush;
  server.Run();
  // Wake the waiter if the server stopped for another reason.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  Options opts;
  CLI::App app{"Frame-semantic interpreting quality scoring (MinE/MaxE)", "framescore"};
  app.require_subcommand(1, 1);
  const auto formats = CLI::IsMember({"table", "json", "csv"});

  auto *score = app.add_subcommand("score", "Score a document, printing MinE/MaxE per sentence");
  score->add_option("document", opts.document, "Annotated document (JSON)")->required();
  score->add_option("--overlay", opts.overlay, "Adjudication overlay file");
  score->add_option("--format", opts.format, "table, json or csv")->check(formats);

  auto *bleu = app.add_subcommand("bleu", "Sentence-level BLEU of candidate vs reference");
  bleu->add_option("candidate", opts.candidate, "Candidate document")->required();
  bleu->add_option("reference", opts.reference, "Reference document")->required();
  bleu->add_option("--tokenize", opts.tokenize, "auto, whitespace or char")
      ->check(CLI::IsMember({"auto", "whitespace", "char"}));
  bleu->add_option("--format", opts.format, "table, json or csv")->check(formats);

  auto *correlate = app.add_subcommand(
      "correlate", "Spearman correlation of metric reports with human scores");
  correlate->add_option("inputs", opts.inputs,
                        "Metric report files (JSON) followed by the human score CSV")
      ->required();
  correlate->add_option("--format", opts.format, "table, json or csv")->check(formats);

  auto *validate = app.add_subcommand("validate", "Check a document for annotation errors");
  validate->add_option("document", opts.document, "Annotated document (JSON)")->required();
  validate->add_option("--overlay", opts.overlay, "Also check this overlay file");

  auto *serve = app.add_subcommand("serve", "Run the adjudication HTTP service");
  serve->add_option("--data", opts.data,
                    "Data directory (default $FRAMESCORE_DATA_DIR or ./data)");
  serve->add_option("--port", opts.port, "Port to listen on")->check(CLI::Range(0, 65535));
  serve->add_option("--host", opts.host, "Address to bind");
  serve->add_option("--ui", opts.ui, "Directory of static UI assets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n\n";
    const auto parsed = app.get_subcommands();
    err << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitUsage;
  }

  try {
    if (score->parsed()) return RunScore(opts, out, err);
    if (bleu->parsed()) return RunBleu(opts, out, err);
    if (correlate->parsed()) return RunCorrelate(opts, out, err);
    if (validate->parsed()) return RunValidate(opts, out, err);
    if (serve->parsed()) return RunServe(opts, out, err);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace framescore
