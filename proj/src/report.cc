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

#include "framescore/report.h"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "framescore/errors.h"
#include "json_util.h"

namespace framescore {

using ordered_json = nlohmann::ordered_json;

std::optional<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "table") return ReportFormat::kTable;
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  return std::nullopt;
}

double RoundHalfUp(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  // Sentence ratios are quotients of small integers, so exact halves such as
  // 0.745 arrive a few ulps low; the nudge sends them up.
  double rounded = std::floor(value * scale + 0.5 + 1e-9) / scale;
  return rounded == 0.0 ? 0.0 : rounded;
}

std::string FormatRatio(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", RoundHalfUp(value, 2));
  return buf;
}

namespace {

std::string Pad(std::string s, std::size_t width, bool left = false) {
  if (s.size() >= width) return s;
  std::string fill(width - s.size(), ' ');
  return left ? s + fill : fill + s;
}

const char *const kRowLabels[] = {"P_MinE", "R_MinE", "F_MinE",
                                  "P_MaxE", "R_MaxE", "F_MaxE"};

double RowValue(const SentenceScores &s, int row) {
  switch (row) {
    case 0: return s.p_mine;
    case 1: return s.r_mine;
    case 2: return s.f_mine;
    case 3: return s.p_maxe;
    case 4: return s.r_maxe;
    default: return s.f_maxe;
  }
}

bool RowScoreable(const SentenceScores &s, int row) {
  return row < 3 ? s.scoreable_mine : s.scoreable_maxe;
}

ordered_json ScoreReportJson(const AnnotatedDocument &doc,
                             const DocumentScores &scores) {
  ordered_json root;
  root["doc_id"] = doc.doc_id;
  root["system_id"] = doc.system_id;
  ordered_json per_sentence = ordered_json::object();
  for (const auto &[id, s] : scores.per_sentence) {
    ordered_json o;
    o["p_mine"] = s.p_mine;
    o["r_mine"] = s.r_mine;
    o["f_mine"] = s.f_mine;
    o["p_maxe"] = s.p_maxe;
    o["r_maxe"] = s.r_maxe;
    o["f_maxe"] = s.f_maxe;
    o["scoreable_mine"] = s.scoreable_mine;
    o["scoreable_maxe"] = s.scoreable_maxe;
    auto a = scores.alignments.find(id);
    if (a != scores.alignments.end()) {
      const SentenceAlignment &al = a->second;
      o["counts"] = {{"N_m", al.matched_frames},   {"N_t", al.target_frames},
                     {"N_s", al.source_frames},    {"n_m", al.matched_elements},
                     {"n_t", al.target_elements},  {"n_s", al.source_elements}};
    }
    per_sentence[std::to_string(id)] = std::move(o);
  }
  root["per_sentence"] = std::move(per_sentence);
  root["avg_f_mine"] = scores.avg_f_mine;
  root["avg_f_maxe"] = scores.avg_f_maxe;
  root["n_scored_mine"] = scores.n_scored_mine;
  root["n_scored_maxe"] = scores.n_scored_maxe;
  return root;
}

std::string ScoreReportTable(const AnnotatedDocument &doc,
                             const DocumentScores &scores) {
  std::ostringstream out;
  out << "document " << doc.doc_id;
  if (!doc.system_id.empty()) out << " (system " << doc.system_id << ")";
  out << "\n";
  constexpr std::size_t kLabel = 16;
  constexpr std::size_t kColumn = 8;
  out << Pad("", kLabel, true);
  for (const auto &[id, s] : scores.per_sentence) {
    out << Pad("S" + std::to_string(id), kColumn);
  }
  out << "\n";
  for (int row = 0; row < 6; ++row) {
    out << Pad(kRowLabels[row], kLabel, true);
    for (const auto &[id, s] : scores.per_sentence) {
      out << Pad(RowScoreable(s, row) ? FormatRatio(RowValue(s, row)) : "-", kColumn);
    }
    out << "\n";
  }
  out << "\n";
  out << Pad("avg F_MinE", kLabel, true) << Pad(FormatRatio(scores.avg_f_mine), kColumn)
      << "  (" << scores.n_scored_mine << " of " << scores.per_sentence.size()
      << " sentences)\n";
  out << Pad("avg F_MaxE", kLabel, true) << Pad(FormatRatio(scores.avg_f_maxe), kColumn)
      << "  (" << scores.n_scored_maxe << " of " << scores.per_sentence.size()
      << " sentences)\n";
  return out.str();
}

std::string ScoreReportCsv(const DocumentScores &scores) {
  std::ostringstream out;
  out << "sentence_id,p_mine,r_mine,f_mine,p_maxe,r_maxe,f_maxe,"
         "scoreable_mine,scoreable_maxe\n";
  for (const auto &[id, s] : scores.per_sentence) {
    out << id;
    for (int row = 0; row < 6; ++row) out << "," << FormatRatio(RowValue(s, row));
    out << "," << (s.scoreable_mine ? 1 : 0) << "," << (s.scoreable_maxe ? 1 : 0)
        << "\n";
  }
  return out.str();
}

}  // namespace

std::string RenderScoreReport(const AnnotatedDocument &doc,
                              const DocumentScores &scores, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: return ScoreReportJson(doc, scores).dump(2) + "\n";
    case ReportFormat::kCsv: return ScoreReportCsv(scores);
    case ReportFormat::kTable: break;
  }
  return ScoreReportTable(doc, scores);
}

std::string RenderBleuReport(const BleuReport &report, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    ordered_json root;
    root["doc_id"] = report.doc_id;
    root["system_id"] = report.system_id;
    root["metric"] = "bleu";
    ordered_json per_sentence = ordered_json::object();
    for (const auto &[id, s] : report.per_sentence) {
      ordered_json o;
      o["bleu"] = s.score;
      o["brevity_penalty"] = s.brevity_penalty;
      o["ngram_precisions"] = s.ngram_precisions;
      per_sentence[std::to_string(id)] = std::move(o);
    }
    root["per_sentence"] = std::move(per_sentence);
    root["avg_bleu"] = report.average;
    root["n_scored"] = report.per_sentence.size();
    return root.dump(2) + "\n";
  }
  std::ostringstream out;
  if (format == ReportFormat::kCsv) {
    out << "sentence_id,bleu,brevity_penalty\n";
    for (const auto &[id, s] : report.per_sentence) {
      out << id << "," << FormatRatio(s.score) << "," << FormatRatio(s.brevity_penalty)
          << "\n";
    }
    return out.str();
  }
  out << "document " << report.doc_id;
  if (!report.system_id.empty()) out << " (system " << report.system_id << ")";
  out << "\n" << Pad("sentence", 10, true) << Pad("BLEU", 8) << Pad("BP", 8) << "\n";
  for (const auto &[id, s] : report.per_sentence) {
    out << Pad("S" + std::to_string(id), 10, true) << Pad(FormatRatio(s.score), 8)
        << Pad(FormatRatio(s.brevity_penalty), 8) << "\n";
  }
  out << "\n" << Pad("avg BLEU", 10, true) << Pad(FormatRatio(report.average), 8)
      << "\n";
  return out.str();
}

MetricReport ParseMetricReport(std::string_view json) {
  const nlohmann::json root = internal::ParseJson(json);
  internal::ObjectReader top(root, "");
  MetricReport report;
  report.doc_id = top.OptionalString("doc_id", "");
  report.system_id = top.String("system_id");
  if (report.system_id.empty()) throw SchemaError("system_id", "empty system id");
  const auto &per_sentence = top.Get("per_sentence");
  if (!per_sentence.is_object()) {
    throw SchemaError("per_sentence", "expected object");
  }
  for (const auto &item : per_sentence.items()) {
    int id = 0;
    try {
      std::size_t used = 0;
      id = std::stoi(item.key(), &used);
      if (used != item.key().size() || id <= 0) throw std::invalid_argument("");
    } catch (const std::exception &) {
      throw SchemaError("per_sentence." + item.key(), "invalid sentence id");
    }
    internal::ObjectReader entry(item.value(), "per_sentence." + item.key());
    auto number = [&](const char *key) {
      const auto &v = entry.Get(key);
      if (!v.is_number()) throw SchemaError(entry.Path(key), "expected number");
      return v.get<double>();
    };
    auto flag = [&](const char *key) {
      return !entry.Has(key) || entry.Get(key).get<bool>();
    };
    if (entry.Has("f_mine") && flag("scoreable_mine")) {
      report.values["mine"][id] = number("f_mine");
    }
    if (entry.Has("f_maxe") && flag("scoreable_maxe")) {
      report.values["maxe"][id] = number("f_maxe");
    }
    if (entry.Has("bleu")) report.values["bleu"][id] = number("bleu");
  }
  return report;
}

namespace {

std::vector<std::string> MetricOrder(
    const std::map<std::string, MetricCorrelation> &correlations) {
  std::vector<std::string> order;
  for (const char *m : {"mine", "maxe", "bleu"}) {
    if (correlations.count(m)) order.emplace_back(m);
  }
  for (const auto &[m, c] : correlations) {
    if (m != "mine" && m != "maxe" && m != "bleu") order.push_back(m);
  }
  return order;
}

std::string DisplayName(const std::string &metric) {
  if (metric == "mine") return "MinE";
  if (metric == "maxe") return "MaxE";
  if (metric == "bleu") return "BLEU";
  return metric;
}

}  // namespace

std::string RenderCorrelationReport(
    const std::map<std::string, MetricCorrelation> &correlations,
    ReportFormat format) {
  std::set<int> used;
  int skipped = 0;
  for (const auto &[m, c] : correlations) {
    for (const auto &[id, rho] : c.per_sentence) used.insert(id);
    skipped = std::max(skipped, c.sentences_skipped);
  }
  const auto order = MetricOrder(correlations);

  if (format == ReportFormat::kJson) {
    ordered_json root;
    ordered_json per_metric = ordered_json::object();
    ordered_json per_sentence = ordered_json::object();
    for (const auto &m : order) {
      const auto &c = correlations.at(m);
      per_metric[m] = c.average_rho;
      ordered_json s = ordered_json::object();
      for (const auto &[id, rho] : c.per_sentence) s[std::to_string(id)] = rho;
      per_sentence[m] = std::move(s);
    }
    root["per_metric"] = std::move(per_metric);
    root["n_sentences_used"] = used.size();
    root["n_sentences_skipped"] = skipped;
    root["per_sentence"] = std::move(per_sentence);
    return root.dump(2) + "\n";
  }
  std::ostringstream out;
  if (format == ReportFormat::kCsv) {
    out << "metric,rho,sentences_used\n";
    for (const auto &m : order) {
      const auto &c = correlations.at(m);
      out << m << "," << FormatRatio(c.average_rho) << "," << c.sentences_used << "\n";
    }
    return out.str();
  }
  out << Pad("Metric", 8, true) << "Correlation with human judgment\n";
  for (const auto &m : order) {
    out << Pad(DisplayName(m), 8, true) << FormatRatio(correlations.at(m).average_rho)
        << "\n";
  }
  out << "\n" << used.size() << " sentence(s) used";
  if (skipped > 0) out << ", " << skipped << " skipped";
  out << "\n";
  return out.str();
}

}  // namespace framescore
