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

#include "framescore/correlation.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "framescore/errors.h"

namespace framescore {

RankVector Rank(std::span<const double> scores, Direction direction) {
  if (scores.empty()) throw std::invalid_argument("cannot rank an empty list");
  for (double s : scores) {
    if (!std::isfinite(s)) throw std::invalid_argument("non-finite score");
  }
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return direction == Direction::kHigherIsBetter ? scores[a] > scores[b]
                                                   : scores[a] < scores[b];
  });

  RankVector result;
  result.ranks.resize(scores.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && scores[order[j + 1]] == scores[order[i]]) ++j;
    // Positions i..j (0-based) hold ranks i+1..j+1.
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) result.ranks[order[k]] = rank;
    i = j + 1;
  }
  return result;
}

CorrelationResult SpearmanRho(const RankVector &a, const RankVector &b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("rank vectors differ in length (" +
                                std::to_string(a.n()) + " vs " +
                                std::to_string(b.n()) + ")");
  }
  if (a.n() < 2) throw std::invalid_argument("need at least two systems");
  CorrelationResult result;
  result.n = a.n();
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < a.n(); ++i) {
    const double d = a.ranks[i] - b.ranks[i];
    result.d.push_back(d);
    sum_sq += d * d;
  }
  const double n = static_cast<double>(result.n);
  result.rho = 1.0 - 6.0 * sum_sq / (n * (n * n - 1.0));
  return result;
}

std::map<std::string, MetricCorrelation> CorrelateMetrics(
    const std::map<std::string, SentenceSystemScores> &metrics,
    const SentenceSystemScores &human) {
  std::map<std::string, MetricCorrelation> result;
  for (const auto &[metric, sentences] : metrics) {
    MetricCorrelation &mc = result[metric];
    double sum = 0.0;
    for (const auto &[sentence_id, systems] : sentences) {
      auto h = human.find(sentence_id);
      std::vector<double> metric_scores;
      std::vector<double> human_scores;
      if (h != human.end()) {
        for (const auto &[system, score] : systems) {
          auto hs = h->second.find(system);
          if (hs == h->second.end()) continue;
          metric_scores.push_back(score);
          human_scores.push_back(hs->second);
        }
      }
      if (metric_scores.size() < 2) {
        ++mc.sentences_skipped;
        continue;
      }
      const double rho = SpearmanRho(Rank(metric_scores), Rank(human_scores)).rho;
      mc.per_sentence[sentence_id] = rho;
      sum += rho;
      ++mc.sentences_used;
    }
    if (mc.sentences_used == 0) {
      throw Error("metric '" + metric +
                  "' has no sentence with two or more systems scored by both "
                  "the metric and the human judge");
    }
    mc.average_rho = sum / mc.sentences_used;
  }
  if (result.empty()) throw Error("no metric scores to correlate");
  return result;
}

namespace {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(',', start);
    fields.push_back(line.substr(start, pos == std::string_view::npos
                                            ? std::string_view::npos
                                            : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

SentenceSystemScores ParseHumanScores(std::string_view csv) {
  SentenceSystemScores result;
  int line_no = 0;
  bool header_seen = false;
  std::size_t start = 0;
  while (start < csv.size()) {
    auto end = csv.find('\n', start);
    std::string_view line = csv.substr(
        start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = end == std::string_view::npos ? csv.size() : end + 1;
    ++line_no;
    line = Trim(line);
    if (line.empty()) continue;

    auto fields = SplitFields(line);
    for (auto &f : fields) f = Trim(f);
    if (!header_seen) {
      if (fields.size() != 3 || fields[0] != "sentence_id" ||
          fields[1] != "system_id" || fields[2] != "score") {
        throw ParseError("expected header 'sentence_id,system_id,score'", line_no, 1);
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 3) {
      throw ParseError("expected 3 fields, found " + std::to_string(fields.size()),
                       line_no, 1);
    }
    int sentence_id = 0;
    auto [p1, e1] = std::from_chars(fields[0].data(),
                                    fields[0].data() + fields[0].size(), sentence_id);
    if (e1 != std::errc() || p1 != fields[0].data() + fields[0].size() ||
        sentence_id <= 0) {
      throw ParseError("invalid sentence id '" + std::string(fields[0]) + "'",
                       line_no, 1);
    }
    if (fields[1].empty()) throw ParseError("empty system id", line_no, 1);
    double score = 0.0;
    auto [p3, e3] = std::from_chars(fields[2].data(),
                                    fields[2].data() + fields[2].size(), score);
    if (e3 != std::errc() || p3 != fields[2].data() + fields[2].size() ||
        !std::isfinite(score)) {
      throw ParseError("invalid score '" + std::string(fields[2]) + "'", line_no, 1);
    }
    if (!result[sentence_id].emplace(std::string(fields[1]), score).second) {
      throw ParseError("duplicate score for sentence " + std::to_string(sentence_id) +
                           ", system '" + std::string(fields[1]) + "'",
                       line_no, 1);
    }
  }
  if (!header_seen) throw ParseError("missing header line", 1, 1);
  return result;
}

}  // namespace framescore
