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

#ifndef FRAMESCORE_CORRELATION_H_
#define FRAMESCORE_CORRELATION_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace framescore {

// Ranks of n systems, 1 = best. Tied systems share the mean of the ranks
// they span, so the ranks always sum to n(n+1)/2.
struct RankVector {
  std::vector<double> ranks;

  std::size_t n() const { return ranks.size(); }
};

enum class Direction { kHigherIsBetter, kLowerIsBetter };

// Throws std::invalid_argument for an empty input or a non-finite score.
RankVector Rank(std::span<const double> scores,
                Direction direction = Direction::kHigherIsBetter);

struct CorrelationResult {
  double rho = 0.0;
  std::vector<double> d;  // a.ranks[i] - b.ranks[i]
  std::size_t n = 0;
};

// rho = 1 - 6 sum(d_i^2) / (n (n^2 - 1)), applied to fractional ranks as
// well. Throws std::invalid_argument if the sizes differ or n < 2.
CorrelationResult SpearmanRho(const RankVector &a, const RankVector &b);

// system id -> score
using SystemScores = std::map<std::string, double>;
// sentence id -> system scores
using SentenceSystemScores = std::map<int, SystemScores>;

struct MetricCorrelation {
  double average_rho = 0.0;
  std::map<int, double> per_sentence;
  int sentences_used = 0;
  // Sentences with fewer than two systems scored by both sides.
  int sentences_skipped = 0;
};

// Sentence-level rho of every metric against the human scores over the
// systems both have scored, averaged arithmetically over sentences. Throws
// Error if some metric has no eligible sentence.
std::map<std::string, MetricCorrelation> CorrelateMetrics(
    const std::map<std::string, SentenceSystemScores> &metrics,
    const SentenceSystemScores &human);

// Reads "sentence_id,system_id,score" CSV with that header line. Throws
// ParseError naming the line of the first malformed or duplicate row.
SentenceSystemScores ParseHumanScores(std::string_view csv);

}  // namespace framescore

#endif  // FRAMESCORE_CORRELATION_H_
