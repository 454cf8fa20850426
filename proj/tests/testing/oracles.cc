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

#include "testing/oracles.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "framescore/labels.h"

namespace framescore {
namespace testing {

std::vector<PlainFrame> Canonical(const std::vector<FrameInstance> &frames) {
  std::vector<PlainFrame> result;
  for (const auto &f : frames) {
    PlainFrame p;
    p.name = NormalizeLabel(f.name);
    for (const auto &fe : f.elements) p.roles.push_back(NormalizeLabel(fe.role));
    result.push_back(std::move(p));
  }
  return result;
}

int OracleMatchedFrames(const std::vector<PlainFrame> &source,
                        const std::vector<PlainFrame> &target) {
  std::vector<bool> used(target.size(), false);
  int matched = 0;
  for (const auto &s : source) {
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (!used[j] && target[j].name == s.name) {
        used[j] = true;
        ++matched;
        break;
      }
    }
  }
  return matched;
}

int OracleRoleOverlap(const std::vector<std::string> &left,
                      const std::vector<std::string> &right) {
  std::vector<std::string> a = left, b = right;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  int overlap = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++overlap;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return overlap;
}

int OracleBestPairingTotal(const std::vector<PlainFrame> &source,
                           const std::vector<PlainFrame> &target) {
  const bool source_small = source.size() <= target.size();
  const auto &small = source_small ? source : target;
  const auto &large = source_small ? target : source;
  std::vector<std::size_t> perm(large.size());
  std::iota(perm.begin(), perm.end(), 0);
  int best = 0;
  do {
    int total = 0;
    for (std::size_t i = 0; i < small.size(); ++i) {
      total += OracleRoleOverlap(small[i].roles, large[perm[i]].roles);
    }
    best = std::max(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

int OracleMatchedElements(const SentencePair &pair) {
  std::map<std::string, std::vector<PlainFrame>> source, target;
  for (auto &f : Canonical(pair.source_frames)) source[f.name].push_back(f);
  for (auto &f : Canonical(pair.target_frames)) target[f.name].push_back(f);
  int total = 0;
  for (const auto &[name, frames] : source) {
    auto it = target.find(name);
    if (it != target.end()) total += OracleBestPairingTotal(frames, it->second);
  }
  return total;
}

int MaxDuplicates(const SentencePair &pair) {
  int best = 0;
  for (const auto *frames : {&pair.source_frames, &pair.target_frames}) {
    std::map<std::string, int> counts;
    for (const auto &f : *frames) best = std::max(best, ++counts[NormalizeLabel(f.name)]);
  }
  return best;
}

ClippedCount OracleClippedNgrams(const std::vector<std::string> &candidate,
                                 const std::vector<std::vector<std::string>> &references,
                                 int n) {
  auto gram_at = [n](const std::vector<std::string> &tokens, std::size_t i) {
    return std::vector<std::string>(tokens.begin() + i, tokens.begin() + i + n);
  };
  auto occurrences = [&](const std::vector<std::string> &tokens,
                         const std::vector<std::string> &gram) {
    int count = 0;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      if (gram_at(tokens, i) == gram) ++count;
    }
    return count;
  };
  ClippedCount result;
  std::vector<std::vector<std::string>> seen;
  for (std::size_t i = 0; i + n <= candidate.size(); ++i) {
    ++result.total;
    auto gram = gram_at(candidate, i);
    if (std::find(seen.begin(), seen.end(), gram) != seen.end()) continue;
    seen.push_back(gram);
    int max_ref = 0;
    for (const auto &ref : references) max_ref = std::max(max_ref, occurrences(ref, gram));
    result.matched += std::min(occurrences(candidate, gram), max_ref);
  }
  return result;
}

double Pearson(const std::vector<double> &a, const std::vector<double> &b) {
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double cov = 0.0, va = 0.0, vb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    cov += (a[i] - ma) * (b[i] - mb);
    va += (a[i] - ma) * (a[i] - ma);
    vb += (b[i] - mb) * (b[i] - mb);
  }
  return cov / std::sqrt(va * vb);
}

}  // namespace testing
}  // namespace framescore
