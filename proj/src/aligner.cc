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

#include "framescore/aligner.h"

#include <algorithm>
#include <numeric>

#include "framescore/errors.h"

namespace framescore {
namespace {

LabelCounts RoleCounts(const FrameInstance &frame, const AliasTable &aliases) {
  LabelCounts counts;
  for (const auto &fe : frame.elements) ++counts[NormalizeLabel(fe.role, aliases)];
  return counts;
}

LabelCounts NameCounts(std::span<const FrameInstance> frames,
                       const AliasTable &aliases) {
  LabelCounts counts;
  for (const auto &f : frames) ++counts[NormalizeLabel(f.name, aliases)];
  return counts;
}

LabelCounts MultisetMin(const LabelCounts &a, const LabelCounts &b) {
  LabelCounts result;
  for (const auto &[label, count] : a) {
    auto it = b.find(label);
    if (it == b.end()) continue;
    int m = std::min(count, it->second);
    if (m > 0) result[label] = m;
  }
  return result;
}

using Assignment = std::vector<std::pair<std::size_t, std::size_t>>;

// Score matrix: scores[i][j] = matched roles between source i and target j.
using ScoreMatrix = std::vector<std::vector<int>>;

// Depth-first enumeration of injective maps from rows to columns, rows in
// order and columns ascending, so the first assignment reaching the optimum
// is the lexicographically smallest.
class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const ScoreMatrix &scores, std::size_t rows,
                   std::size_t cols)
      : scores_(scores), rows_(rows), used_(cols, false), current_(rows) {}

  std::vector<std::size_t> Run() {
    Visit(0, 0);
    return best_;
  }

 private:
  void Visit(std::size_t row, int total) {
    if (row == rows_) {
      if (best_.empty() || total > best_total_) {
        best_total_ = total;
        best_ = current_;
      }
      return;
    }
    for (std::size_t col = 0; col < used_.size(); ++col) {
      if (used_[col]) continue;
      used_[col] = true;
      current_[row] = col;
      Visit(row + 1, total + scores_[row][col]);
      used_[col] = false;
    }
  }

  const ScoreMatrix &scores_;
  std::size_t rows_;
  std::vector<bool> used_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  int best_total_ = 0;
};

}  // namespace

int Total(const LabelCounts &counts) {
  int total = 0;
  for (const auto &[label, count] : counts) total += count;
  return total;
}

FrameMatch MatchFrames(std::span<const FrameInstance> source,
                       std::span<const FrameInstance> target,
                       const AliasTable &aliases) {
  FrameMatch match;
  match.per_name =
      MultisetMin(NameCounts(source, aliases), NameCounts(target, aliases));
  match.matched = Total(match.per_name);
  return match;
}

LabelCounts MatchFrameElements(const FrameInstance &source,
                               const FrameInstance &target,
                               const AliasTable &aliases) {
  return MultisetMin(RoleCounts(source, aliases), RoleCounts(target, aliases));
}

Assignment PairFrameInstances(std::span<const FrameInstance *const> source,
                              std::span<const FrameInstance *const> target,
                              const AliasTable &aliases) {
  const std::size_t k = std::min(source.size(), target.size());
  if (k == 0) return {};

  ScoreMatrix scores(source.size(), std::vector<int>(target.size()));
  for (std::size_t i = 0; i < source.size(); ++i) {
    for (std::size_t j = 0; j < target.size(); ++j) {
      scores[i][j] = Total(MatchFrameElements(*source[i], *target[j], aliases));
    }
  }

  Assignment result;
  if (k <= kExhaustivePairingLimit) {
    // Rows are the smaller side so that every row gets a partner.
    if (source.size() <= target.size()) {
      auto cols = ExhaustiveSearch(scores, source.size(), target.size()).Run();
      for (std::size_t i = 0; i < cols.size(); ++i) result.emplace_back(i, cols[i]);
    } else {
      ScoreMatrix transposed(target.size(), std::vector<int>(source.size()));
      for (std::size_t i = 0; i < source.size(); ++i) {
        for (std::size_t j = 0; j < target.size(); ++j) transposed[j][i] = scores[i][j];
      }
      auto rows = ExhaustiveSearch(transposed, target.size(), source.size()).Run();
      for (std::size_t j = 0; j < rows.size(); ++j) result.emplace_back(rows[j], j);
    }
  } else {
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t i = 0; i < source.size(); ++i) {
      for (std::size_t j = 0; j < target.size(); ++j) candidates.emplace_back(i, j);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const auto &a, const auto &b) {
                       return scores[a.first][a.second] > scores[b.first][b.second];
                     });
    std::vector<bool> source_used(source.size(), false);
    std::vector<bool> target_used(target.size(), false);
    for (const auto &[i, j] : candidates) {
      if (source_used[i] || target_used[j]) continue;
      source_used[i] = target_used[j] = true;
      result.emplace_back(i, j);
      if (result.size() == k) break;
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::string_view PairOriginName(PairOrigin origin) {
  return origin == PairOrigin::kProposed ? "proposed" : "overridden";
}

PairOrigin FramePairing::origin() const {
  if (!rejected.empty()) return PairOrigin::kOverridden;
  for (const auto &p : pairs) {
    if (p.origin == PairOrigin::kOverridden) return PairOrigin::kOverridden;
  }
  return PairOrigin::kProposed;
}

int FEMatchResult::total() const {
  int total = 0;
  for (const auto &p : per_pair) total += Total(p.matched);
  return total;
}

FEMatchResult ApplyKeywordPenalties(FEMatchResult result,
                                    const SentencePair &pair,
                                    std::span<const KeywordFlag> flags,
                                    const AliasTable &aliases) {
  for (const auto &flag : flags) {
    const auto &frames = pair.frames(flag.side);
    if (flag.frame >= frames.size()) {
      throw OverrideError(DescribeFlag(flag) + ": frame does not exist");
    }
    const std::string role = NormalizeLabel(flag.role, aliases);
    const LabelCounts counts = RoleCounts(frames[flag.frame], aliases);
    auto count = counts.find(role);
    if (count == counts.end()) {
      throw OverrideError(DescribeFlag(flag) + ": role not present in frame");
    }
    if (flag.occurrence >= static_cast<std::size_t>(count->second)) {
      throw OverrideError(DescribeFlag(flag) + ": occurrence out of range");
    }

    auto it = std::find_if(result.per_pair.begin(), result.per_pair.end(),
                           [&](const PairElementMatch &m) {
                             return (flag.side == Side::kSource ? m.source : m.target) ==
                                    flag.frame;
                           });
    if (it == result.per_pair.end()) continue;  // frame is unmatched
    auto raw = it->raw.find(role);
    if (raw == it->raw.end() ||
        flag.occurrence >= static_cast<std::size_t>(raw->second)) {
      continue;  // surplus occurrence, never counted
    }
    if (!it->penalized[role].insert(flag.occurrence).second) continue;
    int &matched = it->matched[role];
    matched = std::max(0, matched - 1);
    if (matched == 0) it->matched.erase(role);
    ++result.flags_applied;
  }
  return result;
}

SentenceAlignment AlignSentence(const SentencePair &pair,
                                const AdjudicationOverlay *overlay,
                                const AliasTable &aliases) {
  if (overlay != nullptr) {
    auto errors = CheckOverlay(pair, *overlay, aliases);
    if (!errors.empty()) {
      throw OverrideError(FormatDiagnostic(errors.front()));
    }
  }

  const auto &source = pair.source_frames;
  const auto &target = pair.target_frames;

  // Proposed pairing: group instances by canonical name, pair within groups.
  std::map<std::string, std::vector<std::size_t>> source_groups;
  std::map<std::string, std::vector<std::size_t>> target_groups;
  for (std::size_t i = 0; i < source.size(); ++i) {
    source_groups[NormalizeLabel(source[i].name, aliases)].push_back(i);
  }
  for (std::size_t j = 0; j < target.size(); ++j) {
    target_groups[NormalizeLabel(target[j].name, aliases)].push_back(j);
  }

  // target index -> source index, for both directions of lookup.
  std::map<std::size_t, std::size_t> by_source;
  std::map<std::size_t, PairOrigin> origin;
  for (const auto &[name, sources] : source_groups) {
    auto t = target_groups.find(name);
    if (t == target_groups.end()) continue;
    const auto &targets = t->second;
    std::vector<const FrameInstance *> s_ptrs, t_ptrs;
    for (auto i : sources) s_ptrs.push_back(&source[i]);
    for (auto j : targets) t_ptrs.push_back(&target[j]);
    for (const auto &[si, tj] : PairFrameInstances(s_ptrs, t_ptrs, aliases)) {
      by_source[sources[si]] = targets[tj];
      origin[sources[si]] = PairOrigin::kProposed;
    }
  }

  SentenceAlignment alignment;
  FramePairing &pairing = alignment.pairing;

  if (overlay != nullptr) {
    for (const auto &o : overlay->frame_pair_overrides) {
      auto existing = by_source.find(o.source);
      const bool present = existing != by_source.end() && existing->second == o.target;
      if (o.status == PairStatus::kReject) {
        if (!present) continue;
        if (origin[o.source] == PairOrigin::kProposed) {
          pairing.rejected.emplace_back(o.source, o.target);
        }
        by_source.erase(existing);
        origin.erase(o.source);
        continue;
      }
      if (present) continue;
      // Accepting displaces whatever either frame was paired with.
      if (existing != by_source.end()) {
        if (origin[o.source] == PairOrigin::kProposed) {
          pairing.rejected.emplace_back(o.source, existing->second);
        }
        by_source.erase(existing);
      }
      for (auto it = by_source.begin(); it != by_source.end(); ++it) {
        if (it->second == o.target) {
          if (origin[it->first] == PairOrigin::kProposed) {
            pairing.rejected.emplace_back(it->first, it->second);
          }
          origin.erase(it->first);
          by_source.erase(it);
          break;
        }
      }
      by_source[o.source] = o.target;
      origin[o.source] = PairOrigin::kOverridden;
    }
    std::sort(pairing.rejected.begin(), pairing.rejected.end());
    pairing.rejected.erase(
        std::unique(pairing.rejected.begin(), pairing.rejected.end()),
        pairing.rejected.end());
  }

  std::vector<bool> target_paired(target.size(), false);
  for (const auto &[s, t] : by_source) {
    pairing.pairs.push_back({s, t, origin[s]});
    target_paired[t] = true;
  }
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (!by_source.count(i)) pairing.unmatched_source.push_back(i);
  }
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (!target_paired[j]) pairing.unmatched_target.push_back(j);
  }

  for (const auto &p : pairing.pairs) {
    PairElementMatch m;
    m.source = p.source;
    m.target = p.target;
    m.raw = MatchFrameElements(source[p.source], target[p.target], aliases);
    m.matched = m.raw;
    alignment.fe_result.per_pair.push_back(std::move(m));
  }
  if (overlay != nullptr && !overlay->keyword_flags.empty()) {
    alignment.fe_result = ApplyKeywordPenalties(
        std::move(alignment.fe_result), pair, overlay->keyword_flags, aliases);
  }

  alignment.matched_frames = static_cast<int>(pairing.pairs.size());
  alignment.source_frames = static_cast<int>(source.size());
  alignment.target_frames = static_cast<int>(target.size());
  alignment.matched_elements = alignment.fe_result.total();
  for (const auto &f : source) {
    alignment.source_elements += static_cast<int>(f.elements.size());
  }
  for (const auto &f : target) {
    alignment.target_elements += static_cast<int>(f.elements.size());
  }
  return alignment;
}

}  // namespace framescore
