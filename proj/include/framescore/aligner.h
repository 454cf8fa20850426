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

#ifndef FRAMESCORE_ALIGNER_H_
#define FRAMESCORE_ALIGNER_H_

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "framescore/annotation.h"
#include "framescore/labels.h"
#include "framescore/overlay.h"

namespace framescore {

// Canonical label -> count.
using LabelCounts = std::map<std::string, int>;

int Total(const LabelCounts &counts);

// Frame-level matching by canonical name: for every name, the smaller of its
// source and target occurrence counts.
struct FrameMatch {
  int matched = 0;
  LabelCounts per_name;
};

FrameMatch MatchFrames(std::span<const FrameInstance> source,
                       std::span<const FrameInstance> target,
                       const AliasTable &aliases = AliasTable::Default());

// Role-level matching inside one frame pair. Each role matches
// min(source count, target count) times; surplus repetitions on either side
// count for nothing. Roles with no match are omitted.
LabelCounts MatchFrameElements(const FrameInstance &source,
                               const FrameInstance &target,
                               const AliasTable &aliases = AliasTable::Default());

// Injective pairing between same-named source and target instances, of size
// min(|source|, |target|), maximizing the total matched role count. Uses an
// exhaustive search when the smaller side has at most four instances (ties
// go to the lexicographically smallest assignment) and greedy best-pair-first
// otherwise (ties go to the lowest (source, target) positions). Returns
// (source position, target position) pairs sorted by source position.
std::vector<std::pair<std::size_t, std::size_t>> PairFrameInstances(
    std::span<const FrameInstance *const> source,
    std::span<const FrameInstance *const> target,
    const AliasTable &aliases = AliasTable::Default());

inline constexpr std::size_t kExhaustivePairingLimit = 4;

enum class PairOrigin { kProposed, kOverridden };

std::string_view PairOriginName(PairOrigin origin);

struct FramePair {
  std::size_t source = 0;
  std::size_t target = 0;
  PairOrigin origin = PairOrigin::kProposed;

  bool operator==(const FramePair &) const = default;
};

struct FramePairing {
  // Sorted by source index. Injective on both sides.
  std::vector<FramePair> pairs;
  std::vector<std::size_t> unmatched_source;
  std::vector<std::size_t> unmatched_target;
  // Proposed pairs removed by a reject override.
  std::vector<std::pair<std::size_t, std::size_t>> rejected;

  // kOverridden if any override changed the proposed pairing.
  PairOrigin origin() const;
};

// Role matches of one frame pair. raw holds the counts before keyword
// penalties, matched the counts after. penalized records, per role, which
// matched occurrence ordinals lost their credit.
struct PairElementMatch {
  std::size_t source = 0;
  std::size_t target = 0;
  LabelCounts raw;
  LabelCounts matched;
  std::map<std::string, std::set<std::size_t>> penalized;
};

struct FEMatchResult {
  std::vector<PairElementMatch> per_pair;
  int flags_applied = 0;

  int total() const;
};

// Withdraws one matched role for every flag that lands on an occurrence
// counted as matched: occurrence ordinals below the raw matched count of the
// role in a paired frame. A flag on an unpaired frame or on a surplus
// occurrence has no effect, and one matched occurrence is withdrawn at most
// once. Throws OverrideError for a flag that does not resolve in pair.
FEMatchResult ApplyKeywordPenalties(
    FEMatchResult result, const SentencePair &pair,
    std::span<const KeywordFlag> flags,
    const AliasTable &aliases = AliasTable::Default());

// Counts behind the MinE and MaxE ratios for one sentence.
struct SentenceAlignment {
  int matched_frames = 0;    // N_m
  int target_frames = 0;     // N_t
  int source_frames = 0;     // N_s
  int matched_elements = 0;  // n_m, summed over frame pairs after penalties
  int target_elements = 0;   // n_t, over all target frames
  int source_elements = 0;   // n_s, over all source frames
  FramePairing pairing;
  FEMatchResult fe_result;
};

// Full alignment: proposed same-name pairing, then overlay overrides in
// order, role matching per pair, then keyword penalties. Throws
// OverrideError if overlay references anything absent from pair.
SentenceAlignment AlignSentence(
    const SentencePair &pair, const AdjudicationOverlay *overlay = nullptr,
    const AliasTable &aliases = AliasTable::Default());

}  // namespace framescore

#endif  // FRAMESCORE_ALIGNER_H_
