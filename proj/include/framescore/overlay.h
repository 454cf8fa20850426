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

#ifndef FRAMESCORE_OVERLAY_H_
#define FRAMESCORE_OVERLAY_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "framescore/annotation.h"
#include "framescore/labels.h"

namespace framescore {

enum class PairStatus { kAccept, kReject };

std::string_view PairStatusName(PairStatus status);

// Human decision about one (source frame, target frame) pair. Accepting a
// pair forces it into the matching, possibly across frame names; rejecting
// removes it.
struct FramePairOverride {
  std::size_t source = 0;
  std::size_t target = 0;
  PairStatus status = PairStatus::kAccept;

  bool operator==(const FramePairOverride &) const = default;
};

// Marks one occurrence of a role in one frame as carrying a mistranslated
// keyword. occurrence counts earlier elements of the same canonical role in
// that frame, starting from 0.
struct KeywordFlag {
  Side side = Side::kTarget;
  std::size_t frame = 0;
  std::string role;
  std::size_t occurrence = 0;
  std::string category;

  bool operator==(const KeywordFlag &) const = default;
};

std::string DescribeFlag(const KeywordFlag &flag);

// All human decisions for one sentence. Kept apart from the annotation so
// the annotated documents stay untouched.
struct AdjudicationOverlay {
  int sentence_id = 0;
  std::vector<FramePairOverride> frame_pair_overrides;
  std::vector<KeywordFlag> keyword_flags;

  bool empty() const {
    return frame_pair_overrides.empty() && keyword_flags.empty();
  }
  bool operator==(const AdjudicationOverlay &) const = default;
};

// Overlays for one document, as stored in an overlay file. The revision is
// bumped by the adjudication service on every accepted write.
struct OverlaySet {
  std::string doc_id;
  long long revision = 0;
  // Ordered by sentence id, at most one entry per sentence.
  std::vector<AdjudicationOverlay> sentence_overlays;

  const AdjudicationOverlay *Find(int sentence_id) const;
  // Replaces the overlay for overlay.sentence_id, keeping the id order.
  void Put(AdjudicationOverlay overlay);

  bool operator==(const OverlaySet &) const = default;
};

// Throws ParseError / SchemaError like ParseDocument.
OverlaySet ParseOverlaySet(std::string_view text,
                           std::vector<Diagnostic> *warnings = nullptr);

// Parses a single sentence overlay object. A missing "sentence_id" takes
// default_sentence_id.
AdjudicationOverlay ParseSentenceOverlay(std::string_view text,
                                         int default_sentence_id);

std::string SerializeOverlaySet(const OverlaySet &overlays);
std::string SerializeSentenceOverlay(const AdjudicationOverlay &overlay);

// Reference errors of overlay against pair: frame indices, roles and
// occurrence ordinals that do not resolve, and invalid keyword categories.
std::vector<Diagnostic> CheckOverlay(
    const SentencePair &pair, const AdjudicationOverlay &overlay,
    const AliasTable &aliases = AliasTable::Default());

// ValidateDocument plus the reference checks for every sentence overlay.
ValidationReport ValidateDocument(const AnnotatedDocument &doc,
                                  const OverlaySet &overlays);

}  // namespace framescore

#endif  // FRAMESCORE_OVERLAY_H_
