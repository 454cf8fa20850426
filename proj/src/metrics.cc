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

#include "framescore/metrics.h"

#include <string>

#include "framescore/errors.h"

namespace framescore {

PrecisionRecall RatioScores(int matched, int target_total, int source_total) {
  PrecisionRecall s;
  if (target_total == 0 && source_total == 0) {
    s.scoreable = false;
    return s;
  }
  if (target_total > 0) s.precision = static_cast<double>(matched) / target_total;
  if (source_total > 0) s.recall = static_cast<double>(matched) / source_total;
  const double sum = s.precision + s.recall;
  if (sum > 0.0) s.f = 2.0 * s.precision * s.recall / sum;
  return s;
}

PrecisionRecall MinEScores(const SentenceAlignment &a) {
  return RatioScores(a.matched_frames, a.target_frames, a.source_frames);
}

PrecisionRecall MaxEScores(const SentenceAlignment &a) {
  return RatioScores(a.matched_elements, a.target_elements, a.source_elements);
}

SentenceScores ScoreSentence(const SentenceAlignment &a) {
  const PrecisionRecall mine = MinEScores(a);
  const PrecisionRecall maxe = MaxEScores(a);
  SentenceScores s;
  s.p_mine = mine.precision;
  s.r_mine = mine.recall;
  s.f_mine = mine.f;
  s.scoreable_mine = mine.scoreable;
  s.p_maxe = maxe.precision;
  s.r_maxe = maxe.recall;
  s.f_maxe = maxe.f;
  s.scoreable_maxe = maxe.scoreable;
  return s;
}

DocumentScores ScoreDocument(const AnnotatedDocument &doc,
                             const OverlaySet *overlays,
                             const AliasTable &aliases) {
  if (overlays != nullptr) {
    if (overlays->doc_id != doc.doc_id) {
      throw OverrideError("overlay is for document '" + overlays->doc_id +
                          "', not '" + doc.doc_id + "'");
    }
    for (const auto &o : overlays->sentence_overlays) {
      if (doc.FindSentence(o.sentence_id) == nullptr) {
        throw OverrideError("sentence " + std::to_string(o.sentence_id) +
                            ": overlay refers to a sentence that does not exist");
      }
    }
  }

  DocumentScores result;
  double sum_mine = 0.0;
  double sum_maxe = 0.0;
  for (const auto &pair : doc.sentences) {
    const AdjudicationOverlay *overlay =
        overlays != nullptr ? overlays->Find(pair.id) : nullptr;
    SentenceAlignment alignment;
    try {
      alignment = AlignSentence(pair, overlay, aliases);
    } catch (const OverrideError &e) {
      const std::string prefix = "sentence " + std::to_string(pair.id) + ": ";
      const std::string what = e.what();
      throw OverrideError(what.rfind(prefix, 0) == 0 ? what : prefix + what);
    }
    const SentenceScores scores = ScoreSentence(alignment);
    if (scores.scoreable_mine) {
      sum_mine += scores.f_mine;
      ++result.n_scored_mine;
    }
    if (scores.scoreable_maxe) {
      sum_maxe += scores.f_maxe;
      ++result.n_scored_maxe;
    }
    result.per_sentence[pair.id] = scores;
    result.alignments[pair.id] = std::move(alignment);
  }
  if (result.n_scored_mine > 0) result.avg_f_mine = sum_mine / result.n_scored_mine;
  if (result.n_scored_maxe > 0) result.avg_f_maxe = sum_maxe / result.n_scored_maxe;
  return result;
}

}  // namespace framescore
