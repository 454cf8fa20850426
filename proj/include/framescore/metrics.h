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

#ifndef FRAMESCORE_METRICS_H_
#define FRAMESCORE_METRICS_H_

#include <map>

#include "framescore/aligner.h"
#include "framescore/annotation.h"
#include "framescore/labels.h"
#include "framescore/overlay.h"

namespace framescore {

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
  // False when both denominators are zero; all three values are then 0.
  bool scoreable = true;
};

// precision = matched / target_total, recall = matched / source_total and
// their harmonic mean. A zero denominator gives 0 for that ratio, and the
// F-score is 0 when precision + recall is 0.
PrecisionRecall RatioScores(int matched, int target_total, int source_total);

// Frame-level scores: N_m / N_t, N_m / N_s.
PrecisionRecall MinEScores(const SentenceAlignment &a);

// Frame-element-level scores: n_m / n_t, n_m / n_s.
PrecisionRecall MaxEScores(const SentenceAlignment &a);

struct SentenceScores {
  double p_mine = 0.0;
  double r_mine = 0.0;
  double f_mine = 0.0;
  double p_maxe = 0.0;
  double r_maxe = 0.0;
  double f_maxe = 0.0;
  bool scoreable_mine = true;
  bool scoreable_maxe = true;

  bool scoreable() const { return scoreable_mine || scoreable_maxe; }
};

SentenceScores ScoreSentence(const SentenceAlignment &a);

struct DocumentScores {
  std::map<int, SentenceScores> per_sentence;
  std::map<int, SentenceAlignment> alignments;
  // Unweighted means of sentence F-scores over the sentences scoreable for
  // the respective metric; 0 when there are none.
  double avg_f_mine = 0.0;
  double avg_f_maxe = 0.0;
  int n_scored_mine = 0;
  int n_scored_maxe = 0;
};

// Aligns and scores every sentence. overlays may be null. Overlay reference
// errors are rethrown as OverrideError prefixed with the sentence id.
DocumentScores ScoreDocument(const AnnotatedDocument &doc,
                             const OverlaySet *overlays = nullptr,
                             const AliasTable &aliases = AliasTable::Default());

}  // namespace framescore

#endif  // FRAMESCORE_METRICS_H_
