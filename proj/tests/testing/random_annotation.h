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

#ifndef FRAMESCORE_TESTING_RANDOM_ANNOTATION_H_
#define FRAMESCORE_TESTING_RANDOM_ANNOTATION_H_

#include <random>
#include <vector>

#include "framescore/annotation.h"
#include "framescore/overlay.h"

namespace framescore {
namespace testing {

struct RandomAnnotationConfig {
  int max_frames = 5;
  int max_elements = 5;
  int alphabet = 8;  // distinct frame names and distinct roles
};

// Frames with labels drawn from the alphabet, written in varying case and
// separator styles so that matching depends on label normalization.
std::vector<FrameInstance> RandomFrames(std::mt19937_64 &rng,
                                        const RandomAnnotationConfig &config = {});

SentencePair RandomSentencePair(std::mt19937_64 &rng, int id = 1,
                                const RandomAnnotationConfig &config = {});

// A document with texts, spans and keywords filled in, for round trips.
AnnotatedDocument RandomDocument(std::mt19937_64 &rng, int sentences);

// Flags that all resolve in pair (random side, frame, role, occurrence).
std::vector<KeywordFlag> RandomFlags(std::mt19937_64 &rng, const SentencePair &pair,
                                     int count);

// Sets every frame's index to its list position.
void Reindex(std::vector<FrameInstance> &frames);

SentencePair Swapped(const SentencePair &pair);

}  // namespace testing
}  // namespace framescore

#endif  // FRAMESCORE_TESTING_RANDOM_ANNOTATION_H_
