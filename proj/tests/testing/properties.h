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

#ifndef FRAMESCORE_TESTING_PROPERTIES_H_
#define FRAMESCORE_TESTING_PROPERTIES_H_

#include <cstdint>
#include <string>
#include <vector>

namespace framescore {
namespace testing {

// Outcome of one randomized property over a number of generated cases.
struct PropertyOutcome {
  std::string name;
  int cases = 0;
  std::vector<std::string> failures;  // first few counterexamples

  bool ok() const { return failures.empty() && cases > 0; }
};

// Alignment and score properties over random sentence pairs with at most
// five frames per side, five elements per frame and eight labels.
std::vector<PropertyOutcome> RunAlignmentProperties(std::uint64_t seed, int cases);

// Rank correlation properties over random score vectors.
std::vector<PropertyOutcome> RunCorrelationProperties(std::uint64_t seed, int cases);

// Sentence BLEU properties over random token sequences.
std::vector<PropertyOutcome> RunBleuProperties(std::uint64_t seed, int cases);

}  // namespace testing
}  // namespace framescore

#endif  // FRAMESCORE_TESTING_PROPERTIES_H_
