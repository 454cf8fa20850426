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

#ifndef FRAMESCORE_BLEU_H_
#define FRAMESCORE_BLEU_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace framescore {

enum class Tokenization { kWhitespace, kPerCharacter };

// Accepts "whitespace" and "char" / "per_character".
std::optional<Tokenization> ParseTokenization(std::string_view name);

// kPerCharacter for text containing Han characters, kWhitespace otherwise.
Tokenization ChooseTokenization(std::string_view text);

// kWhitespace splits on Unicode whitespace; kPerCharacter yields every
// non-whitespace code point as its own token.
std::vector<std::string> Tokenize(std::string_view text, Tokenization mode);

enum class Smoothing {
  kNone,
  // Adds one to the numerator and denominator of orders 2 and up.
  kAddOneHigherOrder,
};

struct BleuConfig {
  int max_n = 4;
  Smoothing smoothing = Smoothing::kAddOneHigherOrder;
  Tokenization tokenization = Tokenization::kPerCharacter;
};

struct BleuScore {
  double score = 0.0;
  // Modified (clipped, smoothed) precisions for orders 1..min(max_n, c),
  // where c is the candidate length. Orders with no candidate n-gram are
  // left out of the geometric mean.
  std::vector<double> ngram_precisions;
  double brevity_penalty = 0.0;
};

using Tokens = std::vector<std::string>;

// Sentence-level BLEU with per-reference max clipping and a brevity penalty
// against the closest reference length (shorter one on ties). An empty
// candidate scores 0 with brevity penalty 0. Throws std::invalid_argument
// when references is empty or max_n < 1.
BleuScore SentenceBleu(const Tokens &candidate, std::span<const Tokens> references,
                       const BleuConfig &config = {});

}  // namespace framescore

#endif  // FRAMESCORE_BLEU_H_
