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

#include "framescore/bleu.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "framescore/utf8.h"

namespace framescore {
namespace {

using NgramCounts = std::map<std::vector<std::string>, int>;

NgramCounts CountNgrams(const Tokens &tokens, std::size_t n) {
  NgramCounts counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + i, tokens.begin() + i + n)];
  }
  return counts;
}

}  // namespace

std::optional<Tokenization> ParseTokenization(std::string_view name) {
  if (name == "whitespace") return Tokenization::kWhitespace;
  if (name == "char" || name == "per_character") return Tokenization::kPerCharacter;
  return std::nullopt;
}

Tokenization ChooseTokenization(std::string_view text) {
  for (char32_t c : utf8::Decode(text)) {
    if (utf8::IsHan(c)) return Tokenization::kPerCharacter;
  }
  return Tokenization::kWhitespace;
}

std::vector<std::string> Tokenize(std::string_view text, Tokenization mode) {
  std::vector<std::string> tokens;
  std::string current;
  const auto chars = utf8::Characters(text);
  const auto cps = utf8::Decode(text);
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (utf8::IsWhitespace(cps[i])) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else if (mode == Tokenization::kPerCharacter) {
      tokens.emplace_back(chars[i]);
    } else {
      current += chars[i];
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

BleuScore SentenceBleu(const Tokens &candidate, std::span<const Tokens> references,
                       const BleuConfig &config) {
  if (references.empty()) throw std::invalid_argument("BLEU needs a reference");
  if (config.max_n < 1) throw std::invalid_argument("max_n must be at least 1");

  BleuScore result;
  if (candidate.empty()) return result;

  const std::size_t orders =
      std::min<std::size_t>(static_cast<std::size_t>(config.max_n), candidate.size());
  double log_sum = 0.0;
  bool zero = false;
  for (std::size_t n = 1; n <= orders; ++n) {
    const NgramCounts counts = CountNgrams(candidate, n);
    NgramCounts max_ref;
    for (const auto &ref : references) {
      for (const auto &[gram, count] : CountNgrams(ref, n)) {
        int &m = max_ref[gram];
        m = std::max(m, count);
      }
    }
    double clipped = 0.0;
    double total = 0.0;
    for (const auto &[gram, count] : counts) {
      auto it = max_ref.find(gram);
      if (it != max_ref.end()) clipped += std::min(count, it->second);
      total += count;
    }
    if (n >= 2 && config.smoothing == Smoothing::kAddOneHigherOrder) {
      clipped += 1.0;
      total += 1.0;
    }
    const double precision = clipped / total;
    result.ngram_precisions.push_back(precision);
    if (precision == 0.0) {
      zero = true;
    } else {
      log_sum += std::log(precision);
    }
  }

  const auto c = static_cast<long long>(candidate.size());
  long long r = static_cast<long long>(references.front().size());
  for (const auto &ref : references) {
    const auto len = static_cast<long long>(ref.size());
    if (std::llabs(len - c) < std::llabs(r - c) ||
        (std::llabs(len - c) == std::llabs(r - c) && len < r)) {
      r = len;
    }
  }
  result.brevity_penalty =
      c >= r ? 1.0 : std::exp(1.0 - static_cast<double>(r) / static_cast<double>(c));
  result.score =
      zero ? 0.0
           : result.brevity_penalty * std::exp(log_sum / static_cast<double>(orders));
  return result;
}

}  // namespace framescore
