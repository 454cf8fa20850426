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

#include "framescore/labels.h"

#include <stdexcept>

namespace framescore {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Normalization without alias resolution.
std::string Fold(std::string_view raw) {
  std::size_t begin = 0;
  std::size_t end = raw.size();
  while (begin < end && IsSpace(raw[begin])) ++begin;
  while (end > begin && IsSpace(raw[end - 1])) --end;
  if (begin == end) throw std::invalid_argument("empty label");

  std::string result;
  result.reserve(end - begin);
  bool in_separator = false;
  for (std::size_t i = begin; i < end; ++i) {
    char c = raw[i];
    if (IsSpace(c) || c == '_') {
      if (!in_separator) result.push_back('_');
      in_separator = true;
      continue;
    }
    in_separator = false;
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    result.push_back(c);
  }
  return result;
}

}  // namespace

const AliasTable &AliasTable::Default() {
  static const AliasTable *table = [] {
    auto *t = new AliasTable;
    t->Add("create_entity", "created_entity");
    t->Add("cause_of_strength", "cause_change_of_strength");
    t->Add("neding", "needing");
    return t;
  }();
  return *table;
}

void AliasTable::Add(std::string_view from, std::string_view to) {
  std::string key = Fold(from);
  std::string value = Fold(to);
  if (key == value) return;
  if (Resolve(value) == key) {
    throw std::invalid_argument("alias cycle through '" + key + "'");
  }
  aliases_[key] = value;
}

std::string AliasTable::Resolve(std::string label) const {
  // Chains are acyclic, so at most aliases_.size() hops are needed.
  for (std::size_t hops = 0; hops <= aliases_.size(); ++hops) {
    auto it = aliases_.find(label);
    if (it == aliases_.end()) return label;
    label = it->second;
  }
  return label;
}

std::string NormalizeLabel(std::string_view raw, const AliasTable &aliases) {
  return aliases.Resolve(Fold(raw));
}

}  // namespace framescore
