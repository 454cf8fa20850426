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

#ifndef FRAMESCORE_LABELS_H_
#define FRAMESCORE_LABELS_H_

#include <map>
#include <string>
#include <string_view>

namespace framescore {

// Maps spelling variants of frame and role labels onto one canonical label.
// Keys and values are stored in normalized form and the table never contains
// a cycle, so resolution always terminates in a label that is not a key.
class AliasTable {
 public:
  AliasTable() = default;

  // The variants observed in the bundled corpus: create_entity,
  // cause_of_strength and neding.
  static const AliasTable &Default();

  // Registers from -> to. Throws std::invalid_argument if either side is
  // empty or the alias would introduce a cycle.
  void Add(std::string_view from, std::string_view to);

  // Follows the alias chain starting at an already normalized label.
  std::string Resolve(std::string label) const;

  bool empty() const { return aliases_.empty(); }
  const std::map<std::string, std::string> &entries() const {
    return aliases_;
  }

 private:
  std::map<std::string, std::string> aliases_;
};

// Canonical form of a frame or role label: ASCII lower-cased, trimmed, runs
// of whitespace and underscores collapsed to one underscore, then resolved
// through the alias table. Idempotent. Throws std::invalid_argument for an
// empty or all-whitespace label.
std::string NormalizeLabel(std::string_view raw,
                           const AliasTable &aliases = AliasTable::Default());

}  // namespace framescore

#endif  // FRAMESCORE_LABELS_H_
