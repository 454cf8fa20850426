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

#ifndef FRAMESCORE_JSON_UTIL_H_
#define FRAMESCORE_JSON_UTIL_H_

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "framescore/annotation.h"
#include "json.hpp"

namespace framescore {
namespace internal {

// Parses JSON text, translating syntax errors into ParseError with a line
// and column.
nlohmann::json ParseJson(std::string_view text);

// Typed field access that throws SchemaError naming the full field path.
class ObjectReader {
 public:
  ObjectReader(const nlohmann::json &value, std::string path);

  bool Has(const char *key) const;
  const nlohmann::json &Get(const char *key) const;
  std::string String(const char *key) const;
  std::string OptionalString(const char *key, std::string fallback) const;
  long long Integer(const char *key) const;
  const nlohmann::json &Array(const char *key) const;
  // Returns an empty array when the key is absent or null.
  const nlohmann::json &OptionalArray(const char *key) const;

  std::string Path(const char *key) const;
  std::string Path(const char *key, std::size_t index) const;

  // Records a warning for every member not in known.
  void WarnUnknown(std::initializer_list<const char *> known, int sentence_id,
                   std::vector<Diagnostic> *warnings) const;

 private:
  const nlohmann::json &value_;
  std::string path_;
};

}  // namespace internal
}  // namespace framescore

#endif  // FRAMESCORE_JSON_UTIL_H_
