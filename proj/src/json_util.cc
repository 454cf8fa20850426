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

#include "json_util.h"

#include <algorithm>
#include <cstring>

#include "framescore/errors.h"

namespace framescore {
namespace internal {
namespace {

const char *TypeName(const nlohmann::json &v) { return v.type_name(); }

}  // namespace

nlohmann::json ParseJson(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error &e) {
    // e.byte is the 1-based offset of the offending byte; past the end for
    // truncated input.
    std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    offset = std::min(offset, text.size());
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
        ++column;
      }
    }
    std::string message = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at ..."
    // prefix up to the message proper.
    auto pos = message.find(": ");
    if (pos != std::string::npos) message = message.substr(pos + 2);
    throw ParseError(message, line, column);
  }
}

ObjectReader::ObjectReader(const nlohmann::json &value, std::string path)
    : value_(value), path_(std::move(path)) {
  if (!value_.is_object()) {
    throw SchemaError(path_.empty() ? "$" : path_,
                      std::string("expected object, found ") +
                          TypeName(value_));
  }
}

std::string ObjectReader::Path(const char *key) const {
  return path_.empty() ? std::string(key) : path_ + "." + key;
}

std::string ObjectReader::Path(const char *key, std::size_t index) const {
  return Path(key) + "[" + std::to_string(index) + "]";
}

bool ObjectReader::Has(const char *key) const {
  auto it = value_.find(key);
  return it != value_.end() && !it->is_null();
}

const nlohmann::json &ObjectReader::Get(const char *key) const {
  auto it = value_.find(key);
  if (it == value_.end() || it->is_null()) {
    throw SchemaError(Path(key), "missing required field");
  }
  return *it;
}

std::string ObjectReader::String(const char *key) const {
  const auto &v = Get(key);
  if (!v.is_string()) {
    throw SchemaError(Path(key),
                      std::string("expected string, found ") + TypeName(v));
  }
  return v.get<std::string>();
}

std::string ObjectReader::OptionalString(const char *key,
                                         std::string fallback) const {
  return Has(key) ? String(key) : fallback;
}

long long ObjectReader::Integer(const char *key) const {
  const auto &v = Get(key);
  if (!v.is_number_integer()) {
    throw SchemaError(Path(key),
                      std::string("expected integer, found ") + TypeName(v));
  }
  return v.get<long long>();
}

const nlohmann::json &ObjectReader::Array(const char *key) const {
  const auto &v = Get(key);
  if (!v.is_array()) {
    throw SchemaError(Path(key),
                      std::string("expected array, found ") + TypeName(v));
  }
  return v;
}

const nlohmann::json &ObjectReader::OptionalArray(const char *key) const {
  static const nlohmann::json *empty = new nlohmann::json(nlohmann::json::array());
  return Has(key) ? Array(key) : *empty;
}

void ObjectReader::WarnUnknown(std::initializer_list<const char *> known,
                               int sentence_id,
                               std::vector<Diagnostic> *warnings) const {
  if (warnings == nullptr) return;
  for (const auto &[key, value] : value_.items()) {
    bool found = std::any_of(known.begin(), known.end(), [&](const char *k) {
      return key == k;
    });
    if (!found) {
      warnings->push_back({sentence_id, Path(key.c_str()), "unknown field ignored"});
    }
  }
}

}  // namespace internal
}  // namespace framescore
