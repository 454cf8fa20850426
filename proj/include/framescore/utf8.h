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

#ifndef FRAMESCORE_UTF8_H_
#define FRAMESCORE_UTF8_H_

#include <cstddef>
#include <string_view>
#include <vector>

namespace framescore {
namespace utf8 {

// Decodes UTF-8 text into code points. Malformed bytes decode to U+FFFD,
// one replacement per offending byte.
std::vector<char32_t> Decode(std::string_view text);

// Number of code points in text; this is the unit of annotation spans.
std::size_t Length(std::string_view text);

// Splits text into the byte ranges of its individual code points.
std::vector<std::string_view> Characters(std::string_view text);

bool IsWhitespace(char32_t c);

// CJK unified ideographs (including extension A and compatibility blocks).
bool IsHan(char32_t c);

}  // namespace utf8
}  // namespace framescore

#endif  // FRAMESCORE_UTF8_H_
