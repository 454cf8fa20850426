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

#ifndef FRAMESCORE_ANNOTATION_H_
#define FRAMESCORE_ANNOTATION_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace framescore {

// Half-open interval [begin, end) of code point offsets into a sentence side.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Span &) const = default;
};

enum class KeywordCategory { kTerminology, kName, kTimeExpression, kNumber };

// Accepts "terminology", "name", "time_expression" and "number".
std::optional<KeywordCategory> ParseKeywordCategory(std::string_view name);
std::string_view KeywordCategoryName(KeywordCategory category);

// A keyword inside a frame element filler. The category is kept as written
// so that validation can report unknown categories instead of rejecting the
// whole file.
struct KeywordMention {
  std::string category;
  std::string text;

  bool operator==(const KeywordMention &) const = default;
};

struct FEInstance {
  std::string role;
  std::string text;
  std::optional<Span> span;
  std::vector<KeywordMention> keywords;

  bool operator==(const FEInstance &) const = default;
};

struct FrameInstance {
  std::string name;
  std::string lu_text;
  std::optional<Span> lu_span;
  std::vector<FEInstance> elements;
  // Position within the owning side's frame list. Overlays refer to frames
  // by this index.
  std::size_t index = 0;

  bool operator==(const FrameInstance &) const = default;
};

enum class Side { kSource, kTarget };

std::string_view SideName(Side side);
std::optional<Side> ParseSide(std::string_view name);

struct SentencePair {
  int id = 0;
  std::string source_text;
  std::string target_text;
  std::vector<FrameInstance> source_frames;
  std::vector<FrameInstance> target_frames;

  const std::vector<FrameInstance> &frames(Side side) const {
    return side == Side::kSource ? source_frames : target_frames;
  }
  const std::string &text(Side side) const {
    return side == Side::kSource ? source_text : target_text;
  }

  bool operator==(const SentencePair &) const = default;
};

struct AnnotatedDocument {
  std::string doc_id;
  std::string source_lang;
  std::string target_lang;
  std::string system_id;
  std::vector<SentencePair> sentences;

  // Returns nullptr if there is no sentence with this id.
  const SentencePair *FindSentence(int id) const;

  bool operator==(const AnnotatedDocument &) const = default;
};

// One validation finding. sentence_id is 0 for document-level findings.
struct Diagnostic {
  int sentence_id = 0;
  std::string path;
  std::string message;

  bool operator==(const Diagnostic &) const = default;
};

std::string FormatDiagnostic(const Diagnostic &d);

struct ValidationReport {
  std::vector<Diagnostic> errors;
  std::vector<Diagnostic> warnings;

  // A document is scoreable exactly when there are no errors.
  bool ok() const { return errors.empty(); }
};

// Parses the JSON document format. Unknown fields are skipped and reported
// through warnings when it is non-null. Throws ParseError for malformed JSON
// and SchemaError for missing or mistyped fields and duplicate sentence ids.
AnnotatedDocument ParseDocument(std::string_view text,
                                std::vector<Diagnostic> *warnings = nullptr);

// Canonical form: fixed key order, 2-space indent, LF newlines, trailing LF.
std::string SerializeDocument(const AnnotatedDocument &doc);

// Checks the invariants that parsing does not enforce (span bounds, label
// and keyword category validity, id ordering). Never modifies doc.
ValidationReport ValidateDocument(const AnnotatedDocument &doc);

}  // namespace framescore

#endif  // FRAMESCORE_ANNOTATION_H_
