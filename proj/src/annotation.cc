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

#include "framescore/annotation.h"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "framescore/errors.h"
#include "framescore/labels.h"
#include "framescore/utf8.h"
#include "json_util.h"

namespace framescore {

using internal::ObjectReader;
using ordered_json = nlohmann::ordered_json;

std::optional<KeywordCategory> ParseKeywordCategory(std::string_view name) {
  if (name == "terminology") return KeywordCategory::kTerminology;
  if (name == "name") return KeywordCategory::kName;
  if (name == "time_expression") return KeywordCategory::kTimeExpression;
  if (name == "number") return KeywordCategory::kNumber;
  return std::nullopt;
}

std::string_view KeywordCategoryName(KeywordCategory category) {
  switch (category) {
    case KeywordCategory::kTerminology: return "terminology";
    case KeywordCategory::kName: return "name";
    case KeywordCategory::kTimeExpression: return "time_expression";
    case KeywordCategory::kNumber: return "number";
  }
  return "";
}

std::string_view SideName(Side side) {
  return side == Side::kSource ? "source" : "target";
}

std::optional<Side> ParseSide(std::string_view name) {
  if (name == "source") return Side::kSource;
  if (name == "target") return Side::kTarget;
  return std::nullopt;
}

const SentencePair *AnnotatedDocument::FindSentence(int id) const {
  for (const auto &s : sentences) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

std::string FormatDiagnostic(const Diagnostic &d) {
  std::string result;
  if (d.sentence_id != 0) {
    result += "sentence " + std::to_string(d.sentence_id) + ": ";
  }
  if (!d.path.empty()) result += d.path + ": ";
  result += d.message;
  return result;
}

// ---------------------------------------------------------------------------
// Parsing.

namespace {

std::optional<Span> ReadSpan(const ObjectReader &obj, const char *key) {
  if (!obj.Has(key)) return std::nullopt;
  const auto &v = obj.Get(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_unsigned() ||
      !v[1].is_number_unsigned()) {
    throw SchemaError(obj.Path(key),
                      "expected [start, end] with non-negative integers");
  }
  return Span{v[0].get<std::size_t>(), v[1].get<std::size_t>()};
}

FEInstance ReadElement(const nlohmann::json &value, const std::string &path,
                       int sid, std::vector<Diagnostic> *warnings) {
  ObjectReader obj(value, path);
  obj.WarnUnknown({"role", "text", "span", "keywords"}, sid, warnings);
  FEInstance fe;
  fe.role = obj.String("role");
  fe.text = obj.OptionalString("text", "");
  fe.span = ReadSpan(obj, "span");
  const auto &keywords = obj.OptionalArray("keywords");
  for (std::size_t i = 0; i < keywords.size(); ++i) {
    ObjectReader kw(keywords[i], obj.Path("keywords", i));
    kw.WarnUnknown({"category", "text"}, sid, warnings);
    fe.keywords.push_back({kw.String("category"), kw.OptionalString("text", "")});
  }
  return fe;
}

FrameInstance ReadFrame(const nlohmann::json &value, const std::string &path,
                        std::size_t index, int sid,
                        std::vector<Diagnostic> *warnings) {
  ObjectReader obj(value, path);
  obj.WarnUnknown({"name", "lu_text", "lu_span", "elements"}, sid, warnings);
  FrameInstance frame;
  frame.name = obj.String("name");
  frame.lu_text = obj.OptionalString("lu_text", "");
  frame.lu_span = ReadSpan(obj, "lu_span");
  frame.index = index;
  const auto &elements = obj.Array("elements");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    frame.elements.push_back(
        ReadElement(elements[i], obj.Path("elements", i), sid, warnings));
  }
  return frame;
}

std::vector<FrameInstance> ReadFrames(const ObjectReader &obj, const char *key,
                                      int sid,
                                      std::vector<Diagnostic> *warnings) {
  std::vector<FrameInstance> frames;
  const auto &list = obj.Array(key);
  for (std::size_t i = 0; i < list.size(); ++i) {
    frames.push_back(ReadFrame(list[i], obj.Path(key, i), i, sid, warnings));
  }
  return frames;
}

}  // namespace

AnnotatedDocument ParseDocument(std::string_view text,
                                std::vector<Diagnostic> *warnings) {
  const nlohmann::json root = internal::ParseJson(text);
  ObjectReader top(root, "");
  top.WarnUnknown({"doc_id", "source_lang", "target_lang", "system_id",
                   "sentences"},
                  0, warnings);

  AnnotatedDocument doc;
  doc.doc_id = top.String("doc_id");
  doc.source_lang = top.OptionalString("source_lang", "");
  doc.target_lang = top.OptionalString("target_lang", "");
  doc.system_id = top.OptionalString("system_id", "");

  std::set<long long> seen;
  const auto &sentences = top.Array("sentences");
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const std::string path = top.Path("sentences", i);
    ObjectReader obj(sentences[i], path);
    long long id = obj.Integer("id");
    if (id <= 0 || id > std::numeric_limits<int>::max()) {
      throw SchemaError(obj.Path("id"), "sentence id must be a positive integer");
    }
    if (!seen.insert(id).second) {
      throw SchemaError(obj.Path("id"),
                        "duplicate sentence id " + std::to_string(id));
    }
    const int sid = static_cast<int>(id);
    obj.WarnUnknown({"id", "source_text", "target_text", "source_frames",
                     "target_frames"},
                    sid, warnings);
    SentencePair pair;
    pair.id = sid;
    pair.source_text = obj.String("source_text");
    pair.target_text = obj.String("target_text");
    pair.source_frames = ReadFrames(obj, "source_frames", sid, warnings);
    pair.target_frames = ReadFrames(obj, "target_frames", sid, warnings);
    doc.sentences.push_back(std::move(pair));
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Serialization.

namespace {

ordered_json SpanJson(const Span &span) {
  return ordered_json::array({span.begin, span.end});
}

ordered_json FramesJson(const std::vector<FrameInstance> &frames) {
  ordered_json list = ordered_json::array();
  for (const auto &frame : frames) {
    ordered_json f;
    f["name"] = frame.name;
    f["lu_text"] = frame.lu_text;
    if (frame.lu_span) f["lu_span"] = SpanJson(*frame.lu_span);
    ordered_json elements = ordered_json::array();
    for (const auto &fe : frame.elements) {
      ordered_json e;
      e["role"] = fe.role;
      e["text"] = fe.text;
      if (fe.span) e["span"] = SpanJson(*fe.span);
      ordered_json keywords = ordered_json::array();
      for (const auto &kw : fe.keywords) {
        keywords.push_back({{"category", kw.category}, {"text", kw.text}});
      }
      e["keywords"] = std::move(keywords);
      elements.push_back(std::move(e));
    }
    f["elements"] = std::move(elements);
    list.push_back(std::move(f));
  }
  return list;
}

}  // namespace

std::string SerializeDocument(const AnnotatedDocument &doc) {
  ordered_json root;
  root["doc_id"] = doc.doc_id;
  root["source_lang"] = doc.source_lang;
  root["target_lang"] = doc.target_lang;
  root["system_id"] = doc.system_id;
  ordered_json sentences = ordered_json::array();
  for (const auto &s : doc.sentences) {
    ordered_json o;
    o["id"] = s.id;
    o["source_text"] = s.source_text;
    o["target_text"] = s.target_text;
    o["source_frames"] = FramesJson(s.source_frames);
    o["target_frames"] = FramesJson(s.target_frames);
    sentences.push_back(std::move(o));
  }
  root["sentences"] = std::move(sentences);
  return root.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Validation.

namespace {

bool IsBlank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n\f\v") == std::string_view::npos;
}

// Substring of text by code point offsets; span must already be in bounds.
std::string Slice(std::string_view text, const Span &span) {
  auto chars = utf8::Characters(text);
  std::string out;
  for (std::size_t i = span.begin; i < span.end; ++i) out += chars[i];
  return out;
}

class SideValidator {
 public:
  SideValidator(const SentencePair &pair, Side side, ValidationReport *report)
      : pair_(pair),
        side_(side),
        text_length_(utf8::Length(pair.text(side))),
        report_(report) {}

  void Run() {
    const auto &frames = pair_.frames(side_);
    for (std::size_t i = 0; i < frames.size(); ++i) {
      CheckFrame(frames[i], i);
    }
  }

 private:
  std::string FramePath(std::size_t i) const {
    return std::string(SideName(side_)) + "_frames[" + std::to_string(i) + "]";
  }

  void Error(std::string path, std::string message) {
    report_->errors.push_back({pair_.id, std::move(path), std::move(message)});
  }
  void Warning(std::string path, std::string message) {
    report_->warnings.push_back({pair_.id, std::move(path), std::move(message)});
  }

  void CheckSpan(const Span &span, const std::string &path,
                 const std::string &expected_text) {
    if (span.begin > span.end) {
      Error(path, "span start " + std::to_string(span.begin) +
                      " is after end " + std::to_string(span.end));
    } else if (span.end > text_length_) {
      Error(path, "span end " + std::to_string(span.end) +
                      " exceeds text length " + std::to_string(text_length_));
    } else if (!expected_text.empty() &&
               Slice(pair_.text(side_), span) != expected_text) {
      Warning(path, "span does not cover the annotated text");
    }
  }

  void CheckLabel(const std::string &label, const std::string &path,
                  const char *what) {
    if (IsBlank(label)) Error(path, std::string("empty ") + what);
  }

  void CheckFrame(const FrameInstance &frame, std::size_t i) {
    const std::string path = FramePath(i);
    CheckLabel(frame.name, path + ".name", "frame name");
    if (frame.index != i) {
      Error(path + ".index", "index " + std::to_string(frame.index) +
                                 " does not match list position");
    }
    if (frame.lu_text.empty()) Warning(path + ".lu_text", "empty lexical unit");
    if (frame.lu_span) CheckSpan(*frame.lu_span, path + ".lu_span", frame.lu_text);
    for (std::size_t j = 0; j < frame.elements.size(); ++j) {
      const auto &fe = frame.elements[j];
      const std::string fe_path = path + ".elements[" + std::to_string(j) + "]";
      CheckLabel(fe.role, fe_path + ".role", "role");
      if (fe.span) CheckSpan(*fe.span, fe_path + ".span", fe.text);
      for (std::size_t k = 0; k < fe.keywords.size(); ++k) {
        const auto &kw = fe.keywords[k];
        const std::string kw_path =
            fe_path + ".keywords[" + std::to_string(k) + "]";
        if (!ParseKeywordCategory(kw.category)) {
          Error(kw_path + ".category",
                "invalid keyword category '" + kw.category +
                    "' (expected terminology, name, time_expression or "
                    "number)");
        }
        if (kw.text.empty()) Warning(kw_path + ".text", "empty keyword text");
      }
    }
  }

  const SentencePair &pair_;
  Side side_;
  std::size_t text_length_;
  ValidationReport *report_;
};

}  // namespace

ValidationReport ValidateDocument(const AnnotatedDocument &doc) {
  ValidationReport report;
  if (doc.doc_id.empty()) {
    report.errors.push_back({0, "doc_id", "empty document id"});
  }
  int previous = 0;
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    const auto &pair = doc.sentences[i];
    const std::string path = "sentences[" + std::to_string(i) + "].id";
    if (pair.id <= 0) {
      report.errors.push_back({0, path, "sentence id must be positive"});
    } else if (pair.id <= previous) {
      report.errors.push_back(
          {pair.id, path, "sentence ids must be strictly increasing"});
    }
    previous = std::max(previous, pair.id);
    SideValidator(pair, Side::kSource, &report).Run();
    SideValidator(pair, Side::kTarget, &report).Run();
  }
  return report;
}

}  // namespace framescore
