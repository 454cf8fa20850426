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

#include <random>

#include "framescore/errors.h"
#include "framescore/overlay.h"
#include "gtest/gtest.h"
#include "testing/random_annotation.h"
#include "testing/test_util.h"

namespace framescore {
namespace {

using testing::LoadCorpusDocument;

constexpr char kMinimal[] = R"({
  "doc_id": "d",
  "source_lang": "en",
  "target_lang": "zh",
  "system_id": "SI",
  "sentences": [
    {
      "id": 1,
      "source_text": "we need roads",
      "target_text": "我们需要路",
      "source_frames": [
        {"name": "Needing", "lu_text": "need", "lu_span": [3, 7],
         "elements": [{"role": "Cognizer", "text": "we", "span": [0, 2]}]}
      ],
      "target_frames": [
        {"name": "Needing", "lu_text": "需要", "lu_span": [2, 4],
         "elements": [{"role": "Cognizer", "text": "我们", "span": [0, 2],
                       "keywords": []}]}
      ]
    }
  ]
})";

std::string Replace(std::string s, const std::string &from, const std::string &to) {
  const auto pos = s.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return s.replace(pos, from.size(), to);
}

TEST(ParseDocumentTest, Sentence20HasSixFramesPerSide) {
  const auto doc = LoadCorpusDocument("sentence20/sentence20_si.json");
  ASSERT_EQ(doc.sentences.size(), 1u);
  const auto &pair = doc.sentences[0];
  EXPECT_EQ(pair.id, 20);
  EXPECT_EQ(pair.source_frames.size(), 6u);
  EXPECT_EQ(pair.target_frames.size(), 6u);
  for (std::size_t i = 0; i < pair.target_frames.size(); ++i) {
    EXPECT_EQ(pair.target_frames[i].index, i);
  }
}

TEST(ParseDocumentTest, EmptySentenceList) {
  const auto doc = ParseDocument(
      R"({"doc_id":"e","source_lang":"en","target_lang":"zh","sentences":[]})");
  EXPECT_EQ(doc.doc_id, "e");
  EXPECT_TRUE(doc.sentences.empty());
  EXPECT_TRUE(ValidateDocument(doc).ok());
}

TEST(ParseDocumentTest, ReadsSpansAndOptionalFields) {
  const auto doc = ParseDocument(kMinimal);
  const auto &f = doc.sentences[0].target_frames[0];
  EXPECT_EQ(f.lu_text, "需要");
  ASSERT_TRUE(f.lu_span.has_value());
  EXPECT_EQ(*f.lu_span, (Span{2, 4}));
  EXPECT_EQ(f.elements[0].text, "我们");
  EXPECT_FALSE(doc.sentences[0].source_frames[0].elements.empty());
}

TEST(ParseDocumentTest, MalformedSyntaxHasLineAndColumn) {
  try {
    ParseDocument("{\n  \"doc_id\": \"x\",\n  oops\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 3);
  }
  EXPECT_THROW(ParseDocument(""), ParseError);
}

TEST(ParseDocumentTest, MissingFieldNamesPath) {
  const std::string text =
      Replace(kMinimal, R"("role": "Cognizer", "text": "我们")", R"("text": "我们")");
  try {
    ParseDocument(text);
    FAIL() << "expected SchemaError";
  } catch (const SchemaError &e) {
    EXPECT_EQ(e.path(), "sentences[0].target_frames[0].elements[0].role");
  }
}

TEST(ParseDocumentTest, MissingElementsIsASchemaError) {
  const std::string text = Replace(
      kMinimal, R"(,
         "elements": [{"role": "Cognizer", "text": "we", "span": [0, 2]}])", "");
  try {
    ParseDocument(text);
    FAIL() << "expected SchemaError";
  } catch (const SchemaError &e) {
    EXPECT_EQ(e.path(), "sentences[0].source_frames[0].elements");
  }
}

TEST(ParseDocumentTest, WrongTypeIsASchemaError) {
  EXPECT_THROW(ParseDocument(Replace(kMinimal, R"("id": 1)", R"("id": "1")")), SchemaError);
  EXPECT_THROW(ParseDocument(Replace(kMinimal, "[3, 7]", "[3]")), SchemaError);
  EXPECT_THROW(ParseDocument("[]"), SchemaError);
}

TEST(ParseDocumentTest, DuplicateSentenceId) {
  auto doc = ParseDocument(kMinimal);
  doc.sentences.push_back(doc.sentences[0]);
  try {
    ParseDocument(SerializeDocument(doc));
    FAIL() << "expected SchemaError";
  } catch (const SchemaError &e) {
    EXPECT_EQ(e.path(), "sentences[1].id");
  }
}

TEST(ParseDocumentTest, UnknownFieldsWarn) {
  std::vector<Diagnostic> warnings;
  ParseDocument(Replace(kMinimal, R"("system_id": "SI",)",
                        R"("system_id": "SI", "comment": "x",)"),
                &warnings);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_EQ(warnings[0].path, "comment");
}

TEST(SerializeDocumentTest, RoundTripIsCanonical) {
  const auto doc = ParseDocument(kMinimal);
  const std::string once = SerializeDocument(doc);
  const auto reparsed = ParseDocument(once);
  EXPECT_EQ(reparsed, doc);
  EXPECT_EQ(SerializeDocument(reparsed), once);
}

TEST(SerializeDocumentTest, RandomRoundTrips) {
  std::mt19937_64 rng(20);
  for (int i = 0; i < 300; ++i) {
    const auto doc = testing::RandomDocument(rng, i % 4);
    const std::string text = SerializeDocument(doc);
    const auto back = ParseDocument(text);
    ASSERT_EQ(back, doc) << text;
    ASSERT_EQ(SerializeDocument(back), text);
  }
}

TEST(SerializeDocumentTest, CorpusFilesAreCanonical) {
  for (const char *file :
       {"sentence20/sentence20_si.json", "sentence20/sentence20_ji01.json",
        "sentence20/sentence20_ji02.json", "sentence20/sentence20_ji03.json",
        "examples/sentence12.json", "examples/sentence42.json"}) {
    const std::string text = testing::ReadCorpusText(file);
    EXPECT_EQ(SerializeDocument(ParseDocument(text)), text) << file;
  }
}

TEST(ValidateDocumentTest, CorpusIsValid) {
  for (const char *file :
       {"sentence20/sentence20_si.json", "sentence20/sentence20_ji01.json",
        "sentence20/sentence20_ji02.json", "sentence20/sentence20_ji03.json",
        "examples/sentence12.json", "examples/sentence42.json"}) {
    const auto report = ValidateDocument(LoadCorpusDocument(file));
    EXPECT_TRUE(report.errors.empty()) << file << ": "
                                       << FormatDiagnostic(report.errors.front());
    EXPECT_TRUE(report.warnings.empty()) << file;
  }
}

TEST(ValidateDocumentTest, SpanPastTextEnd) {
  auto doc = ParseDocument(kMinimal);
  doc.sentences[0].source_frames[0].elements[0].span = Span{0, 14};
  const auto report = ValidateDocument(doc);
  ASSERT_EQ(report.errors.size(), 1u);
  EXPECT_EQ(report.errors[0].sentence_id, 1);
  EXPECT_EQ(report.errors[0].path, "source_frames[0].elements[0].span");
}

TEST(ValidateDocumentTest, SpansCountCodePoints) {
  auto doc = ParseDocument(kMinimal);
  // "我们需要路" is five code points but fifteen bytes.
  doc.sentences[0].target_frames[0].elements[0].span = Span{0, 5};
  doc.sentences[0].target_frames[0].elements[0].text = "我们需要路";
  EXPECT_TRUE(ValidateDocument(doc).ok());
  doc.sentences[0].target_frames[0].elements[0].span = Span{0, 6};
  EXPECT_FALSE(ValidateDocument(doc).ok());
}

TEST(ValidateDocumentTest, ReversedSpan) {
  auto doc = ParseDocument(kMinimal);
  doc.sentences[0].source_frames[0].lu_span = Span{5, 3};
  EXPECT_EQ(ValidateDocument(doc).errors.size(), 1u);
}

TEST(ValidateDocumentTest, SpanTextMismatchWarns) {
  auto doc = ParseDocument(kMinimal);
  doc.sentences[0].source_frames[0].elements[0].text = "us";
  const auto report = ValidateDocument(doc);
  EXPECT_TRUE(report.ok());
  ASSERT_EQ(report.warnings.size(), 1u);
  EXPECT_EQ(report.warnings[0].path, "source_frames[0].elements[0].span");
}

TEST(ValidateDocumentTest, BadKeywordCategory) {
  auto doc = ParseDocument(kMinimal);
  doc.sentences[0].target_frames[0].elements[0].keywords.push_back({"place", "我们"});
  const auto report = ValidateDocument(doc);
  ASSERT_EQ(report.errors.size(), 1u);
  EXPECT_NE(report.errors[0].message.find("place"), std::string::npos);
  doc.sentences[0].target_frames[0].elements[0].keywords[0].category = "time_expression";
  EXPECT_TRUE(ValidateDocument(doc).ok());
}

TEST(ValidateDocumentTest, StructuralErrors) {
  auto doc = ParseDocument(kMinimal);
  doc.doc_id = "";
  doc.sentences[0].target_frames[0].name = " ";
  doc.sentences[0].target_frames[0].elements[0].role = "";
  doc.sentences[0].source_frames[0].index = 3;
  EXPECT_EQ(ValidateDocument(doc).errors.size(), 4u);
}

TEST(ValidateDocumentTest, SentenceOrder) {
  auto doc = ParseDocument(kMinimal);
  doc.sentences.push_back(doc.sentences[0]);
  doc.sentences[0].id = 5;
  doc.sentences[1].id = 2;
  EXPECT_FALSE(ValidateDocument(doc).ok());
}

TEST(ValidateDocumentTest, OverlayReferences) {
  const auto doc = ParseDocument(kMinimal);
  OverlaySet overlays;
  overlays.doc_id = "d";
  AdjudicationOverlay o;
  o.sentence_id = 1;
  o.frame_pair_overrides.push_back({0, 0, PairStatus::kReject});
  o.keyword_flags.push_back({Side::kTarget, 0, "cognizer", 0, "name"});
  overlays.Put(o);
  EXPECT_TRUE(ValidateDocument(doc, overlays).ok());

  o.frame_pair_overrides.push_back({0, 99, PairStatus::kAccept});
  o.keyword_flags.push_back({Side::kTarget, 0, "cognizer", 1, "name"});
  o.keyword_flags.push_back({Side::kSource, 0, "agent", 0, "name"});
  o.keyword_flags.push_back({Side::kSource, 0, "cognizer", 0, "place"});
  overlays.Put(o);
  EXPECT_EQ(ValidateDocument(doc, overlays).errors.size(), 4u);

  OverlaySet other;
  other.doc_id = "other";
  AdjudicationOverlay missing;
  missing.sentence_id = 7;
  other.Put(missing);
  EXPECT_EQ(ValidateDocument(doc, other).errors.size(), 2u);
}

TEST(ValidateDocumentTest, DoesNotModifyInput) {
  const auto doc = LoadCorpusDocument("sentence20/sentence20_ji03.json");
  const auto copy = doc;
  ValidateDocument(doc);
  EXPECT_EQ(doc, copy);
}

TEST(OverlayTest, RoundTrip) {
  const std::string text = testing::ReadCorpusText("examples/sentence42.overlay.json");
  const auto overlays = ParseOverlaySet(text);
  EXPECT_EQ(overlays.revision, 0);
  ASSERT_EQ(overlays.sentence_overlays.size(), 1u);
  EXPECT_EQ(overlays.sentence_overlays[0].keyword_flags[0].role, "Manner");
  EXPECT_EQ(SerializeOverlaySet(overlays), text);
}

TEST(OverlayTest, SentenceFragmentDefaultsId) {
  const auto o = ParseSentenceOverlay(
      R"({"frame_pair_overrides":[{"src":1,"tgt":2,"status":"reject"}]})", 20);
  EXPECT_EQ(o.sentence_id, 20);
  ASSERT_EQ(o.frame_pair_overrides.size(), 1u);
  EXPECT_EQ(o.frame_pair_overrides[0], (FramePairOverride{1, 2, PairStatus::kReject}));
  EXPECT_TRUE(o.keyword_flags.empty());
  EXPECT_THROW(ParseSentenceOverlay(
                   R"({"frame_pair_overrides":[{"src":1,"tgt":2,"status":"maybe"}]})", 1),
               SchemaError);
  EXPECT_THROW(ParseSentenceOverlay(
                   R"({"keyword_flags":[{"side":"left","frame":0,"role":"a","occurrence":0,
                       "category":"name"}]})", 1),
               SchemaError);
}

TEST(OverlayTest, PutKeepsOrder) {
  OverlaySet s;
  for (int id : {5, 1, 3, 1}) {
    AdjudicationOverlay o;
    o.sentence_id = id;
    s.Put(o);
  }
  ASSERT_EQ(s.sentence_overlays.size(), 3u);
  EXPECT_EQ(s.sentence_overlays[0].sentence_id, 1);
  EXPECT_EQ(s.sentence_overlays[2].sentence_id, 5);
  EXPECT_NE(s.Find(3), nullptr);
  EXPECT_EQ(s.Find(4), nullptr);
}

}  // namespace
}  // namespace framescore
