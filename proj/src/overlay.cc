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

#include "framescore/overlay.h"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "framescore/errors.h"
#include "json_util.h"

namespace framescore {

using internal::ObjectReader;
using ordered_json = nlohmann::ordered_json;

std::string_view PairStatusName(PairStatus status) {
  return status == PairStatus::kAccept ? "accept" : "reject";
}

std::string DescribeFlag(const KeywordFlag &flag) {
  return "keyword flag (" + std::string(SideName(flag.side)) + " frame " +
         std::to_string(flag.frame) + ", role '" + flag.role +
         "', occurrence " + std::to_string(flag.occurrence) + ")";
}

const AdjudicationOverlay *OverlaySet::Find(int sentence_id) const {
  for (const auto &o : sentence_overlays) {
    if (o.sentence_id == sentence_id) return &o;
  }
  return nullptr;
}

void OverlaySet::Put(AdjudicationOverlay overlay) {
  auto it = std::lower_bound(
      sentence_overlays.begin(), sentence_overlays.end(), overlay.sentence_id,
      [](const AdjudicationOverlay &o, int id) { return o.sentence_id < id; });
  if (it != sentence_overlays.end() && it->sentence_id == overlay.sentence_id) {
    *it = std::move(overlay);
  } else {
    sentence_overlays.insert(it, std::move(overlay));
  }
}

namespace {

std::size_t ReadIndex(const ObjectReader &obj, const char *key) {
  long long v = obj.Integer(key);
  if (v < 0) throw SchemaError(obj.Path(key), "must be non-negative");
  return static_cast<std::size_t>(v);
}

AdjudicationOverlay ReadSentenceOverlay(const nlohmann::json &value,
                                        const std::string &path,
                                        int default_sentence_id,
                                        std::vector<Diagnostic> *warnings) {
  ObjectReader obj(value, path);
  AdjudicationOverlay overlay;
  if (obj.Has("sentence_id") || default_sentence_id <= 0) {
    long long id = obj.Integer("sentence_id");
    if (id <= 0 || id > std::numeric_limits<int>::max()) {
      throw SchemaError(obj.Path("sentence_id"), "must be a positive integer");
    }
    overlay.sentence_id = static_cast<int>(id);
  } else {
    overlay.sentence_id = default_sentence_id;
  }
  obj.WarnUnknown({"sentence_id", "frame_pair_overrides", "keyword_flags"},
                  overlay.sentence_id, warnings);

  const auto &overrides = obj.OptionalArray("frame_pair_overrides");
  for (std::size_t i = 0; i < overrides.size(); ++i) {
    ObjectReader o(overrides[i], obj.Path("frame_pair_overrides", i));
    FramePairOverride entry;
    entry.source = ReadIndex(o, "src");
    entry.target = ReadIndex(o, "tgt");
    const std::string status = o.String("status");
    if (status == "accept") {
      entry.status = PairStatus::kAccept;
    } else if (status == "reject") {
      entry.status = PairStatus::kReject;
    } else {
      throw SchemaError(o.Path("status"),
                        "expected 'accept' or 'reject', found '" + status + "'");
    }
    overlay.frame_pair_overrides.push_back(entry);
  }

  const auto &flags = obj.OptionalArray("keyword_flags");
  for (std::size_t i = 0; i < flags.size(); ++i) {
    ObjectReader f(flags[i], obj.Path("keyword_flags", i));
    KeywordFlag flag;
    const std::string side = f.String("side");
    auto parsed = ParseSide(side);
    if (!parsed) {
      throw SchemaError(f.Path("side"),
                        "expected 'source' or 'target', found '" + side + "'");
    }
    flag.side = *parsed;
    flag.frame = ReadIndex(f, "frame");
    flag.role = f.String("role");
    flag.occurrence = f.Has("occurrence") ? ReadIndex(f, "occurrence") : 0;
    flag.category = f.String("category");
    overlay.keyword_flags.push_back(std::move(flag));
  }
  return overlay;
}

// Blank labels are reported by document validation; here they match nothing.
std::string CanonicalOrEmpty(const std::string &label,
                             const AliasTable &aliases) {
  try {
    return NormalizeLabel(label, aliases);
  } catch (const std::invalid_argument &) {
    return "";
  }
}

ordered_json SentenceOverlayJson(const AdjudicationOverlay &overlay) {
  ordered_json o;
  o["sentence_id"] = overlay.sentence_id;
  ordered_json overrides = ordered_json::array();
  for (const auto &e : overlay.frame_pair_overrides) {
    ordered_json j;
    j["src"] = e.source;
    j["tgt"] = e.target;
    j["status"] = PairStatusName(e.status);
    overrides.push_back(std::move(j));
  }
  o["frame_pair_overrides"] = std::move(overrides);
  ordered_json flags = ordered_json::array();
  for (const auto &f : overlay.keyword_flags) {
    ordered_json j;
    j["side"] = SideName(f.side);
    j["frame"] = f.frame;
    j["role"] = f.role;
    j["occurrence"] = f.occurrence;
    j["category"] = f.category;
    flags.push_back(std::move(j));
  }
  o["keyword_flags"] = std::move(flags);
  return o;
}

}  // namespace

OverlaySet ParseOverlaySet(std::string_view text,
                           std::vector<Diagnostic> *warnings) {
  const nlohmann::json root = internal::ParseJson(text);
  ObjectReader top(root, "");
  top.WarnUnknown({"doc_id", "revision", "sentence_overlays"}, 0, warnings);
  OverlaySet set;
  set.doc_id = top.String("doc_id");
  if (top.Has("revision")) {
    set.revision = top.Integer("revision");
    if (set.revision < 0) {
      throw SchemaError("revision", "must be non-negative");
    }
  }
  std::set<int> seen;
  const auto &list = top.OptionalArray("sentence_overlays");
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto overlay = ReadSentenceOverlay(
        list[i], top.Path("sentence_overlays", i), 0, warnings);
    if (!seen.insert(overlay.sentence_id).second) {
      throw SchemaError(top.Path("sentence_overlays", i) + ".sentence_id",
                        "duplicate sentence id " +
                            std::to_string(overlay.sentence_id));
    }
    set.Put(std::move(overlay));
  }
  return set;
}

AdjudicationOverlay ParseSentenceOverlay(std::string_view text,
                                         int default_sentence_id) {
  const nlohmann::json root = internal::ParseJson(text);
  return ReadSentenceOverlay(root, "", default_sentence_id, nullptr);
}

std::string SerializeOverlaySet(const OverlaySet &overlays) {
  ordered_json root;
  root["doc_id"] = overlays.doc_id;
  root["revision"] = overlays.revision;
  ordered_json list = ordered_json::array();
  for (const auto &o : overlays.sentence_overlays) {
    list.push_back(SentenceOverlayJson(o));
  }
  root["sentence_overlays"] = std::move(list);
  return root.dump(2) + "\n";
}

std::string SerializeSentenceOverlay(const AdjudicationOverlay &overlay) {
  return SentenceOverlayJson(overlay).dump(2) + "\n";
}

std::vector<Diagnostic> CheckOverlay(const SentencePair &pair,
                                     const AdjudicationOverlay &overlay,
                                     const AliasTable &aliases) {
  std::vector<Diagnostic> errors;
  auto error = [&](std::string path, std::string message) {
    errors.push_back({pair.id, std::move(path), std::move(message)});
  };

  for (std::size_t i = 0; i < overlay.frame_pair_overrides.size(); ++i) {
    const auto &o = overlay.frame_pair_overrides[i];
    const std::string path = "frame_pair_overrides[" + std::to_string(i) + "]";
    if (o.source >= pair.source_frames.size()) {
      error(path + ".src", "source frame " + std::to_string(o.source) +
                               " does not exist (sentence has " +
                               std::to_string(pair.source_frames.size()) + ")");
    }
    if (o.target >= pair.target_frames.size()) {
      error(path + ".tgt", "target frame " + std::to_string(o.target) +
                               " does not exist (sentence has " +
                               std::to_string(pair.target_frames.size()) + ")");
    }
  }

  for (std::size_t i = 0; i < overlay.keyword_flags.size(); ++i) {
    const auto &flag = overlay.keyword_flags[i];
    const std::string path = "keyword_flags[" + std::to_string(i) + "]";
    if (!ParseKeywordCategory(flag.category)) {
      error(path + ".category", "invalid keyword category '" + flag.category + "'");
    }
    const auto &frames = pair.frames(flag.side);
    if (flag.frame >= frames.size()) {
      error(path + ".frame", DescribeFlag(flag) + ": frame does not exist");
      continue;
    }
    std::string role;
    try {
      role = NormalizeLabel(flag.role, aliases);
    } catch (const std::invalid_argument &) {
      error(path + ".role", "empty role");
      continue;
    }
    std::size_t count = 0;
    for (const auto &fe : frames[flag.frame].elements) {
      if (CanonicalOrEmpty(fe.role, aliases) == role) ++count;
    }
    if (count == 0) {
      error(path + ".role", DescribeFlag(flag) + ": role not present in frame");
    } else if (flag.occurrence >= count) {
      error(path + ".occurrence",
            DescribeFlag(flag) + ": frame has only " + std::to_string(count) +
                " occurrence(s) of the role");
    }
  }
  return errors;
}

ValidationReport ValidateDocument(const AnnotatedDocument &doc,
                                  const OverlaySet &overlays) {
  ValidationReport report = ValidateDocument(doc);
  if (overlays.doc_id != doc.doc_id) {
    report.errors.push_back({0, "overlay.doc_id",
                             "overlay is for document '" + overlays.doc_id +
                                 "', not '" + doc.doc_id + "'"});
  }
  for (const auto &overlay : overlays.sentence_overlays) {
    const SentencePair *pair = doc.FindSentence(overlay.sentence_id);
    if (pair == nullptr) {
      report.errors.push_back({overlay.sentence_id, "overlay",
                               "overlay refers to a sentence that does not exist"});
      continue;
    }
    for (auto &d : CheckOverlay(*pair, overlay)) {
      d.path = "overlay." + d.path;
      report.errors.push_back(std::move(d));
    }
  }
  return report;
}

}  // namespace framescore
