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

#include "framescore/workspace.h"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <mutex>
#include <sstream>

namespace framescore {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kOverlaySuffix = ".overlay.json";

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string JoinDiagnostics(const std::vector<Diagnostic> &diagnostics) {
  std::string result;
  for (const auto &d : diagnostics) {
    if (!result.empty()) result += "; ";
    result += FormatDiagnostic(d);
  }
  return result;
}

}  // namespace

ValidationError::ValidationError(std::vector<Diagnostic> errors)
    : Error(JoinDiagnostics(errors)), errors_(std::move(errors)) {}

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot read '" + path.string() + "': " + std::strerror(errno));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error("error reading '" + path.string() + "'");
  return buffer.str();
}

void WriteFileAtomically(const fs::path &path, const std::string &contents) {
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) {
    throw Error("cannot create '" + tmp.string() + "': " + std::strerror(errno));
  }
  std::size_t written = 0;
  while (written < contents.size()) {
    ssize_t n = ::write(fd, contents.data() + written, contents.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      const std::string reason = std::strerror(errno);
      ::close(fd);
      ::unlink(tmp.c_str());
      throw Error("cannot write '" + tmp.string() + "': " + reason);
    }
    written += static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0 || ::close(fd) != 0) {
    const std::string reason = std::strerror(errno);
    ::unlink(tmp.c_str());
    throw Error("cannot flush '" + tmp.string() + "': " + reason);
  }
  if (::rename(tmp.c_str(), path.c_str()) != 0) {
    const std::string reason = std::strerror(errno);
    ::unlink(tmp.c_str());
    throw Error("cannot rename onto '" + path.string() + "': " + reason);
  }
}

struct Workspace::Entry {
  AnnotatedDocument doc;
  fs::path overlay_path;
  mutable std::shared_mutex mu;
  OverlaySet overlays;  // guarded by mu
};

Workspace::Workspace(const fs::path &data_dir) : data_dir_(data_dir) {
  std::error_code ec;
  if (!fs::is_directory(data_dir, ec)) {
    throw Error("data directory '" + data_dir.string() + "' does not exist");
  }
  std::vector<fs::path> files;
  for (const auto &de : fs::directory_iterator(data_dir)) {
    const std::string name = de.path().filename().string();
    if (!de.is_regular_file() || !EndsWith(name, ".json") ||
        EndsWith(name, kOverlaySuffix)) {
      continue;
    }
    files.push_back(de.path());
  }
  std::sort(files.begin(), files.end());

  for (const auto &path : files) {
    auto entry = std::make_unique<Entry>();
    try {
      entry->doc = ParseDocument(ReadFile(path));
    } catch (const Error &e) {
      throw Error(path.string() + ": " + e.what());
    }
    const std::string &id = entry->doc.doc_id;
    if (entries_.count(id)) {
      throw Error(path.string() + ": duplicate document id '" + id + "'");
    }
    entry->overlay_path = path.parent_path() / (path.stem().string() + std::string(kOverlaySuffix));
    entry->overlays.doc_id = id;
    if (fs::exists(entry->overlay_path)) {
      try {
        entry->overlays = ParseOverlaySet(ReadFile(entry->overlay_path));
      } catch (const Error &e) {
        throw Error(entry->overlay_path.string() + ": " + e.what());
      }
    }
    const ValidationReport report = ValidateDocument(entry->doc, entry->overlays);
    if (!report.ok()) {
      throw Error(path.string() + ": " + JoinDiagnostics(report.errors));
    }
    entries_.emplace(id, std::move(entry));
  }
}

Workspace::~Workspace() = default;

Workspace::Entry &Workspace::Find(const std::string &doc_id) const {
  auto it = entries_.find(doc_id);
  if (it == entries_.end()) throw NotFoundError("unknown document '" + doc_id + "'");
  return *it->second;
}

std::vector<DocumentSummary> Workspace::ListDocuments() const {
  std::vector<DocumentSummary> result;
  for (const auto &[id, entry] : entries_) {
    DocumentSummary s;
    s.doc_id = id;
    s.system_id = entry->doc.system_id;
    s.sentence_count = static_cast<int>(entry->doc.sentences.size());
    const DocumentScores scores = GetScores(id, &s.revision);
    s.avg_f_mine = scores.avg_f_mine;
    s.avg_f_maxe = scores.avg_f_maxe;
    result.push_back(std::move(s));
  }
  return result;
}

const AnnotatedDocument &Workspace::Document(const std::string &doc_id) const {
  return Find(doc_id).doc;
}

OverlaySet Workspace::Overlays(const std::string &doc_id) const {
  const Entry &e = Find(doc_id);
  std::shared_lock lock(e.mu);
  return e.overlays;
}

long long Workspace::Revision(const std::string &doc_id) const {
  const Entry &e = Find(doc_id);
  std::shared_lock lock(e.mu);
  return e.overlays.revision;
}

namespace {

AlignmentView MakeView(const SentencePair &pair, const OverlaySet &overlays) {
  AlignmentView view;
  view.pair = pair;
  view.revision = overlays.revision;
  const AdjudicationOverlay *overlay = overlays.Find(pair.id);
  if (overlay != nullptr) view.overlay = *overlay;
  view.overlay.sentence_id = pair.id;
  view.alignment = AlignSentence(pair, overlay);
  view.scores = ScoreSentence(view.alignment);
  return view;
}

}  // namespace

AlignmentView Workspace::GetAlignment(const std::string &doc_id,
                                      int sentence_id) const {
  const Entry &e = Find(doc_id);
  const SentencePair *pair = e.doc.FindSentence(sentence_id);
  if (pair == nullptr) {
    throw NotFoundError("document '" + doc_id + "' has no sentence " +
                        std::to_string(sentence_id));
  }
  std::shared_lock lock(e.mu);
  return MakeView(*pair, e.overlays);
}

DocumentScores Workspace::GetScores(const std::string &doc_id,
                                    long long *revision) const {
  const Entry &e = Find(doc_id);
  std::shared_lock lock(e.mu);
  if (revision != nullptr) *revision = e.overlays.revision;
  return ScoreDocument(e.doc, &e.overlays);
}

AlignmentView Workspace::PutOverrides(const std::string &doc_id, int sentence_id,
                                      AdjudicationOverlay overlay,
                                      std::optional<long long> expected_revision) {
  Entry &e = Find(doc_id);
  const SentencePair *pair = e.doc.FindSentence(sentence_id);
  if (pair == nullptr) {
    throw NotFoundError("document '" + doc_id + "' has no sentence " +
                        std::to_string(sentence_id));
  }
  if (overlay.sentence_id != sentence_id) {
    throw ValidationError({{sentence_id, "sentence_id",
                            "body is for sentence " +
                                std::to_string(overlay.sentence_id)}});
  }

  std::unique_lock lock(e.mu);
  if (expected_revision && *expected_revision != e.overlays.revision) {
    throw ConflictError("revision " + std::to_string(*expected_revision) +
                            " is stale; current revision is " +
                            std::to_string(e.overlays.revision),
                        e.overlays.revision);
  }
  auto errors = CheckOverlay(*pair, overlay);
  if (!errors.empty()) throw ValidationError(std::move(errors));

  OverlaySet updated = e.overlays;
  if (overlay.empty()) {
    std::erase_if(updated.sentence_overlays, [&](const AdjudicationOverlay &o) {
      return o.sentence_id == sentence_id;
    });
  } else {
    updated.Put(std::move(overlay));
  }
  ++updated.revision;
  WriteFileAtomically(e.overlay_path, SerializeOverlaySet(updated));
  e.overlays = std::move(updated);
  return MakeView(*pair, e.overlays);
}

fs::path Workspace::OverlayPath(const std::string &doc_id) const {
  return Find(doc_id).overlay_path;
}

}  // namespace framescore
