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

#ifndef FRAMESCORE_WORKSPACE_H_
#define FRAMESCORE_WORKSPACE_H_

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "framescore/aligner.h"
#include "framescore/annotation.h"
#include "framescore/errors.h"
#include "framescore/metrics.h"
#include "framescore/overlay.h"

namespace framescore {

// Optimistic concurrency failure: the caller's revision is stale.
class ConflictError : public Error {
 public:
  ConflictError(const std::string &message, long long current_revision)
      : Error(message), current_revision_(current_revision) {}

  long long current_revision() const { return current_revision_; }

 private:
  long long current_revision_;
};

// Rejected overlay write; the workspace is left unchanged.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Diagnostic> errors);

  const std::vector<Diagnostic> &errors() const { return errors_; }

 private:
  std::vector<Diagnostic> errors_;
};

struct DocumentSummary {
  std::string doc_id;
  std::string system_id;
  int sentence_count = 0;
  double avg_f_mine = 0.0;
  double avg_f_maxe = 0.0;
  long long revision = 0;
};

struct AlignmentView {
  SentencePair pair;
  SentenceAlignment alignment;
  SentenceScores scores;
  AdjudicationOverlay overlay;
  long long revision = 0;
};

// Annotated documents of a data directory plus their adjudication overlays.
//
// Every "<name>.json" file in the directory (other than "*.overlay.json") is
// a document; its overlays live in "<name>.overlay.json" beside it. The
// documents are read-only. Overlay writes are serialized per document and
// land on disk by write-to-temp-then-rename, so the file is never torn.
// Reads may run concurrently with each other and with writes to other
// documents.
class Workspace {
 public:
  // Loads and validates every document and overlay file. Throws Error if the
  // directory is missing or any file fails to parse or validate.
  explicit Workspace(const std::filesystem::path &data_dir);
  ~Workspace();

  Workspace(const Workspace &) = delete;
  Workspace &operator=(const Workspace &) = delete;

  // Ordered by doc_id.
  std::vector<DocumentSummary> ListDocuments() const;

  // The methods below throw NotFoundError for an unknown doc or sentence.
  const AnnotatedDocument &Document(const std::string &doc_id) const;
  OverlaySet Overlays(const std::string &doc_id) const;
  long long Revision(const std::string &doc_id) const;
  AlignmentView GetAlignment(const std::string &doc_id, int sentence_id) const;

  // Scores consistent with the latest committed revision, which is stored
  // in *revision when it is non-null.
  DocumentScores GetScores(const std::string &doc_id,
                           long long *revision = nullptr) const;

  // Replaces the overlay of one sentence. If expected_revision is set and
  // differs from the current revision, throws ConflictError. Throws
  // ValidationError for dangling references. On success the revision goes
  // up by exactly one, even if the overlay did not change.
  AlignmentView PutOverrides(const std::string &doc_id, int sentence_id,
                             AdjudicationOverlay overlay,
                             std::optional<long long> expected_revision);

  std::filesystem::path OverlayPath(const std::string &doc_id) const;

 private:
  struct Entry;

  Entry &Find(const std::string &doc_id) const;

  std::filesystem::path data_dir_;
  std::map<std::string, std::unique_ptr<Entry>> entries_;
};

// Writes contents to path atomically: a temp file in the same directory is
// written, flushed to disk and renamed over path. Throws Error on failure.
void WriteFileAtomically(const std::filesystem::path &path,
                         const std::string &contents);

// Reads a whole file. Throws Error naming the path if it cannot be read.
std::string ReadFile(const std::filesystem::path &path);

}  // namespace framescore

#endif  // FRAMESCORE_WORKSPACE_H_
