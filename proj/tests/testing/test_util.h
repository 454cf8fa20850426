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

#ifndef FRAMESCORE_TESTING_TEST_UTIL_H_
#define FRAMESCORE_TESTING_TEST_UTIL_H_

#include <filesystem>
#include <string>
#include <vector>

#include "framescore/annotation.h"

namespace framescore {
namespace testing {

// Frame named name with one element per role.
FrameInstance MakeFrame(const std::string &name, const std::vector<std::string> &roles);

// Sentence pair with the given frames, indices set from list positions.
SentencePair MakePair(std::vector<FrameInstance> source, std::vector<FrameInstance> target,
                      int id = 1);

std::filesystem::path CorpusDir();
std::filesystem::path CorpusFile(const std::string &relative);

std::string ReadCorpusText(const std::string &relative);
AnnotatedDocument LoadCorpusDocument(const std::string &relative);

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }
  std::filesystem::path operator/(const std::string &name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

void WriteFile(const std::filesystem::path &path, const std::string &contents);

// Copies every regular file of a corpus subdirectory into dir.
void CopyCorpusDir(const std::string &relative, const std::filesystem::path &dir);

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

// Runs the CLI in-process; args exclude the program name.
CliResult RunFramescore(const std::vector<std::string> &args);

}  // namespace testing
}  // namespace framescore

#endif  // FRAMESCORE_TESTING_TEST_UTIL_H_
