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

#ifndef FRAMESCORE_ERRORS_H_
#define FRAMESCORE_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace framescore {

// Base class for all recoverable framescore failures. Argument errors use
// std::invalid_argument directly.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in an input file, positioned at a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Well-formed input that does not match the expected structure. The path
// names the offending field, e.g. "sentences[2].source_frames[0].name".
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string &message)
      : Error(path + ": " + message), path_(std::move(path)) {}

  const std::string &path() const { return path_; }

 private:
  std::string path_;
};

// Adjudication overlay that references frames, roles or occurrences that do
// not exist in the annotation it is applied to.
class OverrideError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace framescore

#endif  // FRAMESCORE_ERRORS_H_
