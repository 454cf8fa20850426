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

#ifndef FRAMESCORE_SERVICE_H_
#define FRAMESCORE_SERVICE_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "framescore/workspace.h"

namespace httplib {
class Server;
}  // namespace httplib

namespace framescore {

// JSON bodies shared by the HTTP API. Exposed for tests and the CLI.
std::string DocumentListJson(const Workspace &workspace);
std::string AlignmentViewJson(const std::string &doc_id, const AlignmentView &view);

// HTTP front end of a Workspace:
//
//   GET /api/documents
//   GET /api/documents/{id}
//   GET /api/documents/{id}/sentences/{n}/alignment
//   PUT /api/documents/{id}/sentences/{n}/overrides   (If-Match: <revision>)
//   GET /api/documents/{id}/scores
//
// Errors come back as {"error": ...} with status 400, 404 or 409. The
// scores body is the JSON score report, byte for byte what `framescore
// score --format json` prints for the same document and overlay file.
class AdjudicationServer {
 public:
  // ui_dir, when set, is served as static files under "/".
  explicit AdjudicationServer(Workspace &workspace,
                              std::optional<std::filesystem::path> ui_dir = {});
  ~AdjudicationServer();

  AdjudicationServer(const AdjudicationServer &) = delete;
  AdjudicationServer &operator=(const AdjudicationServer &) = delete;

  // Binds to port, or to an ephemeral port when port is 0. Returns the bound
  // port, or -1 on failure.
  int Bind(const std::string &host, int port);

  // Serves until Stop() is called. Requires a successful Bind().
  bool Run();
  // Blocks until a concurrent Run() is accepting connections.
  void WaitUntilReady() const;
  void Stop();

 private:
  Workspace &workspace_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace framescore

#endif  // FRAMESCORE_SERVICE_H_
