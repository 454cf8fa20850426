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

#include "framescore/service.h"

#include <thread>

#include "framescore/workspace.h"
#include "gtest/gtest.h"
#include "httplib.h"
#include "json.hpp"
#include "testing/test_util.h"

namespace framescore {
namespace {

using nlohmann::json;
using testing::TempDir;

constexpr char kScores[] = "/api/documents/sentence20-si/scores";
constexpr char kOverrides[] = "/api/documents/sentence20-si/sentences/20/overrides";
constexpr char kReject[] =
    R"({"frame_pair_overrides":[{"src":1,"tgt":0,"status":"reject"}]})";

class ServiceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    testing::CopyCorpusDir("sentence20", dir_.path());
    std::filesystem::create_directories(dir_ / "ui");
    testing::WriteFile(dir_ / "ui" / "index.html", "<html>ui</html>");
    workspace_ = std::make_unique<Workspace>(dir_.path());
    server_ = std::make_unique<AdjudicationServer>(*workspace_, dir_ / "ui");
    port_ = server_->Bind("127.0.0.1", 0);
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_->Run(); });
    server_->WaitUntilReady();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }

  void TearDown() override {
    server_->Stop();
    thread_.join();
  }

  httplib::Result Put(const std::string &body, const std::string &if_match = "") {
    httplib::Headers headers;
    if (!if_match.empty()) headers.emplace("If-Match", if_match);
    return client_->Put(kOverrides, headers, body, "application/json");
  }

  TempDir dir_;
  std::unique_ptr<Workspace> workspace_;
  std::unique_ptr<AdjudicationServer> server_;
  std::thread thread_;
  std::unique_ptr<httplib::Client> client_;
  int port_ = 0;
};

TEST_F(ServiceTest, ListsDocuments) {
  auto res = client_->Get("/api/documents");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  const auto j = json::parse(res->body);
  ASSERT_EQ(j["documents"].size(), 4u);
  EXPECT_EQ(j["documents"][3]["doc_id"], "sentence20-si");
  EXPECT_EQ(res->body, DocumentListJson(*workspace_));
}

TEST_F(ServiceTest, GetsDocument) {
  auto res = client_->Get("/api/documents/sentence20-ji02");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  const auto j = json::parse(res->body);
  EXPECT_EQ(j["document"]["system_id"], "JI02");
  EXPECT_EQ(j["revision"], 0);
}

TEST_F(ServiceTest, Alignment) {
  auto res = client_->Get("/api/documents/sentence20-si/sentences/20/alignment");
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 200);
  const auto j = json::parse(res->body);
  EXPECT_EQ(j["counts"]["N_m"], 5);
  EXPECT_EQ(j["counts"]["n_m"], 10);
  EXPECT_EQ(j["pairs"].size(), 5u);
  EXPECT_EQ(j["unmatched_target"], json::array({1}));
}

TEST_F(ServiceTest, ScoresMatchCli) {
  for (const char *doc : {"sentence20-si", "sentence20-ji01", "sentence20-ji02",
                          "sentence20-ji03"}) {
    auto res = client_->Get(std::string("/api/documents/") + doc + "/scores");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 200);
    const std::string file = std::string(doc).replace(10, 1, "_");
    const auto cli = testing::RunFramescore(
        {"score", (dir_ / (file + ".json")).string(), "--format", "json"});
    EXPECT_EQ(res->body, cli.out) << doc;
  }
}

TEST_F(ServiceTest, OverrideThenReload) {
  auto put = Put(kReject, "0");
  ASSERT_TRUE(put);
  ASSERT_EQ(put->status, 200) << put->body;
  const auto j = json::parse(put->body);
  EXPECT_EQ(j["revision"], 1);
  EXPECT_EQ(j["counts"]["N_m"], 4);
  EXPECT_DOUBLE_EQ(j["scores"]["p_mine"].get<double>(), 4.0 / 6.0);
  EXPECT_EQ(put->get_header_value("ETag"), "\"1\"");

  auto scores = client_->Get(kScores);
  ASSERT_TRUE(scores);
  const auto cli = testing::RunFramescore(
      {"score", (dir_ / "sentence20_si.json").string(), "--overlay",
       (dir_ / "sentence20_si.overlay.json").string(), "--format", "json"});
  EXPECT_EQ(scores->body, cli.out);
  EXPECT_DOUBLE_EQ(json::parse(scores->body)["per_sentence"]["20"]["p_mine"].get<double>(),
                   4.0 / 6.0);

  Workspace reloaded(dir_.path());
  EXPECT_DOUBLE_EQ(reloaded.GetScores("sentence20-si").per_sentence.at(20).p_mine, 4.0 / 6.0);
}

TEST_F(ServiceTest, RevisionHeaders) {
  ASSERT_EQ(Put(kReject)->status, 200);
  ASSERT_EQ(Put("{}", "\"1\"")->status, 200);
  ASSERT_EQ(Put("{}", "W/\"2\"")->status, 200);
  ASSERT_EQ(Put("{}", "*")->status, 200);
  auto bad = Put("{}", "soon");
  EXPECT_EQ(bad->status, 400);
  auto stale = Put("{}", "1");
  ASSERT_TRUE(stale);
  EXPECT_EQ(stale->status, 409);
  EXPECT_EQ(json::parse(stale->body)["revision"], 4);
  EXPECT_EQ(workspace_->Revision("sentence20-si"), 4);
}

TEST_F(ServiceTest, ValidationErrors) {
  auto res = Put(R"({"frame_pair_overrides":[{"src":99,"tgt":0,"status":"accept"}]})");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
  const auto j = json::parse(res->body);
  EXPECT_TRUE(j.contains("error"));
  EXPECT_FALSE(j["errors"].empty());
  EXPECT_EQ(workspace_->Revision("sentence20-si"), 0);

  EXPECT_EQ(Put("{not json")->status, 400);
  EXPECT_EQ(Put(R"({"keyword_flags":[{"side":"target","frame":0,"role":"Entity",
      "occurrence":0,"category":"place"}]})")->status, 400);
}

TEST_F(ServiceTest, NotFound) {
  EXPECT_EQ(client_->Get("/api/documents/nope")->status, 404);
  EXPECT_EQ(client_->Get("/api/documents/nope/scores")->status, 404);
  EXPECT_EQ(client_->Get("/api/documents/sentence20-si/sentences/3/alignment")->status, 404);
  EXPECT_EQ(client_->Get("/api/documents/sentence20-si/sentences/x/alignment")->status, 404);
  auto res = client_->Put("/api/documents/nope/sentences/20/overrides", "{}",
                          "application/json");
  EXPECT_EQ(res->status, 404);
  EXPECT_TRUE(json::parse(res->body).contains("error"));
}

TEST_F(ServiceTest, ServesStaticUi) {
  auto res = client_->Get("/index.html");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->body, "<html>ui</html>");
}

}  // namespace
}  // namespace framescore
