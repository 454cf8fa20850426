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

#include <charconv>

#include "framescore/report.h"
#include "httplib.h"
#include "json.hpp"

namespace framescore {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json CountsJson(const LabelCounts &counts) {
  ordered_json o = ordered_json::object();
  for (const auto &[label, n] : counts) o[label] = n;
  return o;
}

ordered_json ScoresJson(const SentenceScores &s) {
  ordered_json o;
  o["p_mine"] = s.p_mine;
  o["r_mine"] = s.r_mine;
  o["f_mine"] = s.f_mine;
  o["p_maxe"] = s.p_maxe;
  o["r_maxe"] = s.r_maxe;
  o["f_maxe"] = s.f_maxe;
  o["scoreable_mine"] = s.scoreable_mine;
  o["scoreable_maxe"] = s.scoreable_maxe;
  return o;
}

ordered_json DiagnosticsJson(const std::vector<Diagnostic> &diagnostics) {
  ordered_json list = ordered_json::array();
  for (const auto &d : diagnostics) {
    list.push_back({{"sentence_id", d.sentence_id}, {"path", d.path},
                    {"message", d.message}});
  }
  return list;
}

void SendJson(httplib::Response &res, int status, const std::string &body) {
  res.status = status;
  res.set_content(body, "application/json");
}

void SendError(httplib::Response &res, int status, const std::string &message,
               ordered_json extra = ordered_json::object()) {
  extra["error"] = message;
  SendJson(res, status, extra.dump(2) + "\n");
}

void SetRevision(httplib::Response &res, long long revision) {
  res.set_header("ETag", "\"" + std::to_string(revision) + "\"");
}

// Strips optional quotes and a weak-validator prefix from an If-Match value.
std::optional<long long> ParseRevisionHeader(std::string value) {
  if (value.rfind("W/", 0) == 0) value = value.substr(2);
  if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
    value = value.substr(1, value.size() - 2);
  }
  long long revision = 0;
  auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), revision);
  if (ec != std::errc() || p != value.data() + value.size() || revision < 0) {
    return std::nullopt;
  }
  return revision;
}

int ParseSentenceId(const std::string &s) {
  int id = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), id);
  if (ec != std::errc() || p != s.data() + s.size() || id <= 0) return 0;
  return id;
}

// Runs handler, mapping framescore exceptions onto HTTP statuses.
template <typename Fn>
void Guard(httplib::Response &res, Fn &&handler) {
  try {
    handler();
  } catch (const NotFoundError &e) {
    SendError(res, 404, e.what());
  } catch (const ConflictError &e) {
    SetRevision(res, e.current_revision());
    SendError(res, 409, e.what(), {{"revision", e.current_revision()}});
  } catch (const ValidationError &e) {
    SendError(res, 400, e.what(), {{"errors", DiagnosticsJson(e.errors())}});
  } catch (const ParseError &e) {
    SendError(res, 400, e.what());
  } catch (const SchemaError &e) {
    SendError(res, 400, e.what());
  } catch (const OverrideError &e) {
    SendError(res, 400, e.what());
  } catch (const std::exception &e) {
    SendError(res, 500, e.what());
  }
}

}  // namespace

std::string DocumentListJson(const Workspace &workspace) {
  ordered_json list = ordered_json::array();
  for (const auto &s : workspace.ListDocuments()) {
    ordered_json o;
    o["doc_id"] = s.doc_id;
    o["system_id"] = s.system_id;
    o["sentence_count"] = s.sentence_count;
    o["avg_f_mine"] = s.avg_f_mine;
    o["avg_f_maxe"] = s.avg_f_maxe;
    o["revision"] = s.revision;
    list.push_back(std::move(o));
  }
  ordered_json root;
  root["documents"] = std::move(list);
  return root.dump(2) + "\n";
}

std::string AlignmentViewJson(const std::string &doc_id, const AlignmentView &view) {
  const SentenceAlignment &a = view.alignment;
  ordered_json root;
  root["doc_id"] = doc_id;
  root["sentence_id"] = view.pair.id;
  root["revision"] = view.revision;
  root["counts"] = {{"N_m", a.matched_frames},  {"N_t", a.target_frames},
                    {"N_s", a.source_frames},   {"n_m", a.matched_elements},
                    {"n_t", a.target_elements}, {"n_s", a.source_elements}};
  root["origin"] = PairOriginName(a.pairing.origin());
  ordered_json pairs = ordered_json::array();
  for (std::size_t i = 0; i < a.pairing.pairs.size(); ++i) {
    const FramePair &p = a.pairing.pairs[i];
    const PairElementMatch &m = a.fe_result.per_pair[i];
    ordered_json o;
    o["src"] = p.source;
    o["tgt"] = p.target;
    o["source_name"] = view.pair.source_frames[p.source].name;
    o["target_name"] = view.pair.target_frames[p.target].name;
    o["origin"] = PairOriginName(p.origin);
    o["raw_roles"] = CountsJson(m.raw);
    o["matched_roles"] = CountsJson(m.matched);
    ordered_json penalized = ordered_json::object();
    for (const auto &[role, ordinals] : m.penalized) {
      penalized[role] = ordered_json(std::vector<std::size_t>(ordinals.begin(), ordinals.end()));
    }
    o["penalized"] = std::move(penalized);
    o["matched"] = Total(m.matched);
    pairs.push_back(std::move(o));
  }
  root["pairs"] = std::move(pairs);
  root["unmatched_source"] = a.pairing.unmatched_source;
  root["unmatched_target"] = a.pairing.unmatched_target;
  ordered_json rejected = ordered_json::array();
  for (const auto &[s, t] : a.pairing.rejected) rejected.push_back({s, t});
  root["rejected"] = std::move(rejected);
  root["flags_applied"] = a.fe_result.flags_applied;
  root["scores"] = ScoresJson(view.scores);
  root["overlay"] = ordered_json::parse(SerializeSentenceOverlay(view.overlay));
  return root.dump(2) + "\n";
}

AdjudicationServer::AdjudicationServer(Workspace &workspace,
                                       std::optional<std::filesystem::path> ui_dir)
    : workspace_(workspace), server_(std::make_unique<httplib::Server>()) {
  auto &srv = *server_;

  srv.Get("/api/documents", [this](const httplib::Request &, httplib::Response &res) {
    Guard(res, [&] { SendJson(res, 200, DocumentListJson(workspace_)); });
  });

  srv.Get(R"(/api/documents/([^/]+))",
          [this](const httplib::Request &req, httplib::Response &res) {
            Guard(res, [&] {
              const std::string id = req.matches[1];
              const AnnotatedDocument &doc = workspace_.Document(id);
              const OverlaySet overlays = workspace_.Overlays(id);
              ordered_json root;
              root["document"] = ordered_json::parse(SerializeDocument(doc));
              root["overlays"] = ordered_json::parse(SerializeOverlaySet(overlays));
              root["revision"] = overlays.revision;
              SetRevision(res, overlays.revision);
              SendJson(res, 200, root.dump(2) + "\n");
            });
          });

  srv.Get(R"(/api/documents/([^/]+)/sentences/([^/]+)/alignment)",
          [this](const httplib::Request &req, httplib::Response &res) {
            Guard(res, [&] {
              const std::string id = req.matches[1];
              const int sentence = ParseSentenceId(req.matches[2]);
              if (sentence == 0) {
                throw NotFoundError("invalid sentence id '" +
                                    std::string(req.matches[2]) + "'");
              }
              const AlignmentView view = workspace_.GetAlignment(id, sentence);
              SetRevision(res, view.revision);
              SendJson(res, 200, AlignmentViewJson(id, view));
            });
          });

  srv.Put(R"(/api/documents/([^/]+)/sentences/([^/]+)/overrides)",
          [this](const httplib::Request &req, httplib::Response &res) {
            Guard(res, [&] {
              const std::string id = req.matches[1];
              const int sentence = ParseSentenceId(req.matches[2]);
              if (sentence == 0) {
                throw NotFoundError("invalid sentence id '" +
                                    std::string(req.matches[2]) + "'");
              }
              std::optional<long long> expected;
              if (req.has_header("If-Match")) {
                const std::string value = req.get_header_value("If-Match");
                if (value != "*") {
                  expected = ParseRevisionHeader(value);
                  if (!expected) {
                    SendError(res, 400, "invalid If-Match revision '" + value + "'");
                    return;
                  }
                }
              }
              AdjudicationOverlay overlay = ParseSentenceOverlay(
                  req.body.empty() ? std::string("{}") : req.body, sentence);
              const AlignmentView view =
                  workspace_.PutOverrides(id, sentence, std::move(overlay), expected);
              SetRevision(res, view.revision);
              SendJson(res, 200, AlignmentViewJson(id, view));
            });
          });

  srv.Get(R"(/api/documents/([^/]+)/scores)",
          [this](const httplib::Request &req, httplib::Response &res) {
            Guard(res, [&] {
              const std::string id = req.matches[1];
              long long revision = 0;
              const DocumentScores scores = workspace_.GetScores(id, &revision);
              SetRevision(res, revision);
              SendJson(res, 200,
                       RenderScoreReport(workspace_.Document(id), scores,
                                         ReportFormat::kJson));
            });
          });

  if (ui_dir) srv.set_mount_point("/", ui_dir->string());
}

AdjudicationServer::~AdjudicationServer() { Stop(); }

int AdjudicationServer::Bind(const std::string &host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool AdjudicationServer::Run() { return server_->listen_after_bind(); }

void AdjudicationServer::WaitUntilReady() const { server_->wait_until_ready(); }

void AdjudicationServer::Stop() {
  if (server_ && server_->is_running()) server_->stop();
}

}  // namespace framescore
