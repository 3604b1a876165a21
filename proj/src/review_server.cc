// Copyright 2026 The Stickyword Authors.
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

#include "sticky/review_server.h"

#include "httplib.h"
#include "sticky/errors.h"
#include "sticky/json_io.h"

namespace sticky {

namespace {

int HttpStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownSession:
    case ErrorCode::kUnknownCandidate:
      return 404;
    case ErrorCode::kAlreadyReviewed:
      return 409;
    case ErrorCode::kResourceMissing:
      return 503;
    case ErrorCode::kIo:
      return 500;
    default:
      return 400;
  }
}

void SendJson(httplib::Response& res, const Json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void SendError(httplib::Response& res, int status, std::string_view code,
               const std::string& message) {
  SendJson(res, Json{{"error", code}, {"message", message}}, status);
}

Json CandidateToJson(const StoredCandidate& c, const Title& title) {
  Json j{{"candidate_id", c.candidate_id}, {"title_index", c.title_index}};
  j.update(Json(c.candidate));
  j["original_text"] = title.raw;
  j["treatment_text"] = ApplySubstitution(title, c.candidate).raw;
  return j;
}

Json SessionToApiJson(const ReviewSession& s) {
  Json titles = Json::array();
  for (const Title& t : s.titles) titles.push_back({{"id", t.id}, {"text", t.raw}});
  Json candidates = Json::array();
  for (const StoredCandidate& c : s.candidates) {
    candidates.push_back(CandidateToJson(c, s.titles[c.title_index]));
  }
  Json decisions = Json::array();
  for (const DecisionRecord& d : s.decisions) {
    decisions.push_back({{"candidate_id", d.candidate_id},
                         {"decision", ReviewStatusName(d.decision)},
                         {"timestamp", d.timestamp}});
  }
  return Json{{"session_id", s.session_id},
              {"titles", std::move(titles)},
              {"candidates", std::move(candidates)},
              {"decisions", std::move(decisions)}};
}

Json ParseBody(const httplib::Request& req) {
  try {
    return Json::parse(req.body);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, std::string("request body: ") + e.what());
  }
}

std::vector<Title> TitlesFromJson(const Json& body) {
  if (!body.is_object() || !body.contains("titles") || !body["titles"].is_array()) {
    throw Error(ErrorCode::kMalformedInput, "expected {\"titles\": [...]}");
  }
  std::vector<Title> titles;
  for (const auto& t : body["titles"]) {
    const std::string fallback_id = "t" + std::to_string(titles.size() + 1);
    if (t.is_string()) {
      titles.push_back(Tokenize(t.get<std::string>(), fallback_id));
    } else if (t.is_object() && t.contains("text") && t["text"].is_string()) {
      const std::string id =
          t.contains("id") && t["id"].is_string() ? t["id"].get<std::string>()
                                                  : fallback_id;
      titles.push_back(Tokenize(t["text"].get<std::string>(), id));
    } else {
      throw Error(ErrorCode::kMalformedInput,
                  "each title must be a string or {id, text}");
    }
  }
  return titles;
}

// Wraps a handler so library errors become JSON error responses.
template <typename Fn>
httplib::Server::Handler Guard(Fn fn) {
  return [fn = std::move(fn)](const httplib::Request& req,
                              httplib::Response& res) {
    try {
      fn(req, res);
    } catch (const Error& e) {
      SendError(res, HttpStatusFor(e.code()), ErrorCodeName(e.code()), e.what());
    } catch (const std::exception& e) {
      SendError(res, 500, "InternalError", e.what());
    }
  };
}

}  // namespace

struct ReviewServer::Impl {
  explicit Impl(ReviewStore& s) : store(s) {}

  ReviewStore& store;
  httplib::Server server;
  int port = -1;
};

ReviewServer::ReviewServer(ReviewStore& store)
    : impl_(std::make_unique<Impl>(store)) {
  auto& server = impl_->server;
  ReviewStore& st = store;

  // Without SO_REUSEPORT so that a port already in use fails to bind.
  server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });

  server.Post("/api/sessions", Guard([&st](const httplib::Request& req,
                                           httplib::Response& res) {
    const ReviewSession s = st.CreateSession(TitlesFromJson(ParseBody(req)));
    SendJson(res, SessionToApiJson(s), 201);
  }));

  server.Get("/api/sessions", Guard([&st](const httplib::Request&,
                                          httplib::Response& res) {
    Json list = Json::array();
    for (const std::string& id : st.SessionIds()) {
      const ReviewSession s = st.GetSession(id);
      std::size_t pending = 0;
      std::size_t accepted = 0;
      for (const auto& c : s.candidates) {
        pending += c.candidate.status == ReviewStatus::kPending;
        accepted += c.candidate.status == ReviewStatus::kAccepted;
      }
      list.push_back({{"session_id", id},
                      {"titles", s.titles.size()},
                      {"candidates", s.candidates.size()},
                      {"pending", pending},
                      {"accepted", accepted}});
    }
    SendJson(res, Json{{"sessions", std::move(list)}});
  }));

  server.Get(R"(/api/sessions/([^/]+))",
             Guard([&st](const httplib::Request& req, httplib::Response& res) {
               SendJson(res, SessionToApiJson(st.GetSession(req.matches[1].str())));
             }));

  server.Get(R"(/api/sessions/([^/]+)/candidates)",
             Guard([&st](const httplib::Request& req, httplib::Response& res) {
               std::optional<ReviewStatus> status;
               if (req.has_param("status")) {
                 status = ParseReviewStatus(req.get_param_value("status"));
               }
               const ReviewSession s = st.GetSession(req.matches[1].str());
               Json list = Json::array();
               for (const auto& c : s.candidates) {
                 if (status && c.candidate.status != *status) continue;
                 list.push_back(CandidateToJson(c, s.titles[c.title_index]));
               }
               SendJson(res, Json{{"session_id", s.session_id},
                                  {"candidates", std::move(list)}});
             }));

  server.Post(R"(/api/sessions/([^/]+)/decisions)",
              Guard([&st](const httplib::Request& req, httplib::Response& res) {
                const Json body = ParseBody(req);
                if (!body.is_object() || !body.contains("candidate_id") ||
                    !body.contains("decision") ||
                    !body["candidate_id"].is_string() ||
                    !body["decision"].is_string()) {
                  throw Error(ErrorCode::kMalformedInput,
                              "expected {\"candidate_id\", \"decision\"}");
                }
                const std::string session_id = req.matches[1].str();
                const StoredCandidate c = st.RecordDecision(
                    session_id, body["candidate_id"].get<std::string>(),
                    ParseReviewStatus(body["decision"].get<std::string>()));
                const ReviewSession s = st.GetSession(session_id);
                SendJson(res, CandidateToJson(c, s.titles[c.title_index]));
              }));

  server.Get(R"(/api/sessions/([^/]+)/export)",
             Guard([&st](const httplib::Request& req, httplib::Response& res) {
               const auto rows = st.Export(req.matches[1].str());
               if (req.get_param_value("format") == "json") {
                 Json list = Json::array();
                 for (const auto& r : rows) {
                   list.push_back({{"ORIGINAL", r.original}, {"TREATMENT", r.treatment}});
                 }
                 SendJson(res, Json{{"rows", std::move(list)}});
               } else {
                 res.set_content(FormatExport(rows), "text/tab-separated-values");
               }
             }));

  auto score = [&st](const std::string& text, httplib::Response& res) {
    const auto [title, analysis] = st.Score(text);
    SendJson(res, TitleAnalysisToJson(title, analysis));
  };
  server.Post("/api/score", Guard([score](const httplib::Request& req,
                                          httplib::Response& res) {
    const Json body = ParseBody(req);
    if (!body.is_object() || !body.contains("text") || !body["text"].is_string()) {
      throw Error(ErrorCode::kMalformedInput, "expected {\"text\": ...}");
    }
    score(body["text"].get<std::string>(), res);
  }));
  server.Get("/api/score", Guard([score](const httplib::Request& req,
                                         httplib::Response& res) {
    score(req.get_param_value("text"), res);
  }));
}

ReviewServer::~ReviewServer() { Stop(); }

bool ReviewServer::Bind(const std::string& host, int port) {
  if (port == 0) {
    impl_->port = impl_->server.bind_to_any_port(host);
    return impl_->port > 0;
  }
  if (!impl_->server.bind_to_port(host, port)) return false;
  impl_->port = port;
  return true;
}

int ReviewServer::port() const { return impl_->port; }

void ReviewServer::Run() { impl_->server.listen_after_bind(); }

void ReviewServer::Stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace sticky
