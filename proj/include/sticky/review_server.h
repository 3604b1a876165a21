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

#pragma once

#include <memory>
#include <string>

#include "sticky/review_store.h"

namespace sticky {

// JSON-over-HTTP front end for a ReviewStore.
//
//   POST /api/sessions                      {"titles": [text | {id, text}]}
//   GET  /api/sessions
//   GET  /api/sessions/{id}
//   GET  /api/sessions/{id}/candidates      ?status=Pending|Accepted|Rejected
//   POST /api/sessions/{id}/decisions       {"candidate_id", "decision"}
//   GET  /api/sessions/{id}/export          ?format=json for a JSON body
//   POST /api/score                         {"text"}   (GET ?text= too)
//
// Errors come back as {"error": <code name>, "message": ...} with 400, 404
// (unknown session/candidate), 409 (already reviewed) or 503 (resources not
// loaded).
class ReviewServer {
 public:
  static constexpr int kDefaultPort = 8470;

  explicit ReviewServer(ReviewStore& store);
  ~ReviewServer();
  ReviewServer(const ReviewServer&) = delete;
  ReviewServer& operator=(const ReviewServer&) = delete;

  // Port 0 picks a free port. Returns false if the address cannot be bound.
  bool Bind(const std::string& host, int port);
  int port() const;

  // Serves until Stop() is called from another thread.
  void Run();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace sticky
