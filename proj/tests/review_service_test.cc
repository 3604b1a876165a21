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

#include <filesystem>
#include <fstream>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "json.hpp"
#include "sticky/decision_journal.h"
#include "sticky/errors.h"
#include "sticky/review_server.h"
#include "sticky/review_store.h"
#include "test_support.h"

namespace sticky {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("sticky-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kIo;
}

TEST_CASE("journal record format") {
  const DecisionRecord r{"s000001", "c2", ReviewStatus::kRejected, "2026-01-02T03:04:05.006Z"};
  const std::string line = FormatDecisionRecord(r);
  CHECK(line == "s000001\tc2\tRejected\t2026-01-02T03:04:05.006Z");
  CHECK(ParseDecisionRecord(line) == r);
  CHECK_THROWS_AS(ParseDecisionRecord("a\tb\tAccepted"), Error);
  CHECK_THROWS_AS(ParseDecisionRecord("a\tb\tPending\tt"), Error);
  CHECK_THROWS_AS(ParseDecisionRecord("a\tb\tMaybe\tt"), Error);
  const std::string now = NowRfc3339();
  CHECK(now.size() == 24);
  CHECK(now[10] == 'T');
  CHECK(now.back() == 'Z');
}

TEST_CASE("append-only file drops a torn tail") {
  TempDir dir;
  const fs::path p = dir.path() / "j.tsv";
  {
    AppendOnlyFile f(p);
    f.Append("one");
    f.Append("two");
  }
  { std::ofstream(p, std::ios::app) << "thr"; }  // torn write
  CHECK(AppendOnlyFile::ReadCompleteLines(p) == std::vector<std::string>{"one", "two"});
  {
    AppendOnlyFile f(p);
    f.Append("three");
  }
  CHECK(AppendOnlyFile::ReadCompleteLines(p) ==
        std::vector<std::string>{"one", "two", "three"});
  CHECK(AppendOnlyFile::ReadCompleteLines(dir.path() / "missing").empty());
}

TEST_CASE("sessions from the golden titles") {
  ReviewStore store(testing::FixtureResources());
  const ReviewSession s = store.CreateSession(testing::GoldenOriginals());
  CHECK(s.candidates.size() >= 3);
  for (const auto& c : s.candidates) CHECK(c.candidate.status == ReviewStatus::kPending);

  const ReviewSession empty = store.CreateSession({});
  CHECK(empty.candidates.empty());

  const ReviewSession again = store.CreateSession(testing::GoldenOriginals());
  CHECK(again.session_id != s.session_id);
  REQUIRE(again.candidates.size() == s.candidates.size());
  for (std::size_t i = 0; i < s.candidates.size(); ++i) {
    CHECK(again.candidates[i].candidate_id == s.candidates[i].candidate_id);
    CHECK(again.candidates[i].candidate.replacement == s.candidates[i].candidate.replacement);
    CHECK(again.candidates[i].candidate.delta == s.candidates[i].candidate.delta);
  }

  Resources partial = testing::FixtureResources();
  partial.thesaurus.reset();
  ReviewStore broken(partial);
  CHECK(CodeOf([&] { broken.CreateSession(testing::GoldenOriginals()); }) ==
        ErrorCode::kResourceMissing);
}

// First candidate of each title, which is the golden substitution.
std::vector<std::string> TopCandidateIds(const ReviewSession& s) {
  std::vector<std::string> ids;
  std::size_t last_title = SIZE_MAX;
  for (const auto& c : s.candidates) {
    if (c.title_index != last_title) ids.push_back(c.candidate_id);
    last_title = c.title_index;
  }
  return ids;
}

TEST_CASE("decisions, read-your-write, and export") {
  ReviewStore store(testing::FixtureResources());
  const ReviewSession s = store.CreateSession(testing::GoldenOriginals());
  CHECK(store.Export(s.session_id).empty());

  const auto top = TopCandidateIds(s);
  REQUIRE(top.size() == 3);
  const auto updated = store.RecordDecision(s.session_id, top[0], ReviewStatus::kAccepted);
  CHECK(updated.candidate.status == ReviewStatus::kAccepted);
  CHECK(store.Candidates(s.session_id, ReviewStatus::kAccepted).size() == 1);
  CHECK(store.GetSession(s.session_id).decisions.size() == 1);

  CHECK(CodeOf([&] { store.RecordDecision(s.session_id, top[0], ReviewStatus::kRejected); }) ==
        ErrorCode::kAlreadyReviewed);
  CHECK(CodeOf([&] { store.RecordDecision(s.session_id, "c999", ReviewStatus::kAccepted); }) ==
        ErrorCode::kUnknownCandidate);
  CHECK(CodeOf([&] { store.RecordDecision("nope", top[0], ReviewStatus::kAccepted); }) ==
        ErrorCode::kUnknownSession);
  CHECK(CodeOf([&] { store.Export("nope"); }) == ErrorCode::kUnknownSession);

  store.RecordDecision(s.session_id, top[1], ReviewStatus::kAccepted);
  store.RecordDecision(s.session_id, top[2], ReviewStatus::kAccepted);
  const auto rows = store.Export(s.session_id);
  const std::string expected = ReadFile(testing::FixturePath("golden_treatments.tsv"));
  CHECK(FormatExport(rows) == expected);

  const ReviewSession rejected = store.CreateSession(testing::GoldenOriginals());
  for (const auto& c : rejected.candidates) {
    store.RecordDecision(rejected.session_id, c.candidate_id, ReviewStatus::kRejected);
  }
  CHECK(store.Export(rejected.session_id).empty());
}

TEST_CASE("store persists sessions and decisions across restarts") {
  TempDir dir;
  std::string id;
  std::vector<std::string> top;
  {
    ReviewStore store(testing::FixtureResources(), dir.path());
    const ReviewSession s = store.CreateSession(testing::GoldenOriginals());
    id = s.session_id;
    top = TopCandidateIds(s);
    store.RecordDecision(id, top[0], ReviewStatus::kAccepted);
    store.RecordDecision(id, top[1], ReviewStatus::kRejected);
  }
  ReviewStore reopened(testing::FixtureResources(), dir.path());
  const ReviewSession s = reopened.GetSession(id);
  CHECK(s.decisions.size() == 2);
  CHECK(reopened.Export(id).size() == 1);
  CHECK(CodeOf([&] { reopened.RecordDecision(id, top[0], ReviewStatus::kRejected); }) ==
        ErrorCode::kAlreadyReviewed);
  const ReviewSession next = reopened.CreateSession({});
  CHECK(next.session_id != id);
}

TEST_CASE("concurrent decisions on distinct candidates all land in the journal") {
  TempDir dir;
  Resources r = testing::FixtureResources();
  std::vector<Title> titles;
  for (int i = 0; i < 8; ++i) {
    for (const Title& t : testing::GoldenOriginals()) titles.push_back(t);
  }
  std::string id;
  std::size_t n = 0;
  {
    ReviewStore store(r, dir.path());
    const ReviewSession s = store.CreateSession(titles);
    id = s.session_id;
    n = s.candidates.size();
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
      threads.emplace_back([&, t] {
        for (std::size_t i = t; i < n; i += 4) {
          store.RecordDecision(id, s.candidates[i].candidate_id,
                               i % 2 ? ReviewStatus::kAccepted : ReviewStatus::kRejected);
        }
      });
    }
    for (auto& th : threads) th.join();
  }
  const auto records = DecisionJournal::Replay(dir.path() / ReviewStore::kJournalFile);
  CHECK(records.size() == n);
  ReviewStore reopened(r, dir.path());
  CHECK(reopened.Candidates(id, ReviewStatus::kPending).empty());
}

// Journal replay after truncation to every prefix reproduces exactly the
// statuses implied by that prefix.
TEST_CASE("property: journal prefix replay") {
  testing::Gen gen(61);
  const Resources r = testing::FixtureResources();
  for (int round = 0; round < 20; ++round) {
    TempDir dir;
    std::vector<Title> titles;
    for (int i = 0; i < 6; ++i) {
      for (const Title& t : testing::GoldenOriginals()) titles.push_back(t);
    }
    std::string id;
    std::vector<std::pair<std::string, ReviewStatus>> applied;
    {
      ReviewStore store(r, dir.path());
      const ReviewSession s = store.CreateSession(titles);
      id = s.session_id;
      std::vector<std::string> ids;
      for (const auto& c : s.candidates) ids.push_back(c.candidate_id);
      std::shuffle(ids.begin(), ids.end(), gen.rng());
      const int k = gen.Int(0, std::min<int>(50, static_cast<int>(ids.size())));
      for (int i = 0; i < k; ++i) {
        const auto d = gen.Int(0, 1) ? ReviewStatus::kAccepted : ReviewStatus::kRejected;
        store.RecordDecision(id, ids[i], d);
        applied.emplace_back(ids[i], d);
      }
    }
    const fs::path journal = dir.path() / ReviewStore::kJournalFile;
    const std::string full = ReadFile(journal);
    std::vector<std::size_t> ends = {0};
    for (std::size_t i = 0; i < full.size(); ++i) {
      if (full[i] == '\n') ends.push_back(i + 1);
    }
    REQUIRE(ends.size() == applied.size() + 1);
    for (std::size_t prefix = 0; prefix < ends.size(); ++prefix) {
      // Cut at a record boundary, optionally leaving half of the next record.
      std::size_t cut = ends[prefix];
      if (prefix + 1 < ends.size() && gen.Int(0, 1)) {
        cut += (ends[prefix + 1] - ends[prefix]) / 2;
      }
      { std::ofstream(journal, std::ios::binary | std::ios::trunc) << full.substr(0, cut); }
      ReviewStore restarted(r, dir.path());
      const ReviewSession s = restarted.GetSession(id);
      std::map<std::string, ReviewStatus> want;
      for (std::size_t i = 0; i < prefix; ++i) want[applied[i].first] = applied[i].second;
      for (const auto& c : s.candidates) {
        const auto it = want.find(c.candidate_id);
        const ReviewStatus expected = it == want.end() ? ReviewStatus::kPending : it->second;
        REQUIRE(c.candidate.status == expected);
      }
      REQUIRE(s.decisions.size() == prefix);
    }
  }
}

class ServerFixture {
 public:
  ServerFixture() : store_(testing::FixtureResources(), dir_.path()), server_(store_) {
    REQUIRE(server_.Bind("127.0.0.1", 0));
    thread_ = std::thread([this] { server_.Run(); });
    client_ = std::make_unique<httplib::Client>("127.0.0.1", server_.port());
    for (int i = 0; i < 100 && !client_->Get("/api/sessions"); ++i) {
      std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
  }
  ~ServerFixture() {
    server_.Stop();
    thread_.join();
  }
  httplib::Client& client() { return *client_; }
  ReviewServer& server() { return server_; }

 private:
  TempDir dir_;
  ReviewStore store_;
  ReviewServer server_;
  std::thread thread_;
  std::unique_ptr<httplib::Client> client_;
};

using nlohmann::json;

TEST_CASE("http endpoints") {
  ServerFixture fx;
  auto& cli = fx.client();

  json titles = json::array();
  for (const Title& t : testing::GoldenOriginals()) titles.push_back({{"id", t.id}, {"text", t.raw}});
  auto res = cli.Post("/api/sessions", json{{"titles", titles}}.dump(), "application/json");
  REQUIRE(res);
  REQUIRE(res->status == 201);
  const json session = json::parse(res->body);
  const std::string id = session["session_id"];
  REQUIRE(session["candidates"].size() >= 3);
  CHECK(session["candidates"][0]["replacement"] == "death");
  CHECK(session["candidates"][0]["treatment_text"].get<std::string>().rfind("Death of the library", 0) == 0);

  res = cli.Get("/api/sessions/" + id);
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(json::parse(res->body)["candidates"] == session["candidates"]);

  res = cli.Get("/api/sessions/" + id + "/candidates?status=Accepted");
  CHECK(json::parse(res->body)["candidates"].empty());

  const std::string first = session["candidates"][0]["candidate_id"];
  const std::string decision_path = "/api/sessions/" + id + "/decisions";
  res = cli.Post(decision_path, json{{"candidate_id", first}, {"decision", "Accepted"}}.dump(),
                 "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(json::parse(res->body)["status"] == "Accepted");

  res = cli.Get("/api/sessions/" + id + "/candidates?status=Accepted");
  CHECK(json::parse(res->body)["candidates"].size() == 1);

  res = cli.Post(decision_path, json{{"candidate_id", first}, {"decision", "Rejected"}}.dump(),
                 "application/json");
  CHECK(res->status == 409);
  CHECK(json::parse(res->body)["error"] == "AlreadyReviewed");

  res = cli.Post(decision_path, json{{"candidate_id", "c999"}, {"decision", "Accepted"}}.dump(),
                 "application/json");
  CHECK(res->status == 404);
  CHECK(json::parse(res->body)["error"] == "UnknownCandidate");

  res = cli.Post(decision_path, "{not json", "application/json");
  CHECK(res->status == 400);

  res = cli.Get("/api/sessions/s999999");
  CHECK(res->status == 404);
  CHECK(json::parse(res->body)["error"] == "UnknownSession");

  res = cli.Get("/api/sessions/" + id + "/export");
  REQUIRE(res);
  CHECK(res->body ==
        "ORIGINAL\tTREATMENT\n"
        "End of the library: does digital ubiquity endangers traditional channels of organized information?\t"
        "Death of the library: does digital ubiquity endangers traditional channels of organized information?\n");
  res = cli.Get("/api/sessions/" + id + "/export?format=json");
  CHECK(json::parse(res->body)["rows"].size() == 1);

  res = cli.Post("/api/score", json{{"text", "death of the library"}}.dump(), "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  const json score = json::parse(res->body);
  CHECK(score["words"][0]["word"] == "death");
  CHECK(score["words"][0]["polarity"]["label"] == "Negative");
  CHECK(score["title_score"].get<double>() == doctest::Approx(1.0));

  res = cli.Post("/api/score", json{{"text", "   "}}.dump(), "application/json");
  CHECK(json::parse(res->body)["words"].empty());

  res = cli.Get("/api/sessions");
  CHECK(json::parse(res->body)["sessions"][0]["accepted"] == 1);
}

TEST_CASE("binding a busy port fails") {
  ServerFixture fx;
  ReviewStore store(testing::FixtureResources());
  ReviewServer second(store);
  CHECK_FALSE(second.Bind("127.0.0.1", fx.server().port()));
}

}  // namespace
}  // namespace sticky
