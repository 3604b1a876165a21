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

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sticky/substitution_engine.h"

namespace sticky {

// A line-oriented file that is only ever appended to. Each Append writes one
// complete line with a single write(2) and syncs it before returning, so a
// crash leaves at most one torn line at the tail. Opening the file drops such
// a torn tail.
class AppendOnlyFile {
 public:
  explicit AppendOnlyFile(std::filesystem::path path);
  ~AppendOnlyFile();
  AppendOnlyFile(const AppendOnlyFile&) = delete;
  AppendOnlyFile& operator=(const AppendOnlyFile&) = delete;

  // `line` must not contain '\n'. Thread-safe.
  void Append(std::string_view line);

  const std::filesystem::path& path() const { return path_; }

  // Complete lines only; a trailing fragment without '\n' is ignored.
  // A missing file yields no lines.
  static std::vector<std::string> ReadCompleteLines(
      const std::filesystem::path& path);

 private:
  std::filesystem::path path_;
  int fd_ = -1;
  std::mutex mu_;
};

struct DecisionRecord {
  std::string session_id;
  std::string candidate_id;
  ReviewStatus decision = ReviewStatus::kAccepted;
  std::string timestamp;  // RFC 3339, UTC

  bool operator==(const DecisionRecord&) const = default;
};

// session_id<TAB>candidate_id<TAB>decision<TAB>timestamp
std::string FormatDecisionRecord(const DecisionRecord& record);
// Throws Error(kMalformedInput) for a line that is not a valid record.
DecisionRecord ParseDecisionRecord(std::string_view line);

// Current UTC time as YYYY-MM-DDTHH:MM:SS.mmmZ.
std::string NowRfc3339();

class DecisionJournal {
 public:
  explicit DecisionJournal(std::filesystem::path path) : file_(std::move(path)) {}

  void Append(const DecisionRecord& record);

  // Every complete record in file order. Throws Error(kMalformedInput) with
  // the line number of a corrupt complete line.
  static std::vector<DecisionRecord> Replay(const std::filesystem::path& path);

 private:
  AppendOnlyFile file_;
};

}  // namespace sticky
