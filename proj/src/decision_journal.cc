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

#include "sticky/decision_journal.h"

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>

#include "sticky/errors.h"

namespace sticky {

namespace {

[[noreturn]] void ThrowErrno(const std::string& what,
                             const std::filesystem::path& path) {
  throw Error(ErrorCode::kIo,
              what + " " + path.string() + ": " + std::strerror(errno));
}

std::string ReadAll(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

AppendOnlyFile::AppendOnlyFile(std::filesystem::path path)
    : path_(std::move(path)) {
  // Drop a torn tail left by a crash mid-append so new records start on a
  // fresh line.
  const std::string content = ReadAll(path_);
  if (!content.empty() && content.back() != '\n') {
    const auto keep = content.rfind('\n');
    const off_t size = keep == std::string::npos ? 0 : static_cast<off_t>(keep + 1);
    if (::truncate(path_.c_str(), size) != 0) ThrowErrno("truncate", path_);
  }
  fd_ = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd_ < 0) ThrowErrno("open", path_);
}

AppendOnlyFile::~AppendOnlyFile() {
  if (fd_ >= 0) ::close(fd_);
}

void AppendOnlyFile::Append(std::string_view line) {
  std::string buf;
  buf.reserve(line.size() + 1);
  buf.append(line);
  buf.push_back('\n');
  std::lock_guard<std::mutex> lock(mu_);
  const char* p = buf.data();
  std::size_t left = buf.size();
  while (left > 0) {
    const ssize_t n = ::write(fd_, p, left);
    if (n < 0) {
      if (errno == EINTR) continue;
      ThrowErrno("write", path_);
    }
    p += n;
    left -= static_cast<std::size_t>(n);
  }
  if (::fdatasync(fd_) != 0) ThrowErrno("fdatasync", path_);
}

std::vector<std::string> AppendOnlyFile::ReadCompleteLines(
    const std::filesystem::path& path) {
  const std::string content = ReadAll(path);
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (true) {
    const auto nl = content.find('\n', pos);
    if (nl == std::string::npos) break;
    lines.emplace_back(content.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

std::string FormatDecisionRecord(const DecisionRecord& record) {
  std::string line;
  line += record.session_id;
  line += '\t';
  line += record.candidate_id;
  line += '\t';
  line += ReviewStatusName(record.decision);
  line += '\t';
  line += record.timestamp;
  return line;
}

DecisionRecord ParseDecisionRecord(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const auto tab = line.find('\t', pos);
    fields.push_back(line.substr(pos, tab - pos));
    if (tab == std::string_view::npos) break;
    pos = tab + 1;
  }
  if (fields.size() != 4 || fields[0].empty() || fields[1].empty() ||
      fields[3].empty()) {
    throw Error(ErrorCode::kMalformedInput, "journal record needs 4 fields");
  }
  DecisionRecord record;
  record.session_id = std::string(fields[0]);
  record.candidate_id = std::string(fields[1]);
  record.decision = ParseReviewStatus(fields[2]);
  if (record.decision == ReviewStatus::kPending) {
    throw Error(ErrorCode::kMalformedInput, "journal decision cannot be Pending");
  }
  record.timestamp = std::string(fields[3]);
  return record;
}

std::string NowRfc3339() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t secs = std::chrono::system_clock::to_time_t(now);
  const auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                          now.time_since_epoch())
                          .count() %
                      1000;
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[32];
  const std::size_t n = std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%S", &tm);
  char out[48];
  std::snprintf(out, sizeof(out), "%.*s.%03dZ", static_cast<int>(n), buf,
                static_cast<int>(millis));
  return out;
}

void DecisionJournal::Append(const DecisionRecord& record) {
  file_.Append(FormatDecisionRecord(record));
}

std::vector<DecisionRecord> DecisionJournal::Replay(
    const std::filesystem::path& path) {
  std::vector<DecisionRecord> records;
  std::size_t line_no = 0;
  for (const std::string& line : AppendOnlyFile::ReadCompleteLines(path)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      records.push_back(ParseDecisionRecord(line));
    } catch (const Error& e) {
      throw Error(ErrorCode::kMalformedInput,
                  path.string() + " line " + std::to_string(line_no) + ": " +
                      e.what());
    }
  }
  return records;
}

}  // namespace sticky
