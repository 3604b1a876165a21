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

#include "sticky/resources.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sticky/errors.h"

namespace sticky {

void Resources::RequireScoring() const {
  if (!model) throw Error(ErrorCode::kResourceMissing, "frequency model not loaded");
  if (!lexicon) throw Error(ErrorCode::kResourceMissing, "sentiment lexicon not loaded");
}

void Resources::RequireAll() const {
  RequireScoring();
  if (!thesaurus) throw Error(ErrorCode::kResourceMissing, "thesaurus not loaded");
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Calls fn(line_number, line) for every line with comments and trailing
// whitespace removed. Blank lines are skipped.
template <typename Fn>
void ForEachLine(std::string_view text, bool strip_comments, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (strip_comments) {
      if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty()) continue;
    fn(line_no, line);
  }
}

[[noreturn]] void BadLine(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kMalformedInput,
              "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::vector<Title> ParseTitles(std::string_view text) {
  std::vector<Title> titles;
  ForEachLine(text, false, [&](std::size_t line_no, std::string_view line) {
    const std::string_view trimmed = Trim(line);
    if (trimmed.front() == '{') {
      try {
        const auto rec = nlohmann::json::parse(trimmed);
        titles.push_back(Tokenize(rec.at("text").get<std::string>(),
                                  rec.at("id").get<std::string>()));
      } catch (const nlohmann::json::exception& e) {
        BadLine(line_no, e.what());
      }
    } else {
      titles.push_back(Tokenize(trimmed, std::to_string(line_no)));
    }
  });
  return titles;
}

std::vector<KeywordEntry> ParseKeywords(std::string_view text) {
  std::vector<KeywordEntry> entries;
  ForEachLine(text, false, [&](std::size_t line_no, std::string_view line) {
    KeywordEntry entry;
    const auto tab = line.find('\t');
    entry.keyword = std::string(Trim(line.substr(0, tab)));
    if (tab != std::string_view::npos) {
      const std::string_view count = Trim(line.substr(tab + 1));
      if (!count.empty()) {
        const auto [ptr, ec] = std::from_chars(
            count.data(), count.data() + count.size(), entry.count);
        if (ec != std::errc() || ptr != count.data() + count.size() ||
            entry.count == 0) {
          BadLine(line_no, "count must be a positive integer");
        }
      }
    }
    if (entry.keyword.empty()) BadLine(line_no, "empty keyword");
    entries.push_back(std::move(entry));
  });
  return entries;
}

SentimentLexicon ParseLexicon(std::string_view text, double neutral_band) {
  SentimentLexicon lexicon;
  lexicon.neutral_band = neutral_band;
  ForEachLine(text, true, [&](std::size_t line_no, std::string_view line) {
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) BadLine(line_no, "expected word<TAB>valence");
    const std::string word = ToLower(Trim(line.substr(0, tab)));
    const std::string value(Trim(line.substr(tab + 1)));
    double valence = 0.0;
    std::size_t used = 0;
    try {
      valence = std::stod(value, &used);
    } catch (const std::exception&) {
      BadLine(line_no, "valence is not a number");
    }
    if (used != value.size()) BadLine(line_no, "valence is not a number");
    if (word.empty()) BadLine(line_no, "empty word");
    if (!(valence >= -1.0 && valence <= 1.0)) {
      BadLine(line_no, "valence outside [-1, 1]");
    }
    lexicon.Set(word, valence);
  });
  return lexicon;
}

Thesaurus ParseThesaurus(std::string_view text) {
  Thesaurus thesaurus;
  ForEachLine(text, true, [&](std::size_t line_no, std::string_view line) {
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) BadLine(line_no, "expected word<TAB>synonyms");
    const std::string_view word = Trim(line.substr(0, tab));
    if (word.empty()) BadLine(line_no, "empty word");
    std::string_view rest = line.substr(tab + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view syn = Trim(rest.substr(0, comma));
      if (!syn.empty()) thesaurus.Add(word, syn);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  });
  return thesaurus;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kResourceMissing, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace sticky
