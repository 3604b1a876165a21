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

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace sticky {

enum class Casing { kLower, kCapitalized, kUpper, kMixed };

std::string_view CasingName(Casing casing);

struct Token {
  std::string surface;  // slice of the raw text, boundary punctuation removed
  std::string normal;   // lowercased surface
  std::size_t position = 0;
  Casing casing = Casing::kLower;
};

// A tokenized title. `separators` has tokens.size() + 1 entries:
// separators[i] is the raw text preceding token i, and the last entry is the
// trailing text. Interleaving separators and surfaces rebuilds `raw`.
struct Title {
  std::string id;
  std::string raw;
  std::vector<Token> tokens;
  std::vector<std::string> separators;

  std::string Reconstruct() const;
};

using WordSet = std::unordered_set<std::string>;

Title Tokenize(std::string_view raw, std::string id = {});

bool IsContentWord(const Token& token, const WordSet& stopwords,
                   std::size_t min_len = 3);

std::string ToLower(std::string_view text);
Casing DetectCasing(std::string_view surface);

// Re-cases `word` (lowercase) to follow `casing`. Mixed casing leaves the
// word untouched.
std::string ApplyCasing(std::string_view word, Casing casing);

// Stopword file: one lowercase word per line, '#' starts a comment.
WordSet ParseStopwords(std::string_view text);
WordSet LoadStopwords(const std::string& path);
const WordSet& DefaultStopwords();

// Order-independent 64-bit FNV-1a digest of a stopword set, as hex.
std::string StopwordFingerprint(const WordSet& stopwords);

}  // namespace sticky
