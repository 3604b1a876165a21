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
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "sticky/text_core.h"

namespace sticky {

// Document frequencies over the context corpus. Drives novelty.
struct ContextStats {
  std::size_t doc_count = 0;
  std::map<std::string, std::size_t> df;

  std::size_t DocFrequency(std::string_view word) const;
  bool operator==(const ContextStats&) const = default;
};

// Word counts over the popularity keyword corpus. Drives familiarity.
struct PopStats {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t max_count = 0;

  std::uint64_t Count(std::string_view word) const;
  bool operator==(const PopStats&) const = default;
};

struct KeywordEntry {
  std::string keyword;
  std::uint64_t count = 1;
};

// Tokenizer settings a model was compiled under.
struct ModelFingerprint {
  std::string stopword_hash;
  std::size_t min_len = 3;
  bool operator==(const ModelFingerprint&) const = default;
};

struct FrequencyModel {
  static constexpr int kFormatVersion = 1;

  ContextStats context;
  PopStats pop;
  ModelFingerprint fingerprint;
  bool operator==(const FrequencyModel&) const = default;
};

// Throws Error(kEmptyCorpus) when `titles` is empty.
ContextStats BuildContextModel(std::span<const Title> titles);

// Multi-word keywords are split into tokens and every token is credited with
// the keyword's count. Throws Error(kEmptyCorpus) if no word survives, and
// Error(kMalformedInput) for a zero count.
PopStats BuildPopModel(std::span<const KeywordEntry> entries);

// ln((N+1)/(df+1)) / ln(N+1). Unseen words score 1.
double Novelty(std::string_view word, const ContextStats& ctx);

// ln(1+count) / ln(1+max_count). Unseen words score 0.
double Familiarity(std::string_view word, const PopStats& pop);

std::string SerializeModel(const FrequencyModel& model);
FrequencyModel DeserializeModel(std::string_view text);
void SaveModel(const FrequencyModel& model, const std::string& path);
FrequencyModel LoadModel(const std::string& path);

}  // namespace sticky
