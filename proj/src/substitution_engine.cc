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

#include "sticky/substitution_engine.h"

#include <algorithm>

#include "sticky/errors.h"

namespace sticky {

void Thesaurus::Add(std::string_view word, std::string_view synonym) {
  std::string key = ToLower(word);
  std::string value = ToLower(synonym);
  if (key.empty() || value.empty() || key == value) return;
  synonyms_[std::move(key)].insert(std::move(value));
}

const std::set<std::string>& Thesaurus::SynonymsOf(
    std::string_view word) const {
  static const std::set<std::string> kEmpty;
  const auto it = synonyms_.find(word);
  return it == synonyms_.end() ? kEmpty : it->second;
}

std::string_view ReviewStatusName(ReviewStatus status) {
  switch (status) {
    case ReviewStatus::kPending: return "Pending";
    case ReviewStatus::kAccepted: return "Accepted";
    case ReviewStatus::kRejected: return "Rejected";
  }
  return "Pending";
}

ReviewStatus ParseReviewStatus(std::string_view text) {
  const std::string lower = ToLower(text);
  if (lower == "pending") return ReviewStatus::kPending;
  if (lower == "accepted") return ReviewStatus::kAccepted;
  if (lower == "rejected") return ReviewStatus::kRejected;
  throw Error(ErrorCode::kMalformedInput,
              "unknown review status '" + std::string(text) + "'");
}

bool CandidateRanksBefore(const SubstitutionCandidate& a,
                          const SubstitutionCandidate& b) {
  if (a.delta != b.delta) return a.delta > b.delta;
  if (a.position != b.position) return a.position < b.position;
  return a.replacement < b.replacement;
}

std::vector<SubstitutionCandidate> GenerateCandidates(
    const Title& title, const Resources& resources) {
  resources.RequireAll();
  const FrequencyModel& model = *resources.model;
  const SentimentLexicon& lexicon = *resources.lexicon;
  const ScoreConfig& config = resources.config;
  const WordSet& stopwords =
      resources.stopwords ? *resources.stopwords : DefaultStopwords();

  std::vector<SubstitutionCandidate> out;
  for (const Token& token : title.tokens) {
    if (!IsContentWord(token, stopwords, config.min_len)) continue;
    const auto& synonyms = resources.thesaurus->SynonymsOf(token.normal);
    if (synonyms.empty()) continue;
    const StickyScore original =
        WordStickiness(token.normal, model, lexicon, config);
    for (const std::string& synonym : synonyms) {
      StickyScore replacement =
          WordStickiness(synonym, model, lexicon, config);
      if (!QualifiesAsSticky(replacement, config)) continue;
      SubstitutionCandidate c;
      c.title_id = title.id;
      c.position = token.position;
      c.original = token.normal;
      c.replacement = synonym;
      c.original_score = original;
      c.replacement_score = replacement;
      c.delta = replacement.composite - original.composite;
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), CandidateRanksBefore);
  return out;
}

Title ApplySubstitution(const Title& title,
                        const SubstitutionCandidate& candidate) {
  if (candidate.position >= title.tokens.size() ||
      title.tokens[candidate.position].normal != candidate.original) {
    throw Error(ErrorCode::kPositionOutOfRange,
                "position " + std::to_string(candidate.position) +
                    " does not address '" + candidate.original + "'");
  }
  const Token& target = title.tokens[candidate.position];
  if (ToLower(candidate.replacement) == target.normal) {
    throw Error(ErrorCode::kIdentityReplacement,
                "replacement equals original '" + target.normal + "'");
  }
  std::string raw;
  raw.reserve(title.raw.size() + candidate.replacement.size());
  for (std::size_t i = 0; i < title.tokens.size(); ++i) {
    raw += title.separators[i];
    raw += i == candidate.position
               ? ApplyCasing(candidate.replacement, target.casing)
               : title.tokens[i].surface;
  }
  raw += title.separators.back();
  return Tokenize(raw, title.id);
}

SubstitutionCandidate Review(SubstitutionCandidate candidate,
                             ReviewStatus decision) {
  if (decision == ReviewStatus::kPending) {
    throw Error(ErrorCode::kMalformedInput, "decision must be Accepted or Rejected");
  }
  if (candidate.status != ReviewStatus::kPending) {
    throw Error(ErrorCode::kAlreadyReviewed,
                "candidate already " +
                    std::string(ReviewStatusName(candidate.status)));
  }
  candidate.status = decision;
  return candidate;
}

}  // namespace sticky
