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
#include <vector>

#include "sticky/resources.h"
#include "sticky/stickiness_scorer.h"
#include "sticky/text_core.h"

namespace sticky {

enum class ReviewStatus { kPending, kAccepted, kRejected };

std::string_view ReviewStatusName(ReviewStatus status);
// Throws Error(kMalformedInput) for anything but Pending/Accepted/Rejected
// (case-insensitive).
ReviewStatus ParseReviewStatus(std::string_view text);

// A proposal to replace the content word at `position` with `replacement`.
struct SubstitutionCandidate {
  std::string title_id;
  std::size_t position = 0;
  std::string original;
  std::string replacement;
  StickyScore original_score;
  StickyScore replacement_score;
  double delta = 0.0;  // replacement composite - original composite
  ReviewStatus status = ReviewStatus::kPending;
};

// Total order used for ranking: delta descending, then position ascending,
// then replacement ascending.
bool CandidateRanksBefore(const SubstitutionCandidate& a,
                          const SubstitutionCandidate& b);

// One candidate per (content word, sticky synonym) pair, ranked by
// CandidateRanksBefore. Throws Error(kResourceMissing) if the model, lexicon
// or thesaurus is absent.
std::vector<SubstitutionCandidate> GenerateCandidates(
    const Title& title, const Resources& resources);

// Returns the treatment variant: the addressed token is replaced with
// `candidate.replacement`, re-cased to match the original token. Every other
// byte of the title is preserved.
// Throws Error(kPositionOutOfRange) if the position does not address
// `candidate.original`, and Error(kIdentityReplacement) if the replacement
// equals the original word.
Title ApplySubstitution(const Title& title,
                        const SubstitutionCandidate& candidate);

// Pending -> Accepted or Pending -> Rejected. Throws Error(kAlreadyReviewed)
// if the candidate is not Pending, and Error(kMalformedInput) if `decision`
// is Pending.
SubstitutionCandidate Review(SubstitutionCandidate candidate,
                             ReviewStatus decision);

}  // namespace sticky
