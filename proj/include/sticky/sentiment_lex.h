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

#include <string>
#include <string_view>
#include <unordered_map>

namespace sticky {

enum class PolarityLabel { kPositive, kNegative, kNeutral };

std::string_view PolarityLabelName(PolarityLabel label);

struct Polarity {
  PolarityLabel label = PolarityLabel::kNeutral;
  double valence = 0.0;
};

// Word-level valence lexicon. Valences lie in [-1, 1]; |valence| <= band is
// Neutral.
struct SentimentLexicon {
  static constexpr double kDefaultNeutralBand = 0.05;

  std::unordered_map<std::string, double> scores;
  double neutral_band = kDefaultNeutralBand;

  // Throws Error(kMalformedInput) if valence is outside [-1, 1].
  void Set(std::string word, double valence);
};

// Unknown words are Neutral with valence 0.
Polarity ClassifyPolarity(std::string_view word, const SentimentLexicon& lexicon);

}  // namespace sticky
