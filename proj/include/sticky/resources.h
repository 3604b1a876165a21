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
#include <string_view>
#include <vector>

#include "sticky/corpus_model.h"
#include "sticky/sentiment_lex.h"
#include "sticky/stickiness_scorer.h"
#include "sticky/text_core.h"
#include "sticky/thesaurus.h"

namespace sticky {

// Immutable resources shared by scoring, candidate generation and the review
// service. A null pointer means the resource was not loaded.
struct Resources {
  std::shared_ptr<const FrequencyModel> model;
  std::shared_ptr<const SentimentLexicon> lexicon;
  std::shared_ptr<const Thesaurus> thesaurus;
  std::shared_ptr<const WordSet> stopwords;
  ScoreConfig config;

  // Throws Error(kResourceMissing) naming the first absent resource.
  void RequireScoring() const;
  void RequireAll() const;
};

// Parsers for the on-disk formats. Each throws Error(kMalformedInput) with
// the 1-based line number of the first bad line.

// One title per line, or one JSON object {"id": ..., "text": ...} per line.
// Blank lines are skipped; plain lines get id "<line number>".
std::vector<Title> ParseTitles(std::string_view text);

// `keyword<TAB>count`, count optional (default 1).
std::vector<KeywordEntry> ParseKeywords(std::string_view text);

// `word<TAB>valence`; '#' comments.
SentimentLexicon ParseLexicon(std::string_view text,
                              double neutral_band =
                                  SentimentLexicon::kDefaultNeutralBand);

// `word<TAB>syn1,syn2,...`; '#' comments.
Thesaurus ParseThesaurus(std::string_view text);

// Reads a whole file. Throws Error(kResourceMissing) naming the path.
std::string ReadFile(const std::string& path);

}  // namespace sticky
