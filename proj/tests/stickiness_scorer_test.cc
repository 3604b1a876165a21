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

#include <cmath>

#include "doctest.h"
#include "sticky/errors.h"
#include "sticky/stickiness_scorer.h"
#include "sticky/substitution_engine.h"
#include "test_support.h"

namespace sticky {
namespace {

TEST_CASE("composite score cases") {
  CHECK(CompositeScore(1.0, 1.0, PolarityLabel::kPositive, true) == 1.0);
  CHECK(CompositeScore(0.9, 0.9, PolarityLabel::kNeutral, true) == 0.0);
  CHECK(CompositeScore(0.5, 0.5, PolarityLabel::kNegative, true) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(CompositeScore(0.25, 1.0, PolarityLabel::kNeutral, false) ==
        doctest::Approx(0.5));
}

TEST_CASE("property: composite is monotone and vanishes with either input") {
  testing::Gen gen(31);
  for (int i = 0; i < 1000; ++i) {
    const double f = gen.Real(0, 1);
    const double n = gen.Real(0, 1);
    const double f2 = gen.Real(f, 1);
    const double n2 = gen.Real(n, 1);
    const auto label = static_cast<PolarityLabel>(gen.Int(0, 2));
    const bool gate = gen.Int(0, 1) == 1;
    const double c = CompositeScore(f, n, label, gate);
    REQUIRE(c >= 0.0);
    REQUIRE(c <= 1.0);
    REQUIRE(CompositeScore(f2, n, label, gate) >= c);
    REQUIRE(CompositeScore(f, n2, label, gate) >= c);
    REQUIRE(CompositeScore(0.0, n, label, gate) == 0.0);
    REQUIRE(CompositeScore(f, 0.0, label, gate) == 0.0);
  }
}

TEST_CASE("word stickiness on fixture resources") {
  const Resources r = testing::FixtureResources();
  const StickyScore death = WordStickiness("death", *r.model, *r.lexicon, r.config);
  CHECK(death.familiarity == doctest::Approx(1.0));
  CHECK(death.novelty == doctest::Approx(1.0));
  CHECK(death.polarity.label == PolarityLabel::kNegative);
  CHECK(death.composite == doctest::Approx(1.0));
  CHECK(QualifiesAsSticky(death, r.config));

  const StickyScore end = WordStickiness("end", *r.model, *r.lexicon, r.config);
  CHECK(end.composite == 0.0);
  CHECK_FALSE(QualifiesAsSticky(end, r.config));

  ScoreConfig loose = r.config;
  loose.require_emotive = false;
  const StickyScore end_loose = WordStickiness("end", *r.model, *r.lexicon, loose);
  CHECK(end_loose.composite ==
        doctest::Approx(std::sqrt(end_loose.familiarity * end_loose.novelty)));
}

TEST_CASE("title score is the max over content words") {
  const Resources r = testing::FixtureResources();
  const WordSet& stop = *r.stopwords;
  CHECK(TitleScore(Tokenize("of the and"), *r.model, *r.lexicon, stop, r.config) == 0.0);
  CHECK(TitleScore(Tokenize(""), *r.model, *r.lexicon, stop, r.config) == 0.0);

  const double hero = WordStickiness("hero", *r.model, *r.lexicon, r.config).composite;
  CHECK(TitleScore(Tokenize("the hero"), *r.model, *r.lexicon, stop, r.config) == hero);

  const TitleAnalysis a =
      AnalyzeTitle(Tokenize("End of the library"), *r.model, *r.lexicon, stop, r.config);
  REQUIRE(a.words.size() == 2);
  CHECK(a.words[0].word == "end");
  CHECK(a.words[1].word == "library");
  CHECK(a.title_score == std::max(a.words[0].score.composite, a.words[1].score.composite));
}

TEST_CASE("treatment titles of argmax-word candidates never score lower") {
  const Resources r = testing::FixtureResources();
  for (const Title& title : testing::GoldenOriginals()) {
    const TitleAnalysis before =
        AnalyzeTitle(title, *r.model, *r.lexicon, *r.stopwords, r.config);
    for (const auto& c : GenerateCandidates(title, r)) {
      const Title treated = ApplySubstitution(title, c);
      const double after =
          TitleScore(treated, *r.model, *r.lexicon, *r.stopwords, r.config);
      const bool argmax = c.original_score.composite == before.title_score;
      if (c.delta >= 0 && argmax) CHECK(after >= before.title_score);
      CHECK(after >= c.replacement_score.composite);
    }
  }
}

TEST_CASE("config file parsing") {
  const ScoreConfig c = ParseScoreConfig(
      R"({"theta_f": 0.4, "require_emotive": false, "min_len": 4})");
  CHECK(c.theta_f == 0.4);
  CHECK(c.theta_n == 0.3);
  CHECK_FALSE(c.require_emotive);
  CHECK(c.min_len == 4);
  CHECK_THROWS_AS(ParseScoreConfig(R"({"theta_n": 1.5})"), Error);
  CHECK_THROWS_AS(ParseScoreConfig(R"([1, 2])"), Error);
  CHECK_THROWS_AS(ParseScoreConfig(R"({"theta_f": "high"})"), Error);
}

}  // namespace
}  // namespace sticky
