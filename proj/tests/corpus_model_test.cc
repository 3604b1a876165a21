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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracles.h"
#include "sticky/corpus_model.h"
#include "sticky/errors.h"
#include "test_support.h"

namespace sticky {
namespace {

std::vector<Title> Docs(std::initializer_list<const char*> texts) {
  std::vector<Title> out;
  for (const char* t : texts) out.push_back(Tokenize(t));
  return out;
}

TEST_CASE("context model counts documents, not occurrences") {
  const ContextStats s = BuildContextModel(Docs({"big data", "big ideas", "small data"}));
  CHECK(s.doc_count == 3);
  CHECK(s.DocFrequency("big") == 2);
  CHECK(s.DocFrequency("data") == 2);
  CHECK(s.DocFrequency("ideas") == 1);
  CHECK(s.DocFrequency("missing") == 0);

  const ContextStats one = BuildContextModel(Docs({"x"}));
  CHECK(one.doc_count == 1);
  CHECK(one.DocFrequency("x") == 1);

  const ContextStats dup = BuildContextModel(Docs({"data data DATA", "other"}));
  CHECK(dup.DocFrequency("data") == 1);
}

TEST_CASE("empty corpora are rejected") {
  CHECK_THROWS_AS(BuildContextModel({}), Error);
  try {
    BuildPopModel({});
    FAIL("expected EmptyCorpus");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyCorpus);
  }
  const std::vector<KeywordEntry> zero = {{"death", 0}};
  CHECK_THROWS_AS(BuildPopModel(zero), Error);
}

TEST_CASE("pop model sums repeats and splits phrases") {
  const std::vector<KeywordEntry> a = {{"death", 99}, {"hero", 9}};
  CHECK(BuildPopModel(a).max_count == 99);

  const std::vector<KeywordEntry> b = {{"death", 50}, {"death", 49}};
  CHECK(BuildPopModel(b).Count("death") == 99);

  const std::vector<KeywordEntry> c = {{"serial killer", 30}, {"killer", 5}, {"Serial", 1}};
  const PopStats pop = BuildPopModel(c);
  // Oracle: hand count over the split phrases.
  CHECK(pop.Count("serial") == 31);
  CHECK(pop.Count("killer") == 35);
  CHECK(pop.max_count == 35);
}

TEST_CASE("novelty formula values") {
  ContextStats ctx;
  ctx.doc_count = 9;
  ctx.df = {{"ubiquitous", 9}, {"some", 4}};
  CHECK(Novelty("unseen", ctx) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(Novelty("ubiquitous", ctx) == doctest::Approx(0.0));
  CHECK(Novelty("some", ctx) == doctest::Approx(0.30103).epsilon(1e-5));
  CHECK(Novelty("some", ctx) == doctest::Approx(std::log10(2.0)).epsilon(1e-14));
}

TEST_CASE("familiarity formula values") {
  PopStats pop;
  pop.counts = {{"top", 99}, {"mid", 9}};
  pop.max_count = 99;
  CHECK(Familiarity("absent", pop) == 0.0);
  CHECK(Familiarity("top", pop) == doctest::Approx(1.0));
  CHECK(Familiarity("mid", pop) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("property: df and scores match a brute-force counter") {
  const std::vector<std::string> vocab = {"alpha", "beta", "gamma", "delta",
                                          "eps",   "zeta", "eta",   "theta"};
  testing::Gen gen(11);
  for (int round = 0; round < 200; ++round) {
    const int n_docs = gen.Int(1, 10);
    std::vector<std::vector<std::string>> words(n_docs);
    std::vector<Title> titles;
    for (auto& doc : words) {
      std::string text;
      const int len = gen.Int(1, 8);
      for (int i = 0; i < len; ++i) {
        doc.push_back(gen.Word(vocab));
        text += (i ? " " : "") + doc.back();
      }
      titles.push_back(Tokenize(text));
    }
    const ContextStats ctx = BuildContextModel(titles);
    REQUIRE(ctx.doc_count == static_cast<std::size_t>(n_docs));
    for (const auto& w : vocab) {
      const std::size_t df = oracle::BruteForceDf(words, w);
      REQUIRE(ctx.DocFrequency(w) == df);
      REQUIRE(std::fabs(Novelty(w, ctx) - oracle::NoveltyFormula(n_docs, df)) <= 1e-12);
    }

    // Order independence.
    std::shuffle(titles.begin(), titles.end(), gen.rng());
    REQUIRE(BuildContextModel(titles) == ctx);
  }
}

TEST_CASE("property: monotone and bounded scores") {
  testing::Gen gen(12);
  for (int i = 0; i < 1000; ++i) {
    ContextStats ctx;
    ctx.doc_count = static_cast<std::size_t>(gen.Int(1, 100000));
    const auto df_a = static_cast<std::size_t>(gen.Int(0, static_cast<int>(ctx.doc_count)));
    const auto df_b = static_cast<std::size_t>(gen.Int(0, static_cast<int>(ctx.doc_count)));
    if (df_a) ctx.df["a"] = df_a;
    if (df_b) ctx.df["b"] = df_b;
    const double na = Novelty("a", ctx);
    const double nb = Novelty("b", ctx);
    REQUIRE(na >= 0.0);
    REQUIRE(na <= 1.0);
    if (df_a < df_b) REQUIRE(na > nb);
    if (df_a == df_b) REQUIRE(na == nb);

    PopStats pop;
    pop.max_count = static_cast<std::uint64_t>(gen.Int(1, 1000000));
    const auto ca = static_cast<std::uint64_t>(gen.Int(0, static_cast<int>(pop.max_count)));
    const auto cb = static_cast<std::uint64_t>(gen.Int(0, static_cast<int>(pop.max_count)));
    if (ca) pop.counts["a"] = ca;
    if (cb) pop.counts["b"] = cb;
    pop.counts["max"] = pop.max_count;
    const double fa = Familiarity("a", pop);
    const double fb = Familiarity("b", pop);
    REQUIRE(fa >= 0.0);
    REQUIRE(fa <= 1.0);
    if (ca < cb) REQUIRE(fa < fb);
    REQUIRE(std::fabs(fa - oracle::FamiliarityFormula(ca, pop.max_count)) <= 1e-12);
  }
}

TEST_CASE("model file round trip and validation") {
  FrequencyModel model;
  model.context = BuildContextModel(Docs({"big data", "big ideas", "small data"}));
  const std::vector<KeywordEntry> kw = {{"death", 99}, {"serial killer", 3}};
  model.pop = BuildPopModel(kw);
  model.fingerprint = {StopwordFingerprint(DefaultStopwords()), 3};

  const std::string text = SerializeModel(model);
  CHECK(text.find("\"format_version\": 1") != std::string::npos);
  CHECK(DeserializeModel(text) == model);
  CHECK(SerializeModel(DeserializeModel(text)) == text);

  CHECK_THROWS_AS(DeserializeModel("{}"), Error);
  CHECK_THROWS_AS(DeserializeModel("not json"), Error);
  std::string bad_version = text;
  bad_version.replace(bad_version.find("\"format_version\": 1"), 19,
                      "\"format_version\": 2");
  CHECK_THROWS_AS(DeserializeModel(bad_version), Error);
  CHECK_THROWS_AS(LoadModel("/nonexistent/model.json"), Error);
}

}  // namespace
}  // namespace sticky
