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

#include "sticky/corpus_model.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sticky/errors.h"

namespace sticky {

std::size_t ContextStats::DocFrequency(std::string_view word) const {
  const auto it = df.find(std::string(word));
  return it == df.end() ? 0 : it->second;
}

std::uint64_t PopStats::Count(std::string_view word) const {
  const auto it = counts.find(std::string(word));
  return it == counts.end() ? 0 : it->second;
}

ContextStats BuildContextModel(std::span<const Title> titles) {
  if (titles.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "context corpus has no titles");
  }
  ContextStats stats;
  stats.doc_count = titles.size();
  for (const Title& title : titles) {
    std::set<std::string_view> seen;
    for (const Token& token : title.tokens) seen.insert(token.normal);
    for (const auto word : seen) ++stats.df[std::string(word)];
  }
  return stats;
}

PopStats BuildPopModel(std::span<const KeywordEntry> entries) {
  PopStats stats;
  for (const KeywordEntry& entry : entries) {
    if (entry.count == 0) {
      throw Error(ErrorCode::kMalformedInput,
                  "keyword '" + entry.keyword + "' has count 0");
    }
    for (const Token& token : Tokenize(entry.keyword).tokens) {
      stats.counts[token.normal] += entry.count;
    }
  }
  if (stats.counts.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "popularity corpus has no keywords");
  }
  for (const auto& [word, count] : stats.counts) {
    stats.max_count = std::max(stats.max_count, count);
  }
  return stats;
}

double Novelty(std::string_view word, const ContextStats& ctx) {
  const double n = static_cast<double>(ctx.doc_count);
  const double df = static_cast<double>(ctx.DocFrequency(word));
  // A single-document corpus has ln(N+1) = ln 2 > 0, so the ratio is defined
  // for every valid model.
  return std::log((n + 1.0) / (df + 1.0)) / std::log(n + 1.0);
}

double Familiarity(std::string_view word, const PopStats& pop) {
  const std::uint64_t count = pop.Count(word);
  if (count == 0 || pop.max_count == 0) return 0.0;
  return std::log1p(static_cast<double>(count)) /
         std::log1p(static_cast<double>(pop.max_count));
}

std::string SerializeModel(const FrequencyModel& model) {
  nlohmann::ordered_json doc;
  doc["format_version"] = FrequencyModel::kFormatVersion;
  doc["fingerprint"] = {{"stopword_hash", model.fingerprint.stopword_hash},
                        {"min_len", model.fingerprint.min_len}};
  doc["doc_count"] = model.context.doc_count;
  doc["df"] = model.context.df;
  doc["max_count"] = model.pop.max_count;
  doc["counts"] = model.pop.counts;
  return doc.dump(1) + "\n";
}

FrequencyModel DeserializeModel(std::string_view text) {
  FrequencyModel model;
  try {
    const auto doc = nlohmann::json::parse(text);
    const int version = doc.at("format_version").get<int>();
    if (version != FrequencyModel::kFormatVersion) {
      throw Error(ErrorCode::kMalformedInput,
                  "unsupported model format_version " + std::to_string(version));
    }
    const auto& fp = doc.at("fingerprint");
    model.fingerprint.stopword_hash = fp.at("stopword_hash").get<std::string>();
    model.fingerprint.min_len = fp.at("min_len").get<std::size_t>();
    model.context.doc_count = doc.at("doc_count").get<std::size_t>();
    model.context.df =
        doc.at("df").get<std::map<std::string, std::size_t>>();
    model.pop.max_count = doc.at("max_count").get<std::uint64_t>();
    model.pop.counts =
        doc.at("counts").get<std::map<std::string, std::uint64_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedInput,
                std::string("model file: ") + e.what());
  }
  if (model.context.doc_count == 0) {
    throw Error(ErrorCode::kEmptyCorpus, "model has doc_count 0");
  }
  for (const auto& [word, df] : model.context.df) {
    if (df == 0 || df > model.context.doc_count) {
      throw Error(ErrorCode::kMalformedInput, "df out of range for " + word);
    }
  }
  std::uint64_t max_count = 0;
  for (const auto& [word, count] : model.pop.counts) {
    if (count == 0) {
      throw Error(ErrorCode::kMalformedInput, "zero count for " + word);
    }
    max_count = std::max(max_count, count);
  }
  if (max_count != model.pop.max_count || max_count == 0) {
    throw Error(ErrorCode::kMalformedInput, "max_count inconsistent");
  }
  return model;
}

void SaveModel(const FrequencyModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << SerializeModel(model);
  if (!out.flush()) throw Error(ErrorCode::kIo, "write failed: " + path);
}

FrequencyModel LoadModel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kResourceMissing, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return DeserializeModel(buf.str());
}

}  // namespace sticky
