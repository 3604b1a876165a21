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

#include "sticky/experiment_stats.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "sticky/distributions.h"
#include "sticky/errors.h"
#include "sticky/text_core.h"

namespace sticky {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void RequireTwo(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorCode::kTooFewObservations,
                "need at least 2 observations per group, got " +
                    std::to_string(n));
  }
}

double Mean(std::span<const double> values) {
  double sum = 0.0;
  for (const double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

// Fills t, p and the confidence interval once mean_diff, se_diff and df are
// known.
void FinishTTest(TTestResult& r) {
  if (r.se_diff > 0.0) {
    r.t = r.mean_diff / r.se_diff;
  } else if (r.mean_diff == 0.0) {
    r.t = 0.0;
  } else {
    r.t = r.mean_diff > 0.0 ? kInf : -kInf;
  }
  r.p_two_tailed = dist::StudentTTwoTailed(r.t, r.df);
  const double t_crit = dist::StudentTQuantile(0.975, r.df);
  r.ci95_lower = r.mean_diff - t_crit * r.se_diff;
  r.ci95_upper = r.mean_diff + t_crit * r.se_diff;
}

}  // namespace

GroupSummary GroupSummary::FromMoments(std::size_t n, double mean, double sd) {
  RequireTwo(n);
  return {n, mean, sd, sd / std::sqrt(static_cast<double>(n))};
}

GroupSummary Summarize(std::span<const double> values) {
  RequireTwo(values.size());
  const double mean = Mean(values);
  double ss = 0.0;
  for (const double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
  return GroupSummary::FromMoments(values.size(), mean, sd);
}

TTestResult PooledTTest(const GroupSummary& g1, const GroupSummary& g2) {
  RequireTwo(g1.n);
  RequireTwo(g2.n);
  const double n1 = static_cast<double>(g1.n);
  const double n2 = static_cast<double>(g2.n);
  TTestResult r;
  r.df = n1 + n2 - 2.0;
  const double pooled_var =
      ((n1 - 1.0) * g1.sd * g1.sd + (n2 - 1.0) * g2.sd * g2.sd) / r.df;
  r.mean_diff = g1.mean - g2.mean;
  r.se_diff = std::sqrt(pooled_var) * std::sqrt(1.0 / n1 + 1.0 / n2);
  FinishTTest(r);
  return r;
}

TTestResult WelchTTest(const GroupSummary& g1, const GroupSummary& g2) {
  RequireTwo(g1.n);
  RequireTwo(g2.n);
  const double n1 = static_cast<double>(g1.n);
  const double n2 = static_cast<double>(g2.n);
  const double v1 = g1.sd * g1.sd / n1;
  const double v2 = g2.sd * g2.sd / n2;
  TTestResult r;
  r.mean_diff = g1.mean - g2.mean;
  r.se_diff = std::sqrt(v1 + v2);
  const double denom = v1 * v1 / (n1 - 1.0) + v2 * v2 / (n2 - 1.0);
  r.df = denom > 0.0 ? (v1 + v2) * (v1 + v2) / denom : n1 + n2 - 2.0;
  FinishTTest(r);
  return r;
}

LeveneResult LeveneTest(std::span<const double> group1,
                        std::span<const double> group2) {
  RequireTwo(group1.size());
  RequireTwo(group2.size());
  auto deviations = [](std::span<const double> g) {
    const double m = Mean(g);
    std::vector<double> z;
    z.reserve(g.size());
    for (const double v : g) z.push_back(std::fabs(v - m));
    return z;
  };
  const std::vector<double> z1 = deviations(group1);
  const std::vector<double> z2 = deviations(group2);
  const double n1 = static_cast<double>(z1.size());
  const double n2 = static_cast<double>(z2.size());
  const double m1 = Mean(z1);
  const double m2 = Mean(z2);
  const double grand = (n1 * m1 + n2 * m2) / (n1 + n2);

  const double between =
      n1 * (m1 - grand) * (m1 - grand) + n2 * (m2 - grand) * (m2 - grand);
  double within = 0.0;
  for (const double z : z1) within += (z - m1) * (z - m1);
  for (const double z : z2) within += (z - m2) * (z - m2);

  LeveneResult r;
  r.df1 = 1.0;
  r.df2 = n1 + n2 - 2.0;
  if (within > 0.0) {
    r.f = (between / r.df1) / (within / r.df2);
  } else {
    r.f = between > 0.0 ? kInf : 0.0;
  }
  r.p = dist::FSurvival(r.f, r.df1, r.df2);
  return r;
}

std::string_view VariantName(Variant variant) {
  return variant == Variant::kOriginal ? "original" : "treatment";
}

double UesScore(const UesResponse& response,
                const std::set<std::size_t>& reverse_items) {
  if (response.items.empty()) {
    throw Error(ErrorCode::kMalformedInput,
                "response " + response.response_id + " has no items");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < response.items.size(); ++i) {
    const int x = response.items[i];
    if (x < 1 || x > 5) {
      throw Error(ErrorCode::kOutOfScale,
                  "response " + response.response_id + " item_" +
                      std::to_string(i + 1) + " = " + std::to_string(x));
    }
    sum += reverse_items.contains(i + 1) ? 6 - x : x;
  }
  return sum / static_cast<double>(response.items.size());
}

ExperimentReport AnalyzeExperiment(std::span<const UesResponse> responses,
                                   const std::set<std::size_t>& reverse_items) {
  if (responses.empty()) {
    throw Error(ErrorCode::kTooFewObservations, "response log has no rows");
  }
  std::vector<double> sel[2];
  std::vector<double> ues[2];
  for (const UesResponse& r : responses) {
    const int g = r.variant == Variant::kOriginal ? 0 : 1;
    sel[g].push_back(r.selected ? 1.0 : 0.0);
    ues[g].push_back(UesScore(r, reverse_items));
  }
  for (int g = 0; g < 2; ++g) {
    if (sel[g].empty()) {
      throw Error(ErrorCode::kMissingVariant,
                  "no responses for variant " +
                      std::string(VariantName(static_cast<Variant>(g))));
    }
  }

  ExperimentReport report;
  report.selection_original = Summarize(sel[0]);
  report.selection_treatment = Summarize(sel[1]);
  report.selection_levene = LeveneTest(sel[0], sel[1]);
  report.selection_pooled =
      PooledTTest(report.selection_original, report.selection_treatment);

  report.ues_original = Summarize(ues[0]);
  report.ues_treatment = Summarize(ues[1]);
  report.ues_levene = LeveneTest(ues[0], ues[1]);
  report.ues_pooled = PooledTTest(report.ues_original, report.ues_treatment);
  report.ues_welch = WelchTTest(report.ues_original, report.ues_treatment);
  return report;
}

namespace {

std::vector<std::string> SplitFields(const std::string& line, char delim) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, delim)) {
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    fields.push_back(first == std::string::npos
                         ? std::string()
                         : field.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == delim) fields.emplace_back();
  return fields;
}

[[noreturn]] void BadRow(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kMalformedInput,
              "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::vector<UesResponse> ParseResponseLog(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  char delim = ',';
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    delim = line.find('\t') != std::string::npos ? '\t' : ',';
    header = SplitFields(line, delim);
    break;
  }
  if (header.empty()) BadRow(line_no == 0 ? 1 : line_no, "missing header row");
  for (auto& h : header) h = ToLower(h);
  if (header.size() < 4 || header[0] != "response_id" ||
      header[1] != "variant" || header[2] != "selected") {
    BadRow(line_no,
           "header must be response_id, variant, selected, item_1..item_k");
  }
  for (std::size_t i = 3; i < header.size(); ++i) {
    if (header[i] != "item_" + std::to_string(i - 2)) {
      BadRow(line_no, "expected column item_" + std::to_string(i - 2) +
                          ", found '" + header[i] + "'");
    }
  }

  std::vector<UesResponse> responses;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::vector<std::string> f = SplitFields(line, delim);
    if (f.size() != header.size()) {
      BadRow(line_no, "expected " + std::to_string(header.size()) +
                          " fields, found " + std::to_string(f.size()));
    }
    UesResponse r;
    r.response_id = f[0];
    const std::string variant = ToLower(f[1]);
    if (variant == "original") {
      r.variant = Variant::kOriginal;
    } else if (variant == "treatment") {
      r.variant = Variant::kTreatment;
    } else {
      BadRow(line_no, "variant must be original or treatment");
    }
    if (f[2] == "1") {
      r.selected = true;
    } else if (f[2] != "0") {
      BadRow(line_no, "selected must be 0 or 1");
    }
    for (std::size_t i = 3; i < f.size(); ++i) {
      const std::string& v = f[i];
      if (v.size() != 1 || v[0] < '1' || v[0] > '5') {
        BadRow(line_no, header[i] + " must be an integer 1..5, found '" + v + "'");
      }
      r.items.push_back(v[0] - '0');
    }
    responses.push_back(std::move(r));
  }
  return responses;
}

}  // namespace sticky
