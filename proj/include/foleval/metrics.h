//
// Copyright 2026 The foleval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef FOLEVAL_METRICS_H_
#define FOLEVAL_METRICS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "foleval/formula.h"

namespace foleval {

enum class Label { kTrue, kFalse, kUncertain, kCompileError };

inline constexpr Label kAllLabels[] = {Label::kTrue, Label::kFalse,
                                       Label::kUncertain, Label::kCompileError};

std::string_view LabelName(Label label);

// Case-insensitive; accepts "unknown" for kUncertain and both
// "compile_error" and "compile-error".
std::optional<Label> ParseLabel(std::string_view text);

class PredicateEmbedder {
 public:
  virtual ~PredicateEmbedder() = default;
  // Unit-length vector; identical names give identical vectors.
  virtual std::vector<double> Embed(std::string_view name) const = 0;
};

// Bag of hashed character trigrams (FNV-1a, 512 buckets) over the name's
// lowercased words, padded with '#'.
class TrigramEmbedder : public PredicateEmbedder {
 public:
  static constexpr size_t kDimension = 512;

  std::vector<double> Embed(std::string_view name) const override;
};

// "HasCert" and "has_cert" both become "#has cert#".
std::string TrigramText(std::string_view name);

double CosineSimilarity(std::span<const double> a, std::span<const double> b);

// Maximum-weight one-to-one assignment. Returns, for each row, the matched
// column or -1.
std::vector<int> MaxWeightAssignment(
    const std::vector<std::vector<double>>& weights);

struct PseResult {
  double score = 0.0;
  bool parse_failed = false;
};

double PseScore(const Formula& gold, const Formula& pred,
                const PredicateEmbedder& embedder = TrigramEmbedder());
PseResult PseScoreText(std::string_view gold, std::string_view pred,
                       const PredicateEmbedder& embedder = TrigramEmbedder());

// Score over predicate name sets: matched cosine similarities (clamped to
// [0, 1]) summed and divided by max(|G|, |P|).
double PseScoreNames(std::vector<std::string> gold,
                     std::vector<std::string> pred,
                     const PredicateEmbedder& embedder = TrigramEmbedder());

struct ConvScoreBreakdown {
  double swf = 0.0;
  double pse = 0.0;
  double le = 0.0;
  double lambda1 = 0.5;
  double lambda2 = 0.5;
  double conv = 0.0;

  friend bool operator==(const ConvScoreBreakdown&,
                         const ConvScoreBreakdown&) = default;
};

inline constexpr double kDefaultLambda1 = 0.5;

ConvScoreBreakdown ConvScore(double swf, double pse, double le,
                             double lambda1 = kDefaultLambda1);

struct ReasonWeights {
  double s_max = 1.0;
  double s_mid = 0.5;
  double s_min = 0.0;
};

double ReasonScore(Label predicted, Label gold, const ReasonWeights& w = {});

// Ranks starting at 1; tied values share their average rank.
std::vector<double> AverageRanks(std::span<const double> values);

struct SrhoResult {
  double value = 0.0;
  // Fewer than two values, mismatched lengths, or a constant list.
  bool degenerate = false;
};

SrhoResult SrhoScore(std::span<const double> conv,
                     std::span<const double> reason);

}  // namespace foleval

#endif  // FOLEVAL_METRICS_H_
