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

#include "foleval/metrics.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>

#include "foleval/syntax.h"

namespace foleval {
namespace {

bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool IsLower(char c) { return c >= 'a' && c <= 'z'; }
bool IsDigit(char c) { return c >= '0' && c <= '9'; }

uint32_t Fnv1a(std::string_view bytes) {
  uint32_t h = 2166136261u;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

std::vector<std::string> PredicateNames(const Formula& f) {
  std::set<std::string> names;
  for (const auto& [name, arity] : Predicates(f)) names.insert(name);
  return {names.begin(), names.end()};
}

}  // namespace

std::string_view LabelName(Label label) {
  switch (label) {
    case Label::kTrue:
      return "true";
    case Label::kFalse:
      return "false";
    case Label::kUncertain:
      return "uncertain";
    case Label::kCompileError:
      return "compile_error";
  }
  return "";
}

std::optional<Label> ParseLabel(std::string_view text) {
  std::string s;
  for (char c : text) {
    s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (s == "true") return Label::kTrue;
  if (s == "false") return Label::kFalse;
  if (s == "uncertain" || s == "unknown") return Label::kUncertain;
  if (s == "compile_error" || s == "compile-error") return Label::kCompileError;
  return std::nullopt;
}

std::string TrigramText(std::string_view name) {
  std::string split;
  for (size_t i = 0; i < name.size(); ++i) {
    const char c = name[i];
    if (i > 0 && IsUpper(c)) {
      const char prev = name[i - 1];
      const bool next_lower = i + 1 < name.size() && IsLower(name[i + 1]);
      if (IsLower(prev) || IsDigit(prev) || (IsUpper(prev) && next_lower)) {
        split += ' ';
      }
    }
    split += c == '_' ? ' ' : c;
  }
  std::string out = "#";
  for (char c : split) {
    if (c == ' ') {
      if (out.back() != ' ' && out.size() > 1) out += ' ';
      continue;
    }
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (out.size() > 1 && out.back() == ' ') out.pop_back();
  return out + "#";
}

std::vector<double> TrigramEmbedder::Embed(std::string_view name) const {
  std::vector<double> v(kDimension, 0.0);
  const std::string text = TrigramText(name);
  for (size_t i = 0; i + 3 <= text.size(); ++i) {
    v[Fnv1a(std::string_view(text).substr(i, 3)) % kDimension] += 1.0;
  }
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  if (norm > 0) {
    for (double& x : v) x /= norm;
  }
  return v;
}

double CosineSimilarity(std::span<const double> a, std::span<const double> b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

std::vector<int> MaxWeightAssignment(
    const std::vector<std::vector<double>>& weights) {
  const size_t rows = weights.size();
  size_t cols = 0;
  for (const auto& r : weights) cols = std::max(cols, r.size());
  const size_t n = std::max(rows, cols);
  if (n == 0) return {};
  double max_w = 0.0;
  for (const auto& r : weights) {
    for (double w : r) max_w = std::max(max_w, w);
  }
  auto cost = [&](size_t i, size_t j) {
    double w = (i < rows && j < weights[i].size()) ? weights[i][j] : 0.0;
    return max_w - w;
  };
  // Shortest augmenting path Hungarian algorithm, 1-based potentials.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<size_t> p(n + 1, 0), way(n + 1, 0);
  for (size_t i = 1; i <= n; ++i) {
    p[0] = i;
    size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const size_t i0 = p[j0];
      double delta = inf;
      size_t j1 = 0;
      for (size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> match(rows, -1);
  for (size_t j = 1; j <= n; ++j) {
    const size_t i = p[j] - 1;
    if (i < rows && j - 1 < weights[i].size()) {
      match[i] = static_cast<int>(j - 1);
    }
  }
  return match;
}

double PseScoreNames(std::vector<std::string> gold,
                     std::vector<std::string> pred,
                     const PredicateEmbedder& embedder) {
  std::sort(gold.begin(), gold.end());
  gold.erase(std::unique(gold.begin(), gold.end()), gold.end());
  std::sort(pred.begin(), pred.end());
  pred.erase(std::unique(pred.begin(), pred.end()), pred.end());
  if (gold.empty() && pred.empty()) return 1.0;
  // Fixed orientation makes the score exactly symmetric.
  if (gold.size() > pred.size() ||
      (gold.size() == pred.size() && pred < gold)) {
    std::swap(gold, pred);
  }
  std::vector<std::vector<double>> g_emb, p_emb;
  for (const auto& name : gold) g_emb.push_back(embedder.Embed(name));
  for (const auto& name : pred) p_emb.push_back(embedder.Embed(name));
  std::vector<std::vector<double>> sim(gold.size(),
                                       std::vector<double>(pred.size()));
  for (size_t i = 0; i < gold.size(); ++i) {
    for (size_t j = 0; j < pred.size(); ++j) {
      sim[i][j] = gold[i] == pred[j]
                      ? 1.0
                      : std::clamp(CosineSimilarity(g_emb[i], p_emb[j]), 0.0,
                                   1.0);
    }
  }
  const std::vector<int> match = MaxWeightAssignment(sim);
  double total = 0.0;
  for (size_t i = 0; i < gold.size(); ++i) {
    if (match[i] >= 0) total += sim[i][match[i]];
  }
  return std::clamp(
      total / static_cast<double>(std::max(gold.size(), pred.size())), 0.0,
      1.0);
}

double PseScore(const Formula& gold, const Formula& pred,
                const PredicateEmbedder& embedder) {
  return PseScoreNames(PredicateNames(gold), PredicateNames(pred), embedder);
}

PseResult PseScoreText(std::string_view gold, std::string_view pred,
                       const PredicateEmbedder& embedder) {
  ParseOutcome g = Parse(gold);
  ParseOutcome p = Parse(pred);
  if (!g.ok() || !p.ok()) return {0.0, true};
  return {PseScore(g.formula(), p.formula(), embedder), false};
}

ConvScoreBreakdown ConvScore(double swf, double pse, double le,
                             double lambda1) {
  ConvScoreBreakdown b;
  b.swf = swf;
  b.pse = pse;
  b.le = le;
  b.lambda1 = lambda1;
  b.lambda2 = 1.0 - lambda1;
  const double harmonic = swf + le == 0.0 ? 0.0 : 2.0 * swf * le / (swf + le);
  b.conv = std::clamp(b.lambda1 * harmonic + b.lambda2 * pse, 0.0, 1.0);
  return b;
}

double ReasonScore(Label predicted, Label gold, const ReasonWeights& w) {
  if (predicted == gold) return w.s_max;
  if (predicted == Label::kCompileError) return w.s_min;
  return w.s_mid;
}

std::vector<double> AverageRanks(std::span<const double> values) {
  std::vector<size_t> order(values.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (size_t i = 0; i < order.size();) {
    size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) {
      ++j;
    }
    const double rank = (static_cast<double>(i + j) / 2.0) + 1.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

SrhoResult SrhoScore(std::span<const double> conv,
                     std::span<const double> reason) {
  const size_t n = conv.size();
  if (n < 2 || reason.size() != n) return {0.0, true};
  const std::vector<double> rc = AverageRanks(conv);
  const std::vector<double> rr = AverageRanks(reason);
  auto has_ties = [](std::span<const double> r) {
    std::vector<double> s(r.begin(), r.end());
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) != s.end();
  };
  auto constant = [](std::span<const double> xs) {
    return std::all_of(xs.begin(), xs.end(),
                       [&](double x) { return x == xs[0]; });
  };
  if (constant(conv) || constant(reason)) return {0.0, true};
  if (!has_ties(conv) && !has_ties(reason)) {
    double d2 = 0.0;
    for (size_t i = 0; i < n; ++i) d2 += (rc[i] - rr[i]) * (rc[i] - rr[i]);
    const double nd = static_cast<double>(n);
    return {1.0 - 6.0 * d2 / (nd * (nd * nd - 1.0)), false};
  }
  const double mean = (static_cast<double>(n) + 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    sxy += (rc[i] - mean) * (rr[i] - mean);
    sxx += (rc[i] - mean) * (rc[i] - mean);
    syy += (rr[i] - mean) * (rr[i] - mean);
  }
  return {std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0), false};
}

}  // namespace foleval
