// Copyright 2026 The mpkex Authors.
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

#ifndef MPKEX_RANK_HPP_
#define MPKEX_RANK_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpkex/candidates.hpp"
#include "mpkex/graph.hpp"

namespace mpkex {

struct TextRankConfig {
  double lambda = 0.85;  // damping factor
  double tol = 1e-8;     // max per-node change that counts as converged
  std::size_t max_iter = 1000;
};

struct RankedEntry {
  std::size_t index;
  double score;
};

struct RankedList {
  std::vector<RankedEntry> entries;  // score descending, then index ascending
  std::vector<double> scores;        // by node index
  std::size_t iterations_used = 0;
  bool converged = false;
};

/// Orders node indices by score descending; equal scores keep index order.
inline std::vector<RankedEntry> sort_by_score(std::span<const double> scores) {
  std::vector<RankedEntry> entries;
  entries.reserve(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) entries.push_back({i, scores[i]});
  std::stable_sort(entries.begin(), entries.end(),
                   [](const RankedEntry& a, const RankedEntry& b) { return a.score > b.score; });
  return entries;
}

/// Weighted TextRank:
///
///   S(i) = (1 - lambda) + lambda * sum_{j -> i} w(j, i) / out(j) * S(j)
///
/// iterated with simultaneous (Jacobi) updates from S = 1. Nodes without
/// outgoing weight pass nothing on. Node index order is the tie-break, so
/// callers index candidates by first occurrence.
inline RankedList textrank(const WeightedDigraph& g, const TextRankConfig& cfg = {},
                           std::optional<std::span<const double>> initial = std::nullopt) {
  const std::size_t n = g.size();
  if (n == 0) throw std::invalid_argument("textrank: empty graph");
  if (!(cfg.lambda > 0.0 && cfg.lambda < 1.0)) {
    throw std::invalid_argument("textrank: lambda must lie in (0, 1)");
  }
  if (initial && initial->size() != n) {
    throw std::invalid_argument("textrank: initial score vector has wrong size");
  }

  std::vector<double> out_weight(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const double w = g.weight(j, k);
      if (!std::isfinite(w)) {
        throw std::domain_error("textrank: non-finite weight on edge " + std::to_string(j) +
                                " -> " + std::to_string(k));
      }
      out_weight[j] += w;
    }
  }

  // Per-node predecessor lists with normalized transfer coefficients, in
  // increasing predecessor order so every sum has a fixed evaluation order.
  struct InEdge {
    std::size_t from;
    double coeff;
  };
  std::vector<std::vector<InEdge>> incoming(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (out_weight[j] <= 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const double w = g.weight(j, i);
      if (w > 0.0) incoming[i].push_back({j, w / out_weight[j]});
    }
  }

  RankedList result;
  std::vector<double> cur = initial ? std::vector<double>(initial->begin(), initial->end())
                                    : std::vector<double>(n, 1.0);
  std::vector<double> next(n);
  for (std::size_t iter = 1; iter <= cfg.max_iter; ++iter) {
    double max_delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (const auto& e : incoming[i]) acc += e.coeff * cur[e.from];
      next[i] = (1.0 - cfg.lambda) + cfg.lambda * acc;
      max_delta = std::max(max_delta, std::abs(next[i] - cur[i]));
    }
    cur.swap(next);
    result.iterations_used = iter;
    if (max_delta < cfg.tol) {
      result.converged = true;
      break;
    }
  }
  result.entries = sort_by_score(cur);
  result.scores = std::move(cur);
  return result;
}

/// Surface form of a candidate's first occurrence, lowercased.
inline std::string display_form(const Candidate& c) { return to_lower_ascii(c.surfaces.front()); }

/// The first `n` ranked candidates as keyphrase strings.
inline std::vector<std::string> select_top(const RankedList& ranked,
                                           const std::vector<Candidate>& cands, std::size_t n) {
  if (n == 0) throw std::invalid_argument("select_top: n must be positive");
  std::vector<std::string> out;
  for (const auto& e : ranked.entries) {
    if (out.size() == n) break;
    out.push_back(display_form(cands.at(e.index)));
  }
  return out;
}

}  // namespace mpkex

#endif  // MPKEX_RANK_HPP_
