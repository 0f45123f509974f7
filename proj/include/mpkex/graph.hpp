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

#ifndef MPKEX_GRAPH_HPP_
#define MPKEX_GRAPH_HPP_

#include <cmath>
#include <cstdio>
#include <istream>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpkex/candidates.hpp"
#include "mpkex/topics.hpp"

namespace mpkex {

/// Dense directed graph over candidate indices. A weight of zero means no
/// edge; self-edges are never stored.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  explicit WeightedDigraph(std::size_t n) : n_(n), w_(n * n, 0.0) {}

  std::size_t size() const { return n_; }

  double weight(std::size_t from, std::size_t to) const { return w_[from * n_ + to]; }

  void set_weight(std::size_t from, std::size_t to, double w) {
    if (from == to) throw std::invalid_argument("WeightedDigraph: self-edge");
    w_[from * n_ + to] = w;
  }

  bool has_edge(std::size_t from, std::size_t to) const { return weight(from, to) > 0.0; }

  std::size_t edge_count() const {
    std::size_t count = 0;
    for (double w : w_) count += w > 0.0;
    return count;
  }

  double out_weight(std::size_t from) const {
    double total = 0.0;
    for (std::size_t to = 0; to < n_; ++to) total += weight(from, to);
    return total;
  }

  friend bool operator==(const WeightedDigraph&, const WeightedDigraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> w_;
};

enum class AdjustmentVariant {
  // w_ij += alpha * e^(1/p_i) * sum_{k in T(j)\{j}} w_ki
  Published,
  // w_ij += alpha * sum_{k in T(j)\{j}} w_kj
  Draft,
};

struct AdjustmentConfig {
  double alpha = 1.1;
  AdjustmentVariant variant = AdjustmentVariant::Published;
};

/// Picks the candidate to promote in each topic, given the topic's members
/// (sorted by first occurrence) and all candidates.
using PromotionHeuristic = std::function<std::size_t(
    const std::vector<std::size_t>& members, const std::vector<Candidate>& cands)>;

inline std::size_t promote_first_occurring(const std::vector<std::size_t>& members,
                                           const std::vector<Candidate>&) {
  return members.front();
}

/// Sum of inverse distances between every pair of occurrences. Terms are
/// summed in a canonical order so the result is exactly symmetric.
inline double edge_weight(const Candidate& x, const Candidate& y) {
  const bool swap = y.positions < x.positions;
  const Candidate& a = swap ? y : x;
  const Candidate& b = swap ? x : y;
  double total = 0.0;
  for (std::size_t pa : a.positions) {
    for (std::size_t pb : b.positions) {
      const std::size_t d = pa > pb ? pa - pb : pb - pa;
      if (d == 0) {
        throw std::logic_error("edge_weight: overlapping occurrences at offset " +
                               std::to_string(pa));
      }
      total += 1.0 / static_cast<double>(d);
    }
  }
  return total;
}

/// Complete directed k-partite graph: candidates in different topics are
/// joined in both directions by their inverse-distance weight.
inline WeightedDigraph build_multipartite(const std::vector<Candidate>& cands,
                                          const TopicPartition& topics) {
  if (topics.size() != cands.size()) {
    throw std::invalid_argument("build_multipartite: partition covers " +
                                std::to_string(topics.size()) + " candidates, expected " +
                                std::to_string(cands.size()));
  }
  WeightedDigraph g(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      if (topics.topic_of(i) == topics.topic_of(j)) continue;
      const double w = edge_weight(cands[i], cands[j]);
      g.set_weight(i, j, w);
      g.set_weight(j, i, w);
    }
  }
  return g;
}

/// Promotes one candidate per topic by inflating its incoming edges. All
/// right-hand-side weights come from the unadjusted graph, so the result does
/// not depend on the order in which topics are processed.
inline WeightedDigraph adjust_weights(
    const WeightedDigraph& g, const std::vector<Candidate>& cands,
    const TopicPartition& topics, const AdjustmentConfig& cfg,
    const PromotionHeuristic& promote = promote_first_occurring) {
  if (cfg.alpha < 0.0) throw std::invalid_argument("adjust_weights: alpha < 0");
  WeightedDigraph out = g;
  const std::size_t n = g.size();
  for (std::size_t t = 0; t < topics.k(); ++t) {
    const auto& members = topics.members(t);
    const std::size_t target = promote(members, cands);
    for (std::size_t i = 0; i < n; ++i) {
      if (!g.has_edge(i, target)) continue;
      double boost = 0.0;
      if (cfg.variant == AdjustmentVariant::Published) {
        double total = 0.0;
        for (std::size_t k : members) {
          if (k != target) total += g.weight(k, i);
        }
        boost = std::exp(1.0 / static_cast<double>(cands[i].first_offset)) * total;
      } else {
        for (std::size_t k : members) {
          if (k != target) boost += g.weight(k, target);
        }
      }
      out.set_weight(i, target, g.weight(i, target) + cfg.alpha * boost);
    }
  }
  return out;
}

/// Edge-list dump: a "k=<topics> n=<nodes>" header, then "i<TAB>j<TAB>weight"
/// per edge in row-major order.
inline void dump_graph(const WeightedDigraph& g, std::size_t k_topics, std::ostream& out) {
  out << "k=" << k_topics << " n=" << g.size() << '\n';
  const auto old_precision = out.precision(17);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g.has_edge(i, j)) out << i << '\t' << j << '\t' << g.weight(i, j) << '\n';
    }
  }
  out.precision(old_precision);
}

struct GraphDump {
  std::size_t k_topics = 0;
  WeightedDigraph graph;
};

inline GraphDump read_graph_dump(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("graph dump: empty input");
  std::size_t k = 0, n = 0;
  if (std::sscanf(header.c_str(), "k=%zu n=%zu", &k, &n) != 2) {
    throw std::runtime_error("graph dump: bad header '" + header + "'");
  }
  GraphDump dump{k, WeightedDigraph(n)};
  std::size_t i = 0, j = 0;
  double w = 0.0;
  while (in >> i >> j >> w) {
    if (i >= n || j >= n) throw std::runtime_error("graph dump: node index out of range");
    dump.graph.set_weight(i, j, w);
  }
  return dump;
}

}  // namespace mpkex

#endif  // MPKEX_GRAPH_HPP_
