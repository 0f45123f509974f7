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

#ifndef MPKEX_TOPICS_HPP_
#define MPKEX_TOPICS_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpkex/candidates.hpp"

namespace mpkex {

/// Assignment of candidates to disjoint, non-empty topics. Candidate indices
/// refer to a first-offset-sorted candidate list, so sorting members by index
/// sorts them by first occurrence.
class TopicPartition {
 public:
  /// Builds a partition from a per-candidate topic id. Ids may be arbitrary
  /// non-negative integers; they are renumbered 0..k-1 in order of each
  /// topic's first member. Use this to inject an external topic decomposition.
  static TopicPartition from_assignment(const std::vector<std::size_t>& raw) {
    TopicPartition p;
    p.assignment_.resize(raw.size());
    std::vector<std::pair<std::size_t, std::size_t>> remap;  // raw id -> new id
    for (std::size_t i = 0; i < raw.size(); ++i) {
      auto it = std::find_if(remap.begin(), remap.end(),
                             [&](const auto& e) { return e.first == raw[i]; });
      std::size_t id;
      if (it == remap.end()) {
        id = remap.size();
        remap.emplace_back(raw[i], id);
        p.members_.emplace_back();
      } else {
        id = it->second;
      }
      p.assignment_[i] = id;
      p.members_[id].push_back(i);
    }
    return p;
  }

  static TopicPartition singletons(std::size_t n) {
    std::vector<std::size_t> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = i;
    return from_assignment(raw);
  }

  std::size_t k() const { return members_.size(); }
  std::size_t size() const { return assignment_.size(); }
  std::size_t topic_of(std::size_t candidate) const { return assignment_.at(candidate); }
  const std::vector<std::size_t>& assignment() const { return assignment_; }
  const std::vector<std::size_t>& members(std::size_t topic) const { return members_.at(topic); }
  const std::vector<std::vector<std::size_t>>& all_members() const { return members_; }

  friend bool operator==(const TopicPartition&, const TopicPartition&) = default;

 private:
  std::vector<std::size_t> assignment_;
  std::vector<std::vector<std::size_t>> members_;
};

/// Jaccard distance between the stem sets of two candidates.
inline double stem_set_distance(const Candidate& a, const Candidate& b) {
  const std::set<std::string> sa(a.key.stems.begin(), a.key.stems.end());
  const std::set<std::string> sb(b.key.stems.begin(), b.key.stems.end());
  if (sa.empty() || sb.empty()) {
    throw std::invalid_argument("stem_set_distance: empty stem set");
  }
  std::size_t common = 0;
  for (const auto& s : sa) common += sb.count(s);
  const std::size_t uni = sa.size() + sb.size() - common;
  return 1.0 - static_cast<double>(common) / static_cast<double>(uni);
}

/// How a user-facing threshold becomes a dendrogram distance cutoff.
inline double cutoff_from_tau(double tau, bool tau_is_similarity) {
  return tau_is_similarity ? 1.0 - tau : tau;
}

namespace detail {

// Average-linkage values closer than this are treated as equal, so that
// rounding noise from different summation orders cannot reorder merges.
inline constexpr double kLinkageTieEpsilon = 1e-12;

}  // namespace detail

/// Average-linkage agglomerative clustering over stem-set distance. Merges
/// continue while the closest pair of clusters is at most `cutoff` apart.
/// Among tied pairs, the pair whose lowest member indices are smallest
/// (compared as an ordered pair) merges first.
inline TopicPartition cluster_topics(const std::vector<Candidate>& cands, double cutoff) {
  const std::size_t n = cands.size();
  if (n == 0) throw std::invalid_argument("cluster_topics: no candidates");

  // sum[a][b]: total pairwise distance between clusters a and b.
  std::vector<std::vector<double>> sum(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      sum[i][j] = sum[j][i] = stem_set_distance(cands[i], cands[j]);
    }
  }
  // Cluster ids are the index of their lowest member; live clusters are
  // therefore visited in lowest-member order.
  std::vector<std::vector<std::size_t>> clusters(n);
  for (std::size_t i = 0; i < n; ++i) clusters[i] = {i};
  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;

  while (live.size() > 1) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_a = 0, best_b = 0;
    for (std::size_t x = 0; x < live.size(); ++x) {
      for (std::size_t y = x + 1; y < live.size(); ++y) {
        const std::size_t a = live[x], b = live[y];
        const double avg = sum[a][b] / static_cast<double>(clusters[a].size() *
                                                           clusters[b].size());
        // Strictly better beyond the tie band; lexicographic order of
        // (a, b) already favours the earlier pair on ties.
        if (avg < best - detail::kLinkageTieEpsilon) {
          best = avg;
          best_a = a;
          best_b = b;
        }
      }
    }
    if (best > cutoff + detail::kLinkageTieEpsilon) break;
    // Merge b into a (a < b keeps the lowest-member id invariant).
    for (std::size_t c : live) {
      if (c == best_a || c == best_b) continue;
      sum[best_a][c] += sum[best_b][c];
      sum[c][best_a] = sum[best_a][c];
    }
    auto& dst = clusters[best_a];
    dst.insert(dst.end(), clusters[best_b].begin(), clusters[best_b].end());
    std::sort(dst.begin(), dst.end());
    clusters[best_b].clear();
    live.erase(std::find(live.begin(), live.end(), best_b));
  }

  std::vector<std::size_t> raw(n);
  for (std::size_t c : live) {
    for (std::size_t m : clusters[c]) raw[m] = c;
  }
  return TopicPartition::from_assignment(raw);
}

}  // namespace mpkex

#endif  // MPKEX_TOPICS_HPP_
