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

#ifndef MPKEX_TESTS_ORACLES_HPP_
#define MPKEX_TESTS_ORACLES_HPP_

// Independent reference implementations used only by tests. None of these
// share code paths with the library beyond the plain data types.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mpkex/candidates.hpp"
#include "mpkex/corpus.hpp"
#include "mpkex/graph.hpp"

namespace mpkex::testing {

using Rational = boost::multiprecision::cpp_rational;

// Sum of 1/|p - q| over all occurrence pairs, in exact arithmetic.
inline Rational exact_edge_weight(const std::vector<std::size_t>& a,
                                  const std::vector<std::size_t>& b) {
  Rational total = 0;
  for (std::size_t p : a) {
    for (std::size_t q : b) {
      const long long d = std::llabs(static_cast<long long>(p) - static_cast<long long>(q));
      total += Rational(1, d);
    }
  }
  return total;
}

inline Rational exact_jaccard_distance(const std::set<std::string>& a,
                                       const std::set<std::string>& b) {
  std::size_t common = 0;
  for (const auto& s : a) common += b.count(s);
  const std::size_t uni = a.size() + b.size() - common;
  return Rational(1) - Rational(static_cast<long long>(common), static_cast<long long>(uni));
}

// Textbook average-linkage agglomeration: every step rescans all cluster
// pairs and recomputes each linkage from scratch in exact arithmetic.
inline std::vector<std::vector<std::size_t>> naive_average_linkage(
    const std::vector<std::set<std::string>>& stem_sets, const Rational& cutoff) {
  std::vector<std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < stem_sets.size(); ++i) clusters.push_back({i});
  while (clusters.size() > 1) {
    bool found = false;
    Rational best;
    std::pair<std::size_t, std::size_t> best_key, best_pair;
    for (std::size_t x = 0; x < clusters.size(); ++x) {
      for (std::size_t y = 0; y < clusters.size(); ++y) {
        if (x == y) continue;
        Rational sum = 0;
        for (std::size_t i : clusters[x]) {
          for (std::size_t j : clusters[y]) sum += exact_jaccard_distance(stem_sets[i], stem_sets[j]);
        }
        const Rational avg = sum / Rational(static_cast<long long>(clusters[x].size() *
                                                                   clusters[y].size()));
        const std::size_t lo_x = *std::min_element(clusters[x].begin(), clusters[x].end());
        const std::size_t lo_y = *std::min_element(clusters[y].begin(), clusters[y].end());
        const std::pair<std::size_t, std::size_t> key{std::min(lo_x, lo_y), std::max(lo_x, lo_y)};
        if (!found || avg < best || (avg == best && key < best_key)) {
          found = true;
          best = avg;
          best_key = key;
          best_pair = {x, y};
        }
      }
    }
    if (best > cutoff) break;
    auto [x, y] = best_pair;
    if (x > y) std::swap(x, y);
    clusters[x].insert(clusters[x].end(), clusters[y].begin(), clusters[y].end());
    std::sort(clusters[x].begin(), clusters[x].end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(y));
  }
  std::sort(clusters.begin(), clusters.end());
  return clusters;
}

// Fixed point of the weighted TextRank recurrence, solved directly:
// (I - lambda * M) s = (1 - lambda) * 1 with M[i][j] = w(j, i) / out(j).
inline std::vector<double> dense_textrank(const WeightedDigraph& g, double lambda) {
  const std::size_t n = g.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    double out = 0.0;
    for (std::size_t k = 0; k < n; ++k) out += g.weight(j, k);
    for (std::size_t i = 0; i < n; ++i) {
      if (out > 0.0) a[i][j] = -lambda * g.weight(j, i) / out;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] += 1.0;
    a[i][n] = 1.0 - lambda;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = a[i][n] / a[i][i];
  return s;
}

// Ranking implied by oracle scores: descending, scores within `tie` of each
// other ordered by index.
inline std::vector<std::size_t> oracle_order(const std::vector<double>& s, double tie = 1e-9) {
  std::vector<std::size_t> idx(s.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (std::abs(s[a] - s[b]) > tie) return s[a] > s[b];
    return a < b;
  });
  return idx;
}

// Candidates with random stem sets (drawn from a small vocabulary, at most
// `max_words` stems each) and random disjoint single-word positions.
inline std::vector<Candidate> random_candidates(std::mt19937_64& rng, std::size_t n,
                                                std::size_t max_words = 3,
                                                std::size_t vocab = 6) {
  std::uniform_int_distribution<std::size_t> len(1, max_words);
  std::uniform_int_distribution<std::size_t> word(0, vocab - 1);
  std::uniform_int_distribution<std::size_t> occ(1, 3);
  std::uniform_int_distribution<std::size_t> gap(1, 12);
  std::vector<Candidate> cands(n);
  for (auto& c : cands) {
    const std::size_t l = len(rng);
    std::vector<std::string> words;
    for (std::size_t i = 0; i < l; ++i) words.push_back("w" + std::to_string(word(rng)));
    c.key.stems = words;
    for (const auto& w : words) c.key.joined += (c.key.joined.empty() ? "" : " ") + w;
    c.length = 1;
  }
  // Interleave occurrences: walk forward, hand each position to a candidate.
  std::vector<std::size_t> owners;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = occ(rng);
    for (std::size_t j = 0; j < k; ++j) owners.push_back(i);
  }
  // First occurrences in index order, remaining occurrences shuffled after.
  std::vector<std::size_t> rest(owners.begin(), owners.end());
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    order.push_back(i);
    rest.erase(std::find(rest.begin(), rest.end(), i));
  }
  std::shuffle(rest.begin(), rest.end(), rng);
  order.insert(order.end(), rest.begin(), rest.end());
  std::size_t pos = 0;
  for (std::size_t owner : order) {
    pos += gap(rng);
    cands[owner].positions.push_back(pos);
    cands[owner].surfaces.push_back(cands[owner].key.joined);
  }
  for (auto& c : cands) c.first_offset = c.positions.front();
  return cands;
}

inline std::vector<std::size_t> random_assignment(std::mt19937_64& rng, std::size_t n,
                                                  std::size_t max_topics) {
  std::uniform_int_distribution<std::size_t> t(0, max_topics - 1);
  std::vector<std::size_t> a(n);
  for (auto& x : a) x = t(rng);
  return a;
}

// A pre-tagged document of random sentences over a small word list, so
// candidates repeat and share stems.
inline Document random_document(std::mt19937_64& rng, std::size_t n_tokens,
                                const std::string& id = "rand") {
  static const std::vector<std::pair<std::string, std::string>> lexicon = {
      {"graph", "NN"},     {"graphs", "NNS"},    {"model", "NN"},     {"ranking", "NN"},
      {"topic", "NN"},     {"topics", "NNS"},    {"keyphrase", "NN"}, {"extraction", "NN"},
      {"weights", "NNS"},  {"candidate", "NN"},  {"document", "NN"},  {"large", "JJ"},
      {"random", "JJ"},    {"directed", "JJ"},   {"topical", "JJ"},   {"unsupervised", "JJ"},
      {"the", "DT"},       {"of", "IN"},         {"is", "VBZ"},       {"uses", "VBZ"},
      {"and", "CC"},       {"quickly", "RB"},    {"a", "DT"},         {"for", "IN"}};
  std::uniform_int_distribution<std::size_t> pick(0, lexicon.size() - 1);
  std::uniform_int_distribution<int> end_sentence(0, 11);
  Document doc;
  doc.id = id;
  std::size_t sentence = 0;
  for (std::size_t i = 0; i < n_tokens; ++i) {
    const auto& [w, p] = lexicon[pick(rng)];
    Token t;
    t.surface = w;
    t.pos_tag = p;
    t.coarse = map_pos(p, TagMap::penn());
    t.sentence_index = sentence;
    t.offset = i + 1;
    doc.tokens.push_back(t);
    if (end_sentence(rng) == 0) ++sentence;
  }
  return doc;
}

}  // namespace mpkex::testing

#endif  // MPKEX_TESTS_ORACLES_HPP_
