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

#ifndef MPKEX_BASELINES_HPP_
#define MPKEX_BASELINES_HPP_

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpkex/candidates.hpp"
#include "mpkex/graph.hpp"
#include "mpkex/rank.hpp"
#include "mpkex/topics.hpp"

namespace mpkex {

enum class BaselineKind { SingleRank, SingleRankNormalized, TopicRank, TopicRankNoTopics };

/// Word co-occurrence graph over noun and adjective stems. Nodes are numbered
/// by first occurrence of the stem.
struct WordGraph {
  std::vector<std::string> stems;
  std::map<std::string, std::size_t> index;
  WeightedDigraph graph;
};

/// Two content words co-occur when their offsets differ by at most `window`,
/// counted over the whole token sequence. Each co-occurring token pair adds
/// one to the (symmetric) edge between their stems.
inline WordGraph build_word_graph(const Document& doc, std::size_t window) {
  if (window < 1) throw std::invalid_argument("build_word_graph: window must be positive");
  WordGraph wg;
  std::vector<std::size_t> content_offsets;
  std::vector<std::size_t> content_nodes;
  for (const auto& t : doc.tokens) {
    if (t.coarse != Coarse::Noun && t.coarse != Coarse::Adjective) continue;
    auto stem = stem_word(t.surface);
    auto [it, inserted] = wg.index.try_emplace(stem, wg.stems.size());
    if (inserted) wg.stems.push_back(stem);
    content_offsets.push_back(t.offset);
    content_nodes.push_back(it->second);
  }
  wg.graph = WeightedDigraph(wg.stems.size());
  for (std::size_t a = 0; a < content_offsets.size(); ++a) {
    for (std::size_t b = a + 1; b < content_offsets.size(); ++b) {
      if (content_offsets[b] - content_offsets[a] > window) break;
      const std::size_t u = content_nodes[a], v = content_nodes[b];
      if (u == v) continue;
      wg.graph.set_weight(u, v, wg.graph.weight(u, v) + 1.0);
      wg.graph.set_weight(v, u, wg.graph.weight(v, u) + 1.0);
    }
  }
  return wg;
}

struct ScoredCandidates {
  std::vector<RankedEntry> entries;  // candidate index, score; best first
  std::vector<std::size_t> topic;    // per entry; only set by topic ranking
  bool converged = true;
};

struct SingleRankResult {
  std::vector<double> word_scores;  // by WordGraph node
  ScoredCandidates ranking;
};

/// SingleRank: candidates score the sum (or mean, when `normalized`) of
/// their words' TextRank scores on the co-occurrence graph.
inline SingleRankResult singlerank_rank(const Document& doc, const std::vector<Candidate>& cands,
                                        std::size_t window, bool normalized,
                                        const TextRankConfig& cfg = {}) {
  SingleRankResult out;
  if (cands.empty()) return out;
  const WordGraph wg = build_word_graph(doc, window);
  const RankedList words = textrank(wg.graph, cfg);
  out.word_scores = words.scores;
  out.ranking.converged = words.converged;
  std::vector<double> scores(cands.size(), 0.0);
  for (std::size_t c = 0; c < cands.size(); ++c) {
    for (const auto& stem : cands[c].key.stems) scores[c] += words.scores[wg.index.at(stem)];
    if (normalized) scores[c] /= static_cast<double>(cands[c].key.stems.size());
  }
  out.ranking.entries = sort_by_score(scores);
  return out;
}

inline std::vector<std::string> singlerank(const Document& doc, std::size_t window,
                                           bool normalized, std::size_t n,
                                           PatternKind pattern = PatternKind::NaPlus) {
  const auto cands = extract_candidates(doc, pattern);
  std::vector<std::string> out;
  for (const auto& e : singlerank_rank(doc, cands, window, normalized).ranking.entries) {
    if (out.size() == n) break;
    out.push_back(display_form(cands[e.index]));
  }
  return out;
}

/// Topic graph: one node per topic, weighted by the summed inverse-distance
/// weights of all candidate pairs across the two topics.
inline WeightedDigraph build_topic_graph(const std::vector<Candidate>& cands,
                                         const TopicPartition& topics) {
  if (topics.size() != cands.size()) {
    throw std::invalid_argument("build_topic_graph: partition does not match candidates");
  }
  WeightedDigraph g(topics.k());
  for (std::size_t a = 0; a < topics.k(); ++a) {
    for (std::size_t b = a + 1; b < topics.k(); ++b) {
      double w = 0.0;
      for (std::size_t i : topics.members(a)) {
        for (std::size_t j : topics.members(b)) w += edge_weight(cands[i], cands[j]);
      }
      g.set_weight(a, b, w);
      g.set_weight(b, a, w);
    }
  }
  return g;
}

/// TopicRank ranks topics and emits each topic's first-occurring candidate.
/// Without topics it ranks candidates on the complete inverse-distance graph.
inline ScoredCandidates topicrank_rank(const std::vector<Candidate>& cands,
                                       const TopicPartition& topics, bool use_topics,
                                       const TextRankConfig& cfg = {}) {
  ScoredCandidates out;
  if (cands.empty()) return out;
  if (!use_topics) {
    const auto ranked =
        textrank(build_multipartite(cands, TopicPartition::singletons(cands.size())), cfg);
    out.entries = ranked.entries;
    out.converged = ranked.converged;
    return out;
  }
  // Topics are numbered by first member, so topic index order is the
  // first-occurrence tie-break as well.
  const auto ranked = textrank(build_topic_graph(cands, topics), cfg);
  out.converged = ranked.converged;
  for (const auto& e : ranked.entries) {
    out.entries.push_back({topics.members(e.index).front(), e.score});
    out.topic.push_back(e.index);
  }
  return out;
}

inline std::vector<std::string> topicrank(const std::vector<Candidate>& cands,
                                          const TopicPartition& topics, bool use_topics,
                                          std::size_t n) {
  std::vector<std::string> out;
  for (const auto& e : topicrank_rank(cands, topics, use_topics).entries) {
    if (out.size() == n) break;
    out.push_back(display_form(cands[e.index]));
  }
  return out;
}

inline std::vector<std::string> topicrank(const Document& doc, const TopicPartition& topics,
                                          bool use_topics, std::size_t n,
                                          PatternKind pattern = PatternKind::NaPlus) {
  return topicrank(extract_candidates(doc, pattern), topics, use_topics, n);
}

}  // namespace mpkex

#endif  // MPKEX_BASELINES_HPP_
