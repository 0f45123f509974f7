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

#ifndef MPKEX_PIPELINE_HPP_
#define MPKEX_PIPELINE_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "json.hpp"
#include "mpkex/baselines.hpp"
#include "mpkex/candidates.hpp"
#include "mpkex/corpus.hpp"
#include "mpkex/eval.hpp"
#include "mpkex/graph.hpp"
#include "mpkex/rank.hpp"
#include "mpkex/topics.hpp"

namespace mpkex {

enum class Model { Multipartite, SingleRank, SingleRankNormalized, TopicRank, TopicRankNoTopics };

struct RunConfig {
  Model model = Model::Multipartite;
  double alpha = 1.1;
  double tau = 0.9;
  bool tau_is_similarity = false;
  AdjustmentVariant variant = AdjustmentVariant::Published;
  PatternKind pattern = PatternKind::NaPlus;
  std::size_t top_n = 10;
  double lambda = 0.85;
  std::size_t window = 10;
  bool strict_at_k = false;
  std::size_t threads = 1;

  double cutoff() const { return cutoff_from_tau(tau, tau_is_similarity); }
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void validate(const RunConfig& cfg) {
  if (!(cfg.alpha >= 0.0)) throw ConfigError("alpha must be >= 0");
  if (!(cfg.tau >= 0.0 && cfg.tau <= 1.0)) throw ConfigError("tau must lie in [0, 1]");
  if (cfg.top_n < 1) throw ConfigError("top-n must be positive");
  if (!(cfg.lambda > 0.0 && cfg.lambda < 1.0)) throw ConfigError("lambda must lie in (0, 1)");
  if (cfg.window < 1) throw ConfigError("window must be positive");
  if (cfg.threads < 1) throw ConfigError("threads must be positive");
}

inline std::string_view model_name(Model m) {
  switch (m) {
    case Model::Multipartite: return "multipartite";
    case Model::SingleRank: return "single_rank";
    case Model::SingleRankNormalized: return "single_rank_normalized";
    case Model::TopicRank: return "topic_rank";
    case Model::TopicRankNoTopics: return "topic_rank_no_topics";
  }
  return "unknown";
}

struct Keyphrase {
  std::string phrase;
  double score = 0.0;
  std::size_t topic = 0;
  std::size_t candidate = 0;
};

struct DocumentResult {
  std::string id;
  std::vector<Candidate> candidates;
  std::optional<TopicPartition> topics;  // empty when there are no candidates
  std::vector<Keyphrase> ranking;        // every ranked candidate, best first
  std::optional<WeightedDigraph> graph;  // the ranked graph, multipartite model only
  bool converged = true;

  std::size_t k_topics() const { return topics ? topics->k() : 0; }

  std::vector<std::string> phrases(std::size_t limit = SIZE_MAX) const {
    std::vector<std::string> out;
    for (const auto& k : ranking) {
      if (out.size() == limit) break;
      out.push_back(k.phrase);
    }
    return out;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (const auto& k : ranking) out.push_back(k.candidate);
    return out;
  }
};

/// Runs the configured model on one document. Every model reports topics
/// from the same clustering so coverage is comparable across models.
inline DocumentResult run_document(const Document& doc, const RunConfig& cfg) {
  DocumentResult res;
  res.id = doc.id;
  res.candidates = extract_candidates(doc, cfg.pattern);
  if (res.candidates.empty()) return res;
  const auto& cands = res.candidates;
  res.topics = cluster_topics(cands, cfg.cutoff());
  const TopicPartition& topics = *res.topics;
  const TextRankConfig trc{.lambda = cfg.lambda};

  std::vector<RankedEntry> entries;
  switch (cfg.model) {
    case Model::Multipartite: {
      auto g = adjust_weights(build_multipartite(cands, topics), cands, topics,
                              AdjustmentConfig{cfg.alpha, cfg.variant});
      auto ranked = textrank(g, trc);
      entries = std::move(ranked.entries);
      res.converged = ranked.converged;
      res.graph = std::move(g);
      break;
    }
    case Model::SingleRank:
    case Model::SingleRankNormalized: {
      auto sr = singlerank_rank(doc, cands, cfg.window,
                                cfg.model == Model::SingleRankNormalized, trc);
      entries = std::move(sr.ranking.entries);
      res.converged = sr.ranking.converged;
      break;
    }
    case Model::TopicRank:
    case Model::TopicRankNoTopics: {
      auto tr = topicrank_rank(cands, topics, cfg.model == Model::TopicRank, trc);
      entries = std::move(tr.entries);
      res.converged = tr.converged;
      break;
    }
  }
  for (const auto& e : entries) {
    res.ranking.push_back(
        {display_form(cands[e.index]), e.score, topics.topic_of(e.index), e.index});
  }
  return res;
}

/// Runs every document on `threads` workers; results come back in input order.
inline std::vector<DocumentResult> run_corpus(const std::vector<Document>& docs,
                                              const RunConfig& cfg) {
  std::vector<DocumentResult> results(docs.size());
  std::vector<std::exception_ptr> errors(docs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < docs.size(); i = next++) {
      try {
        results[i] = run_document(docs[i], cfg);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n_workers = std::max<std::size_t>(1, std::min(cfg.threads, docs.size()));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n_workers; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

/// One line of extraction output, truncated to `top_n` keyphrases.
inline nlohmann::ordered_json extraction_json(const DocumentResult& r, std::size_t top_n) {
  nlohmann::ordered_json kps = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.ranking.size() && i < top_n; ++i) {
    const auto& k = r.ranking[i];
    kps.push_back({{"phrase", k.phrase}, {"score", k.score}, {"topic", k.topic}});
  }
  return {{"id", r.id}, {"keyphrases", std::move(kps)}, {"k_topics", r.k_topics()},
          {"converged", r.converged}};
}

struct CorpusEvaluation {
  std::vector<std::string> ids;  // sorted
  std::vector<DocScore> per_doc;
  CorpusScore corpus;
};

/// Scores results against gold, folding in document-id order. Every result id
/// must have gold references; the caller checks coverage first.
inline CorpusEvaluation evaluate_results(const std::vector<DocumentResult>& results,
                                         const GoldReferences& gold, bool strict_at_k) {
  std::vector<const DocumentResult*> sorted;
  for (const auto& r : results) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return a->id < b->id; });
  CorpusEvaluation ev;
  EvalConfig ecfg;
  ecfg.strict_at_k = strict_at_k;
  for (const auto* r : sorted) {
    ev.ids.push_back(r->id);
    ev.per_doc.push_back(score_document(r->phrases(), r->indices(),
                                        r->topics ? &*r->topics : nullptr,
                                        gold.by_doc.at(r->id), ecfg));
  }
  ev.corpus = macro_average(ev.per_doc);
  return ev;
}

inline std::vector<std::string> missing_gold(const std::vector<Document>& docs,
                                             const GoldReferences& gold) {
  std::vector<std::string> missing;
  for (const auto& d : docs) {
    if (!gold.by_doc.contains(d.id)) missing.push_back(d.id);
  }
  return missing;
}

inline nlohmann::ordered_json params_json(const RunConfig& cfg) {
  return {{"model", model_name(cfg.model)},
          {"alpha", cfg.alpha},
          {"tau", cfg.tau},
          {"tau_is_similarity", cfg.tau_is_similarity},
          {"cutoff", cfg.cutoff()},
          {"variant", cfg.variant == AdjustmentVariant::Published ? "published" : "draft"},
          {"pattern", cfg.pattern == PatternKind::NaPlus ? "na_plus" : "adj_star_noun_plus"},
          {"top_n", cfg.top_n},
          {"lambda", cfg.lambda},
          {"window", cfg.window},
          {"strict_at_k", cfg.strict_at_k}};
}

inline nlohmann::ordered_json report_json(const CorpusEvaluation& ev, const RunConfig& cfg) {
  nlohmann::ordered_json per_doc = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < ev.ids.size(); ++i) per_doc[ev.ids[i]] = to_json(ev.per_doc[i]);
  nlohmann::ordered_json macro = to_json(ev.corpus.macro);
  macro["documents"] = ev.corpus.documents;
  return {{"per_doc", std::move(per_doc)}, {"macro", std::move(macro)},
          {"params", params_json(cfg)}};
}

/// Values to sweep; an empty list means "use the base configuration".
struct GridSpec {
  std::vector<double> alpha;
  std::vector<double> cutoff;  // interpreted like the --tau flag
};

/// Parses "alpha=0,1.1;cutoff=0.7,0.9". Either key may be omitted.
inline GridSpec parse_grid(std::string_view spec) {
  GridSpec grid;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t end = spec.find(';', pos);
    if (end == std::string_view::npos) end = spec.size();
    const auto item = spec.substr(pos, end - pos);
    pos = end + 1;
    if (item.find_first_not_of(" \t") == std::string_view::npos) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ConfigError("grid: expected key=values");
    const auto key = normalize_phrase(item.substr(0, eq));
    std::vector<double>* target = nullptr;
    if (key == "alpha") {
      target = &grid.alpha;
    } else if (key == "cutoff" || key == "tau") {
      target = &grid.cutoff;
    } else {
      throw ConfigError("grid: unknown parameter '" + key + "'");
    }
    const std::string values(item.substr(eq + 1));
    std::size_t vpos = 0;
    while (vpos <= values.size()) {
      std::size_t vend = values.find(',', vpos);
      if (vend == std::string::npos) vend = values.size();
      const auto field = normalize_phrase(values.substr(vpos, vend - vpos));
      vpos = vend + 1;
      if (field.empty()) throw ConfigError("grid: empty value for '" + key + "'");
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(field, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != field.size()) throw ConfigError("grid: bad number '" + field + "'");
      target->push_back(v);
    }
  }
  return grid;
}

struct SweepRow {
  double alpha;
  double cutoff;
  double f1_at_5;
  double f1_at_10;
  double map;
};

/// Evaluates the Cartesian grid, best F1@10 first (then alpha, then cutoff).
inline std::vector<SweepRow> sweep(const std::vector<Document>& docs, const GoldReferences& gold,
                                   const RunConfig& base, const GridSpec& grid) {
  const std::vector<double> alphas = grid.alpha.empty() ? std::vector{base.alpha} : grid.alpha;
  const std::vector<double> cutoffs = grid.cutoff.empty() ? std::vector{base.tau} : grid.cutoff;
  std::vector<SweepRow> rows;
  for (double a : alphas) {
    for (double c : cutoffs) {
      RunConfig cfg = base;
      cfg.alpha = a;
      cfg.tau = c;
      validate(cfg);
      const auto ev = evaluate_results(run_corpus(docs, cfg), gold, cfg.strict_at_k);
      const auto& m = ev.corpus.macro;
      rows.push_back({a, c, m.f1_at.count(5) ? m.f1_at.at(5) : 0.0,
                      m.f1_at.count(10) ? m.f1_at.at(10) : 0.0, m.average_precision});
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) {
    if (x.f1_at_10 != y.f1_at_10) return x.f1_at_10 > y.f1_at_10;
    if (x.alpha != y.alpha) return x.alpha < y.alpha;
    return x.cutoff < y.cutoff;
  });
  return rows;
}

}  // namespace mpkex

#endif  // MPKEX_PIPELINE_HPP_
