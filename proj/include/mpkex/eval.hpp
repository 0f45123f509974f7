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

#ifndef MPKEX_EVAL_HPP_
#define MPKEX_EVAL_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "mpkex/stem.hpp"
#include "mpkex/topics.hpp"

namespace mpkex {

inline std::string stem_key(const std::string& phrase) {
  const auto words = split_words(phrase);
  if (words.empty()) return {};
  return stem_phrase(words).joined;
}

/// True when the stemmed form of `extracted` equals that of some gold phrase.
inline bool match_stems(const std::string& extracted, const std::vector<std::string>& gold) {
  const auto key = stem_key(extracted);
  if (key.empty()) return false;
  return std::any_of(gold.begin(), gold.end(),
                     [&](const std::string& g) { return stem_key(g) == key; });
}

namespace detail {

// Distinct stemmed forms, first occurrence kept, empty phrases dropped.
inline std::vector<std::string> distinct_stems(const std::vector<std::string>& phrases) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& p : phrases) {
    auto key = stem_key(p);
    if (!key.empty() && seen.insert(key).second) out.push_back(std::move(key));
  }
  return out;
}

inline std::set<std::string> gold_stem_set(const std::vector<std::string>& gold) {
  auto keys = distinct_stems(gold);
  if (keys.empty()) throw std::invalid_argument("evaluation: empty gold list");
  return {keys.begin(), keys.end()};
}

}  // namespace detail

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

inline double harmonic_mean(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

/// Precision, recall and F1 over the top `k` extracted phrases. Precision
/// divides by min(k, |extracted|), or by k when `strict` is set.
inline PrecisionRecall f1_at_k(const std::vector<std::string>& extracted,
                               const std::vector<std::string>& gold, std::size_t k,
                               bool strict = false) {
  if (k == 0) throw std::invalid_argument("f1_at_k: k must be positive");
  const auto gold_set = detail::gold_stem_set(gold);
  const auto keys = detail::distinct_stems(extracted);
  const std::size_t cut = std::min(k, keys.size());
  std::size_t matches = 0;
  for (std::size_t r = 0; r < cut; ++r) matches += gold_set.count(keys[r]);
  PrecisionRecall pr;
  const std::size_t denom = strict ? k : cut;
  if (denom > 0) pr.precision = static_cast<double>(matches) / static_cast<double>(denom);
  pr.recall = static_cast<double>(matches) / static_cast<double>(gold_set.size());
  pr.f1 = harmonic_mean(pr.precision, pr.recall);
  return pr;
}

/// Average precision of the full ranked list against the distinct gold stems.
inline double average_precision(const std::vector<std::string>& extracted,
                                const std::vector<std::string>& gold) {
  const auto gold_set = detail::gold_stem_set(gold);
  const auto keys = detail::distinct_stems(extracted);
  double total = 0.0;
  std::size_t matches = 0;
  for (std::size_t r = 0; r < keys.size(); ++r) {
    if (gold_set.count(keys[r]) == 0) continue;
    ++matches;
    total += static_cast<double>(matches) / static_cast<double>(r + 1);
  }
  return total / static_cast<double>(gold_set.size());
}

/// Fraction of distinct topics among the first min(k, |list|) candidates.
inline double topic_coverage(const std::vector<std::size_t>& extracted_indices,
                             const TopicPartition& topics, std::size_t k) {
  if (k == 0) throw std::invalid_argument("topic_coverage: k must be positive");
  const std::size_t cut = std::min(k, extracted_indices.size());
  if (cut == 0) return 0.0;
  std::set<std::size_t> seen;
  for (std::size_t r = 0; r < cut; ++r) seen.insert(topics.topic_of(extracted_indices[r]));
  return static_cast<double>(seen.size()) / static_cast<double>(cut);
}

struct EvalConfig {
  std::vector<std::size_t> cutoffs = {5, 10};
  std::size_t coverage_at = 10;
  bool strict_at_k = false;
};

struct DocScore {
  std::map<std::size_t, double> precision_at;
  std::map<std::size_t, double> recall_at;
  std::map<std::size_t, double> f1_at;
  double average_precision = 0.0;
  std::map<std::size_t, double> topic_coverage_at;
};

struct CorpusScore {
  DocScore macro;
  std::size_t documents = 0;
};

/// Scores one document. `extracted_indices` and `topics` feed the coverage
/// figure; a document with nothing extracted scores zero everywhere.
inline DocScore score_document(const std::vector<std::string>& extracted,
                               const std::vector<std::size_t>& extracted_indices,
                               const TopicPartition* topics,
                               const std::vector<std::string>& gold, const EvalConfig& cfg) {
  DocScore s;
  for (std::size_t k : cfg.cutoffs) {
    const auto pr = f1_at_k(extracted, gold, k, cfg.strict_at_k);
    s.precision_at[k] = pr.precision;
    s.recall_at[k] = pr.recall;
    s.f1_at[k] = pr.f1;
  }
  s.average_precision = average_precision(extracted, gold);
  s.topic_coverage_at[cfg.coverage_at] =
      topics ? topic_coverage(extracted_indices, *topics, cfg.coverage_at) : 0.0;
  return s;
}

/// Macro average in the order given; callers pass documents sorted by id.
inline CorpusScore macro_average(const std::vector<DocScore>& docs) {
  CorpusScore out;
  out.documents = docs.size();
  if (docs.empty()) return out;
  const double n = static_cast<double>(docs.size());
  auto fold = [&](auto member) {
    std::map<std::size_t, double> acc;
    for (const auto& d : docs) {
      for (const auto& [k, v] : d.*member) acc[k] += v;
    }
    for (auto& [k, v] : acc) v /= n;
    return acc;
  };
  out.macro.precision_at = fold(&DocScore::precision_at);
  out.macro.recall_at = fold(&DocScore::recall_at);
  out.macro.f1_at = fold(&DocScore::f1_at);
  out.macro.topic_coverage_at = fold(&DocScore::topic_coverage_at);
  double ap = 0.0;
  for (const auto& d : docs) ap += d.average_precision;
  out.macro.average_precision = ap / n;
  return out;
}

inline nlohmann::json to_json(const DocScore& s) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : s.precision_at) j["P@" + std::to_string(k)] = v;
  for (const auto& [k, v] : s.recall_at) j["R@" + std::to_string(k)] = v;
  for (const auto& [k, v] : s.f1_at) j["F1@" + std::to_string(k)] = v;
  j["AP"] = s.average_precision;
  for (const auto& [k, v] : s.topic_coverage_at) j["coverage@" + std::to_string(k)] = v;
  return j;
}

}  // namespace mpkex

#endif  // MPKEX_EVAL_HPP_
