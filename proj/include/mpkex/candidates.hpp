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

#ifndef MPKEX_CANDIDATES_HPP_
#define MPKEX_CANDIDATES_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mpkex/corpus.hpp"
#include "mpkex/stem.hpp"

namespace mpkex {

enum class PatternKind {
  NaPlus,           // /(N|A)+/
  AdjStarNounPlus,  // /A*N+/
};

/// A keyphrase candidate: every occurrence of one stemmed phrase.
struct Candidate {
  StemmedPhrase key;
  std::vector<std::string> surfaces;  // one per occurrence, in document order
  std::vector<std::size_t> positions;  // offset of each occurrence's first word
  std::size_t first_offset = 0;
  std::size_t length = 0;  // words per occurrence
};

namespace detail {

struct Span {
  std::size_t begin;  // index into doc.tokens
  std::size_t end;    // one past the last token
};

inline bool is_content(Coarse c) { return c == Coarse::Noun || c == Coarse::Adjective; }

// Maximal runs of noun/adjective tokens that do not cross a sentence boundary.
inline std::vector<Span> content_runs(const Document& doc) {
  std::vector<Span> runs;
  const auto& toks = doc.tokens;
  std::size_t i = 0;
  while (i < toks.size()) {
    if (!is_content(toks[i].coarse)) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < toks.size() && is_content(toks[j].coarse) &&
           toks[j].sentence_index == toks[i].sentence_index) {
      ++j;
    }
    runs.push_back({i, j});
    i = j;
  }
  return runs;
}

// The A*N+ match inside a run that ends at the run's last noun; trailing
// adjectives are dropped and nothing before the match is kept.
inline bool adj_noun_suffix(const Document& doc, Span run, Span& out) {
  const auto& toks = doc.tokens;
  std::size_t end = run.end;
  while (end > run.begin && toks[end - 1].coarse != Coarse::Noun) --end;
  if (end == run.begin) return false;
  std::size_t begin = end;
  while (begin > run.begin && toks[begin - 1].coarse == Coarse::Noun) --begin;
  while (begin > run.begin && toks[begin - 1].coarse == Coarse::Adjective) --begin;
  out = {begin, end};
  return true;
}

}  // namespace detail

/// Selects candidate occurrences by POS pattern and merges them by stemmed
/// form. The result is sorted by first occurrence.
inline std::vector<Candidate> extract_candidates(const Document& doc,
                                                 PatternKind pattern = PatternKind::NaPlus) {
  std::vector<Candidate> cands;
  std::map<std::string, std::size_t> by_key;
  for (const auto& run : detail::content_runs(doc)) {
    detail::Span span = run;
    if (pattern == PatternKind::AdjStarNounPlus && !detail::adj_noun_suffix(doc, run, span)) {
      continue;
    }
    std::vector<std::string> words;
    std::string surface;
    for (std::size_t t = span.begin; t < span.end; ++t) {
      words.push_back(doc.tokens[t].surface);
      if (!surface.empty()) surface += ' ';
      surface += doc.tokens[t].surface;
    }
    auto key = stem_phrase(words);
    const std::size_t pos = doc.tokens[span.begin].offset;
    auto [it, inserted] = by_key.try_emplace(key.joined, cands.size());
    if (inserted) {
      Candidate c;
      c.key = std::move(key);
      c.first_offset = pos;
      c.length = words.size();
      cands.push_back(std::move(c));
    }
    auto& c = cands[it->second];
    c.surfaces.push_back(std::move(surface));
    c.positions.push_back(pos);
  }
  // Runs are visited left to right, so creation order is first-offset order.
  return cands;
}

}  // namespace mpkex

#endif  // MPKEX_CANDIDATES_HPP_
