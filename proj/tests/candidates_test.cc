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

#include "mpkex/candidates.hpp"

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace mpkex {
namespace {

// Builds a document from (surface, tag) pairs; `breaks` lists token indices
// that start a new sentence.
Document make_doc(const std::vector<std::pair<std::string, std::string>>& toks,
                  const std::set<std::size_t>& breaks = {}) {
  Document d;
  d.id = "t";
  std::size_t s = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (breaks.count(i)) ++s;
    d.tokens.push_back({toks[i].first, toks[i].second, map_pos(toks[i].second, TagMap::penn()), s,
                        i + 1});
  }
  return d;
}

TEST(ExtractCandidatesTest, NaPlusExample) {
  const auto doc = make_doc({{"the", "DT"},
                             {"inverse", "JJ"},
                             {"distances", "NNS"},
                             {"between", "IN"},
                             {"occurrences", "NNS"}});
  const auto c = extract_candidates(doc, PatternKind::NaPlus);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].surfaces.front(), "inverse distances");
  EXPECT_EQ(c[0].positions, std::vector<std::size_t>{2});
  EXPECT_EQ(c[1].surfaces.front(), "occurrences");
  EXPECT_EQ(c[1].positions, std::vector<std::size_t>{5});
  EXPECT_EQ(c[0].key.joined, "invers distanc");
}

TEST(ExtractCandidatesTest, NoContentWords) {
  const auto doc = make_doc({{"is", "VBZ"}, {"of", "IN"}, {"quickly", "RB"}});
  EXPECT_TRUE(extract_candidates(doc).empty());
}

TEST(ExtractCandidatesTest, MergesByStem) {
  std::vector<std::pair<std::string, std::string>> toks;
  for (int i = 1; i <= 45; ++i) toks.emplace_back("of", "IN");
  toks[2] = {"graphs", "NNS"};
  toks[39] = {"graph", "NN"};
  const auto c = extract_candidates(make_doc(toks));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].positions, (std::vector<std::size_t>{3, 40}));
  EXPECT_EQ(c[0].first_offset, 3u);
  EXPECT_EQ(c[0].surfaces, (std::vector<std::string>{"graphs", "graph"}));
}

TEST(ExtractCandidatesTest, RunsStopAtSentenceBoundary) {
  const auto doc = make_doc({{"graph", "NN"}, {"model", "NN"}, {"ranking", "NN"}}, {2});
  const auto c = extract_candidates(doc);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].key.joined, "graph model");
  EXPECT_EQ(c[1].key.joined, "rank");
}

TEST(ExtractCandidatesTest, AdjStarNounPlus) {
  // A A N N -> whole run.
  auto c = extract_candidates(
      make_doc({{"large", "JJ"}, {"directed", "JJ"}, {"web", "NN"}, {"graphs", "NNS"}}),
      PatternKind::AdjStarNounPlus);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].surfaces.front(), "large directed web graphs");

  // N A -> trailing adjective dropped.
  c = extract_candidates(make_doc({{"graph", "NN"}, {"large", "JJ"}, {"is", "VBZ"}}),
                         PatternKind::AdjStarNounPlus);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].surfaces.front(), "graph");

  // N A N -> the match ending at the last noun.
  c = extract_candidates(make_doc({{"graph", "NN"}, {"large", "JJ"}, {"model", "NN"}}),
                         PatternKind::AdjStarNounPlus);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].surfaces.front(), "large model");
  EXPECT_EQ(c[0].first_offset, 2u);

  // Adjectives only -> nothing.
  c = extract_candidates(make_doc({{"large", "JJ"}, {"random", "JJ"}}),
                         PatternKind::AdjStarNounPlus);
  EXPECT_TRUE(c.empty());
}

TEST(ExtractCandidatesTest, RandomDocumentProperties) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto doc = testing::random_document(rng, 10 + trial % 120);
    for (auto pattern : {PatternKind::NaPlus, PatternKind::AdjStarNounPlus}) {
      const auto cands = extract_candidates(doc, pattern);
      std::set<std::string> keys;
      std::set<std::size_t> covered;
      std::size_t prev_first = 0;
      for (const auto& c : cands) {
        EXPECT_TRUE(keys.insert(c.key.joined).second) << "duplicate key " << c.key.joined;
        ASSERT_FALSE(c.positions.empty());
        EXPECT_EQ(c.first_offset, c.positions.front());
        EXPECT_GT(c.first_offset, prev_first);
        prev_first = c.first_offset;
        EXPECT_EQ(c.surfaces.size(), c.positions.size());
        for (std::size_t i = 0; i < c.positions.size(); ++i) {
          if (i > 0) EXPECT_LT(c.positions[i - 1], c.positions[i]);
          const std::size_t begin = c.positions[i];
          const std::size_t end = begin + c.length;  // one past, 1-based
          const auto sentence = doc.tokens[begin - 1].sentence_index;
          for (std::size_t off = begin; off < end; ++off) {
            EXPECT_EQ(doc.tokens[off - 1].sentence_index, sentence);
            EXPECT_TRUE(covered.insert(off).second) << "overlapping occurrences";
          }
        }
      }
      if (pattern == PatternKind::NaPlus) {
        std::set<std::size_t> content;
        for (const auto& t : doc.tokens) {
          if (t.coarse != Coarse::Other) content.insert(t.offset);
        }
        EXPECT_EQ(covered, content);
      }
    }
  }
}

}  // namespace
}  // namespace mpkex
