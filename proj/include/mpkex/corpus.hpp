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

#ifndef MPKEX_CORPUS_HPP_
#define MPKEX_CORPUS_HPP_

#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mpkex/stem.hpp"

namespace mpkex {

enum class Coarse { Noun, Adjective, Other };

/// Thrown for malformed input files. `line()` is the 1-based record line
/// for line-delimited input and 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Maps fine-grained POS tags to the noun/adjective/other distinction by
/// longest matching prefix. Tags with no matching prefix are Other.
class TagMap {
 public:
  explicit TagMap(std::map<std::string, Coarse> prefixes)
      : prefixes_(std::move(prefixes)) {}

  /// Penn Treebank: NN* -> Noun, JJ* -> Adjective.
  static TagMap penn() {
    return TagMap({{"NN", Coarse::Noun}, {"JJ", Coarse::Adjective}});
  }

  /// Parses {"prefix": "N" | "A" | "O", ...}.
  static TagMap from_json(std::istream& in) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(0, std::string("tag map: ") + e.what());
    }
    if (!j.is_object()) throw ParseError(0, "tag map: expected a JSON object");
    std::map<std::string, Coarse> prefixes;
    for (const auto& [prefix, value] : j.items()) {
      if (!value.is_string()) {
        throw ParseError(0, "tag map: value for '" + prefix + "' is not a string");
      }
      const auto v = value.get<std::string>();
      if (v == "N") {
        prefixes[prefix] = Coarse::Noun;
      } else if (v == "A") {
        prefixes[prefix] = Coarse::Adjective;
      } else if (v == "O") {
        prefixes[prefix] = Coarse::Other;
      } else {
        throw ParseError(0, "tag map: value for '" + prefix + "' must be N, A or O");
      }
    }
    return TagMap(std::move(prefixes));
  }

  Coarse lookup(std::string_view tag) const {
    Coarse best = Coarse::Other;
    std::size_t best_len = 0;
    bool found = false;
    for (const auto& [prefix, coarse] : prefixes_) {
      if (tag.starts_with(prefix) && (!found || prefix.size() > best_len)) {
        best = coarse;
        best_len = prefix.size();
        found = true;
      }
    }
    return best;
  }

 private:
  std::map<std::string, Coarse> prefixes_;
};

inline Coarse map_pos(std::string_view pos_tag, const TagMap& tag_map) {
  return tag_map.lookup(pos_tag);
}

struct Token {
  std::string surface;
  std::string pos_tag;
  Coarse coarse = Coarse::Other;
  std::size_t sentence_index = 0;
  std::size_t offset = 0;  // 1-based word offset within the document

  friend bool operator==(const Token&, const Token&) = default;
};

struct Document {
  std::string id;
  std::vector<Token> tokens;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Reference keyphrases per document id, whitespace-normalized and lowercased.
struct GoldReferences {
  std::map<std::string, std::vector<std::string>> by_doc;
};

inline std::string normalize_phrase(std::string_view phrase) {
  std::string out;
  for (const auto& w : split_words(phrase)) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return to_lower_ascii(out);
}

namespace detail {

inline const nlohmann::json& require(const nlohmann::json& obj, const char* key,
                                     std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(line, std::string("missing required field '") + key + "'");
  }
  return *it;
}

inline Document document_from_json(const nlohmann::json& j, const TagMap& tag_map,
                                   std::size_t line) {
  if (!j.is_object()) throw ParseError(line, "record is not a JSON object");
  const auto& id = require(j, "id", line);
  if (!id.is_string() || id.get<std::string>().empty()) {
    throw ParseError(line, "'id' must be a non-empty string");
  }
  Document doc;
  doc.id = id.get<std::string>();
  const auto& tokens = require(j, "tokens", line);
  if (!tokens.is_array()) throw ParseError(line, "'tokens' must be an array");
  if (tokens.empty()) throw ParseError(line, "document '" + doc.id + "' has no tokens");
  doc.tokens.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!t.is_object()) throw ParseError(line, "token is not a JSON object");
    const auto& w = require(t, "w", line);
    const auto& p = require(t, "p", line);
    const auto& s = require(t, "s", line);
    if (!w.is_string() || !p.is_string()) {
      throw ParseError(line, "token fields 'w' and 'p' must be strings");
    }
    if (!s.is_number_integer() || s.get<long long>() < 0) {
      throw ParseError(line, "token field 's' must be a non-negative integer");
    }
    Token tok;
    tok.surface = w.get<std::string>();
    tok.pos_tag = p.get<std::string>();
    tok.coarse = map_pos(tok.pos_tag, tag_map);
    tok.sentence_index = s.get<std::size_t>();
    tok.offset = doc.tokens.size() + 1;
    if (!doc.tokens.empty() && tok.sentence_index < doc.tokens.back().sentence_index) {
      throw ParseError(line, "sentence index decreases at token " +
                                 std::to_string(tok.offset) + " of '" + doc.id + "'");
    }
    doc.tokens.push_back(std::move(tok));
  }
  return doc;
}

inline bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

}  // namespace detail

/// Reads line-delimited JSON documents. Blank lines are skipped.
inline std::vector<Document> parse_documents(std::istream& in,
                                             const TagMap& tag_map = TagMap::penn()) {
  std::vector<Document> docs;
  std::set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_blank(line)) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(lineno, std::string("malformed record: ") + e.what());
    }
    Document doc;
    try {
      doc = detail::document_from_json(j, tag_map, lineno);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(lineno, e.what());
    }
    if (!seen.insert(doc.id).second) {
      throw ParseError(lineno, "duplicate document id '" + doc.id + "'");
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

inline void serialize_documents(const std::vector<Document>& docs, std::ostream& out) {
  for (const auto& doc : docs) {
    nlohmann::json tokens = nlohmann::json::array();
    for (const auto& t : doc.tokens) {
      tokens.push_back({{"w", t.surface}, {"p", t.pos_tag}, {"s", t.sentence_index}});
    }
    out << nlohmann::json{{"id", doc.id}, {"tokens", std::move(tokens)}}.dump() << '\n';
  }
}

/// Reads a JSON object mapping document id to a list of phrases.
inline GoldReferences parse_gold(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("malformed gold file: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(0, "gold file must be a JSON object");
  GoldReferences gold;
  for (const auto& [id, phrases] : j.items()) {
    if (!phrases.is_array()) {
      throw ParseError(0, "gold entry for '" + id + "' must be an array");
    }
    std::vector<std::string> normalized;
    for (const auto& p : phrases) {
      if (!p.is_string()) {
        throw ParseError(0, "gold entry for '" + id + "' contains a non-string");
      }
      auto phrase = normalize_phrase(p.get<std::string>());
      if (phrase.empty()) {
        throw ParseError(0, "gold entry for '" + id + "' contains an empty phrase");
      }
      normalized.push_back(std::move(phrase));
    }
    if (normalized.empty()) {
      throw ParseError(0, "gold entry for '" + id + "' has no phrases");
    }
    gold.by_doc.emplace(id, std::move(normalized));
  }
  return gold;
}

}  // namespace mpkex

#endif  // MPKEX_CORPUS_HPP_
