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

#ifndef MPKEX_STEM_HPP_
#define MPKEX_STEM_HPP_

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mpkex {

// Stems of a phrase, one per word, plus the space-joined canonical form
// used as identity throughout the pipeline.
struct StemmedPhrase {
  std::vector<std::string> stems;
  std::string joined;

  friend bool operator==(const StemmedPhrase&, const StemmedPhrase&) = default;
};

inline std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

namespace detail {

// Porter's suffix-stripping algorithm, following the reference ANSI C
// implementation (including its "bli" -> "ble" and "logi" -> "log" rules).
// Positions are inclusive indices into buf_; k_ is the last character of the
// current stem and j_ is set by ends() to the character before a suffix.
class PorterStemmer {
 public:
  explicit PorterStemmer(std::string word) : buf_(std::move(word)) {}

  std::string run() {
    if (buf_.size() <= 2) return buf_;
    k_ = static_cast<int>(buf_.size()) - 1;
    step1ab();
    if (k_ > 0) {
      step1c();
      step2();
      step3();
      step4();
      step5();
    }
    buf_.resize(static_cast<std::size_t>(k_) + 1);
    return buf_;
  }

 private:
  bool cons(int i) const {
    switch (buf_[i]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in buf_[0..j_].
  int measure() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j_) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j_) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j_) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j_; ++i) {
      if (!cons(i)) return true;
    }
    return false;
  }

  bool double_consonant(int j) const {
    if (j < 1) return false;
    if (buf_[j] != buf_[j - 1]) return false;
    return cons(j);
  }

  // consonant-vowel-consonant ending at i, where the last c is not w, x or y.
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    const char ch = buf_[i];
    return !(ch == 'w' || ch == 'x' || ch == 'y');
  }

  bool ends(std::string_view s) {
    const int len = static_cast<int>(s.size());
    if (s.back() != buf_[k_]) return false;
    if (len > k_ + 1) return false;
    if (std::string_view(buf_).substr(k_ - len + 1, len) != s) return false;
    j_ = k_ - len;
    return true;
  }

  void set_to(std::string_view s) {
    buf_.replace(j_ + 1, buf_.size() - (j_ + 1), s);
    k_ = j_ + static_cast<int>(s.size());
  }

  void replace_if_measured(std::string_view s) {
    if (measure() > 0) set_to(s);
  }

  void step1ab() {
    if (buf_[k_] == 's') {
      if (ends("sses")) {
        k_ -= 2;
      } else if (ends("ies")) {
        set_to("i");
      } else if (buf_[k_ - 1] != 's') {
        --k_;
      }
    }
    if (ends("eed")) {
      if (measure() > 0) --k_;
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k_ = j_;
      if (ends("at")) {
        set_to("ate");
      } else if (ends("bl")) {
        set_to("ble");
      } else if (ends("iz")) {
        set_to("ize");
      } else if (double_consonant(k_)) {
        --k_;
        const char ch = buf_[k_];
        if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
      } else {
        j_ = k_;
        if (measure() == 1 && cvc(k_)) set_to("e");
      }
    }
  }

  void step1c() {
    if (ends("y") && vowel_in_stem()) buf_[k_] = 'i';
  }

  // Tries each (suffix, replacement) in order; the first suffix that matches
  // ends the step whether or not the measure condition allows the rewrite.
  template <std::size_t N>
  bool apply_first(const std::pair<std::string_view, std::string_view> (&rules)[N]) {
    for (const auto& [suffix, repl] : rules) {
      if (ends(suffix)) {
        replace_if_measured(repl);
        return true;
      }
    }
    return false;
  }

  void step2() {
    using R = std::pair<std::string_view, std::string_view>;
    switch (buf_[k_ - 1]) {
      case 'a': {
        static constexpr R rules[] = {{"ational", "ate"}, {"tional", "tion"}};
        apply_first(rules);
        break;
      }
      case 'c': {
        static constexpr R rules[] = {{"enci", "ence"}, {"anci", "ance"}};
        apply_first(rules);
        break;
      }
      case 'e': {
        static constexpr R rules[] = {{"izer", "ize"}};
        apply_first(rules);
        break;
      }
      case 'l': {
        static constexpr R rules[] = {{"bli", "ble"},
                                      {"alli", "al"},
                                      {"entli", "ent"},
                                      {"eli", "e"},
                                      {"ousli", "ous"}};
        apply_first(rules);
        break;
      }
      case 'o': {
        static constexpr R rules[] = {
            {"ization", "ize"}, {"ation", "ate"}, {"ator", "ate"}};
        apply_first(rules);
        break;
      }
      case 's': {
        static constexpr R rules[] = {{"alism", "al"},
                                      {"iveness", "ive"},
                                      {"fulness", "ful"},
                                      {"ousness", "ous"}};
        apply_first(rules);
        break;
      }
      case 't': {
        static constexpr R rules[] = {
            {"aliti", "al"}, {"iviti", "ive"}, {"biliti", "ble"}};
        apply_first(rules);
        break;
      }
      case 'g': {
        static constexpr R rules[] = {{"logi", "log"}};
        apply_first(rules);
        break;
      }
      default:
        break;
    }
  }

  void step3() {
    using R = std::pair<std::string_view, std::string_view>;
    switch (buf_[k_]) {
      case 'e': {
        static constexpr R rules[] = {
            {"icate", "ic"}, {"ative", ""}, {"alize", "al"}};
        apply_first(rules);
        break;
      }
      case 'i': {
        static constexpr R rules[] = {{"iciti", "ic"}};
        apply_first(rules);
        break;
      }
      case 'l': {
        static constexpr R rules[] = {{"ical", "ic"}, {"ful", ""}};
        apply_first(rules);
        break;
      }
      case 's': {
        static constexpr R rules[] = {{"ness", ""}};
        apply_first(rules);
        break;
      }
      default:
        break;
    }
  }

  bool ends_any(std::initializer_list<std::string_view> suffixes) {
    for (auto s : suffixes) {
      if (ends(s)) return true;
    }
    return false;
  }

  void step4() {
    bool matched = false;
    switch (buf_[k_ - 1]) {
      case 'a': matched = ends("al"); break;
      case 'c': matched = ends_any({"ance", "ence"}); break;
      case 'e': matched = ends("er"); break;
      case 'i': matched = ends("ic"); break;
      case 'l': matched = ends_any({"able", "ible"}); break;
      case 'n': matched = ends_any({"ant", "ement", "ment", "ent"}); break;
      case 'o':
        if (ends("ion") && j_ >= 0 && (buf_[j_] == 's' || buf_[j_] == 't')) {
          matched = true;
        } else {
          matched = ends("ou");
        }
        break;
      case 's': matched = ends("ism"); break;
      case 't': matched = ends_any({"ate", "iti"}); break;
      case 'u': matched = ends("ous"); break;
      case 'v': matched = ends("ive"); break;
      case 'z': matched = ends("ize"); break;
      default: break;
    }
    if (matched && measure() > 1) k_ = j_;
  }

  void step5() {
    j_ = k_;
    if (buf_[k_] == 'e') {
      const int a = measure();
      if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
    }
    if (buf_[k_] == 'l' && double_consonant(k_) && measure() > 1) --k_;
  }

  std::string buf_;
  int k_ = 0;
  int j_ = 0;
};

}  // namespace detail

/// Lowercases `word` and returns its Porter stem. Words of one or two
/// characters are returned lowercased and otherwise unchanged.
inline std::string stem_word(std::string_view word) {
  if (word.empty()) throw std::invalid_argument("stem_word: empty word");
  return detail::PorterStemmer(to_lower_ascii(word)).run();
}

inline StemmedPhrase stem_phrase(const std::vector<std::string>& words) {
  if (words.empty()) throw std::invalid_argument("stem_phrase: empty word list");
  StemmedPhrase out;
  out.stems.reserve(words.size());
  for (const auto& w : words) {
    out.stems.push_back(stem_word(w));
    if (!out.joined.empty()) out.joined += ' ';
    out.joined += out.stems.back();
  }
  return out;
}

/// Splits on ASCII whitespace, dropping empty fields.
inline std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) words.emplace_back(text.substr(start, i - start));
  }
  return words;
}

}  // namespace mpkex

#endif  // MPKEX_STEM_HPP_
