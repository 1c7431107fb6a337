/* Copyright 2026 The Worms Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "worms/word.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "worms/error.hpp"

namespace worms {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::SymbolBelowSeparator: return "SymbolBelowSeparator";
    case ErrorKind::EmptySequence: return "EmptySequence";
    case ErrorKind::OracleBoundExceeded: return "OracleBoundExceeded";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotInS: return "NotInS";
    case ErrorKind::NotInW3: return "NotInW3";
    case ErrorKind::NotLimit: return "NotLimit";
    case ErrorKind::TowerTooTall: return "TowerTooTall";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::SliceIndexOutOfRange: return "SliceIndexOutOfRange";
    case ErrorKind::NotABiorderEncoding: return "NotABiorderEncoding";
    case ErrorKind::InvalidBiorder: return "InvalidBiorder";
    case ErrorKind::NormalityAssertionFailed: return "NormalityAssertionFailed";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::string_view why) {
  throw Error(ErrorKind::ParseError,
              "cannot parse word '" + std::string(text) + "': " + std::string(why));
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

Word parse_word(std::string_view text) {
  if (text == "e") return Word{};
  if (text.empty()) parse_fail(text, "empty input (use \"e\" for the empty word)");

  std::vector<Symbol> symbols;
  std::size_t i = 0;
  while (true) {
    if (i >= text.size() || !is_digit(text[i])) parse_fail(text, "expected a natural number");
    std::size_t j = i;
    while (j < text.size() && is_digit(text[j])) ++j;
    Symbol value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
    if (ec != std::errc{} || ptr != text.data() + j) parse_fail(text, "symbol out of range");
    symbols.push_back(value);
    i = j;
    if (i == text.size()) break;
    if (text[i] == ',') {
      ++i;
    } else if (text[i] == ' ') {
      while (i < text.size() && text[i] == ' ') ++i;
    } else {
      parse_fail(text, "unexpected character");
    }
  }
  return Word(std::move(symbols));
}

std::string print_word(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out.push_back(' ');
    out += std::to_string(w[i]);
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.append(b.view());
  return out;
}

Word power(const Word& a, std::size_t n) {
  Word out;
  for (std::size_t i = 0; i < n; ++i) out.append(a.view());
  return out;
}

Symbol min_symbol(const Word& a) {
  if (a.empty()) throw Error(ErrorKind::EmptyWord, "min_symbol of the empty word");
  return *std::min_element(a.begin(), a.end());
}

std::vector<Word> split_at(const Word& a, Symbol n) {
  for (auto s : a) {
    if (s < n) {
      throw Error(ErrorKind::SymbolBelowSeparator,
                  "word '" + print_word(a) + "' has a symbol below separator " +
                      std::to_string(n));
    }
  }
  std::vector<Word> parts;
  detail::for_each_part(a.view(), n, [&](SymbolView p) { parts.emplace_back(p); });
  return parts;
}

Word join(std::span<const Word> parts, Symbol n) {
  Word out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out.push_back(n);
    out.append(parts[i].view());
  }
  return out;
}

bool in_S(const Word& a, Symbol k) {
  return std::all_of(a.begin(), a.end(), [k](Symbol s) { return s >= k; });
}

bool in_W(const Word& a, Symbol bound) {
  return std::all_of(a.begin(), a.end(), [bound](Symbol s) { return s <= bound; });
}

std::vector<Word> enumerate_words(Symbol max_symbol, std::size_t max_len) {
  std::vector<Word> out;
  out.emplace_back();
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Symbol s = 0; s <= max_symbol; ++s) {
        Word w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace detail {

Symbol min_symbol(SymbolView a, SymbolView b) {
  Symbol m = std::numeric_limits<Symbol>::max();
  for (auto s : a) m = std::min(m, s);
  for (auto s : b) m = std::min(m, s);
  return m;
}

}  // namespace detail

}  // namespace worms
