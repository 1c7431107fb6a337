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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace worms {

/// A letter of the alphabet of natural numbers.
using Symbol = std::uint64_t;

/// Read-only view of a run of symbols; the comparison engine works on these
/// to avoid copying subwords.
using SymbolView = std::span<const Symbol>;

/// A finite string over the natural numbers. The empty word is written "e".
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  explicit Word(SymbolView view) : symbols_(view.begin(), view.end()) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol back() const { return symbols_.back(); }

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  SymbolView view() const noexcept { return symbols_; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  void push_back(Symbol s) { symbols_.push_back(s); }
  void append(SymbolView tail) {
    symbols_.insert(symbols_.end(), tail.begin(), tail.end());
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Throws Error{ParseError}. Accepts "e" or naturals separated by runs of
/// spaces or by single commas.
Word parse_word(std::string_view text);

/// Canonical text: single spaces, "e" for the empty word.
std::string print_word(const Word& w);

Word concat(const Word& a, const Word& b);
Word power(const Word& a, std::size_t n);
inline std::size_t length(const Word& a) { return a.size(); }

/// Smallest symbol; throws Error{EmptyWord} on the empty word.
Symbol min_symbol(const Word& a);

/// Unique decomposition a = A1 n A2 n ... n Ak with every Ai free of n.
/// Throws Error{SymbolBelowSeparator} if a contains a symbol below n.
std::vector<Word> split_at(const Word& a, Symbol n);

/// Inverse of split_at.
Word join(std::span<const Word> parts, Symbol n);

/// True iff every symbol is >= k.
bool in_S(const Word& a, Symbol k);
/// True iff every symbol is <= bound.
bool in_W(const Word& a, Symbol bound);

/// All words over {0..max_symbol} of length <= max_len, shortlex.
std::vector<Word> enumerate_words(Symbol max_symbol, std::size_t max_len);

/// Shortlex order: shorter first, then symbol-wise.
bool shortlex_less(const Word& a, const Word& b);

namespace detail {

Symbol min_symbol(SymbolView a, SymbolView b);

/// Calls f(part) for every n-separated part of `a`, left to right.
template <typename F>
void for_each_part(SymbolView a, Symbol n, F&& f) {
  std::size_t start = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == n) {
      f(a.subspan(start, i - start));
      start = i + 1;
    }
  }
  f(a.subspan(start));
}

}  // namespace detail

}  // namespace worms

template <>
struct std::hash<worms::Word> {
  std::size_t operator()(const worms::Word& w) const noexcept {
    std::size_t h = w.size();
    for (auto s : w) h = h * 1000003u ^ std::hash<worms::Symbol>{}(s);
    return h;
  }
};
