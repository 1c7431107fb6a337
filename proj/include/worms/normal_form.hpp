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
#include <vector>

#include "worms/order.hpp"
#include "worms/word.hpp"

namespace worms {

/// A word in normal form: the unique shortest representative of its
/// ~-class. Construction from an arbitrary word always validates.
class NormalWord {
 public:
  NormalWord() = default;

  /// Throws Error{NotNormal} unless is_normal(w).
  explicit NormalWord(Word w);

  const Word& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }

  friend bool operator==(const NormalWord&, const NormalWord&) = default;

 private:
  struct Trusted {};
  NormalWord(Word w, Trusted) : word_(std::move(w)) {}

  friend NormalWord normalize(const Word& a);
  friend NormalWord diamond(Symbol n, const NormalWord& a);
  friend std::vector<NormalWord> enumerate_normal(Symbol max_symbol, std::size_t max_len);

  Word word_;
};

/// Empty word, or: split at the least symbol n, every part is normal and
/// the parts do not increase from left to right.
bool is_normal(const Word& a);

/// The normal word ~-equivalent to `a`; never longer than `a`.
NormalWord normalize(const Word& a);

/// The raw successor A |-> A n.
Word append_a(Symbol n, const Word& a);

/// normalize(a n).
NormalWord diamond(Symbol n, const NormalWord& a);

/// Normal words over {0..max_symbol} of length <= max_len, shortlex.
std::vector<NormalWord> enumerate_normal(Symbol max_symbol, std::size_t max_len);

}  // namespace worms
