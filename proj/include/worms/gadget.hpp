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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "worms/normal_form.hpp"

namespace worms {

/// A finite set with two strict linear orders. `l1` and `l2` list the same
/// distinct labels in ascending order of the respective relation.
struct Biorder {
  std::vector<std::string> l1;
  std::vector<std::string> l2;

  std::size_t size() const noexcept { return l1.size(); }

  /// Throws Error{InvalidBiorder} unless the invariants hold.
  void validate() const;

  /// For each element in l1 order, its 1-based position in l2. Two biorders
  /// are isomorphic iff these vectors coincide.
  std::vector<std::size_t> signature() const;
};

bool isomorphic(const Biorder& a, const Biorder& b);

/// Biorder from an l2 permutation over labels b1..bh (l1 = b1..bh).
/// `l2_order` holds 1-based l1 ranks in l2-ascending order.
Biorder biorder_from_permutation(std::span<const std::size_t> l2_order);

/// Blocks of a nonempty word at symbol 0. Throws Error{EmptyWord}.
std::vector<Word> blocks(const NormalWord& a);

/// The first m blocks rejoined with 0. Throws Error{EmptyWord},
/// Error{SliceIndexOutOfRange}.
NormalWord slice(const NormalWord& a, std::size_t m);

/// b is a block-prefix of a (a and b nonempty).
bool is_slice(const NormalWord& a, const Word& b);

/// Order-theoretic characterisation of slices on W3:
/// a, b nonempty, b <= a and a < diamond(1, b). Throws Error{NotInW3}.
bool is_slice_formula(const NormalWord& a, const NormalWord& b);

/// I_s = 3^s 2.
Word word_I(std::size_t s);
/// K_{h,k} = I_{h-1} ... I_k 3^k, for 1 <= k <= h. Throws Error{BadIndex}.
NormalWord word_K(std::size_t h, std::size_t k);
/// L_h = I_{h-1} ... I_1, for h >= 1. Throws Error{BadIndex}.
Word word_L(std::size_t h);

/// With blocks A_r 0 ... 0 A_1 (leftmost block is A_r),
/// u_i = diamond(3, A_r 0 ... 0 A_i); returns (u_1, ..., u_r).
/// The empty word counts as a single empty block. Throws Error{NotInW3}.
std::vector<NormalWord> u_sequence(const NormalWord& a);

/// (L_h 1)^{r-1} C_r 0 (L_h 1)^{r-2} C_{r-1} 0 ... 0 C_1 with
/// C_i = I_{h-1} ... I_{k_i} 3^{k_i - 1}; its u-sequence is
/// (K_{h,k_1}, ..., K_{h,k_r}). Throws Error{BadIndex}.
NormalWord build_from_indices(std::size_t h, std::span<const std::size_t> ks);

/// Domain: the slices of a; first order: the word order on slices;
/// second order: the word order on their diamond(3, .) images.
/// Labels are b1..bh by first-order rank. Throws Error{NotInW3},
/// Error{EmptyWord}, Error{NotABiorderEncoding}.
Biorder decode_biorder(const NormalWord& a);

/// A word whose decoding is isomorphic to m.
NormalWord encode_biorder(const Biorder& m);

/// Outcome of the bounded W3 test. `holds` means no refutation was found
/// within the search bound; a refutation carries the first witness y
/// (y < x but not diamond(3, y) < x), or none when x is empty.
struct W3GateVerdict {
  bool holds = false;
  std::optional<NormalWord> witness;
};

/// Bounded check of: x nonempty and every y < x has diamond(3, y) < x,
/// scanning normal words over {0..max_symbol} of length <= max_len.
W3GateVerdict w3_gate(const NormalWord& x, Symbol max_symbol, std::size_t max_len);
/// Same, over an explicit shortlex-ordered candidate list.
W3GateVerdict w3_gate(const NormalWord& x, std::span<const NormalWord> candidates);

/// a < (4).
bool w3_by_comparison(const NormalWord& a);

}  // namespace worms
