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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "worms/normal_form.hpp"
#include "worms/ordinal.hpp"

namespace worms {

/// o_n: normal words over symbols >= n onto the ordinals.
///   o_n(n^k) = k
///   o_n(A1 n ... n Ak) = w^{o_{n+1}(A1)} + ... + w^{o_{n+1}(Ak)}
/// Throws Error{NotInS} if `a` has a symbol below n.
Ordinal o_map(const NormalWord& a, Symbol n);

/// Inverse of o_map at base n; the result is normal.
NormalWord word_of(const Ordinal& a, Symbol n);

/// Finite multiset of ordinals: ordinal -> multiplicity >= 1.
class OrdMultiset {
 public:
  OrdMultiset() = default;
  OrdMultiset(std::initializer_list<std::pair<Ordinal, std::uint64_t>> entries);

  void add(const Ordinal& x, std::uint64_t count = 1);
  std::uint64_t multiplicity(const Ordinal& x) const;
  bool empty() const noexcept { return entries_.empty(); }

  /// Least element. Throws Error{EmptySequence} on the empty multiset.
  const Ordinal& min() const;

  /// Drops every element strictly below x.
  void erase_below(const Ordinal& x);

  const std::map<Ordinal, std::uint64_t>& entries() const noexcept { return entries_; }

  friend bool operator==(const OrdMultiset&, const OrdMultiset&) = default;

 private:
  std::map<Ordinal, std::uint64_t> entries_;
};

/// Text form "{w:1, 1:2}", largest element first; "{ }" when empty.
std::string print_multiset(const OrdMultiset& m);

/// Blocks of `a` at 0, each mapped through o_1. The empty word maps to
/// the empty multiset.
OrdMultiset word_to_multiset(const NormalWord& a);

/// x < y iff at the largest ordinal where multiplicities differ, x has
/// fewer copies.
std::strong_ordering ms_compare(const OrdMultiset& x, const OrdMultiset& y);

/// One more copy of 0.
OrdMultiset ms_diamond0(const OrdMultiset& x);
/// With g = min(x): drop everything below g+1, add one copy of g+1.
OrdMultiset ms_diamond1(const OrdMultiset& x);
/// With g = min(x): drop everything below psi(g), add one copy of psi(g).
OrdMultiset ms_diamond2(const OrdMultiset& x);

}  // namespace worms
