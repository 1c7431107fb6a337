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

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "worms/error.hpp"
#include "worms/word.hpp"

namespace worms {

/// Verdict of the word preorder: less, equivalent (~) or greater.
using ComparisonResult = std::weak_ordering;

/// Strictly increasing 1-based positions into a sequence.
using IndexCollection = std::vector<std::size_t>;

/// Largest sequence the exhaustive subsequence oracle accepts by default.
inline constexpr std::size_t kNaiveOracleBound = 12;

/// The recursive preorder on words. Both arguments are split at the least
/// symbol n occurring in either; each side keeps the lexicographically
/// maximal subsequence of its parts, and the two subsequences are compared
/// lexicographically. Works on arbitrary (not necessarily normal) words.
ComparisonResult compare(SymbolView a, SymbolView b);
inline ComparisonResult compare(const Word& a, const Word& b) {
  return compare(a.view(), b.view());
}

inline bool precedes(const Word& a, const Word& b) { return compare(a, b) < 0; }
inline bool equivalent(const Word& a, const Word& b) { return compare(a, b) == 0; }

/// Lexicographic comparison of word sequences: the first non-equivalent
/// pair decides; an equivalent proper prefix is smaller.
ComparisonResult lex_compare(std::span<const Word> xs, std::span<const Word> ys);

/// Greedy maximal index collection: each next index is the leftmost
/// maximum of the remaining suffix. Throws Error{EmptySequence}.
IndexCollection max_index_collection(std::span<const Word> xs);

/// Maximal collection of xs ++ ys assembled from the collections of the two
/// halves. Throws Error{EmptySequence} if either side is empty.
IndexCollection concat_collection(std::span<const Word> xs, std::span<const Word> ys);

namespace detail {

/// Lexicographic comparison of two index-selected subsequences of `items`.
template <typename T, typename ElemCmp>
std::weak_ordering lex_compare_selected(std::span<const T> xs, const IndexCollection& xi,
                                        std::span<const T> ys, const IndexCollection& yi,
                                        ElemCmp&& cmp) {
  const std::size_t common = std::min(xi.size(), yi.size());
  for (std::size_t i = 0; i < common; ++i) {
    auto c = cmp(xs[xi[i] - 1], ys[yi[i] - 1]);
    if (c != 0) return c;
  }
  if (xi.size() == yi.size()) return std::weak_ordering::equivalent;
  return xi.size() < yi.size() ? std::weak_ordering::less : std::weak_ordering::greater;
}

}  // namespace detail

/// Exhaustive oracle: scans every non-empty subsequence of `xs` and returns
/// the index collection of a lexicographic maximum, breaking ties towards
/// the lexicographically smallest index vector. Exponential in |xs|.
///
/// The element comparator is a parameter so that an independent comparator
/// can be built entirely on top of this routine.
template <typename T, typename ElemCmp>
IndexCollection max_index_collection_naive(std::span<const T> xs, ElemCmp&& cmp,
                                           std::size_t bound = kNaiveOracleBound) {
  if (xs.empty()) throw Error(ErrorKind::EmptySequence, "max_index_collection_naive: empty sequence");
  if (xs.size() > bound || xs.size() >= 63) {
    throw Error(ErrorKind::OracleBoundExceeded,
                "max_index_collection_naive: sequence of length " + std::to_string(xs.size()) +
                    " exceeds oracle bound " + std::to_string(bound));
  }
  const std::uint64_t limit = std::uint64_t{1} << xs.size();
  IndexCollection best;
  IndexCollection candidate;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    candidate.clear();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (mask >> i & 1u) candidate.push_back(i + 1);
    }
    if (best.empty()) {
      best = candidate;
      continue;
    }
    auto c = detail::lex_compare_selected(xs, candidate, xs, best, cmp);
    if (c > 0 || (c == 0 && candidate < best)) best = candidate;
  }
  return best;
}

inline IndexCollection max_index_collection_naive(std::span<const Word> xs,
                                                  std::size_t bound = kNaiveOracleBound) {
  return max_index_collection_naive(
      xs, [](const Word& a, const Word& b) { return compare(a, b); }, bound);
}

std::string to_symbol(ComparisonResult c);

}  // namespace worms
