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

#include "worms/order.hpp"

#include <algorithm>

namespace worms {

namespace {

// Per-thread stacks for the recursive comparison. Every call restores both
// stacks to their entry size, so nested calls never disturb their callers'
// ranges; only indices are held across calls since the vectors may grow.
struct Scratch {
  std::vector<SymbolView> parts;
  std::vector<std::uint32_t> picks;
};

thread_local Scratch scratch;

ComparisonResult compare_views(Scratch& s, SymbolView a, SymbolView b);

// Pushes the greedy maximal selection of parts[first, last) onto picks in
// left-to-right order. An element is selected iff it is not below the
// most recently selected element to its right (the running suffix maximum).
std::size_t select_maximal(Scratch& s, std::size_t first, std::size_t last) {
  const std::size_t base = s.picks.size();
  s.picks.push_back(static_cast<std::uint32_t>(last - 1));
  for (std::size_t i = last - 1; i-- > first;) {
    const SymbolView candidate = s.parts[i];
    const SymbolView running_max = s.parts[s.picks.back()];
    if (compare_views(s, candidate, running_max) >= 0) {
      s.picks.push_back(static_cast<std::uint32_t>(i));
    }
  }
  std::reverse(s.picks.begin() + static_cast<std::ptrdiff_t>(base), s.picks.end());
  return s.picks.size() - base;
}

ComparisonResult compare_views(Scratch& s, SymbolView a, SymbolView b) {
  if (a.empty() && b.empty()) return std::weak_ordering::equivalent;

  const Symbol n = detail::min_symbol(a, b);
  const std::size_t parts_base = s.parts.size();
  const std::size_t picks_base = s.picks.size();

  auto push = [&s](SymbolView p) { s.parts.push_back(p); };
  detail::for_each_part(a, n, push);
  const std::size_t a_end = s.parts.size();
  detail::for_each_part(b, n, push);
  const std::size_t b_end = s.parts.size();

  const std::size_t a_count = select_maximal(s, parts_base, a_end);
  const std::size_t b_count = select_maximal(s, a_end, b_end);

  ComparisonResult result = a_count == b_count ? std::weak_ordering::equivalent
                            : a_count < b_count ? std::weak_ordering::less
                                                : std::weak_ordering::greater;
  const std::size_t common = std::min(a_count, b_count);
  for (std::size_t i = 0; i < common; ++i) {
    const SymbolView x = s.parts[s.picks[picks_base + i]];
    const SymbolView y = s.parts[s.picks[picks_base + a_count + i]];
    auto c = compare_views(s, x, y);
    if (c != 0) {
      result = c;
      break;
    }
  }

  s.parts.resize(parts_base);
  s.picks.resize(picks_base);
  return result;
}

template <typename ElemCmp>
IndexCollection greedy_collection(std::size_t n, ElemCmp&& cmp) {
  IndexCollection out{n};
  for (std::size_t i = n - 1; i >= 1; --i) {
    if (cmp(i, out.back()) >= 0) out.push_back(i);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

ComparisonResult compare(SymbolView a, SymbolView b) { return compare_views(scratch, a, b); }

ComparisonResult lex_compare(std::span<const Word> xs, std::span<const Word> ys) {
  const std::size_t common = std::min(xs.size(), ys.size());
  for (std::size_t i = 0; i < common; ++i) {
    auto c = compare(xs[i], ys[i]);
    if (c != 0) return c;
  }
  if (xs.size() == ys.size()) return std::weak_ordering::equivalent;
  return xs.size() < ys.size() ? std::weak_ordering::less : std::weak_ordering::greater;
}

IndexCollection max_index_collection(std::span<const Word> xs) {
  if (xs.empty()) throw Error(ErrorKind::EmptySequence, "max_index_collection: empty sequence");
  return greedy_collection(xs.size(), [&](std::size_t i, std::size_t j) {
    return compare(xs[i - 1], xs[j - 1]);
  });
}

IndexCollection concat_collection(std::span<const Word> xs, std::span<const Word> ys) {
  if (xs.empty() || ys.empty()) {
    throw Error(ErrorKind::EmptySequence, "concat_collection: empty sequence");
  }
  const IndexCollection left = max_index_collection(xs);
  const IndexCollection right = max_index_collection(ys);
  const Word& right_head = ys[right.front() - 1];

  // k = the last position of `left` whose element is not below right_head.
  std::size_t k = 0;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (compare(right_head, xs[left[i] - 1]) <= 0) k = i + 1;
  }
  IndexCollection out(left.begin(), left.begin() + static_cast<std::ptrdiff_t>(k));
  for (auto h : right) out.push_back(xs.size() + h);
  return out;
}

std::string to_symbol(ComparisonResult c) {
  if (c < 0) return "<";
  if (c > 0) return ">";
  return "=";
}

}  // namespace worms
