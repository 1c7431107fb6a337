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

#include "worms/correspondence.hpp"

#include <algorithm>

#include "worms/error.hpp"

namespace worms {

namespace {

// `a` is known to be normal with every symbol >= n.
Ordinal o_map_view(SymbolView a, Symbol n) {
  if (std::all_of(a.begin(), a.end(), [n](Symbol s) { return s == n; })) {
    return from_nat(a.size());
  }
  Ordinal sum;
  detail::for_each_part(a, n, [&](SymbolView part) { sum = sum + omega_pow(o_map_view(part, n + 1)); });
  return sum;
}

void word_of_into(const Ordinal& a, Symbol n, Word& out) {
  if (auto k = to_nat(a)) {
    for (std::uint64_t i = 0; i < *k; ++i) out.push_back(n);
    return;
  }
  bool first = true;
  for (const Term& t : a.terms()) {
    for (std::uint64_t c = 0; c < t.coefficient; ++c) {
      if (!first) out.push_back(n);
      word_of_into(t.exponent, n + 1, out);
      first = false;
    }
  }
}

}  // namespace

Ordinal o_map(const NormalWord& a, Symbol n) {
  if (!in_S(a.word(), n)) {
    throw Error(ErrorKind::NotInS, "o_map: word '" + print_word(a.word()) +
                                       "' has a symbol below " + std::to_string(n));
  }
  return o_map_view(a.word().view(), n);
}

NormalWord word_of(const Ordinal& a, Symbol n) {
  Word out;
  word_of_into(a, n, out);
  return NormalWord(std::move(out));
}

OrdMultiset::OrdMultiset(std::initializer_list<std::pair<Ordinal, std::uint64_t>> entries) {
  for (const auto& [x, c] : entries) add(x, c);
}

void OrdMultiset::add(const Ordinal& x, std::uint64_t count) {
  if (count == 0) return;
  entries_[x] += count;
}

std::uint64_t OrdMultiset::multiplicity(const Ordinal& x) const {
  auto it = entries_.find(x);
  return it == entries_.end() ? 0 : it->second;
}

const Ordinal& OrdMultiset::min() const {
  if (entries_.empty()) throw Error(ErrorKind::EmptySequence, "min of the empty multiset");
  return entries_.begin()->first;
}

void OrdMultiset::erase_below(const Ordinal& x) {
  entries_.erase(entries_.begin(), entries_.lower_bound(x));
}

std::string print_multiset(const OrdMultiset& m) {
  if (m.empty()) return "{ }";
  std::string out = "{";
  bool first = true;
  for (auto it = m.entries().rbegin(); it != m.entries().rend(); ++it) {
    if (!first) out += ", ";
    out += print_ordinal(it->first) + ":" + std::to_string(it->second);
    first = false;
  }
  return out + "}";
}

OrdMultiset word_to_multiset(const NormalWord& a) {
  OrdMultiset out;
  if (a.empty()) return out;
  detail::for_each_part(a.word().view(), 0, [&](SymbolView block) {
    out.add(o_map_view(block, 1));
  });
  return out;
}

std::strong_ordering ms_compare(const OrdMultiset& x, const OrdMultiset& y) {
  auto xi = x.entries().rbegin();
  auto yi = y.entries().rbegin();
  // Walk both supports from the top; the first disagreement decides.
  while (xi != x.entries().rend() || yi != y.entries().rend()) {
    if (xi == x.entries().rend()) return std::strong_ordering::less;
    if (yi == y.entries().rend()) return std::strong_ordering::greater;
    if (auto c = xi->first <=> yi->first; c != 0) {
      // The larger ordinal is missing from the other side.
      return c > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (auto c = xi->second <=> yi->second; c != 0) return c;
    ++xi;
    ++yi;
  }
  return std::strong_ordering::equal;
}

OrdMultiset ms_diamond0(const OrdMultiset& x) {
  OrdMultiset out = x;
  out.add(Ordinal{});
  return out;
}

namespace {

OrdMultiset raise_min(const OrdMultiset& x, const Ordinal& target) {
  OrdMultiset out = x;
  out.erase_below(target);
  out.add(target);
  return out;
}

}  // namespace

OrdMultiset ms_diamond1(const OrdMultiset& x) {
  if (x.empty()) return x;
  return raise_min(x, succ(x.min()));
}

OrdMultiset ms_diamond2(const OrdMultiset& x) {
  if (x.empty()) return x;
  return raise_min(x, psi(x.min()));
}

}  // namespace worms
