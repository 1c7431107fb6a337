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

#include "worms/gadget.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "worms/error.hpp"

namespace worms {

namespace {

void require_w3(const NormalWord& a, const char* where) {
  if (!in_W(a.word(), 3)) {
    throw Error(ErrorKind::NotInW3,
                std::string(where) + ": word '" + print_word(a.word()) + "' has a symbol above 3");
  }
}

Word threes(std::size_t n) { return power(Word{3}, n); }

// I_{from} I_{from-1} ... I_{to}; empty when from < to.
Word descending_I(std::size_t from, std::size_t to) {
  Word out;
  for (std::size_t s = from; s >= to && s >= 1; --s) out.append(word_I(s).view());
  return out;
}

}  // namespace

void Biorder::validate() const {
  if (l1.empty()) throw Error(ErrorKind::InvalidBiorder, "biorder must have at least one element");
  std::set<std::string> seen;
  for (const auto& label : l1) {
    if (label.empty()) throw Error(ErrorKind::InvalidBiorder, "empty element label");
    if (!seen.insert(label).second) {
      throw Error(ErrorKind::InvalidBiorder, "duplicate label '" + label + "' in l1");
    }
  }
  std::set<std::string> second(l2.begin(), l2.end());
  if (l2.size() != l1.size() || second != seen) {
    throw Error(ErrorKind::InvalidBiorder, "l2 is not a permutation of l1");
  }
}

std::vector<std::size_t> Biorder::signature() const {
  std::vector<std::size_t> out;
  for (const auto& label : l1) {
    auto it = std::find(l2.begin(), l2.end(), label);
    out.push_back(static_cast<std::size_t>(it - l2.begin()) + 1);
  }
  return out;
}

bool isomorphic(const Biorder& a, const Biorder& b) {
  return a.size() == b.size() && a.signature() == b.signature();
}

Biorder biorder_from_permutation(std::span<const std::size_t> l2_order) {
  Biorder out;
  for (std::size_t i = 1; i <= l2_order.size(); ++i) out.l1.push_back("b" + std::to_string(i));
  for (auto r : l2_order) {
    if (r < 1 || r > l2_order.size()) throw Error(ErrorKind::InvalidBiorder, "rank out of range");
    out.l2.push_back(out.l1[r - 1]);
  }
  out.validate();
  return out;
}

std::vector<Word> blocks(const NormalWord& a) {
  if (a.empty()) throw Error(ErrorKind::EmptyWord, "blocks of the empty word");
  return split_at(a.word(), 0);
}

NormalWord slice(const NormalWord& a, std::size_t m) {
  const auto parts = blocks(a);
  if (m < 1 || m > parts.size()) {
    throw Error(ErrorKind::SliceIndexOutOfRange,
                "slice " + std::to_string(m) + " of a word with " + std::to_string(parts.size()) +
                    " blocks");
  }
  return NormalWord(join(std::span(parts).first(m), 0));
}

bool is_slice(const NormalWord& a, const Word& b) {
  if (a.empty() || b.empty()) return false;
  const auto parts = blocks(a);
  for (std::size_t m = 1; m <= parts.size(); ++m) {
    if (join(std::span(parts).first(m), 0) == b) return true;
  }
  return false;
}

bool is_slice_formula(const NormalWord& a, const NormalWord& b) {
  require_w3(a, "is_slice_formula");
  require_w3(b, "is_slice_formula");
  if (a.empty() || b.empty()) return false;
  return compare(b.word(), a.word()) <= 0 && precedes(a.word(), diamond(1, b).word());
}

Word word_I(std::size_t s) {
  Word out = threes(s);
  out.push_back(2);
  return out;
}

NormalWord word_K(std::size_t h, std::size_t k) {
  if (k < 1 || k > h) {
    throw Error(ErrorKind::BadIndex,
                "word_K needs 1 <= k <= h, got h=" + std::to_string(h) + " k=" + std::to_string(k));
  }
  Word out = descending_I(h - 1, k);
  out.append(threes(k).view());
  return NormalWord(std::move(out));
}

Word word_L(std::size_t h) {
  if (h < 1) throw Error(ErrorKind::BadIndex, "word_L needs h >= 1");
  return descending_I(h - 1, 1);
}

std::vector<NormalWord> u_sequence(const NormalWord& a) {
  require_w3(a, "u_sequence");
  const auto parts = split_at(a.word(), 0);
  const std::size_t r = parts.size();
  std::vector<NormalWord> out;
  for (std::size_t i = 1; i <= r; ++i) {
    // A_r ... A_i are the leftmost r - i + 1 blocks.
    out.push_back(diamond(3, NormalWord(join(std::span(parts).first(r - i + 1), 0))));
  }
  return out;
}

NormalWord build_from_indices(std::size_t h, std::span<const std::size_t> ks) {
  if (h < 1) throw Error(ErrorKind::BadIndex, "build_from_indices needs h >= 1");
  if (ks.empty()) throw Error(ErrorKind::BadIndex, "build_from_indices needs a nonempty index list");
  for (auto k : ks) {
    if (k < 1 || k > h) {
      throw Error(ErrorKind::BadIndex, "index " + std::to_string(k) + " outside [1, " +
                                           std::to_string(h) + "]");
    }
  }
  Word prefix_unit = word_L(h);
  prefix_unit.push_back(1);

  const std::size_t r = ks.size();
  Word out;
  for (std::size_t i = r; i >= 1; --i) {
    const std::size_t k = ks[i - 1];
    out.append(power(prefix_unit, i - 1).view());
    out.append(descending_I(h - 1, k).view());
    out.append(threes(k - 1).view());
    if (i > 1) out.push_back(0);
  }
  if (!is_normal(out)) {
    throw Error(ErrorKind::NormalityAssertionFailed,
                "build_from_indices produced a non-normal word '" + print_word(out) + "'");
  }
  return NormalWord(std::move(out));
}

Biorder decode_biorder(const NormalWord& a) {
  require_w3(a, "decode_biorder");
  const auto parts = blocks(a);
  const std::size_t h = parts.size();

  std::vector<NormalWord> slices;
  std::vector<NormalWord> images;
  for (std::size_t m = 1; m <= h; ++m) {
    slices.emplace_back(join(std::span(parts).first(m), 0));
    images.push_back(diamond(3, slices.back()));
  }

  auto sorted_by = [h](const std::vector<NormalWord>& keys) {
    std::vector<std::size_t> order(h);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return precedes(keys[x].word(), keys[y].word());
    });
    for (std::size_t i = 1; i < h; ++i) {
      if (!precedes(keys[order[i - 1]].word(), keys[order[i]].word())) return std::optional<std::vector<std::size_t>>{};
    }
    return std::optional(order);
  };

  const auto first = sorted_by(slices);
  if (!first) {
    throw Error(ErrorKind::NotABiorderEncoding,
                "two slices of '" + print_word(a.word()) + "' are equivalent");
  }
  const auto second = sorted_by(images);
  if (!second) {
    throw Error(ErrorKind::NotABiorderEncoding,
                "two slices of '" + print_word(a.word()) + "' have equivalent diamond-3 images");
  }

  // rank_of[slice index] = first-order rank (0-based)
  std::vector<std::size_t> rank_of(h);
  for (std::size_t r = 0; r < h; ++r) rank_of[(*first)[r]] = r;

  Biorder out;
  for (std::size_t r = 1; r <= h; ++r) out.l1.push_back("b" + std::to_string(r));
  for (auto idx : *second) out.l2.push_back(out.l1[rank_of[idx]]);
  return out;
}

NormalWord encode_biorder(const Biorder& m) {
  m.validate();
  const std::size_t h = m.size();
  if (h == 1) return NormalWord(Word{3});

  const auto rho = m.signature();
  std::vector<std::size_t> ks(h);
  for (std::size_t i = 1; i <= h; ++i) ks[i - 1] = rho[h - i];
  return build_from_indices(h, ks);
}

W3GateVerdict w3_gate(const NormalWord& x, std::span<const NormalWord> candidates) {
  if (x.empty()) return W3GateVerdict{false, std::nullopt};
  for (const auto& y : candidates) {
    if (precedes(y.word(), x.word()) && !precedes(diamond(3, y).word(), x.word())) {
      return W3GateVerdict{false, y};
    }
  }
  return W3GateVerdict{true, std::nullopt};
}

W3GateVerdict w3_gate(const NormalWord& x, Symbol max_symbol, std::size_t max_len) {
  const auto candidates = enumerate_normal(max_symbol, max_len);
  return w3_gate(x, candidates);
}

bool w3_by_comparison(const NormalWord& a) { return precedes(a.word(), Word{4}); }

}  // namespace worms
