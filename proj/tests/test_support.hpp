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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "worms/correspondence.hpp"
#include "worms/normal_form.hpp"
#include "worms/order.hpp"
#include "worms/ordinal.hpp"
#include "worms/word.hpp"

namespace testing {

inline worms::Word W(const char* text) { return worms::parse_word(text); }
inline worms::NormalWord N(const char* text) { return worms::NormalWord(worms::parse_word(text)); }
inline worms::Ordinal O(const char* text) { return worms::parse_ordinal(text); }

// Direct reading of the recursive definition. Every subsequence of the parts
// is tried, and nothing from the greedy engine is used.
inline std::weak_ordering naive_compare(const std::vector<worms::Symbol>& a,
                                        const std::vector<worms::Symbol>& b) {
  if (a.empty() && b.empty()) return std::weak_ordering::equivalent;
  worms::Symbol n = UINT64_MAX;
  for (auto s : a) n = std::min(n, s);
  for (auto s : b) n = std::min(n, s);

  auto split = [n](const std::vector<worms::Symbol>& w) {
    std::vector<std::vector<worms::Symbol>> parts(1);
    for (auto s : w) {
      if (s == n) parts.emplace_back();
      else parts.back().push_back(s);
    }
    return parts;
  };
  using Parts = std::vector<std::vector<worms::Symbol>>;
  const Parts pa = split(a);
  const Parts pb = split(b);

  auto lex = [](const Parts& x, const Parts& y) {
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
      if (auto c = naive_compare(x[i], y[i]); c != 0) return c;
    }
    if (x.size() == y.size()) return std::weak_ordering::equivalent;
    return x.size() < y.size() ? std::weak_ordering::less : std::weak_ordering::greater;
  };
  auto best = [&lex](const Parts& p) {
    Parts top;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p.size()); ++mask) {
      Parts cand;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (mask >> i & 1u) cand.push_back(p[i]);
      }
      if (top.empty() || lex(cand, top) > 0) top = cand;
    }
    return top;
  };
  return lex(best(pa), best(pb));
}

inline std::weak_ordering naive_compare(const worms::Word& a, const worms::Word& b) {
  return naive_compare(a.symbols(), b.symbols());
}

// Ordinals below w^w as coefficient vectors indexed by exponent.
struct SmallOrd {
  std::vector<std::uint64_t> coef;  // coef[e] = coefficient of w^e

  static std::optional<SmallOrd> from(const worms::Ordinal& a) {
    SmallOrd out;
    for (const auto& t : a.terms()) {
      auto e = worms::to_nat(t.exponent);
      if (!e) return std::nullopt;
      if (out.coef.size() <= *e) out.coef.resize(*e + 1, 0);
      out.coef[*e] = t.coefficient;
    }
    return out;
  }

  std::uint64_t at(std::size_t e) const { return e < coef.size() ? coef[e] : 0; }

  friend std::strong_ordering operator<=>(const SmallOrd& x, const SmallOrd& y) {
    const std::size_t top = std::max(x.coef.size(), y.coef.size());
    for (std::size_t e = top; e-- > 0;) {
      if (auto c = x.at(e) <=> y.at(e); c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const SmallOrd& x, const SmallOrd& y) { return (x <=> y) == 0; }

  friend SmallOrd operator+(const SmallOrd& x, const SmallOrd& y) {
    std::size_t lead = 0;
    bool y_zero = true;
    for (std::size_t e = y.coef.size(); e-- > 0;) {
      if (y.coef[e] != 0) {
        lead = e;
        y_zero = false;
        break;
      }
    }
    if (y_zero) return x;
    SmallOrd out;
    out.coef.assign(std::max(x.coef.size(), y.coef.size()), 0);
    for (std::size_t e = lead + 1; e < x.coef.size(); ++e) out.coef[e] = x.coef[e];
    out.coef[lead] = x.at(lead) + y.coef[lead];
    for (std::size_t e = 0; e < lead; ++e) out.coef[e] = y.coef[e];
    return out;
  }
};

}  // namespace testing
