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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace worms {

struct Term;

/// An ordinal below epsilon_0 in hereditary Cantor normal form,
/// sum of w^e_i * c_i with strictly decreasing exponents and c_i >= 1.
/// The default value is 0.
class Ordinal {
 public:
  Ordinal() = default;

  /// Throws Error{ParseError} if the terms are not in Cantor normal form.
  static Ordinal from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

struct Term {
  Ordinal exponent;
  std::uint64_t coefficient = 1;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Standard order on Cantor normal forms.
std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b);

/// Ordinal addition (left terms below the head of `b` are absorbed).
Ordinal ord_add(const Ordinal& a, const Ordinal& b);
inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return ord_add(a, b); }

Ordinal from_nat(std::uint64_t k);
std::optional<std::uint64_t> to_nat(const Ordinal& a);
Ordinal omega_pow(const Ordinal& a);
Ordinal succ(const Ordinal& a);
bool is_limit(const Ordinal& a);
bool is_successor(const Ordinal& a);

/// w^e * c as a single term.
Ordinal monomial(const Ordinal& exponent, std::uint64_t coefficient = 1);

/// The predecessor of a successor ordinal. Throws Error{BadIndex} otherwise.
Ordinal pred(const Ordinal& a);

inline constexpr std::size_t kMaxTowerHeight = 12;

/// w_0 = 1, w_{n+1} = w^{w_n}. Throws Error{TowerTooTall} for n > 12.
Ordinal omega_tower(std::size_t n);

/// psi(0) = w; otherwise the last CNF exponent is increased by one.
Ordinal psi(const Ordinal& a);

/// True iff a = 0 or a = w^(w*b) with b >= 1: exactly the ordinals
/// closed under psi.
bool is_psi_closed(const Ordinal& a);

/// The n-th member of the standard fundamental sequence of a limit ordinal.
/// Throws Error{NotLimit}.
Ordinal cofinal(const Ordinal& a, std::uint64_t n);

/// The n with cofinal(b, n) == a, if any. Inverts the two clauses of
/// `cofinal` structurally; never searches over n.
std::optional<std::uint64_t> cofinal_index(const Ordinal& b, const Ordinal& a);

/// a R b  <=>  b = a + 1, or a = b[n] for some n.
bool is_R(const Ordinal& a, const Ordinal& b);

/// Below w^w the ordinal itself; otherwise w^w followed by the maximal run
/// of trailing terms with finite exponents.
Ordinal omega_tail(const Ordinal& a);

/// Grammar: ord := "0" | term ("+" term)*, term := base ("*" nat)?,
/// base := "w" | "w^(" ord ")" | nat. Terms are folded with ord_add, so
/// non-canonical sums are accepted. Throws Error{ParseError}.
Ordinal parse_ordinal(std::string_view text);

/// Canonical text, e.g. "w^(w)+w*2+3".
std::string print_ordinal(const Ordinal& a);

/// Number of CNF terms counted with multiplicity (w*3 has three).
std::uint64_t term_count(const Ordinal& a);

/// Hereditary size: sum over terms, with multiplicity, of 1 + size(exponent).
/// size(n) = n, size(w) = 2, size(w^w) = 3.
std::uint64_t hereditary_size(const Ordinal& a);

/// All ordinals below `bound` with term_count <= max_terms whose exponents
/// satisfy the same cap recursively. Ascending.
std::vector<Ordinal> enumerate_by_terms(const Ordinal& bound, std::size_t max_terms);

/// All ordinals below `bound` with hereditary_size <= max_size, ascending.
std::vector<Ordinal> enumerate_by_size(const Ordinal& bound, std::size_t max_size);

}  // namespace worms
