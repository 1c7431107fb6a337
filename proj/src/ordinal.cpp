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

#include "worms/ordinal.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>

#include "worms/error.hpp"

namespace worms {

namespace {

std::strong_ordering compare_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (auto c = ord_cmp(a[i].exponent, b[i].exponent); c != 0) return c;
    if (auto c = a[i].coefficient <=> b[i].coefficient; c != 0) return c;
  }
  return a.size() <=> b.size();
}

// Removes one unit from the final term.
std::vector<Term> drop_last_unit(const std::vector<Term>& terms) {
  std::vector<Term> out = terms;
  if (out.back().coefficient > 1) {
    --out.back().coefficient;
  } else {
    out.pop_back();
  }
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw Error(ErrorKind::ParseError, "coefficient overflow");
  }
  return a + b;
}

}  // namespace

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) {
      throw Error(ErrorKind::ParseError, "Cantor normal form term with zero coefficient");
    }
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
      throw Error(ErrorKind::ParseError, "Cantor normal form exponents must strictly decrease");
    }
  }
  Ordinal out;
  out.terms_ = std::move(terms);
  return out;
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  return compare_terms(a.terms_, b.terms_);
}

std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b) {
  return compare_terms(a.terms(), b.terms());
}

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Term& head = b.terms().front();
  std::vector<Term> out;
  std::uint64_t merged = 0;
  for (const Term& t : a.terms()) {
    auto c = ord_cmp(t.exponent, head.exponent);
    if (c > 0) out.push_back(t);
    else if (c == 0) merged = t.coefficient;
  }
  out.push_back(Term{head.exponent, checked_add(merged, head.coefficient)});
  out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal from_nat(std::uint64_t k) {
  if (k == 0) return Ordinal{};
  return Ordinal::from_terms({Term{Ordinal{}, k}});
}

std::optional<std::uint64_t> to_nat(const Ordinal& a) {
  if (a.is_zero()) return 0;
  if (a.terms().size() == 1 && a.terms().front().exponent.is_zero()) {
    return a.terms().front().coefficient;
  }
  return std::nullopt;
}

Ordinal monomial(const Ordinal& exponent, std::uint64_t coefficient) {
  return Ordinal::from_terms({Term{exponent, coefficient}});
}

Ordinal omega_pow(const Ordinal& a) { return monomial(a, 1); }

Ordinal succ(const Ordinal& a) { return a + from_nat(1); }

bool is_successor(const Ordinal& a) {
  return !a.is_zero() && a.terms().back().exponent.is_zero();
}

bool is_limit(const Ordinal& a) {
  return !a.is_zero() && !a.terms().back().exponent.is_zero();
}

Ordinal pred(const Ordinal& a) {
  if (!is_successor(a)) {
    throw Error(ErrorKind::BadIndex, "pred of non-successor " + print_ordinal(a));
  }
  return Ordinal::from_terms(drop_last_unit(a.terms()));
}

Ordinal omega_tower(std::size_t n) {
  if (n > kMaxTowerHeight) {
    throw Error(ErrorKind::TowerTooTall, "omega_tower(" + std::to_string(n) + ") exceeds height " +
                                             std::to_string(kMaxTowerHeight));
  }
  Ordinal out = from_nat(1);
  for (std::size_t i = 0; i < n; ++i) out = omega_pow(out);
  return out;
}

Ordinal psi(const Ordinal& a) {
  if (a.is_zero()) return omega_pow(from_nat(1));
  const Ordinal last_exponent = a.terms().back().exponent;
  return Ordinal::from_terms(drop_last_unit(a.terms())) + omega_pow(succ(last_exponent));
}

bool is_psi_closed(const Ordinal& a) {
  if (a.is_zero()) return true;
  if (a.terms().size() != 1 || a.terms().front().coefficient != 1) return false;
  const Ordinal& e = a.terms().front().exponent;
  if (e.is_zero()) return false;
  return std::all_of(e.terms().begin(), e.terms().end(),
                     [](const Term& t) { return !t.exponent.is_zero(); });
}

Ordinal cofinal(const Ordinal& a, std::uint64_t n) {
  if (!is_limit(a)) {
    throw Error(ErrorKind::NotLimit, "cofinal: " + print_ordinal(a) + " is not a limit ordinal");
  }
  const Ordinal& e = a.terms().back().exponent;
  const Ordinal prefix = Ordinal::from_terms(drop_last_unit(a.terms()));
  if (is_successor(e)) return prefix + monomial(pred(e), n + 1);
  return prefix + omega_pow(cofinal(e, n));
}

std::optional<std::uint64_t> cofinal_index(const Ordinal& b, const Ordinal& a) {
  if (!is_limit(b) || a.is_zero()) return std::nullopt;
  const Ordinal& e = b.terms().back().exponent;
  const Ordinal prefix = Ordinal::from_terms(drop_last_unit(b.terms()));
  const Term& tail = a.terms().back();

  if (is_successor(e)) {
    if (tail.exponent != pred(e)) return std::nullopt;
    if (prefix + monomial(tail.exponent, tail.coefficient) != a) return std::nullopt;
    return tail.coefficient - 1;
  }
  if (tail.coefficient != 1) return std::nullopt;
  if (prefix + omega_pow(tail.exponent) != a) return std::nullopt;
  return cofinal_index(e, tail.exponent);
}

bool is_R(const Ordinal& a, const Ordinal& b) {
  return succ(a) == b || cofinal_index(b, a).has_value();
}

Ordinal omega_tail(const Ordinal& a) {
  const Ordinal omega = omega_pow(from_nat(1));
  const Ordinal omega_omega = omega_pow(omega);
  if (a < omega_omega) return a;
  std::size_t k = a.terms().size();
  while (k > 0 && a.terms()[k - 1].exponent < omega) --k;
  std::vector<Term> tail(a.terms().begin() + static_cast<std::ptrdiff_t>(k), a.terms().end());
  return omega_omega + Ordinal::from_terms(std::move(tail));
}

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse_all() {
    Ordinal out = parse_ord();
    if (pos_ != text_.size()) fail("trailing characters");
    return out;
  }

 private:
  [[noreturn]] void fail(std::string_view why) const {
    throw Error(ErrorKind::ParseError, "cannot parse ordinal '" + std::string(text_) +
                                           "' at offset " + std::to_string(pos_) + ": " +
                                           std::string(why));
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool peek_digit() const { return pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9'; }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t parse_nat() {
    if (!peek_digit()) fail("expected a natural number");
    const std::size_t start = pos_;
    while (peek_digit()) ++pos_;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) fail("number out of range");
    return value;
  }

  Ordinal parse_ord() {
    if (peek('0') && (pos_ + 1 == text_.size() || text_[pos_ + 1] == ')')) {
      ++pos_;
      return Ordinal{};
    }
    Ordinal sum = parse_term();
    while (peek('+')) {
      ++pos_;
      sum = sum + parse_term();
    }
    return sum;
  }

  Ordinal parse_term() {
    Ordinal exponent;
    std::uint64_t base_nat = 0;
    if (peek('w')) {
      ++pos_;
      if (peek('^')) {
        ++pos_;
        expect('(');
        exponent = parse_ord();
        expect(')');
      } else {
        exponent = from_nat(1);
      }
    } else {
      base_nat = parse_nat();
      if (base_nat == 0) fail("a term cannot be 0");
    }
    std::uint64_t coefficient = 1;
    if (peek('*')) {
      ++pos_;
      coefficient = parse_nat();
      if (coefficient == 0) fail("coefficient must be at least 1");
    }
    if (base_nat != 0) {
      if (base_nat > std::numeric_limits<std::uint64_t>::max() / coefficient) fail("overflow");
      return from_nat(base_nat * coefficient);
    }
    return monomial(exponent, coefficient);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).parse_all(); }

std::string print_ordinal(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const Term& t : a.terms()) {
    if (!out.empty()) out += '+';
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    if (t.exponent == from_nat(1)) {
      out += 'w';
    } else {
      out += "w^(" + print_ordinal(t.exponent) + ")";
    }
    if (t.coefficient > 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

std::uint64_t term_count(const Ordinal& a) {
  std::uint64_t n = 0;
  for (const Term& t : a.terms()) n += t.coefficient;
  return n;
}

std::uint64_t hereditary_size(const Ordinal& a) {
  std::uint64_t n = 0;
  for (const Term& t : a.terms()) n += t.coefficient * (1 + hereditary_size(t.exponent));
  return n;
}

namespace {

// Exponent candidates for ordinals below `bound`: everything up to the
// bound's leading exponent.
Ordinal exponent_bound(const Ordinal& bound) {
  return succ(bound.terms().front().exponent);
}

// Builds every non-increasing exponent multiset drawn from `exponents`
// (ascending) whose total weight stays within `budget`.
void build_sums(const std::vector<Ordinal>& exponents, const std::vector<std::size_t>& weight,
                std::size_t budget, std::vector<Ordinal>& out) {
  std::vector<Term> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t max_index, std::size_t left) {
    out.push_back(Ordinal::from_terms(current));
    for (std::size_t i = max_index; i-- > 0;) {
      const std::size_t w = weight[i];
      if (w > left) continue;
      for (std::uint64_t c = 1; c * w <= left; ++c) {
        current.push_back(Term{exponents[i], c});
        rec(i, left - static_cast<std::size_t>(c) * w);
        current.pop_back();
      }
    }
  };
  rec(exponents.size(), budget);
}

}  // namespace

std::vector<Ordinal> enumerate_by_terms(const Ordinal& bound, std::size_t max_terms) {
  if (bound.is_zero()) return {};
  if (auto k = to_nat(bound)) {
    std::vector<Ordinal> out;
    for (std::uint64_t i = 0; i < *k && i <= max_terms; ++i) out.push_back(from_nat(i));
    return out;
  }
  const std::vector<Ordinal> exponents = enumerate_by_terms(exponent_bound(bound), max_terms);
  std::vector<Ordinal> all;
  build_sums(exponents, std::vector<std::size_t>(exponents.size(), 1), max_terms, all);
  std::vector<Ordinal> out;
  for (auto& o : all) {
    if (o < bound) out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ordinal> enumerate_by_size(const Ordinal& bound, std::size_t max_size) {
  if (bound.is_zero()) return {};
  if (auto k = to_nat(bound)) {
    std::vector<Ordinal> out;
    for (std::uint64_t i = 0; i < *k && i <= max_size; ++i) out.push_back(from_nat(i));
    return out;
  }
  if (max_size == 0) return {Ordinal{}};
  const std::vector<Ordinal> exponents =
      enumerate_by_size(exponent_bound(bound), max_size - 1);
  std::vector<std::size_t> weight;
  for (const auto& e : exponents) weight.push_back(1 + hereditary_size(e));
  std::vector<Ordinal> all;
  build_sums(exponents, weight, max_size, all);
  std::vector<Ordinal> out;
  for (auto& o : all) {
    if (o < bound) out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace worms
