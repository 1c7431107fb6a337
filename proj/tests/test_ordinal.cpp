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

#include <set>

#include "doctest.h"
#include "test_support.hpp"
#include "worms/error.hpp"

using namespace worms;
using testing::O;
using testing::SmallOrd;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

const Ordinal w = omega_pow(from_nat(1));

}  // namespace

TEST_CASE("parse and print") {
  CHECK(print_ordinal(O("w^(w)+w*2+3")) == "w^(w)+w*2+3");
  CHECK(O("1+w") == w);
  CHECK(print_ordinal(psi(Ordinal{})) == "w");
  CHECK(print_ordinal(Ordinal{}) == "0");
  CHECK(print_ordinal(O("w^(1)")) == "w");
  CHECK(print_ordinal(O("w^(0)*3")) == "3");
  CHECK(print_ordinal(O("w^(2)*5+w^(2)")) == "w^(2)*6");
  CHECK(print_ordinal(O("w^(w^(w))")) == "w^(w^(w))");
  CHECK(O("w+w") == O("w*2"));
  CHECK(O("3+2") == from_nat(5));
  CHECK(O("2*3") == from_nat(6));
}

TEST_CASE("parse rejects malformed text") {
  for (const char* bad : {"", "x", "w^w", "w^()", "w*0", "0+w", "w+0", "w^(w", "w+", "+w", "w**2",
                          "w *2", "w^(0*2)", "00", "w^(w)*"}) {
    const std::string text = bad;
    CAPTURE(text);
    CHECK(kind_of([&] { parse_ordinal(bad); }) == ErrorKind::ParseError);
  }
}

TEST_CASE("printed ordinals re-parse") {
  for (const auto& a : enumerate_by_size(omega_tower(3), 5)) {
    CHECK(parse_ordinal(print_ordinal(a)) == a);
  }
}

TEST_CASE("ord_cmp examples") {
  CHECK(ord_cmp(Ordinal{}, Ordinal{}) == 0);
  CHECK(ord_cmp(w, O("w+1")) < 0);
  CHECK(ord_cmp(O("w^(w)"), O("w^(2)*5")) > 0);
}

TEST_CASE("ord_add examples") {
  CHECK(Ordinal{} + w == w);
  CHECK(O("w+1") + w == O("w*2"));
  CHECK(O("w^(w)") + O("w^(w)") == O("w^(w)*2"));
}

TEST_CASE("basic constructors and predicates") {
  CHECK(omega_pow(Ordinal{}) == from_nat(1));
  CHECK_FALSE(is_limit(O("w+1")));
  CHECK(is_limit(O("w^(2)")));
  CHECK_FALSE(is_limit(Ordinal{}));
  CHECK(is_successor(from_nat(3)));
  CHECK(to_nat(from_nat(7)) == 7u);
  CHECK_FALSE(to_nat(w).has_value());
  CHECK(succ(w) == O("w+1"));
  CHECK(pred(O("w+1")) == w);
  CHECK(kind_of([] { pred(w); }) == ErrorKind::BadIndex);
  CHECK(kind_of([] { Ordinal::from_terms({Term{from_nat(1), 1}, Term{from_nat(2), 1}}); }) ==
        ErrorKind::ParseError);
  CHECK(kind_of([] { Ordinal::from_terms({Term{from_nat(1), 0}}); }) == ErrorKind::ParseError);
}

TEST_CASE("omega_tower") {
  CHECK(omega_tower(0) == from_nat(1));
  CHECK(omega_tower(1) == w);
  CHECK(omega_tower(2) == O("w^(w)"));
  CHECK(omega_tower(3) == O("w^(w^(w))"));
  CHECK_NOTHROW(omega_tower(12));
  CHECK(kind_of([] { omega_tower(13); }) == ErrorKind::TowerTooTall);
}

TEST_CASE("psi") {
  CHECK(psi(Ordinal{}) == w);
  CHECK(psi(O("w+1")) == O("w*2"));
  CHECK(psi(O("w^(w)")) == O("w^(w+1)"));
  CHECK(psi(O("w*3")) == O("w*2+w^(2)"));
  CHECK(psi(from_nat(2)) == O("1+w"));
}

TEST_CASE("is_psi_closed") {
  CHECK(is_psi_closed(Ordinal{}));
  CHECK(is_psi_closed(O("w^(w)")));
  CHECK_FALSE(is_psi_closed(O("w^(w+1)")));
  CHECK(is_psi_closed(O("w^(w^(2)+w)")));
  CHECK_FALSE(is_psi_closed(O("w^(w)*2")));
  CHECK_FALSE(is_psi_closed(w));
}

TEST_CASE("is_psi_closed agrees with sampled psi-closure") {
  const auto pool = enumerate_by_size(omega_tower(3), 5);
  for (const auto& a : pool) {
    if (a.is_zero()) continue;
    bool closed = true;
    for (const auto& b : pool) {
      if (b < a && !(psi(b) < a)) {
        closed = false;
        break;
      }
    }
    CAPTURE(print_ordinal(a));
    CHECK(is_psi_closed(a) == closed);
  }
}

TEST_CASE("cofinal and cofinal_index") {
  CHECK(cofinal(w, 3) == from_nat(4));
  CHECK(cofinal(O("w^(w)"), 2) == O("w^(3)"));
  CHECK(cofinal(O("w^(2)*2"), 1) == O("w^(2)+w*2"));
  CHECK(kind_of([] { cofinal(O("w+1"), 0); }) == ErrorKind::NotLimit);
  CHECK(kind_of([] { cofinal(Ordinal{}, 0); }) == ErrorKind::NotLimit);

  CHECK(cofinal_index(w, from_nat(4)) == 3u);
  CHECK(cofinal_index(O("w^(w)"), O("w^(3)")) == 2u);
  CHECK_FALSE(cofinal_index(O("w*2"), w).has_value());
  CHECK_FALSE(cofinal_index(O("w+1"), w).has_value());
}

TEST_CASE("fundamental sequences increase toward their limit") {
  for (const auto& b : enumerate_by_terms(O("w^(w^(2))"), 4)) {
    if (!is_limit(b)) continue;
    for (std::uint64_t n = 0; n <= 5; ++n) {
      REQUIRE(cofinal(b, n) < b);
      REQUIRE(cofinal(b, n) < cofinal(b, n + 1));
      REQUIRE(cofinal_index(b, cofinal(b, n)) == n);
    }
  }
}

TEST_CASE("is_R") {
  CHECK(is_R(Ordinal{}, from_nat(1)));
  CHECK(is_R(from_nat(2), w));
  CHECK_FALSE(is_R(w, O("w*2")));
  CHECK(is_R(w, O("w+1")));
}

TEST_CASE("omega_tail") {
  CHECK(omega_tail(from_nat(5)) == from_nat(5));
  CHECK(omega_tail(O("w^(w)*2+w^(3)")) == O("w^(w)+w^(3)"));
  CHECK(omega_tail(omega_tower(3)) == O("w^(w)"));
  CHECK(omega_tail(omega_tower(4)) == O("w^(w)"));
  CHECK(omega_tail(O("w^(w+1)+w^(w)+w*2+1")) == O("w^(w)+w*2+1"));
}

TEST_CASE("order and addition agree with the polynomial model below w^w") {
  const auto pool = enumerate_by_terms(O("w^(4)"), 4);
  CHECK(pool.size() > 50);
  for (const auto& a : pool) {
    const auto sa = *SmallOrd::from(a);
    for (const auto& b : pool) {
      const auto sb = *SmallOrd::from(b);
      REQUIRE(ord_cmp(a, b) == (sa <=> sb));
      REQUIRE(*SmallOrd::from(a + b) == sa + sb);
      REQUIRE(a <= a + b);
      REQUIRE(b <= a + b);
    }
  }
}

TEST_CASE("addition is associative") {
  const auto pool = enumerate_by_size(omega_tower(3), 4);
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      for (const auto& c : pool) REQUIRE((a + b) + c == a + (b + c));
    }
  }
}

TEST_CASE("enumerations are sorted, distinct and bounded") {
  const auto by_terms = enumerate_by_terms(O("w^(3)"), 3);
  CHECK(by_terms.size() == 20);
  CHECK(by_terms.front() == Ordinal{});
  CHECK(by_terms.back() == O("w^(2)*3"));
  for (std::size_t i = 1; i < by_terms.size(); ++i) CHECK(by_terms[i - 1] < by_terms[i]);
  for (const auto& a : by_terms) CHECK(term_count(a) <= 3);

  const auto by_size = enumerate_by_size(omega_tower(3), 6);
  for (std::size_t i = 1; i < by_size.size(); ++i) CHECK(by_size[i - 1] < by_size[i]);
  for (const auto& a : by_size) {
    CHECK(hereditary_size(a) <= 6);
    CHECK(a < omega_tower(3));
  }
}

TEST_CASE("psi is the second R-successor of a nonzero ordinal") {
  // 0 lies in no fundamental sequence, so its only R-successor is 1.
  CHECK_FALSE(is_R(Ordinal{}, psi(Ordinal{})));

  const auto candidates = enumerate_by_terms(O("w^(4)"), 6);
  for (const auto& b : enumerate_by_terms(O("w^(3)"), 4)) {
    if (b.is_zero()) continue;
    CAPTURE(print_ordinal(b));
    REQUIRE(b < psi(b));
    REQUIRE(is_R(b, succ(b)));
    REQUIRE(is_R(b, psi(b)));
    for (const auto& g : candidates) {
      if (succ(b) < g && g < psi(b)) REQUIRE_FALSE(is_R(b, g));
    }
  }
}
