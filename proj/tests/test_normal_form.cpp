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

#include "doctest.h"
#include "test_support.hpp"
#include "worms/error.hpp"

using namespace worms;
using testing::N;
using testing::W;

TEST_CASE("is_normal examples") {
  CHECK(is_normal(Word{}));
  CHECK_FALSE(is_normal(W("0 1")));
  CHECK(is_normal(W("1 0 1")));
  CHECK(is_normal(W("2 2 2")));
  CHECK(is_normal(W("3 2 1 3 0 3 2")));
  CHECK_FALSE(is_normal(W("1 1 2")));
}

TEST_CASE("normalize examples") {
  CHECK(normalize(W("0 1")).word() == W("1"));
  CHECK(normalize(W("1 1 2")).word() == W("2"));
  CHECK(normalize(W("2 0 1 0 2")).word() == W("2 0 2"));
  CHECK(normalize(Word{}).empty());
}

TEST_CASE("NormalWord validates its input") {
  CHECK_NOTHROW(NormalWord(W("1 0 1")));
  try {
    NormalWord bad(W("0 1"));
    FAIL("expected NotNormal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNormal);
  }
}

TEST_CASE("diamond examples") {
  CHECK(diamond(1, NormalWord{}).word() == W("1"));
  CHECK(diamond(2, N("1")).word() == W("2"));
  CHECK(diamond(1, N("1 0 1")).word() == W("1 1"));
  CHECK(diamond(3, N("3 2 1 3 2")).word() == W("3 2 3"));
  CHECK(diamond(0, N("1")).word() == W("1 0"));
}

TEST_CASE("append_a examples") {
  CHECK(append_a(0, Word{}) == W("0"));
  CHECK(append_a(3, W("3")) == W("3 3"));
  CHECK(append_a(2, W("1")) == W("1 2"));
}

TEST_CASE("enumerate_normal examples") {
  auto as_words = [](const std::vector<NormalWord>& xs) {
    std::vector<Word> out;
    for (const auto& x : xs) out.push_back(x.word());
    return out;
  };
  CHECK(as_words(enumerate_normal(0, 2)) == std::vector<Word>{W("e"), W("0"), W("0 0")});
  CHECK(as_words(enumerate_normal(1, 2)) ==
        std::vector<Word>{W("e"), W("0"), W("1"), W("0 0"), W("1 0"), W("1 1")});
  for (const auto& x : enumerate_normal(3, 5)) CHECK(is_normal(x.word()));
}

TEST_CASE("normalize: soundness, idempotence, uniqueness") {
  const auto all = enumerate_words(3, 5);
  std::vector<Word> nf;
  for (const auto& a : all) {
    const auto n = normalize(a);
    REQUIRE(compare(a, n.word()) == 0);
    REQUIRE(n.size() <= a.size());
    REQUIRE(is_normal(n.word()));
    REQUIRE(normalize(n.word()) == n);
    if (is_normal(a)) REQUIRE(n.word() == a);
    nf.push_back(n.word());
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      REQUIRE((compare(all[i], all[j]) == 0) == (nf[i] == nf[j]));
    }
  }
}

TEST_CASE("diamond agrees with raw append and grows strictly") {
  for (const auto& a : enumerate_normal(3, 5)) {
    for (Symbol n = 0; n <= 4; ++n) {
      const auto d = diamond(n, a);
      REQUIRE(compare(append_a(n, a.word()), d.word()) == 0);
      REQUIRE(precedes(a.word(), d.word()));
    }
  }
}
