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
using testing::W;

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

}  // namespace

TEST_CASE("parse_word accepts the documented forms") {
  CHECK(parse_word("e").empty());
  CHECK(parse_word("3 2 3") == Word{3, 2, 3});
  CHECK(parse_word("3,10,0") == Word{3, 10, 0});
  CHECK(parse_word("3   2") == Word{3, 2});
  CHECK(parse_word("0") == Word{0});
}

TEST_CASE("parse_word rejects malformed input") {
  for (const char* bad : {"", " ", "x", "3 x", "-1", "1,,2", "1 , 2", "e e", "3 e", ",1", "1,",
                          " 1", "1 ", "99999999999999999999999"}) {
    CAPTURE(bad);
    CHECK(kind_of([&] { parse_word(bad); }) == ErrorKind::ParseError);
  }
}

TEST_CASE("print_word is canonical") {
  CHECK(print_word(Word{}) == "e");
  CHECK(print_word(Word{0, 1}) == "0 1");
  CHECK(print_word(Word{3, 10}) == "3 10");
  CHECK(print_word(parse_word("3,10,0")) == "3 10 0");
}

TEST_CASE("parse and print round trip") {
  for (const auto& w : enumerate_words(11, 3)) {
    CHECK(parse_word(print_word(w)) == w);
  }
  for (const char* canonical : {"e", "0", "1 0 1", "12 3 400"}) {
    CHECK(print_word(parse_word(canonical)) == canonical);
  }
}

TEST_CASE("concat, power, length") {
  CHECK(concat(Word{}, Word{2}) == Word{2});
  CHECK(concat(Word{1}, Word{}) == Word{1});
  CHECK(power(Word{3, 2}, 2) == Word{3, 2, 3, 2});
  CHECK(power(Word{3, 2}, 0).empty());
  CHECK(length(Word{3, 3, 2}) == 3);
}

TEST_CASE("min_symbol") {
  CHECK(min_symbol(Word{3, 2, 3}) == 2);
  CHECK(min_symbol(Word{0}) == 0);
  CHECK(min_symbol(Word{1, 0, 1}) == 0);
  CHECK(kind_of([] { min_symbol(Word{}); }) == ErrorKind::EmptyWord);
}

TEST_CASE("split_at") {
  CHECK(split_at(Word{0}, 0) == std::vector<Word>{Word{}, Word{}});
  CHECK(split_at(W("3 2 1 3 0 3 2"), 0) == std::vector<Word>{W("3 2 1 3"), W("3 2")});
  CHECK(split_at(Word{2}, 1) == std::vector<Word>{Word{2}});
  CHECK(split_at(Word{}, 4) == std::vector<Word>{Word{}});
  CHECK(kind_of([] { split_at(Word{2, 0}, 1); }) == ErrorKind::SymbolBelowSeparator);
}

TEST_CASE("split_at then join reproduces the word") {
  for (const auto& w : enumerate_words(3, 5)) {
    const Symbol floor = w.empty() ? 0 : min_symbol(w);
    for (Symbol n = 0; n <= floor; ++n) {
      const auto parts = split_at(w, n);
      CHECK(parts.size() == static_cast<std::size_t>(std::count(w.begin(), w.end(), n)) + 1);
      CHECK(join(parts, n) == w);
    }
  }
}

TEST_CASE("in_S and in_W") {
  CHECK(in_S(Word{3, 2}, 2));
  CHECK_FALSE(in_S(Word{3, 2}, 3));
  CHECK_FALSE(in_W(Word{3, 2}, 2));
  CHECK(in_W(Word{3, 2}, 3));
  CHECK(in_S(Word{}, 5));
  CHECK(in_W(Word{}, 0));
}

TEST_CASE("enumerate_words order and count") {
  CHECK(enumerate_words(0, 2) == std::vector<Word>{Word{}, Word{0}, Word{0, 0}});
  CHECK(enumerate_words(1, 1) == std::vector<Word>{Word{}, Word{0}, Word{1}});
  CHECK(enumerate_words(2, 5).size() == 364);
  CHECK(enumerate_words(3, 5).size() == 1365);

  const auto all = enumerate_words(3, 4);
  CHECK(std::adjacent_find(all.begin(), all.end(), [](const Word& a, const Word& b) {
          return !shortlex_less(a, b);
        }) == all.end());
  for (const auto& w : all) CHECK(in_W(w, 3));
}
