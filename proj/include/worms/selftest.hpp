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
#include <functional>
#include <string>
#include <vector>

#include "worms/word.hpp"

namespace worms {

struct SelftestOptions {
  Symbol alphabet = 3;      // words use symbols 0..alphabet
  std::size_t maxlen = 5;   // longest word enumerated
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
};

struct InvariantReport {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string counterexample;  // first failure in enumeration order
};

/// Runs every invariant suite. `on_report` is called after each invariant.
std::vector<InvariantReport> run_selftest(
    const SelftestOptions& options,
    const std::function<void(const InvariantReport&)>& on_report = {});

/// Comparator built only on the exhaustive subsequence oracle, memoised over
/// all words with symbols <= max_symbol and length <= max_len.
class NaiveComparator {
 public:
  NaiveComparator(Symbol max_symbol, std::size_t max_len);

  std::weak_ordering operator()(const Word& a, const Word& b);
  std::size_t index_of(SymbolView w) const;
  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::weak_ordering compare_ids(std::uint32_t a, std::uint32_t b);
  const std::vector<std::uint32_t>& selection(std::uint32_t a);

  Symbol base_;
  std::size_t max_len_;
  std::vector<std::size_t> offset_;
  std::vector<Word> words_;
  std::vector<std::int8_t> memo_;
  std::vector<std::vector<std::uint32_t>> selected_;
  std::vector<bool> selected_ready_;
};

}  // namespace worms
