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

#include "worms/normal_form.hpp"

#include "worms/error.hpp"

namespace worms {

namespace {

bool is_normal_view(SymbolView a) {
  if (a.empty()) return true;
  const Symbol n = detail::min_symbol(a, {});
  bool ok = true;
  SymbolView previous;
  bool first = true;
  detail::for_each_part(a, n, [&](SymbolView part) {
    if (!ok) return;
    if (!first && compare(part, previous) > 0) ok = false;
    else if (!is_normal_view(part)) ok = false;
    previous = part;
    first = false;
  });
  return ok;
}

// Prune the parts shadowed in the maximal subsequence, then normalise the
// survivors. The survivors are already non-increasing.
void normalize_into(SymbolView a, Word& out) {
  if (a.empty()) return;
  const Symbol n = detail::min_symbol(a, {});
  std::vector<Word> parts;
  detail::for_each_part(a, n, [&](SymbolView p) { parts.emplace_back(p); });
  const IndexCollection keep = max_index_collection(parts);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (i != 0) out.push_back(n);
    normalize_into(parts[keep[i] - 1].view(), out);
  }
}

}  // namespace

NormalWord::NormalWord(Word w) : word_(std::move(w)) {
  if (!is_normal(word_)) {
    throw Error(ErrorKind::NotNormal, "word '" + print_word(word_) + "' is not in normal form");
  }
}

bool is_normal(const Word& a) { return is_normal_view(a.view()); }

NormalWord normalize(const Word& a) {
  Word out;
  normalize_into(a.view(), out);
  return NormalWord(std::move(out), NormalWord::Trusted{});
}

Word append_a(Symbol n, const Word& a) {
  Word out = a;
  out.push_back(n);
  return out;
}

NormalWord diamond(Symbol n, const NormalWord& a) {
  return normalize(append_a(n, a.word()));
}

std::vector<NormalWord> enumerate_normal(Symbol max_symbol, std::size_t max_len) {
  std::vector<NormalWord> out;
  for (auto& w : enumerate_words(max_symbol, max_len)) {
    if (is_normal(w)) out.push_back(NormalWord(std::move(w), NormalWord::Trusted{}));
  }
  return out;
}

}  // namespace worms
