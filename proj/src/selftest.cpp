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

#include "worms/selftest.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

#include "worms/correspondence.hpp"
#include "worms/error.hpp"
#include "worms/gadget.hpp"
#include "worms/normal_form.hpp"
#include "worms/order.hpp"
#include "worms/ordinal.hpp"

namespace worms {

NaiveComparator::NaiveComparator(Symbol max_symbol, std::size_t max_len)
    : base_(max_symbol + 1), max_len_(max_len), words_(enumerate_words(max_symbol, max_len)) {
  std::size_t width = 1;
  std::size_t total = 0;
  for (std::size_t len = 0; len <= max_len; ++len) {
    offset_.push_back(total);
    total += width;
    width *= base_;
  }
  if (words_.size() > 8192) {
    throw Error(ErrorKind::OracleBoundExceeded,
                "naive comparator table would hold " + std::to_string(words_.size()) + " words");
  }
  memo_.assign(words_.size() * words_.size(), 2);
  selected_.resize(words_.size());
  selected_ready_.assign(words_.size(), false);
}

std::size_t NaiveComparator::index_of(SymbolView w) const {
  std::size_t value = 0;
  for (auto s : w) value = value * base_ + s;
  return offset_[w.size()] + value;
}

std::weak_ordering NaiveComparator::operator()(const Word& a, const Word& b) {
  return compare_ids(static_cast<std::uint32_t>(index_of(a.view())),
                     static_cast<std::uint32_t>(index_of(b.view())));
}

const std::vector<std::uint32_t>& NaiveComparator::selection(std::uint32_t a) {
  if (!selected_ready_[a]) {
    const Word& w = words_[a];
    std::vector<std::uint32_t> parts;
    for (const auto& part : split_at(w, min_symbol(w))) {
      parts.push_back(static_cast<std::uint32_t>(index_of(part.view())));
    }
    const auto picks = max_index_collection_naive(
        std::span<const std::uint32_t>(parts),
        [this](std::uint32_t x, std::uint32_t y) { return compare_ids(x, y); }, parts.size());
    for (auto i : picks) selected_[a].push_back(parts[i - 1]);
    selected_ready_[a] = true;
  }
  return selected_[a];
}

std::weak_ordering NaiveComparator::compare_ids(std::uint32_t a, std::uint32_t b) {
  auto& slot = memo_[std::size_t{a} * words_.size() + b];
  if (slot != 2) return slot < 0 ? std::weak_ordering::less
                      : slot > 0 ? std::weak_ordering::greater
                                 : std::weak_ordering::equivalent;
  const Word& wa = words_[a];
  const Word& wb = words_[b];
  std::weak_ordering verdict = std::weak_ordering::equivalent;
  if (!wa.empty() || !wb.empty()) {
    const Symbol n = detail::min_symbol(wa.view(), wb.view());
    auto side = [&](std::uint32_t id, const Word& w) {
      if (!w.empty() && min_symbol(w) == n) return selection(id);
      return std::vector<std::uint32_t>{id};
    };
    const auto xs = side(a, wa);
    const auto ys = side(b, wb);
    const std::size_t common = std::min(xs.size(), ys.size());
    std::size_t i = 0;
    for (; i < common; ++i) {
      verdict = compare_ids(xs[i], ys[i]);
      if (verdict != 0) break;
    }
    if (i == common) {
      verdict = xs.size() == ys.size() ? std::weak_ordering::equivalent
                : xs.size() < ys.size() ? std::weak_ordering::less
                                        : std::weak_ordering::greater;
    }
  }
  slot = verdict < 0 ? -1 : verdict > 0 ? 1 : 0;
  return verdict;
}

namespace {

using Failure = std::optional<std::string>;

std::string pw(const Word& w) { return "(" + print_word(w) + ")"; }
std::string pw(const NormalWord& w) { return pw(w.word()); }
std::string po(const Ordinal& a) { return print_ordinal(a); }

class Runner {
 public:
  Runner(std::vector<InvariantReport>& out, const std::function<void(const InvariantReport&)>& cb)
      : out_(out), cb_(cb) {}

  // `body` increments the counter it is given and returns the first failure.
  template <typename F>
  void run(const std::string& name, F&& body) {
    InvariantReport report;
    report.name = name;
    try {
      if (auto failure = body(report.checked)) {
        report.passed = false;
        report.counterexample = *failure;
      }
    } catch (const Error& e) {
      report.passed = false;
      report.counterexample = "unexpected error " + std::string(to_string(e.kind())) + ": " + e.what();
    }
    out_.push_back(report);
    if (cb_) cb_(report);
  }

 private:
  std::vector<InvariantReport>& out_;
  const std::function<void(const InvariantReport&)>& cb_;
};

void word_suites(Runner& r, const SelftestOptions& o, const std::vector<Word>& words) {
  r.run("word.print_parse_round_trip", [&](std::size_t& n) -> Failure {
    for (const auto& w : words) {
      ++n;
      if (parse_word(print_word(w)) != w) return pw(w);
    }
    return {};
  });
  r.run("word.split_join_round_trip", [&](std::size_t& n) -> Failure {
    for (const auto& w : words) {
      const Symbol floor = w.empty() ? 0 : min_symbol(w);
      for (Symbol s = 0; s <= floor; ++s) {
        ++n;
        if (join(split_at(w, s), s) != w) return pw(w) + " at " + std::to_string(s);
      }
    }
    return {};
  });
  r.run("word.enumeration_shortlex_and_bounded", [&](std::size_t& n) -> Failure {
    std::size_t expected = 0;
    std::size_t width = 1;
    for (std::size_t len = 0; len <= o.maxlen; ++len, width *= o.alphabet + 1) expected += width;
    if (words.size() != expected) return "count " + std::to_string(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      ++n;
      if (!in_W(words[i], o.alphabet)) return pw(words[i]);
      if (i > 0 && !shortlex_less(words[i - 1], words[i])) return pw(words[i]);
    }
    return {};
  });
}

void order_suites(Runner& r, const SelftestOptions& o, const std::vector<Word>& words,
                  const std::vector<Word>& oracle_words, std::size_t oracle_len,
                  std::mt19937_64& rng) {
  r.run("order.reflexive", [&](std::size_t& n) -> Failure {
    for (const auto& a : words) {
      ++n;
      if (compare(a, a) != 0) return pw(a);
    }
    return {};
  });
  r.run("order.total_and_antisymmetric", [&](std::size_t& n) -> Failure {
    for (const auto& a : words) {
      for (const auto& b : words) {
        ++n;
        const auto ab = compare(a, b);
        const auto ba = compare(b, a);
        if ((ab < 0) != (ba > 0) || (ab == 0) != (ba == 0)) return pw(a) + " " + pw(b);
      }
    }
    return {};
  });
  r.run("order.transitive_sampled", [&](std::size_t& n) -> Failure {
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (std::size_t i = 0; i < o.samples; ++i) {
      const auto& a = words[pick(rng)];
      const auto& b = words[pick(rng)];
      const auto& c = words[pick(rng)];
      ++n;
      const auto ab = compare(a, b);
      const auto bc = compare(b, c);
      const auto ac = compare(a, c);
      if (ab <= 0 && bc <= 0 && !(ac <= 0)) return pw(a) + " " + pw(b) + " " + pw(c);
      if ((ab < 0 || bc < 0) && ab <= 0 && bc <= 0 && !(ac < 0)) {
        return pw(a) + " " + pw(b) + " " + pw(c);
      }
    }
    return {};
  });
  r.run("order.naive_oracle_agreement", [&](std::size_t& n) -> Failure {
    NaiveComparator naive(o.alphabet, oracle_len);
    for (const auto& a : oracle_words) {
      for (const auto& b : oracle_words) {
        ++n;
        if (compare(a, b) != naive(a, b)) return pw(a) + " " + pw(b);
      }
    }
    return {};
  });
  r.run("order.max_index_collection_naive_agreement", [&](std::size_t& n) -> Failure {
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    std::uniform_int_distribution<std::size_t> len(1, 8);
    for (std::size_t i = 0; i < o.samples / 20; ++i) {
      std::vector<Word> xs(len(rng));
      for (auto& x : xs) x = words[pick(rng)];
      ++n;
      if (max_index_collection(xs) != max_index_collection_naive(xs)) {
        std::string s;
        for (const auto& x : xs) s += pw(x);
        return s;
      }
    }
    return {};
  });
  r.run("order.concat_collection", [&](std::size_t& n) -> Failure {
    std::vector<Word> pool;
    for (const auto& w : words) {
      if (in_W(w, 3)) pool.push_back(w);
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<std::size_t> len(1, 6);
    for (std::size_t i = 0; i < o.samples / 10; ++i) {
      std::vector<Word> xs(len(rng));
      std::vector<Word> ys(len(rng));
      for (auto& x : xs) x = pool[pick(rng)];
      for (auto& y : ys) y = pool[pick(rng)];
      std::vector<Word> joined = xs;
      joined.insert(joined.end(), ys.begin(), ys.end());
      ++n;
      if (concat_collection(xs, ys) != max_index_collection(joined)) {
        std::string s;
        for (const auto& x : xs) s += pw(x);
        s += " | ";
        for (const auto& y : ys) s += pw(y);
        return s;
      }
    }
    return {};
  });
  r.run("order.congruence", [&](std::size_t& n) -> Failure {
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        if (compare(words[i], words[j]) != 0) continue;
        for (Symbol k = 0; k <= o.alphabet + 1; ++k) {
          ++n;
          if (compare(append_a(k, words[i]), append_a(k, words[j])) != 0) {
            return pw(words[i]) + " " + pw(words[j]) + " k=" + std::to_string(k);
          }
        }
      }
    }
    return {};
  });
  r.run("order.monotonicity", [&](std::size_t& n) -> Failure {
    for (const auto& a : words) {
      for (const auto& b : words) {
        if (b.size() != a.size()) continue;
        bool pointwise = true;
        for (std::size_t i = 0; i < a.size() && pointwise; ++i) pointwise = a[i] <= b[i];
        if (!pointwise) continue;
        const std::size_t room = o.maxlen - b.size();
        for (const auto& d : words) {
          if (d.size() > room) break;
          for (const auto& c : words) {
            if (d.size() + c.size() > room) break;
            ++n;
            Word dbc = concat(concat(d, b), c);
            const auto v = compare(a, dbc);
            const bool strict = !c.empty() || (!a.empty() && a.back() != b.back());
            if (v > 0 || (strict && v == 0)) {
              return "a=" + pw(a) + " b=" + pw(b) + " d=" + pw(d) + " c=" + pw(c);
            }
          }
        }
      }
    }
    return {};
  });
  r.run("order.shift_invariance", [&](std::size_t& n) -> Failure {
    auto shift = [](const Word& w) {
      Word out;
      for (auto s : w) out.push_back(s + 1);
      return out;
    };
    for (const auto& a : words) {
      for (const auto& b : words) {
        ++n;
        if (compare(a, b) != compare(shift(a), shift(b))) return pw(a) + " " + pw(b);
      }
    }
    return {};
  });
}

void normal_form_suites(Runner& r, const SelftestOptions& o, const std::vector<Word>& words,
                        const std::vector<NormalWord>& normal) {
  std::vector<NormalWord> nf;
  for (const auto& w : words) nf.push_back(normalize(w));

  r.run("nf.soundness", [&](std::size_t& n) -> Failure {
    for (std::size_t i = 0; i < words.size(); ++i) {
      ++n;
      if (compare(words[i], nf[i].word()) != 0 || nf[i].size() > words[i].size() ||
          !is_normal(nf[i].word())) {
        return pw(words[i]);
      }
    }
    return {};
  });
  r.run("nf.idempotence", [&](std::size_t& n) -> Failure {
    for (std::size_t i = 0; i < words.size(); ++i) {
      ++n;
      if (normalize(nf[i].word()) != nf[i]) return pw(words[i]);
      if (is_normal(words[i]) && nf[i].word() != words[i]) return pw(words[i]);
    }
    return {};
  });
  r.run("nf.uniqueness", [&](std::size_t& n) -> Failure {
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        ++n;
        if ((compare(words[i], words[j]) == 0) != (nf[i] == nf[j])) {
          return pw(words[i]) + " " + pw(words[j]);
        }
      }
    }
    return {};
  });
  r.run("nf.diamond_coherence_and_growth", [&](std::size_t& n) -> Failure {
    for (const auto& a : normal) {
      for (Symbol k = 0; k <= o.alphabet + 1; ++k) {
        ++n;
        const auto d = diamond(k, a);
        if (compare(append_a(k, a.word()), d.word()) != 0 || !precedes(a.word(), d.word())) {
          return pw(a) + " n=" + std::to_string(k);
        }
      }
    }
    return {};
  });
}

void ordinal_suites(Runner& r, const SelftestOptions& o) {
  const std::size_t size_bound = std::min<std::size_t>(o.maxlen, 6);
  const auto pool = enumerate_by_size(omega_tower(3), size_bound);
  const auto small = enumerate_by_size(omega_tower(3), std::min<std::size_t>(size_bound, 4));
  const Ordinal w = omega_pow(from_nat(1));
  const Ordinal w3 = omega_pow(from_nat(3));

  r.run("ord.strict_total_order", [&](std::size_t& n) -> Failure {
    for (const auto& a : pool) {
      for (const auto& b : pool) {
        ++n;
        const auto ab = ord_cmp(a, b);
        if ((ab == 0) != (a == b) || (ab < 0) != (ord_cmp(b, a) > 0)) return po(a) + " " + po(b);
      }
    }
    return {};
  });
  r.run("ord.addition", [&](std::size_t& n) -> Failure {
    for (const auto& a : small) {
      for (const auto& b : small) {
        if (!(a <= a + b) || !(b <= a + b)) return po(a) + " " + po(b);
        for (const auto& c : small) {
          ++n;
          if ((a + b) + c != a + (b + c)) return po(a) + " " + po(b) + " " + po(c);
        }
      }
    }
    return {};
  });
  r.run("ord.psi_second_R_successor", [&](std::size_t& n) -> Failure {
    const auto candidates = enumerate_by_terms(omega_pow(from_nat(4)), 6);
    for (const auto& b : enumerate_by_terms(w3, 4)) {
      if (b.is_zero()) continue;
      ++n;
      if (!(b < psi(b)) || !is_R(b, succ(b)) || !is_R(b, psi(b))) return po(b);
      for (const auto& g : candidates) {
        if (succ(b) < g && g < psi(b) && is_R(b, g)) return po(b) + " gamma=" + po(g);
      }
    }
    return {};
  });
  r.run("ord.fundamental_sequences", [&](std::size_t& n) -> Failure {
    for (const auto& b : enumerate_by_terms(omega_pow(omega_pow(from_nat(2))), 4)) {
      if (!is_limit(b)) continue;
      for (std::uint64_t k = 0; k <= 5; ++k) {
        ++n;
        const auto c = cofinal(b, k);
        if (!(c < b) || !(c < cofinal(b, k + 1)) || cofinal_index(b, c) != k) {
          return po(b) + " n=" + std::to_string(k);
        }
      }
    }
    return {};
  });
  r.run("ord.R_closure_is_order", [&](std::size_t& n) -> Failure {
    const auto seg = enumerate_by_terms(w3, 3);
    const std::size_t m = seg.size();
    std::vector<char> reach(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) reach[i * m + j] = is_R(seg[i], seg[j]);
    }
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t i = 0; i < m; ++i) {
        if (!reach[i * m + k]) continue;
        for (std::size_t j = 0; j < m; ++j) reach[i * m + j] |= reach[k * m + j];
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        ++n;
        if (static_cast<bool>(reach[i * m + j]) != (seg[i] < seg[j])) return po(seg[i]) + " " + po(seg[j]);
      }
    }
    return {};
  });
  r.run("ord.psi_closed_agreement", [&](std::size_t& n) -> Failure {
    for (const auto& a : pool) {
      if (a.is_zero()) continue;
      ++n;
      bool closed = true;
      for (const auto& b : pool) {
        if (b < a && !(psi(b) < a)) {
          closed = false;
          break;
        }
      }
      if (closed != is_psi_closed(a)) return po(a);
    }
    return {};
  });
  r.run("ord.omega_tail", [&](std::size_t& n) -> Failure {
    const Ordinal ww = omega_pow(w);
    for (std::size_t m = 3; m <= 5; ++m) {
      ++n;
      if (omega_tail(omega_tower(m)) != ww) return "tower " + std::to_string(m);
    }
    for (const auto& b : enumerate_by_terms(omega_pow(omega_pow(from_nat(2))), 4)) {
      if (!(b < ww)) continue;
      ++n;
      if (omega_tail(b) != b) return po(b);
    }
    return {};
  });
  r.run("ord.print_parse_round_trip", [&](std::size_t& n) -> Failure {
    for (const auto& a : pool) {
      ++n;
      if (parse_ordinal(print_ordinal(a)) != a) return po(a);
    }
    return {};
  });
}

void correspondence_suites(Runner& r, const SelftestOptions& o,
                           const std::vector<NormalWord>& normal) {
  r.run("corr.isomorphism", [&](std::size_t& n) -> Failure {
    std::vector<Ordinal> image;
    for (const auto& a : normal) image.push_back(o_map(a, 0));
    for (std::size_t i = 0; i < normal.size(); ++i) {
      const auto& w = normal[i].word();
      const Symbol top = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
      if (!(image[i] < omega_tower(top + 1))) return pw(normal[i]) + " above its tower";
      for (std::size_t j = 0; j < normal.size(); ++j) {
        ++n;
        if (compare(w, normal[j].word()) != ord_cmp(image[i], image[j])) {
          return pw(normal[i]) + " " + pw(normal[j]);
        }
      }
    }
    return {};
  });
  r.run("corr.word_round_trip", [&](std::size_t& n) -> Failure {
    for (const auto& a : normal) {
      for (Symbol base = 0; base <= 1; ++base) {
        if (!in_S(a.word(), base)) continue;
        ++n;
        if (word_of(o_map(a, base), base) != a) return pw(a) + " base " + std::to_string(base);
      }
    }
    return {};
  });
  r.run("corr.ordinal_round_trip", [&](std::size_t& n) -> Failure {
    for (const auto& a : enumerate_by_size(omega_tower(4), std::min<std::size_t>(o.maxlen, 6))) {
      ++n;
      if (o_map(word_of(a, 0), 0) != a) return po(a);
    }
    return {};
  });
  r.run("corr.multiset_order", [&](std::size_t& n) -> Failure {
    std::vector<OrdMultiset> ms;
    for (const auto& a : normal) ms.push_back(word_to_multiset(a));
    for (std::size_t i = 0; i < normal.size(); ++i) {
      for (std::size_t j = 0; j < normal.size(); ++j) {
        ++n;
        if (ms_compare(ms[i], ms[j]) != compare(normal[i].word(), normal[j].word())) {
          return pw(normal[i]) + " " + pw(normal[j]);
        }
      }
    }
    return {};
  });
  r.run("corr.multiset_diamonds", [&](std::size_t& n) -> Failure {
    for (const auto& a : normal) {
      if (a.empty()) continue;
      const auto m = word_to_multiset(a);
      n += 3;
      if (word_to_multiset(diamond(0, a)) != ms_diamond0(m)) return pw(a) + " i=0";
      if (word_to_multiset(diamond(1, a)) != ms_diamond1(m)) return pw(a) + " i=1";
      if (word_to_multiset(diamond(2, a)) != ms_diamond2(m)) return pw(a) + " i=2";
    }
    return {};
  });
  r.run("corr.psi_bridge", [&](std::size_t& n) -> Failure {
    for (const auto& a : normal) {
      if (!in_S(a.word(), 1)) continue;
      ++n;
      if (psi(o_map(a, 1)) != o_map(diamond(2, a), 1)) return pw(a);
    }
    return {};
  });
}

void gadget_suites(Runner& r, const SelftestOptions& o, const std::vector<NormalWord>& normal,
                   std::mt19937_64& rng) {
  std::vector<NormalWord> w3;
  for (const auto& a : normal) {
    if (in_W(a.word(), 3)) w3.push_back(a);
  }

  r.run("gadget.slice_characterisation", [&](std::size_t& n) -> Failure {
    for (const auto& a : w3) {
      for (const auto& b : w3) {
        ++n;
        if (is_slice(a, b.word()) != is_slice_formula(a, b)) return pw(a) + " " + pw(b);
      }
    }
    return {};
  });
  r.run("gadget.K_chain", [&](std::size_t& n) -> Failure {
    for (std::size_t h = 2; h <= 6; ++h) {
      for (std::size_t k = 1; k < h; ++k) {
        ++n;
        if (!precedes(word_K(h, k).word(), word_K(h, k + 1).word())) {
          return "h=" + std::to_string(h) + " k=" + std::to_string(k);
        }
      }
    }
    return {};
  });
  r.run("gadget.L_bracketing", [&](std::size_t& n) -> Failure {
    for (std::size_t h = 1; h <= 5; ++h) {
      for (std::size_t k = 1; k <= h; ++k) {
        ++n;
        Word lower;
        for (std::size_t s = h - 1; s >= k; --s) lower.append(word_I(s).view());
        lower.append(power(Word{3}, k - 1).view());
        if (compare(lower, word_L(h)) > 0 || !precedes(word_L(h), word_K(h, k).word())) {
          return "h=" + std::to_string(h) + " k=" + std::to_string(k);
        }
      }
    }
    return {};
  });
  r.run("gadget.u_sequence_identity", [&](std::size_t& n) -> Failure {
    for (std::size_t h = 1; h <= 4; ++h) {
      for (std::size_t len = 1; len <= 4; ++len) {
        std::vector<std::size_t> ks(len, 1);
        while (true) {
          ++n;
          const auto u = u_sequence(build_from_indices(h, ks));
          bool ok = u.size() == len;
          for (std::size_t i = 0; ok && i < len; ++i) ok = u[i] == word_K(h, ks[i]);
          if (!ok) {
            std::string s = "h=" + std::to_string(h) + " ks=";
            for (auto k : ks) s += std::to_string(k);
            return s;
          }
          std::size_t pos = len;
          while (pos > 0 && ks[pos - 1] == h) ks[--pos] = 1;
          if (pos == 0) break;
          ++ks[pos - 1];
        }
      }
    }
    return {};
  });
  r.run("gadget.biorder_round_trip", [&](std::size_t& n) -> Failure {
    auto check = [&](const std::vector<std::size_t>& perm) -> Failure {
      ++n;
      const auto m = biorder_from_permutation(perm);
      if (!isomorphic(decode_biorder(encode_biorder(m)), m)) {
        std::string s = "l2 ranks";
        for (auto p : perm) s += " " + std::to_string(p);
        return s;
      }
      return {};
    };
    for (std::size_t h = 1; h <= 4; ++h) {
      std::vector<std::size_t> perm(h);
      std::iota(perm.begin(), perm.end(), 1);
      do {
        if (auto f = check(perm)) return f;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::vector<std::size_t> perm{1, 2, 3, 4, 5};
    for (int i = 0; i < 20; ++i) {
      std::shuffle(perm.begin(), perm.end(), rng);
      if (auto f = check(perm)) return f;
    }
    return {};
  });
  r.run("gadget.w3_by_comparison", [&](std::size_t& n) -> Failure {
    for (const auto& a : enumerate_normal(std::max<Symbol>(o.alphabet, 5), std::min<std::size_t>(o.maxlen, 5))) {
      ++n;
      if (w3_by_comparison(a) != in_W(a.word(), 3)) return pw(a);
    }
    return {};
  });
  r.run("gadget.w3_gate", [&](std::size_t& n) -> Failure {
    const auto candidates = enumerate_normal(4, 6);
    ++n;
    if (!w3_gate(NormalWord(Word{4}), candidates).holds) return "(4) refuted";
    for (const auto& x : w3) {
      if (x.empty()) continue;
      ++n;
      const auto v = w3_gate(x, candidates);
      if (v.holds || !v.witness) return pw(x) + " not refuted";
      const auto& y = *v.witness;
      if (!precedes(y.word(), x.word()) || precedes(diamond(3, y).word(), x.word())) {
        return pw(x) + " bad witness " + pw(y);
      }
    }
    return {};
  });
}

}  // namespace

std::vector<InvariantReport> run_selftest(
    const SelftestOptions& options, const std::function<void(const InvariantReport&)>& on_report) {
  std::vector<InvariantReport> out;
  Runner runner(out, on_report);
  std::mt19937_64 rng(options.seed);

  const auto words = enumerate_words(options.alphabet, options.maxlen);
  // Shrink the oracle sweep until its memo table fits.
  std::size_t oracle_len = std::min<std::size_t>(options.maxlen, 6);
  auto count = [&](std::size_t len) {
    std::size_t total = 0;
    std::size_t width = 1;
    for (std::size_t l = 0; l <= len; ++l, width *= options.alphabet + 1) total += width;
    return total;
  };
  while (oracle_len > 0 && count(oracle_len) > 8192) --oracle_len;
  std::vector<Word> oracle_words;
  for (const auto& w : words) {
    if (w.size() <= oracle_len) oracle_words.push_back(w);
  }

  std::vector<NormalWord> normal;
  for (const auto& w : words) {
    if (is_normal(w)) normal.emplace_back(w);
  }

  word_suites(runner, options, words);
  order_suites(runner, options, words, oracle_words, oracle_len, rng);
  normal_form_suites(runner, options, words, normal);
  ordinal_suites(runner, options);
  correspondence_suites(runner, options, normal);
  gadget_suites(runner, options, normal, rng);
  return out;
}

}  // namespace worms
