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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "worms/biorder_io.hpp"
#include "worms/correspondence.hpp"
#include "worms/error.hpp"
#include "worms/gadget.hpp"
#include "worms/normal_form.hpp"
#include "worms/order.hpp"
#include "worms/ordinal.hpp"
#include "worms/selftest.hpp"

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kParse = 2, kDomain = 3, kSelftestFailed = 4 };

using namespace worms;

NormalWord normal_arg(const std::string& text) { return NormalWord(parse_word(text)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("encode", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word-based ordinal notation toolkit"};
  app.require_subcommand(1);

  std::string a_text;
  std::string b_text;
  std::string ord_text;
  std::string file;
  Symbol n_arg = 0;
  Symbol base = 0;
  std::uint64_t index = 0;
  Symbol alphabet = 3;
  std::size_t maxlen = 5;
  bool nf_only = false;
  std::string format = "text";

  auto* cmp = app.add_subcommand("cmp", "compare two words: <, = or >");
  cmp->add_option("a", a_text)->required();
  cmp->add_option("b", b_text)->required();

  auto* nf = app.add_subcommand("nf", "normal form of a word");
  nf->add_option("a", a_text)->required();

  auto* dia = app.add_subcommand("diamond", "diamond_n of a normal word");
  dia->add_option("n", n_arg)->required();
  dia->add_option("a", a_text)->required();

  auto* ord = app.add_subcommand("ord", "ordinal of a word (normalised, base 0)");
  ord->add_option("a", a_text)->required();

  auto* word = app.add_subcommand("word", "normal word of an ordinal");
  word->add_option("ordinal", ord_text)->required();
  word->add_option("--base", base, "lowest symbol")->capture_default_str();

  auto* psi_cmd = app.add_subcommand("psi", "psi of an ordinal");
  psi_cmd->add_option("ordinal", ord_text)->required();

  auto* cof = app.add_subcommand("cofinal", "n-th member of the fundamental sequence");
  cof->add_option("ordinal", ord_text)->required();
  cof->add_option("n", index)->required();

  auto* tail = app.add_subcommand("tail", "omega-tail of an ordinal");
  tail->add_option("ordinal", ord_text)->required();

  auto* en = app.add_subcommand("enum", "enumerate words in shortlex order");
  en->add_option("--alphabet", alphabet, "largest symbol")->capture_default_str();
  en->add_option("--maxlen", maxlen, "longest word")->capture_default_str();
  en->add_flag("--nf", nf_only, "normal words only");
  en->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* enc = app.add_subcommand("encode", "word encoding a biorder JSON file");
  enc->add_option("file", file)->required();

  auto* dec = app.add_subcommand("decode", "biorder JSON decoded from a word");
  dec->add_option("a", a_text)->required();

  auto* st = app.add_subcommand("selftest", "run every invariant suite");
  st->add_option("--alphabet", alphabet, "largest symbol")->capture_default_str();
  st->add_option("--maxlen", maxlen, "longest word")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cmp) {
      std::cout << to_symbol(compare(parse_word(a_text), parse_word(b_text))) << '\n';
    } else if (*nf) {
      std::cout << print_word(normalize(parse_word(a_text)).word()) << '\n';
    } else if (*dia) {
      std::cout << print_word(diamond(n_arg, normal_arg(a_text)).word()) << '\n';
    } else if (*ord) {
      std::cout << print_ordinal(o_map(normalize(parse_word(a_text)), 0)) << '\n';
    } else if (*word) {
      std::cout << print_word(word_of(parse_ordinal(ord_text), base).word()) << '\n';
    } else if (*psi_cmd) {
      std::cout << print_ordinal(psi(parse_ordinal(ord_text))) << '\n';
    } else if (*cof) {
      std::cout << print_ordinal(cofinal(parse_ordinal(ord_text), index)) << '\n';
    } else if (*tail) {
      std::cout << print_ordinal(omega_tail(parse_ordinal(ord_text))) << '\n';
    } else if (*en) {
      std::vector<std::string> out;
      for (const auto& w : enumerate_words(alphabet, maxlen)) {
        if (!nf_only || is_normal(w)) out.push_back(print_word(w));
      }
      if (format == "json") {
        std::cout << nlohmann::json(out).dump() << '\n';
      } else {
        for (const auto& line : out) std::cout << line << '\n';
      }
    } else if (*enc) {
      std::cout << print_word(encode_biorder(parse_biorder_json(read_file(file))).word()) << '\n';
    } else if (*dec) {
      std::cout << print_biorder_json(decode_biorder(normal_arg(a_text))) << '\n';
    } else if (*st) {
      SelftestOptions options;
      options.alphabet = alphabet;
      options.maxlen = maxlen;
      bool ok = true;
      run_selftest(options, [&ok](const InvariantReport& r) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checks)";
        if (!r.passed) std::cout << " counterexample: " << r.counterexample;
        std::cout << std::endl;
        ok = ok && r.passed;
      });
      return ok ? kOk : kSelftestFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return e.kind() == ErrorKind::ParseError ? kParse : kDomain;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
