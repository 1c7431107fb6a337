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

#include "worms/biorder_io.hpp"

#include <algorithm>

#include "json.hpp"
#include "worms/error.hpp"

namespace worms {

namespace {

std::vector<std::string> labels(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw Error(ErrorKind::InvalidBiorder, std::string("biorder JSON needs an array \"") + key + "\"");
  }
  std::vector<std::string> out;
  for (const auto& item : doc[key]) {
    if (!item.is_string()) {
      throw Error(ErrorKind::InvalidBiorder, std::string("non-string label in \"") + key + "\"");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

Biorder parse_biorder_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed biorder JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::InvalidBiorder, "biorder JSON must be an object");

  auto elements = labels(doc, "elements");
  Biorder out{labels(doc, "l1"), labels(doc, "l2")};
  out.validate();
  std::sort(elements.begin(), elements.end());
  auto sorted_l1 = out.l1;
  std::sort(sorted_l1.begin(), sorted_l1.end());
  if (elements != sorted_l1) {
    throw Error(ErrorKind::InvalidBiorder, "l1 is not a permutation of elements");
  }
  return out;
}

std::string print_biorder_json(const Biorder& m) {
  nlohmann::json doc;
  doc["elements"] = m.l1;
  doc["l1"] = m.l1;
  doc["l2"] = m.l2;
  return doc.dump();
}

}  // namespace worms
