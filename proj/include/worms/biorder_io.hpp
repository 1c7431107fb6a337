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

#include <string>
#include <string_view>

#include "worms/gadget.hpp"

namespace worms {

/// {"elements": [...], "l1": [...], "l2": [...]}. Throws Error{ParseError}
/// on malformed JSON and Error{InvalidBiorder} on a bad structure.
Biorder parse_biorder_json(std::string_view text);

/// Serialises with "elements" in l1 order.
std::string print_biorder_json(const Biorder& m);

}  // namespace worms
