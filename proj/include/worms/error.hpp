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

#include <stdexcept>
#include <string>
#include <string_view>

namespace worms {

enum class ErrorKind {
  ParseError,
  EmptyWord,
  SymbolBelowSeparator,
  EmptySequence,
  OracleBoundExceeded,
  NotNormal,
  NotInS,
  NotInW3,
  NotLimit,
  TowerTooTall,
  BadIndex,
  SliceIndexOutOfRange,
  NotABiorderEncoding,
  InvalidBiorder,
  // Raised only when an internal postcondition fails; indicates a bug.
  NormalityAssertionFailed,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace worms
