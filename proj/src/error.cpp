//===----------------------------------------------------------------------===//
//
// Copyright 2026 The aggfix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
//===----------------------------------------------------------------------===//
#include "aggfix/error.hpp"

namespace aggfix {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg)
    , line_(line)
    , column_(column) {}

NonIntegerElement::NonIntegerElement(const std::string& atom)
    : std::runtime_error("aggregate element is not an integer: " + atom) {}

LimitExceeded::LimitExceeded(const std::string& what, std::uint64_t required, std::uint64_t limit)
    : std::runtime_error(what + " exceeds budget (" + std::to_string(required) + " > " + std::to_string(limit) +
                         ")") {}

} // namespace aggfix
