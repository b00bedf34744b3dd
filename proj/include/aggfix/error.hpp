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
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace aggfix {

/// Malformed input text. Carries the 1-based position of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A SUM/MIN/MAX/AVG aggregate collected a symbolic constant.
class NonIntegerElement : public std::runtime_error {
public:
    explicit NonIntegerElement(const std::string& atom);
};

/// A brute-force step would exceed its configured budget.
class LimitExceeded : public std::runtime_error {
public:
    LimitExceeded(const std::string& what, std::uint64_t required, std::uint64_t limit);
};

/// Search and enumeration limits. Defaults follow the documented desk-scale values.
struct Budget {
    /// Max number of free atoms the brute-force solution oracle enumerates over.
    std::size_t oracle_free_atoms = 20;
    /// Max number of candidate pairs visited by solution enumeration (3^14).
    std::uint64_t enumeration_pairs = 4782969;
    /// Max number of candidate interpretations for answer-set search and comparison.
    std::uint64_t candidates = std::uint64_t{1} << 20;
    /// Max number of proper subsets visited by the minimal-model check.
    std::uint64_t minimal_model_subsets = std::uint64_t{1} << 22;
    /// Max width of the reachable-sum table in the SUM != checker.
    std::uint64_t subset_sum_span = std::uint64_t{1} << 24;
    /// Max number of rules produced by unfolding or translation.
    std::uint64_t translated_rules = std::uint64_t{1} << 20;
    /// Max size of the Herbrand base.
    std::uint64_t herbrand_atoms = std::uint64_t{1} << 22;
};

} // namespace aggfix
