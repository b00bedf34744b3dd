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
// Two-valued evaluation of aggregate atoms, rule bodies and programs.
#pragma once

#include "aggfix/ground.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace aggfix {

/// Exact rational with positive denominator, normalized.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t num, std::int64_t den = 1);

    bool operator==(const Rational&) const = default;
    std::strong_ordering operator<=>(const Rational& other) const;
};

/// Undefined (nullopt) for MIN/MAX/AVG of an empty collection.
using AggregateValue = std::optional<Rational>;

/// Elements collected by a set expression, sorted. A set holds distinct grouped
/// values; a multiset holds one element per true pattern instance.
std::vector<Term> eval_set_expression(const GroundAggregate& l, const Interpretation& i);

/// Throws NonIntegerElement when a non-COUNT function meets a symbolic element.
AggregateValue aggregate_value(AggFunction fn, const std::vector<Term>& elements);

bool compare(const Rational& lhs, CompareOp op, std::int64_t rhs);
bool compare(std::int64_t lhs, CompareOp op, std::int64_t rhs);

/// False when the aggregate value is undefined.
bool eval_aggregate_atom(const GroundAggregate& l, const Interpretation& i);

bool satisfies_body(const Interpretation& i, const GroundRule& r, const GroundProgram& p);
bool is_model(const Interpretation& i, const GroundProgram& p);

/// Brute force: tries every one-atom removal first, then all proper subsets.
/// Throws LimitExceeded when 2^|i| - 1 exceeds `budget.minimal_model_subsets`.
bool is_minimal_model(const Interpretation& i, const GroundProgram& p, const Budget& budget = {});

} // namespace aggfix
