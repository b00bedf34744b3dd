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
// Aggregate solutions: pairs <S1, S2> of disjoint subsets of H(l) such that
// every interpretation containing S1 and disjoint from S2 satisfies l.
//
// Two independent checkers are provided. is_solution_oracle() enumerates the
// interpretations between S1 and H(l) \ S2; is_solution() dispatches to a
// per-(function, operator) closed-form check that looks only at the values of
// S1 and of the free atoms H(l) \ (S1 u S2).
#pragma once

#include "aggfix/eval.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace aggfix {

struct SolutionPair {
    Interpretation pos;
    Interpretation neg;

    bool operator==(const SolutionPair&) const = default;
    std::strong_ordering operator<=>(const SolutionPair& other) const;
};

/// pos and neg are disjoint subsets of the aggregate's atom universe.
bool is_well_formed(const GroundAggregate& l, const SolutionPair& s);

/// Throws std::invalid_argument for ill-formed pairs, LimitExceeded when the
/// free set exceeds `budget.oracle_free_atoms`.
bool is_solution_oracle(const GroundAggregate& l, const SolutionPair& s, const Budget& budget = {});

/// Same verdict as the oracle. Polynomial except for SUM != (pseudo-polynomial
/// reachable-sum table, bounded by `budget.subset_sum_span`) and AVG != (oracle).
bool is_solution(const GroundAggregate& l, const SolutionPair& s, const Budget& budget = {});

/// All solutions in canonical order. Throws LimitExceeded above
/// `budget.enumeration_pairs` candidate pairs (3^|H(l)|).
std::vector<SolutionPair> enumerate_solutions(const GroundAggregate& l, const Budget& budget = {});

/// (I, M) |= l for an aggregate atom: <I n M n H(l), H(l) \ M> is a solution.
bool conditionally_satisfies(const Interpretation& i, const Interpretation& m, const GroundAggregate& l,
                             const Budget& budget = {});
/// (I, M) |= a for an ordinary atom: a in I.
inline bool conditionally_satisfies(const Interpretation& i, const Interpretation& /*m*/, AtomId a) {
    return i.contains(a);
}

/// Whether some sub-multiset of `values` (possibly empty) sums to `target`.
/// Reachable-sum table over [sum of negatives, sum of positives].
bool subset_sum_reachable(std::span<const std::int64_t> values, std::int64_t target,
                          std::uint64_t span_limit = std::uint64_t{1} << 24);

/// `sum{X : p(X)} != target` over H = {p(x) | x in values}, with the pair <{}, {}>.
/// The pair is a solution iff no subset of `values` sums to `target`.
struct SubsetSumInstance {
    GroundProgram program;
    SolutionPair  pair;

    const GroundAggregate& aggregate() const { return program.aggregates().front(); }
};

/// `values` must be non-negative; duplicates are merged.
SubsetSumInstance make_subset_sum_instance(std::span<const std::int64_t> values, std::int64_t target);

} // namespace aggfix
