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
// Answer-set verification by the consequence operator K_M^P.
//
// Given a candidate M, the reduct keeps the rules whose negative body is
// disjoint from M (dropping the negative literals). K_M^P(I) collects the
// heads of reduct rules whose positive atoms are in I and whose aggregate
// atoms are conditionally satisfied by (I, M). The operator is monotone in I,
// so iterating it from the empty set reaches its least fixpoint; M is a
// fixpoint answer set iff that fixpoint is M itself.
#pragma once

#include "aggfix/solutions.hpp"

#include <functional>
#include <string>
#include <vector>

namespace aggfix {

struct ReductRule {
    AtomId                   head = 0;
    std::vector<AtomId>      pos;
    std::vector<std::size_t> agg;
};

struct ReductProgram {
    std::vector<ReductRule> rules;
};

ReductProgram reduct(const GroundProgram& p, const Interpretation& m);

/// K_M^P(I), defined for arbitrary I.
Interpretation apply_consequence(const GroundProgram& p, const Interpretation& m, const Interpretation& i,
                                 const Budget& budget = {});

/// K^0 = {}, K^1, ... up to and including the first repeated stage.
struct FixpointTrace {
    std::vector<Interpretation> stages;
    bool                        converged = false;

    const Interpretation& fixpoint() const { return stages.back(); }
};

FixpointTrace least_fixpoint(const GroundProgram& p, const Interpretation& m, const Budget& budget = {});

struct FixpointCheck {
    bool          accepted = false;
    FixpointTrace trace;
};

FixpointCheck is_fixpoint_answer_set(const GroundProgram& p, const Interpretation& m, const Budget& budget = {});

/// All fixpoint answer sets in canonical order. Candidates range over subsets of
/// rule heads by size, then lexicographically; each is model-checked before the
/// fixpoint is computed.
std::vector<Interpretation> enumerate_answer_sets(const GroundProgram& p, const Budget& budget = {});

/// Visits the subsets of `atoms` by size, then lexicographically by position.
/// The visitor returns false to stop.
void for_each_subset(std::span<const AtomId> atoms, std::size_t universe,
                     const std::function<bool(const Interpretation&)>& visit);

/// One line per stage: `K^0 = {}`.
std::vector<std::string> render_trace(const FixpointTrace& trace, const HerbrandBase& base);

} // namespace aggfix
