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
// Comparison semantics for programs with aggregates, all reduced to checks on
// ground normal programs:
//
//   naive GL   aggregates treated like negation-as-failure literals
//   FLP        minimal models of the rules whose whole body holds in M
//   unfolding  aggregates replaced by positive parts of solutions M satisfies
//   tr(P)      aggregates replaced by one conjunction per solution
#pragma once

#include "aggfix/fixpoint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aggfix {

struct NormalRule {
    AtomId              head = 0;
    std::vector<AtomId> pos;
    std::vector<AtomId> neg;

    bool operator==(const NormalRule&) const = default;
    auto operator<=>(const NormalRule&) const = default;
};

struct NormalProgram {
    std::size_t             universe = 0;
    std::vector<NormalRule> rules;
};

/// The aggregate-free rules of `p`, unchanged. Throws std::invalid_argument if
/// any rule has an aggregate atom.
NormalProgram as_normal_program(const GroundProgram& p);

/// Sorts each rule's literals, removes duplicate rules, rules with an atom both
/// positive and negative, and rules subsumed by a rule with the same head and
/// smaller positive and negative bodies.
void simplify(NormalProgram& p);

/// T_P iteration of the positive rules from {} (rules with a negative literal are
/// ignored), including the first repeated stage.
std::vector<Interpretation> least_model_stages(const NormalProgram& positive);

/// Gelfond-Lifschitz: drop rules with neg n M != {}, strip negation, compare M
/// with the least model.
bool gl_answer_check(const NormalProgram& p, const Interpretation& m);
/// T_P stages of the GL reduct of `p` w.r.t. `m`.
std::vector<Interpretation> gl_stages(const NormalProgram& p, const Interpretation& m);

NormalProgram naive_gl_reduct(const GroundProgram& p, const Interpretation& m);
bool is_naive_answer_set(const GroundProgram& p, const Interpretation& m);

GroundProgram flp_reduct(const GroundProgram& p, const Interpretation& m);
bool is_flp_answer_set(const GroundProgram& p, const Interpretation& m, const Budget& budget = {});

/// S(c, M): solutions of c with pos inside M and neg outside M.
std::vector<SolutionPair> solutions_satisfied_by(const GroundAggregate& c, const Interpretation& m,
                                                 const Budget& budget = {});

/// Memoized SOLN(c) for every aggregate atom of one program.
class SolutionCache {
public:
    SolutionCache(const GroundProgram& p, Budget budget = {});

    const std::vector<SolutionPair>& solutions(std::size_t aggregate) const;
    std::vector<SolutionPair> satisfied_by(std::size_t aggregate, const Interpretation& m) const;

private:
    const GroundProgram*                                    program_;
    Budget                                                  budget_;
    mutable std::vector<std::optional<std::vector<SolutionPair>>> cache_;
};

NormalProgram unfold(const GroundProgram& p, const Interpretation& m, const Budget& budget = {});
NormalProgram unfold(const GroundProgram& p, const Interpretation& m, const SolutionCache& cache,
                     const Budget& budget = {});
bool is_unfolding_answer_set(const GroundProgram& p, const Interpretation& m, const Budget& budget = {});

NormalProgram translate_tr(const GroundProgram& p, const Budget& budget = {});

struct SemanticsReport {
    Interpretation candidate;
    bool           fixpoint = false;
    bool           flp = false;
    bool           unfolding = false;
    bool           naive_gl = false;
    bool           tr = false;

    /// Broken expected relations: "fixpoint=>flp", "fixpoint<=>unfolding", "fixpoint<=>tr".
    std::vector<std::string> violations() const;
};

/// Evaluates all five semantics on candidates of one program, sharing tr(P)
/// and the solution cache between candidates.
class SemanticsComparator {
public:
    explicit SemanticsComparator(const GroundProgram& p, Budget budget = {});

    SemanticsReport compare(const Interpretation& m) const;
    const NormalProgram& translation() const noexcept { return tr_; }

private:
    const GroundProgram* program_;
    Budget               budget_;
    SolutionCache        cache_;
    NormalProgram        tr_;
};

std::string to_string(const NormalRule& r, const HerbrandBase& base);
std::string to_string(const NormalProgram& p, const HerbrandBase& base);

} // namespace aggfix
