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
// Shared fixtures for the unit and acceptance suites.
#pragma once

#include "aggfix/altsem.hpp"
#include "aggfix/harness.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace aggfix::test {

// Facts p(1..3), p(5) supported by q, q supported by a SUM aggregate.
inline constexpr std::string_view kSumProgram =
    "p(1). p(2). p(3). p(5) :- q. q :- sum{X : p(X)} > 10.\n";

// Two answer sets {q} and {p(a),p(b)}.
inline constexpr std::string_view kCountProgram =
    "p(a) :- count{X : p(X)} > 0.\n"
    "p(b) :- not q.\n"
    "q :- not p(b).\n";

// FLP-accepted {p(1),p(-1)}, no fixpoint answer set.
inline constexpr std::string_view kFlpProgram =
    "p(1) :- sum{X : p(X)} >= 0.\n"
    "p(-1) :- p(1).\n"
    "p(1) :- p(-1).\n";

inline GroundProgram compile(std::string_view text) {
    return GroundProgram(ground_program(parse_program(text)));
}

inline Interpretation interp(const GroundProgram& p, std::string_view atoms) {
    return p.interpretation(parse_atom_list(atoms));
}

inline SolutionPair pair_of(const GroundProgram& p, std::string_view pos, std::string_view neg) {
    return {interp(p, pos), interp(p, neg)};
}

/// A one-rule program `h :- <aggregate>.` with the given domain.
inline GroundProgram aggregate_program(std::string_view aggregate, std::string_view domain) {
    std::string text;
    if (!domain.empty()) text += "#const " + std::string(domain) + ".\n";
    text += "h :- " + std::string(aggregate) + ".\n";
    return compile(text);
}

/// Brute-force subset-sum decision (the empty subset counts).
inline bool brute_subset_sum(const std::vector<std::int64_t>& values, std::int64_t target) {
    const std::size_t n = values.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (mask >> k & 1u) s += values[k];
        }
        if (s == target) return true;
    }
    return false;
}

/// Every subset of the Herbrand base.
inline std::vector<Interpretation> all_interpretations(const GroundProgram& p) {
    std::vector<AtomId> atoms(p.base().size());
    for (std::size_t k = 0; k < atoms.size(); ++k) atoms[k] = static_cast<AtomId>(k);
    std::vector<Interpretation> out;
    for_each_subset(atoms, atoms.size(), [&](const Interpretation& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

/// Every well-formed pair over the aggregate's universe.
inline std::vector<SolutionPair> all_pairs(const GroundAggregate& l) {
    std::vector<SolutionPair> out;
    const std::size_t         n = l.universe.size();
    std::uint64_t             total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        SolutionPair  s{Interpretation(l.universe_set.universe()), Interpretation(l.universe_set.universe())};
        std::uint64_t c = code;
        for (std::size_t k = 0; k < n; ++k, c /= 3) {
            if (c % 3 == 1) s.pos.insert(l.universe[k]);
            if (c % 3 == 2) s.neg.insert(l.universe[k]);
        }
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace aggfix::test
