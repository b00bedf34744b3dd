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
// Seeded random programs and solution-checking instances for property and
// differential testing.
//
// Randomness comes from a counter-based SplitMix64 stream, so a seed yields
// the same instances on every platform and in every language that follows the
// same steps:
//
//   next()      = mix(seed + kGamma * counter), counter incremented first
//   mix(z)      = z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//                 z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31
//   split(tag)  = stream with seed mix(seed ^ mix(tag + kGamma)), counter 0
//   below(n)    = first next() >= (2^64 - n) mod n, reduced mod n
//   chance(p)   = (next() >> 11) * 2^-53 < p
#pragma once

#include "aggfix/solutions.hpp"

#include <cstdint>
#include <vector>

namespace aggfix {

class RandomStream {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    explicit RandomStream(std::uint64_t seed) : seed_(seed) {}

    static std::uint64_t mix(std::uint64_t z);

    std::uint64_t next();
    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    std::int64_t range(std::int64_t lo, std::int64_t hi);
    bool chance(double p);
    RandomStream split(std::uint64_t tag) const;

    template <class T>
    const T& pick(const std::vector<T>& xs) {
        return xs[static_cast<std::size_t>(below(xs.size()))];
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

struct GenParams {
    std::uint64_t            seed = 0;
    std::size_t              num_predicates = 4;
    std::size_t              max_arity = 1;
    std::size_t              num_constants = 3;
    std::size_t              num_rules = 6;
    std::size_t              max_body_atoms = 3;
    double                   aggregate_probability = 0.3;
    double                   negation_probability = 0.4;
    double                   multiset_probability = 0.3;
    std::vector<AggFunction> allowed_functions{std::begin(kAllFunctions), std::end(kAllFunctions)};
    std::vector<CompareOp>   allowed_ops{std::begin(kAllOps), std::end(kAllOps)};
    /// Upper bound on |B_P|.
    std::size_t              max_base_size = 16;
    /// Integer constants are drawn from [constant_min, constant_max].
    std::int64_t             constant_min = -2;
    std::int64_t             constant_max = 4;
    /// Upper bound on |H(l)| for generate_scp_instance().
    std::size_t              max_universe = 10;
};

/// A ground program over integer constants; parses back from its rendering.
Program generate_program(const GenParams& g);

/// One aggregate atom (the program's only rule body) and a well-formed pair over
/// its universe. About a quarter of the instances are subset-sum shaped
/// (`sum != t` over non-negative values).
struct ScpInstance {
    GroundProgram program;
    SolutionPair  pair;

    const GroundAggregate& aggregate() const { return program.aggregates().front(); }
};

ScpInstance generate_scp_instance(const GenParams& g);

} // namespace aggfix
