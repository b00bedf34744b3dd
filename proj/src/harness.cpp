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
#include "aggfix/harness.hpp"

#include <algorithm>
#include <numeric>

namespace aggfix {

std::uint64_t RandomStream::mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t RandomStream::next() {
    ++counter_;
    return mix(seed_ + kGamma * counter_);
}

std::uint64_t RandomStream::below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return r % n;
    }
}

std::int64_t RandomStream::range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool RandomStream::chance(double p) {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
}

RandomStream RandomStream::split(std::uint64_t tag) const {
    return RandomStream(mix(seed_ ^ mix(tag + kGamma)));
}

namespace {

// k distinct integers from [lo, hi] (fewer if the range is smaller), sorted.
std::vector<std::int64_t> distinct_integers(RandomStream& rng, std::size_t k, std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> pool(static_cast<std::size_t>(hi - lo + 1));
    std::iota(pool.begin(), pool.end(), lo);
    k = std::min(k, pool.size());
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

std::uint64_t power(std::uint64_t base, std::size_t exp) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) out *= base;
    return out;
}

struct Signature {
    std::vector<Term>                                constants;
    std::vector<std::pair<std::string, std::size_t>> predicates;
};

Atom random_atom(RandomStream& rng, const Signature& sig, const std::pair<std::string, std::size_t>& pred) {
    Atom a{pred.first, {}};
    for (std::size_t k = 0; k < pred.second; ++k) a.args.push_back(rng.pick(sig.constants));
    return a;
}

std::int64_t random_bound(RandomStream& rng, AggFunction fn, const std::vector<std::int64_t>& values,
                          std::size_t universe) {
    if (fn == AggFunction::Count) {
        return rng.range(-1, static_cast<std::int64_t>(universe) + 1);
    }
    if (fn == AggFunction::Sum) {
        std::int64_t lo = 0, hi = 0;
        for (std::int64_t v : values) (v < 0 ? lo : hi) += v;
        return rng.range(lo - 1, hi + 1);
    }
    if (values.empty()) {
        return rng.range(-2, 2);
    }
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return rng.range(*lo - 1, *hi + 1);
}

AggregateAtom random_aggregate(RandomStream& rng, const GenParams& g, const Signature& sig) {
    std::vector<std::pair<std::string, std::size_t>> candidates;
    for (const auto& p : sig.predicates) {
        if (p.second > 0) candidates.push_back(p);
    }
    const auto& pred = rng.pick(candidates);
    AggregateAtom l;
    l.function = rng.pick(g.allowed_functions);
    l.op       = rng.pick(g.allowed_ops);
    l.set.kind = pred.second >= 2 && rng.chance(g.multiset_probability) ? SetKind::Multiset : SetKind::Set;
    l.set.grouped_var      = "X";
    l.set.grouped_position = static_cast<std::size_t>(rng.below(pred.second));
    l.set.pattern.predicate = pred.first;
    std::size_t locals = 0;
    for (std::size_t k = 0; k < pred.second; ++k) {
        if (k == l.set.grouped_position) {
            l.set.pattern.args.push_back(Term::variable("X", VarClass::Grouped));
        }
        else if (l.set.kind == SetKind::Multiset && rng.chance(0.5)) {
            std::string name = "Z" + std::to_string(++locals);
            l.set.local_vars.push_back(name);
            l.set.pattern.args.push_back(Term::variable(name, VarClass::Local));
        }
        else {
            l.set.pattern.args.push_back(rng.pick(sig.constants));
        }
    }
    std::vector<std::int64_t> values;
    for (const Term& c : sig.constants) values.push_back(c.value);
    const std::size_t universe = static_cast<std::size_t>(power(sig.constants.size(), 1 + locals));
    if (l.function == AggFunction::Sum && l.set.kind == SetKind::Multiset) {
        std::vector<std::int64_t> repeated;
        for (std::size_t k = 0; k < universe / std::max<std::size_t>(values.size(), 1); ++k) {
            repeated.insert(repeated.end(), values.begin(), values.end());
        }
        values = std::move(repeated);
    }
    l.bound = Term::integer(random_bound(rng, l.function, values, universe));
    return l;
}

} // namespace

Program generate_program(const GenParams& g) {
    RandomStream sig_rng  = RandomStream(g.seed).split(1);
    RandomStream rule_rng = RandomStream(g.seed).split(2);

    Signature sig;
    for (std::int64_t v : distinct_integers(sig_rng, g.num_constants, g.constant_min, g.constant_max)) {
        sig.constants.push_back(Term::integer(v));
    }
    const std::uint64_t n     = sig.constants.size();
    std::uint64_t       total = 0;
    for (std::size_t i = 0; i < g.num_predicates; ++i) {
        std::size_t arity = static_cast<std::size_t>(sig_rng.below(g.max_arity + 1));
        if (i == 0 && n > 0 && g.max_arity > 0) arity = std::max<std::size_t>(arity, 1);
        if (n == 0) arity = 0;
        while (arity > 0 && total + power(n, arity) > g.max_base_size) --arity;
        if (total + 1 > g.max_base_size) break;
        total += power(n, arity);
        sig.predicates.emplace_back("p" + std::to_string(i), arity);
    }

    std::vector<Rule> rules;
    const bool        has_aggregates =
        std::any_of(sig.predicates.begin(), sig.predicates.end(), [](const auto& p) { return p.second > 0; }) &&
        !g.allowed_functions.empty() && !g.allowed_ops.empty();
    // Rules draw most atoms from a small shared pool so that they interact (loops through negation,
    // aggregates over derived atoms) instead of scattering over the whole base.
    std::vector<Atom> pool;
    for (std::size_t k = 0; k < 2 && !sig.predicates.empty(); ++k) {
        pool.push_back(random_atom(sig_rng, sig, sig_rng.pick(sig.predicates)));
    }
    auto next_atom = [&](double shared) {
        if (rule_rng.chance(shared)) return rule_rng.pick(pool);
        return random_atom(rule_rng, sig, rule_rng.pick(sig.predicates));
    };
    for (std::size_t i = 0; i < g.num_rules && !sig.predicates.empty(); ++i) {
        Rule r;
        r.head            = next_atom(0.7);
        std::size_t width = 0;
        if (g.max_body_atoms > 0 && !rule_rng.chance(0.15)) {
            width = 1 + static_cast<std::size_t>(rule_rng.below(g.max_body_atoms));
        }
        for (std::size_t k = 0; k < width; ++k) {
            if (has_aggregates && rule_rng.chance(g.aggregate_probability)) {
                r.agg.push_back(random_aggregate(rule_rng, g, sig));
            }
            else if (rule_rng.chance(g.negation_probability)) {
                Atom n = next_atom(0.7);
                if (n == r.head) n = next_atom(0.7);
                r.neg.push_back(std::move(n));
            }
            else {
                r.pos.push_back(next_atom(0.3));
            }
        }
        rules.push_back(std::move(r));
    }
    return make_program(std::move(rules), sig.constants);
}

ScpInstance generate_scp_instance(const GenParams& g) {
    RandomStream rng = RandomStream(g.seed).split(3);

    AggregateAtom l;
    l.set.grouped_var = "X";
    std::vector<Term> constants;
    std::size_t       universe = 0;
    if (rng.chance(0.25)) {
        // subset-sum shaped: sum{X : p(X)} != t over non-negative values
        universe = static_cast<std::size_t>(rng.below(g.max_universe + 1));
        std::vector<std::int64_t> values = distinct_integers(rng, universe, 0, 20);
        for (std::int64_t v : values) constants.push_back(Term::integer(v));
        l.function = AggFunction::Sum;
        l.op       = CompareOp::Ne;
        l.set.kind = SetKind::Set;
        l.set.pattern = Atom{"p", {Term::variable("X", VarClass::Grouped)}};
        l.bound = Term::integer(rng.range(0, std::accumulate(values.begin(), values.end(), std::int64_t{0}) + 1));
    }
    else {
        l.function = rng.pick(g.allowed_functions);
        l.op       = rng.pick(g.allowed_ops);
        std::size_t grid = 0;
        while ((grid + 1) * (grid + 1) <= g.max_universe) ++grid;
        const bool multiset = grid > 0 && rng.chance(g.multiset_probability);
        std::size_t count = multiset ? static_cast<std::size_t>(rng.range(1, static_cast<std::int64_t>(grid)))
                                     : static_cast<std::size_t>(rng.below(g.max_universe + 1));
        universe = multiset ? count * count : count;
        if (l.function == AggFunction::Count && rng.chance(0.2)) {
            for (std::size_t k = 0; k < count; ++k) constants.push_back(Term::symbol("c" + std::to_string(k)));
        }
        else {
            auto width = std::max<std::int64_t>(5, static_cast<std::int64_t>(count));
            for (std::int64_t v : distinct_integers(rng, count, -width, width)) constants.push_back(Term::integer(v));
        }
        if (multiset) {
            l.set.kind       = SetKind::Multiset;
            l.set.local_vars = {"Z"};
            l.set.pattern    = Atom{"q", {Term::variable("X", VarClass::Grouped), Term::variable("Z", VarClass::Local)}};
        }
        else {
            l.set.kind    = SetKind::Set;
            l.set.pattern = Atom{"p", {Term::variable("X", VarClass::Grouped)}};
        }
        std::vector<std::int64_t> values;
        for (const Term& c : constants) {
            if (c.is_integer()) {
                for (std::size_t k = 0; k < (multiset ? count : 1); ++k) values.push_back(c.value);
            }
        }
        l.bound = Term::integer(random_bound(rng, l.function, values, universe));
    }

    Rule r;
    r.head = Atom{"h", {}};
    r.agg.push_back(std::move(l));
    GroundProgram program(make_program({std::move(r)}, std::move(constants)));
    SolutionPair  pair{program.empty_interpretation(), program.empty_interpretation()};
    for (AtomId a : program.aggregates().front().universe) {
        switch (rng.below(4)) {
            case 2 : pair.pos.insert(a); break;
            case 3 : pair.neg.insert(a); break;
            default: break;
        }
    }
    return {std::move(program), std::move(pair)};
}

} // namespace aggfix
