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
#include "aggfix/solutions.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace aggfix {

std::strong_ordering SolutionPair::operator<=>(const SolutionPair& other) const {
    if (auto c = pos <=> other.pos; c != 0) {
        return c;
    }
    return neg <=> other.neg;
}

bool is_well_formed(const GroundAggregate& l, const SolutionPair& s) {
    return !s.pos.intersects(s.neg) && s.pos.subset_of(l.universe_set) && s.neg.subset_of(l.universe_set);
}

namespace {

void require_well_formed(const GroundAggregate& l, const SolutionPair& s) {
    if (!is_well_formed(l, s)) {
        throw std::invalid_argument("ill-formed solution pair for " + to_string(l.source));
    }
}

// Grouped values of S1 and of the free atoms, in universe order.
struct Split {
    std::vector<const Term*> in;
    std::vector<const Term*> free;
};

Split split(const GroundAggregate& l, const SolutionPair& s) {
    Split out;
    for (std::size_t k = 0; k < l.universe.size(); ++k) {
        AtomId a = l.universe[k];
        if (s.pos.contains(a)) out.in.push_back(&l.values[k]);
        else if (!s.neg.contains(a)) out.free.push_back(&l.values[k]);
    }
    return out;
}

std::vector<std::int64_t> integers(const std::vector<const Term*>& terms) {
    std::vector<std::int64_t> out;
    out.reserve(terms.size());
    for (const Term* t : terms) {
        if (!t->is_integer()) throw NonIntegerElement(to_string(*t));
        out.push_back(t->value);
    }
    return out;
}

std::int64_t total(const std::vector<std::int64_t>& xs) {
    std::int64_t s = 0;
    for (std::int64_t x : xs) s += x;
    return s;
}

bool check_sum(CompareOp op, std::int64_t v, const std::vector<std::int64_t>& in,
               const std::vector<std::int64_t>& free, const Budget& budget) {
    const std::int64_t s = total(in);
    switch (op) {
        case CompareOp::Eq:
            // Check_Solution
            if (s != v) return false;
            if (free.empty()) return true;
            for (std::int64_t x : free) {
                if (x != 0) return false;
            }
            return true;
        case CompareOp::Gt:
        case CompareOp::Ge: {
            std::int64_t low = s;
            for (std::int64_t x : free) {
                if (x < 0) low += x;
            }
            return compare(s, op, v) && compare(low, op, v);
        }
        case CompareOp::Lt:
        case CompareOp::Le: {
            std::int64_t high = s;
            for (std::int64_t x : free) {
                if (x > 0) high += x;
            }
            return compare(s, op, v) && compare(high, op, v);
        }
        case CompareOp::Ne: return !subset_sum_reachable(free, v - s, budget.subset_sum_span);
    }
    return false;
}

bool check_count(CompareOp op, std::int64_t v, std::int64_t c, std::int64_t h) {
    switch (op) {
        case CompareOp::Gt:
        case CompareOp::Ge: return compare(c, op, v);
        case CompareOp::Eq:
        case CompareOp::Lt:
        case CompareOp::Le: return compare(c, op, v) && compare(c + h, op, v);
        case CompareOp::Ne: return c > v || (c < v && h < v - c);
    }
    return false;
}

bool check_min(CompareOp op, std::int64_t v, const std::vector<std::int64_t>& in,
               const std::vector<std::int64_t>& free) {
    if (in.empty()) return false;
    const std::int64_t c  = *std::min_element(in.begin(), in.end());
    const bool         no_free = free.empty();
    const std::int64_t c1 = no_free ? 0 : *std::min_element(free.begin(), free.end());
    switch (op) {
        case CompareOp::Eq: return c == v && (no_free || c1 >= v);
        case CompareOp::Lt:
        case CompareOp::Le: return compare(c, op, v);
        case CompareOp::Gt:
        case CompareOp::Ge: return compare(c, op, v) && (no_free || compare(c1, op, v));
        case CompareOp::Ne:
            return c < v || (c > v && std::find(free.begin(), free.end(), v) == free.end());
    }
    return false;
}

bool check_max(CompareOp op, std::int64_t v, const std::vector<std::int64_t>& in,
               const std::vector<std::int64_t>& free) {
    if (in.empty()) return false;
    const std::int64_t c  = *std::max_element(in.begin(), in.end());
    const bool         no_free = free.empty();
    const std::int64_t c1 = no_free ? 0 : *std::max_element(free.begin(), free.end());
    switch (op) {
        case CompareOp::Eq: return c == v && (no_free || c1 <= v);
        case CompareOp::Gt:
        case CompareOp::Ge: return compare(c, op, v);
        case CompareOp::Lt:
        case CompareOp::Le: return compare(c, op, v) && (no_free || compare(c1, op, v));
        case CompareOp::Ne:
            return c > v || (c < v && std::find(free.begin(), free.end(), v) == free.end());
    }
    return false;
}

// AVG for = and the four orderings. Adding the h most adverse free values is the
// worst case for every extension of size h.
bool check_avg(CompareOp op, std::int64_t v, const std::vector<std::int64_t>& in, std::vector<std::int64_t> free) {
    if (in.empty()) return false;
    const std::int64_t s = total(in);
    const auto         n = static_cast<std::int64_t>(in.size());
    if (op == CompareOp::Eq) {
        return s == v * n && std::all_of(free.begin(), free.end(), [v](std::int64_t x) { return x == v; });
    }
    if (op == CompareOp::Gt || op == CompareOp::Ge) {
        std::stable_sort(free.begin(), free.end());
    }
    else {
        std::stable_sort(free.begin(), free.end(), std::greater<>{});
    }
    std::int64_t prefix = s;
    if (!compare(prefix, op, v * n)) return false;
    for (std::size_t h = 0; h < free.size(); ++h) {
        prefix += free[h];
        if (!compare(prefix, op, v * (n + static_cast<std::int64_t>(h) + 1))) return false;
    }
    return true;
}

} // namespace

bool subset_sum_reachable(std::span<const std::int64_t> values, std::int64_t target, std::uint64_t span_limit) {
    std::int64_t low = 0;
    std::int64_t high = 0;
    for (std::int64_t x : values) {
        (x < 0 ? low : high) += x;
    }
    if (target < low || target > high) {
        return false;
    }
    const auto width = static_cast<std::uint64_t>(high - low);
    if (width > span_limit) {
        throw LimitExceeded("subset-sum table", width, span_limit);
    }
    // reach[k] <=> sum low + k is attainable.
    std::vector<char> reach(width + 1, 0);
    reach[static_cast<std::size_t>(-low)] = 1;
    for (std::int64_t x : values) {
        if (x > 0) {
            for (auto k = static_cast<std::int64_t>(width); k >= x; --k) {
                if (reach[static_cast<std::size_t>(k - x)]) reach[static_cast<std::size_t>(k)] = 1;
            }
        }
        else if (x < 0) {
            for (std::int64_t k = 0; k - x <= static_cast<std::int64_t>(width); ++k) {
                if (reach[static_cast<std::size_t>(k - x)]) reach[static_cast<std::size_t>(k)] = 1;
            }
        }
    }
    return reach[static_cast<std::size_t>(target - low)] != 0;
}

bool is_solution_oracle(const GroundAggregate& l, const SolutionPair& s, const Budget& budget) {
    require_well_formed(l, s);
    std::vector<AtomId> free;
    for (AtomId a : l.universe) {
        if (!s.pos.contains(a) && !s.neg.contains(a)) free.push_back(a);
    }
    if (free.size() > budget.oracle_free_atoms || free.size() >= 64) {
        throw LimitExceeded("solution oracle free atoms", free.size(), budget.oracle_free_atoms);
    }
    // The largest extension goes first: it holds every element the others can collect, so a
    // symbolic element raises here regardless of where enumeration would stop.
    const std::uint64_t count = std::uint64_t{1} << free.size();
    for (std::uint64_t step = 0; step < count; ++step) {
        const std::uint64_t mask = count - 1 - step;
        Interpretation j = s.pos;
        for (std::size_t k = 0; k < free.size(); ++k) {
            if (mask >> k & 1u) j.insert(free[k]);
        }
        if (!eval_aggregate_atom(l, j)) return false;
    }
    return true;
}

bool is_solution(const GroundAggregate& l, const SolutionPair& s, const Budget& budget) {
    require_well_formed(l, s);
    Split parts = split(l, s);
    if (l.function == AggFunction::Count) {
        return check_count(l.op, l.bound, static_cast<std::int64_t>(parts.in.size()),
                           static_cast<std::int64_t>(parts.free.size()));
    }
    std::vector<std::int64_t> in   = integers(parts.in);
    std::vector<std::int64_t> free = integers(parts.free);
    switch (l.function) {
        case AggFunction::Sum: return check_sum(l.op, l.bound, in, free, budget);
        case AggFunction::Min: return check_min(l.op, l.bound, in, free);
        case AggFunction::Max: return check_max(l.op, l.bound, in, free);
        case AggFunction::Avg:
            if (l.op == CompareOp::Ne) return is_solution_oracle(l, s, budget);
            return check_avg(l.op, l.bound, in, std::move(free));
        case AggFunction::Count: break;
    }
    return false;
}

std::vector<SolutionPair> enumerate_solutions(const GroundAggregate& l, const Budget& budget) {
    const std::size_t n     = l.universe.size();
    std::uint64_t     pairs = 1;
    for (std::size_t k = 0; k < n; ++k) {
        pairs *= 3;
        if (pairs > budget.enumeration_pairs) {
            throw LimitExceeded("solution enumeration pairs", pairs, budget.enumeration_pairs);
        }
    }
    const std::size_t         universe = l.universe_set.universe();
    std::vector<std::uint8_t> state(n, 0); // 0 free, 1 pos, 2 neg
    std::vector<SolutionPair> out;
    for (std::uint64_t step = 0; step < pairs; ++step) {
        SolutionPair s{Interpretation(universe), Interpretation(universe)};
        for (std::size_t k = 0; k < n; ++k) {
            if (state[k] == 1) s.pos.insert(l.universe[k]);
            else if (state[k] == 2) s.neg.insert(l.universe[k]);
        }
        if (is_solution(l, s, budget)) out.push_back(std::move(s));
        for (std::size_t k = 0; k < n; ++k) {
            if (++state[k] < 3) break;
            state[k] = 0;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool conditionally_satisfies(const Interpretation& i, const Interpretation& m, const GroundAggregate& l,
                             const Budget& budget) {
    SolutionPair s{i & m & l.universe_set, l.universe_set - m};
    return is_solution(l, s, budget);
}

SubsetSumInstance make_subset_sum_instance(std::span<const std::int64_t> values, std::int64_t target) {
    std::vector<Term> domain;
    for (std::int64_t x : values) {
        if (x < 0) throw std::invalid_argument("subset-sum values must be non-negative");
        domain.push_back(Term::integer(x));
    }
    AggregateAtom l;
    l.function              = AggFunction::Sum;
    l.set.kind              = SetKind::Set;
    l.set.grouped_var       = "X";
    l.set.pattern           = Atom{"p", {Term::variable("X", VarClass::Grouped)}};
    l.set.grouped_position  = 0;
    l.op                    = CompareOp::Ne;
    l.bound                 = Term::integer(target);
    Rule r;
    r.head = Atom{"ss", {}};
    r.agg.push_back(std::move(l));
    GroundProgram program(make_program({std::move(r)}, std::move(domain)));
    SolutionPair  pair{program.empty_interpretation(), program.empty_interpretation()};
    return {std::move(program), std::move(pair)};
}

} // namespace aggfix
