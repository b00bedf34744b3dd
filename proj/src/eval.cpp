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
#include "aggfix/eval.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace aggfix {

Rational Rational::of(std::int64_t num, std::int64_t den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
    return static_cast<__int128>(num) * other.den <=> static_cast<__int128>(other.num) * den;
}

std::vector<Term> eval_set_expression(const GroundAggregate& l, const Interpretation& i) {
    std::vector<Term> out;
    for (std::size_t k = 0; k < l.universe.size(); ++k) {
        if (i.contains(l.universe[k])) out.push_back(l.values[k]);
    }
    std::sort(out.begin(), out.end());
    if (l.kind == SetKind::Set) {
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return out;
}

AggregateValue aggregate_value(AggFunction fn, const std::vector<Term>& elements) {
    if (fn == AggFunction::Count) {
        return Rational::of(static_cast<std::int64_t>(elements.size()));
    }
    for (const Term& t : elements) {
        if (!t.is_integer()) throw NonIntegerElement(to_string(t));
    }
    if (elements.empty()) {
        if (fn == AggFunction::Sum) return Rational::of(0);
        return std::nullopt;
    }
    std::int64_t sum = 0;
    for (const Term& t : elements) sum += t.value;
    switch (fn) {
        case AggFunction::Sum: return Rational::of(sum);
        case AggFunction::Min: return Rational::of(elements.front().value);
        case AggFunction::Max: return Rational::of(elements.back().value);
        case AggFunction::Avg: return Rational::of(sum, static_cast<std::int64_t>(elements.size()));
        case AggFunction::Count: break;
    }
    return std::nullopt;
}

bool compare(const Rational& lhs, CompareOp op, std::int64_t rhs) {
    auto c = lhs <=> Rational::of(rhs);
    switch (op) {
        case CompareOp::Eq: return c == 0;
        case CompareOp::Ne: return c != 0;
        case CompareOp::Lt: return c < 0;
        case CompareOp::Gt: return c > 0;
        case CompareOp::Le: return c <= 0;
        case CompareOp::Ge: return c >= 0;
    }
    return false;
}

bool compare(std::int64_t lhs, CompareOp op, std::int64_t rhs) {
    return compare(Rational::of(lhs), op, rhs);
}

bool eval_aggregate_atom(const GroundAggregate& l, const Interpretation& i) {
    AggregateValue v = aggregate_value(l.function, eval_set_expression(l, i));
    return v && compare(*v, l.op, l.bound);
}

bool satisfies_body(const Interpretation& i, const GroundRule& r, const GroundProgram& p) {
    for (AtomId a : r.pos) {
        if (!i.contains(a)) return false;
    }
    for (AtomId a : r.neg) {
        if (i.contains(a)) return false;
    }
    for (std::size_t k : r.agg) {
        if (!eval_aggregate_atom(p.aggregates()[k], i)) return false;
    }
    return true;
}

bool is_model(const Interpretation& i, const GroundProgram& p) {
    return std::all_of(p.rules().begin(), p.rules().end(),
                       [&](const GroundRule& r) { return i.contains(r.head) || !satisfies_body(i, r, p); });
}

bool is_minimal_model(const Interpretation& i, const GroundProgram& p, const Budget& budget) {
    if (!is_model(i, p)) {
        return false;
    }
    std::vector<AtomId> atoms = i.ids();
    for (AtomId a : atoms) {
        Interpretation smaller = i;
        smaller.erase(a);
        if (is_model(smaller, p)) return false;
    }
    const std::size_t n = atoms.size();
    if (n >= 64 || (std::uint64_t{1} << n) - 1 > budget.minimal_model_subsets) {
        throw LimitExceeded("minimal-model check", n >= 64 ? UINT64_MAX : (std::uint64_t{1} << n) - 1,
                            budget.minimal_model_subsets);
    }
    // Subsets missing at least two atoms; one-atom removals were handled above.
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 0; mask < full; ++mask) {
        if (std::popcount(mask) + 1 >= static_cast<int>(n)) continue;
        Interpretation sub(i.universe());
        for (std::size_t k = 0; k < n; ++k) {
            if (mask >> k & 1u) sub.insert(atoms[k]);
        }
        if (is_model(sub, p)) return false;
    }
    return true;
}

} // namespace aggfix
