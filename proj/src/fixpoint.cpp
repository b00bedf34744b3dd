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
#include "aggfix/fixpoint.hpp"

#include <algorithm>

namespace aggfix {

ReductProgram reduct(const GroundProgram& p, const Interpretation& m) {
    ReductProgram out;
    for (const GroundRule& r : p.rules()) {
        bool blocked = std::any_of(r.neg.begin(), r.neg.end(), [&](AtomId a) { return m.contains(a); });
        if (!blocked) {
            out.rules.push_back({r.head, r.pos, r.agg});
        }
    }
    return out;
}

namespace {

Interpretation step(const GroundProgram& p, const ReductProgram& red, const Interpretation& m,
                    const Interpretation& i, const Budget& budget) {
    Interpretation out = p.empty_interpretation();
    for (const ReductRule& r : red.rules) {
        if (out.contains(r.head)) continue;
        bool fires = std::all_of(r.pos.begin(), r.pos.end(), [&](AtomId a) { return conditionally_satisfies(i, m, a); });
        fires = fires && std::all_of(r.agg.begin(), r.agg.end(), [&](std::size_t k) {
                    return conditionally_satisfies(i, m, p.aggregates()[k], budget);
                });
        if (fires) out.insert(r.head);
    }
    return out;
}

} // namespace

Interpretation apply_consequence(const GroundProgram& p, const Interpretation& m, const Interpretation& i,
                                 const Budget& budget) {
    return step(p, reduct(p, m), m, i, budget);
}

FixpointTrace least_fixpoint(const GroundProgram& p, const Interpretation& m, const Budget& budget) {
    const ReductProgram red = reduct(p, m);
    FixpointTrace       trace;
    trace.stages.push_back(p.empty_interpretation());
    // A monotone chain from {} stabilizes after at most |B_P| strict increases.
    for (std::size_t n = 0; n <= p.base().size(); ++n) {
        Interpretation next = step(p, red, m, trace.stages.back(), budget);
        bool           done = next == trace.stages.back();
        trace.stages.push_back(std::move(next));
        if (done) {
            trace.converged = true;
            break;
        }
    }
    return trace;
}

FixpointCheck is_fixpoint_answer_set(const GroundProgram& p, const Interpretation& m, const Budget& budget) {
    FixpointCheck out;
    out.trace    = least_fixpoint(p, m, budget);
    out.accepted = out.trace.converged && out.trace.fixpoint() == m;
    return out;
}

void for_each_subset(std::span<const AtomId> atoms, std::size_t universe,
                     const std::function<bool(const Interpretation&)>& visit) {
    const std::size_t n = atoms.size();
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::size_t> pick(k);
        for (std::size_t j = 0; j < k; ++j) pick[j] = j;
        for (;;) {
            Interpretation s(universe);
            for (std::size_t j : pick) s.insert(atoms[j]);
            if (!visit(s)) return;
            // next k-combination in lexicographic order
            std::size_t j = k;
            while (j > 0 && pick[j - 1] == n - k + j - 1) --j;
            if (j == 0) break;
            ++pick[j - 1];
            for (std::size_t t = j; t < k; ++t) pick[t] = pick[t - 1] + 1;
        }
    }
}

std::vector<Interpretation> enumerate_answer_sets(const GroundProgram& p, const Budget& budget) {
    std::vector<AtomId> heads;
    for (const GroundRule& r : p.rules()) heads.push_back(r.head);
    std::sort(heads.begin(), heads.end());
    heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
    if (heads.size() >= 64 || (std::uint64_t{1} << heads.size()) > budget.candidates) {
        throw LimitExceeded("answer-set candidates", heads.size() >= 64 ? UINT64_MAX : std::uint64_t{1} << heads.size(),
                            budget.candidates);
    }
    std::vector<Interpretation> out;
    for_each_subset(heads, p.base().size(), [&](const Interpretation& m) {
        if (is_model(m, p) && is_fixpoint_answer_set(p, m, budget).accepted) {
            out.push_back(m);
        }
        return true;
    });
    return out;
}

std::vector<std::string> render_trace(const FixpointTrace& trace, const HerbrandBase& base) {
    std::vector<std::string> out;
    for (std::size_t n = 0; n < trace.stages.size(); ++n) {
        out.push_back("K^" + std::to_string(n) + " = " + render(trace.stages[n], base));
    }
    return out;
}

} // namespace aggfix
