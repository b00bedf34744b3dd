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
#include "aggfix/altsem.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace aggfix {

NormalProgram as_normal_program(const GroundProgram& p) {
    NormalProgram out{p.base().size(), {}};
    for (const GroundRule& r : p.rules()) {
        if (!r.agg.empty()) {
            throw std::invalid_argument("program has aggregate atoms");
        }
        out.rules.push_back({r.head, r.pos, r.neg});
    }
    return out;
}

namespace {

void sort_unique(std::vector<AtomId>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

bool subsumes(const NormalRule& general, const NormalRule& specific) {
    return general.head == specific.head &&
           std::includes(specific.pos.begin(), specific.pos.end(), general.pos.begin(), general.pos.end()) &&
           std::includes(specific.neg.begin(), specific.neg.end(), general.neg.begin(), general.neg.end());
}

// Positive and negative body extensions contributed by one aggregate atom.
struct Extension {
    std::vector<AtomId> pos;
    std::vector<AtomId> neg;
};

// Keeps the extensions not subsumed by another one.
std::vector<Extension> minimal(std::vector<Extension> xs) {
    for (Extension& x : xs) {
        sort_unique(x.pos);
        sort_unique(x.neg);
    }
    std::sort(xs.begin(), xs.end(), [](const Extension& a, const Extension& b) {
        return std::tie(a.pos, a.neg) < std::tie(b.pos, b.neg);
    });
    xs.erase(std::unique(xs.begin(), xs.end(),
                         [](const Extension& a, const Extension& b) { return a.pos == b.pos && a.neg == b.neg; }),
             xs.end());
    std::vector<Extension> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < xs.size() && !dominated; ++j) {
            dominated = j != i &&
                        std::includes(xs[i].pos.begin(), xs[i].pos.end(), xs[j].pos.begin(), xs[j].pos.end()) &&
                        std::includes(xs[i].neg.begin(), xs[i].neg.end(), xs[j].neg.begin(), xs[j].neg.end());
        }
        if (!dominated) out.push_back(xs[i]);
    }
    return out;
}

// Emits one rule per combination of extensions (one per aggregate atom).
void expand(const GroundRule& r, const std::vector<std::vector<Extension>>& choices, NormalProgram& out,
            const Budget& budget) {
    std::uint64_t combos = 1;
    for (const auto& c : choices) {
        if (c.empty()) return;
        combos *= c.size();
        if (combos > budget.translated_rules) {
            throw LimitExceeded("translated rules", combos, budget.translated_rules);
        }
    }
    if (out.rules.size() + combos > budget.translated_rules) {
        throw LimitExceeded("translated rules", out.rules.size() + combos, budget.translated_rules);
    }
    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
        NormalRule nr{r.head, r.pos, r.neg};
        for (std::size_t k = 0; k < choices.size(); ++k) {
            const Extension& e = choices[k][pick[k]];
            nr.pos.insert(nr.pos.end(), e.pos.begin(), e.pos.end());
            nr.neg.insert(nr.neg.end(), e.neg.begin(), e.neg.end());
        }
        out.rules.push_back(std::move(nr));
        std::size_t k = 0;
        while (k < choices.size() && ++pick[k] == choices[k].size()) {
            pick[k] = 0;
            ++k;
        }
        if (k == choices.size()) break;
    }
}

Extension positive_part(const SolutionPair& s) {
    return {s.pos.ids(), {}};
}

Extension both_parts(const SolutionPair& s) {
    return {s.pos.ids(), s.neg.ids()};
}

} // namespace

void simplify(NormalProgram& p) {
    std::vector<NormalRule> rules;
    for (NormalRule& r : p.rules) {
        sort_unique(r.pos);
        sort_unique(r.neg);
        std::vector<AtomId> both;
        std::set_intersection(r.pos.begin(), r.pos.end(), r.neg.begin(), r.neg.end(), std::back_inserter(both));
        if (both.empty()) rules.push_back(std::move(r));
    }
    std::sort(rules.begin(), rules.end());
    rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
    std::vector<NormalRule> kept;
    auto                    begin = rules.begin();
    while (begin != rules.end()) {
        auto end = std::find_if(begin, rules.end(), [&](const NormalRule& r) { return r.head != begin->head; });
        for (auto it = begin; it != end; ++it) {
            bool subsumed = std::any_of(begin, end, [&](const NormalRule& other) {
                return &other != &*it && subsumes(other, *it);
            });
            if (!subsumed) kept.push_back(*it);
        }
        begin = end;
    }
    p.rules = std::move(kept);
}

std::vector<Interpretation> least_model_stages(const NormalProgram& positive) {
    std::vector<Interpretation> stages{Interpretation(positive.universe)};
    for (;;) {
        const Interpretation& cur = stages.back();
        Interpretation        next(positive.universe);
        for (const NormalRule& r : positive.rules) {
            if (!r.neg.empty()) continue;
            if (std::all_of(r.pos.begin(), r.pos.end(), [&](AtomId a) { return cur.contains(a); })) {
                next.insert(r.head);
            }
        }
        bool done = next == cur;
        stages.push_back(std::move(next));
        if (done) return stages;
    }
}

std::vector<Interpretation> gl_stages(const NormalProgram& p, const Interpretation& m) {
    NormalProgram reduct{p.universe, {}};
    for (const NormalRule& r : p.rules) {
        if (std::none_of(r.neg.begin(), r.neg.end(), [&](AtomId a) { return m.contains(a); })) {
            reduct.rules.push_back({r.head, r.pos, {}});
        }
    }
    return least_model_stages(reduct);
}

bool gl_answer_check(const NormalProgram& p, const Interpretation& m) {
    return gl_stages(p, m).back() == m;
}

NormalProgram naive_gl_reduct(const GroundProgram& p, const Interpretation& m) {
    NormalProgram out{p.base().size(), {}};
    for (const GroundRule& r : p.rules()) {
        bool dropped = std::any_of(r.neg.begin(), r.neg.end(), [&](AtomId a) { return m.contains(a); }) ||
                       std::any_of(r.agg.begin(), r.agg.end(),
                                   [&](std::size_t k) { return !eval_aggregate_atom(p.aggregates()[k], m); });
        if (!dropped) out.rules.push_back({r.head, r.pos, {}});
    }
    return out;
}

bool is_naive_answer_set(const GroundProgram& p, const Interpretation& m) {
    return least_model_stages(naive_gl_reduct(p, m)).back() == m;
}

GroundProgram flp_reduct(const GroundProgram& p, const Interpretation& m) {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < p.rules().size(); ++k) {
        if (satisfies_body(m, p.rules()[k], p)) keep.push_back(k);
    }
    return p.with_rules(keep);
}

bool is_flp_answer_set(const GroundProgram& p, const Interpretation& m, const Budget& budget) {
    return is_minimal_model(m, flp_reduct(p, m), budget);
}

std::vector<SolutionPair> solutions_satisfied_by(const GroundAggregate& c, const Interpretation& m,
                                                 const Budget& budget) {
    std::vector<SolutionPair> out;
    for (SolutionPair& s : enumerate_solutions(c, budget)) {
        if (s.pos.subset_of(m) && !s.neg.intersects(m)) out.push_back(std::move(s));
    }
    return out;
}

SolutionCache::SolutionCache(const GroundProgram& p, Budget budget)
    : program_(&p), budget_(budget), cache_(p.aggregates().size()) {}

const std::vector<SolutionPair>& SolutionCache::solutions(std::size_t aggregate) const {
    auto& slot = cache_.at(aggregate);
    if (!slot) {
        slot = enumerate_solutions(program_->aggregates()[aggregate], budget_);
    }
    return *slot;
}

std::vector<SolutionPair> SolutionCache::satisfied_by(std::size_t aggregate, const Interpretation& m) const {
    std::vector<SolutionPair> out;
    for (const SolutionPair& s : solutions(aggregate)) {
        if (s.pos.subset_of(m) && !s.neg.intersects(m)) out.push_back(s);
    }
    return out;
}

NormalProgram unfold(const GroundProgram& p, const Interpretation& m, const SolutionCache& cache,
                     const Budget& budget) {
    NormalProgram out{p.base().size(), {}};
    for (const GroundRule& r : p.rules()) {
        if (std::any_of(r.neg.begin(), r.neg.end(), [&](AtomId a) { return m.contains(a); })) continue;
        std::vector<std::vector<Extension>> choices;
        for (std::size_t k : r.agg) {
            std::vector<Extension> ext;
            for (const SolutionPair& s : cache.satisfied_by(k, m)) ext.push_back(positive_part(s));
            choices.push_back(minimal(std::move(ext)));
        }
        expand(r, choices, out, budget);
    }
    simplify(out);
    return out;
}

NormalProgram unfold(const GroundProgram& p, const Interpretation& m, const Budget& budget) {
    return unfold(p, m, SolutionCache(p, budget), budget);
}

bool is_unfolding_answer_set(const GroundProgram& p, const Interpretation& m, const Budget& budget) {
    return gl_answer_check(unfold(p, m, budget), m);
}

NormalProgram translate_tr(const GroundProgram& p, const Budget& budget) {
    SolutionCache                       cache(p, budget);
    std::vector<std::vector<Extension>> per_aggregate(p.aggregates().size());
    for (std::size_t k = 0; k < p.aggregates().size(); ++k) {
        std::vector<Extension> ext;
        for (const SolutionPair& s : cache.solutions(k)) ext.push_back(both_parts(s));
        per_aggregate[k] = minimal(std::move(ext));
    }
    NormalProgram out{p.base().size(), {}};
    for (const GroundRule& r : p.rules()) {
        std::vector<std::vector<Extension>> choices;
        for (std::size_t k : r.agg) choices.push_back(per_aggregate[k]);
        expand(r, choices, out, budget);
    }
    simplify(out);
    return out;
}

std::vector<std::string> SemanticsReport::violations() const {
    std::vector<std::string> out;
    if (fixpoint && !flp) out.emplace_back("fixpoint=>flp");
    if (fixpoint != unfolding) out.emplace_back("fixpoint<=>unfolding");
    if (fixpoint != tr) out.emplace_back("fixpoint<=>tr");
    return out;
}

SemanticsComparator::SemanticsComparator(const GroundProgram& p, Budget budget)
    : program_(&p), budget_(budget), cache_(p, budget), tr_(translate_tr(p, budget)) {}

SemanticsReport SemanticsComparator::compare(const Interpretation& m) const {
    SemanticsReport rep;
    rep.candidate = m;
    rep.fixpoint  = is_fixpoint_answer_set(*program_, m, budget_).accepted;
    rep.flp       = is_flp_answer_set(*program_, m, budget_);
    rep.unfolding = gl_answer_check(unfold(*program_, m, cache_, budget_), m);
    rep.naive_gl  = is_naive_answer_set(*program_, m);
    rep.tr        = gl_answer_check(tr_, m);
    return rep;
}

std::string to_string(const NormalRule& r, const HerbrandBase& base) {
    std::string out = to_string(base.atom(r.head));
    if (!r.pos.empty() || !r.neg.empty()) {
        out += " :- ";
        bool first = true;
        for (AtomId a : r.pos) {
            out += (first ? "" : ", ") + to_string(base.atom(a));
            first = false;
        }
        for (AtomId a : r.neg) {
            out += (first ? "not " : ", not ") + to_string(base.atom(a));
            first = false;
        }
    }
    return out + '.';
}

std::string to_string(const NormalProgram& p, const HerbrandBase& base) {
    std::string out;
    for (const NormalRule& r : p.rules) out += to_string(r, base) + '\n';
    return out;
}

} // namespace aggfix
