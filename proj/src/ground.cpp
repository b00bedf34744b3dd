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
#include "aggfix/ground.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace aggfix {

// ---------------------------------------------------------------------------
// HerbrandBase
// ---------------------------------------------------------------------------
HerbrandBase::HerbrandBase(const Program& p, std::uint64_t limit) {
    std::uint64_t total = 0;
    const auto    n     = static_cast<std::uint64_t>(p.constants.size());
    for (const auto& [pred, arity] : p.predicates) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < arity; ++i) {
            count *= n;
            if (count > limit) break;
        }
        total += count;
        if (total > limit) {
            throw LimitExceeded("Herbrand base", total, limit);
        }
    }
    atoms_.reserve(total);
    for (const auto& [pred, arity] : p.predicates) {
        if (arity > 0 && n == 0) {
            continue;
        }
        std::vector<std::size_t> idx(arity, 0);
        for (;;) {
            Atom a{pred, {}};
            for (std::size_t k : idx) a.args.push_back(p.constants[k]);
            atoms_.push_back(std::move(a));
            std::size_t k = arity;
            while (k > 0 && ++idx[k - 1] == n) {
                idx[k - 1] = 0;
                --k;
            }
            if (k == 0) break;
        }
    }
    std::sort(atoms_.begin(), atoms_.end());
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        index_.emplace(atoms_[i], static_cast<AtomId>(i));
    }
}

std::optional<AtomId> HerbrandBase::find(const Atom& a) const {
    auto it = index_.find(a);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

AtomId HerbrandBase::id(const Atom& a) const {
    if (auto found = find(a)) {
        return *found;
    }
    throw std::invalid_argument("atom not in Herbrand base: " + to_string(a));
}

// ---------------------------------------------------------------------------
// Interpretation
// ---------------------------------------------------------------------------
Interpretation Interpretation::of(std::size_t universe, std::span<const AtomId> ids) {
    Interpretation out(universe);
    for (AtomId id : ids) out.insert(id);
    return out;
}

std::size_t Interpretation::size() const noexcept {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool Interpretation::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<AtomId> Interpretation::ids() const {
    std::vector<AtomId> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            out.push_back(static_cast<AtomId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
            bits &= bits - 1;
        }
    }
    return out;
}

bool Interpretation::subset_of(const Interpretation& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t theirs = w < other.words_.size() ? other.words_[w] : 0;
        if ((words_[w] & ~theirs) != 0) return false;
    }
    return true;
}

bool Interpretation::intersects(const Interpretation& other) const {
    std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < n; ++w) {
        if ((words_[w] & other.words_[w]) != 0) return true;
    }
    return false;
}

Interpretation& Interpretation::operator|=(const Interpretation& other) {
    if (other.universe_ > universe_) {
        universe_ = other.universe_;
        words_.resize(other.words_.size(), 0);
    }
    for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

Interpretation& Interpretation::operator&=(const Interpretation& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= w < other.words_.size() ? other.words_[w] : 0;
    return *this;
}

Interpretation& Interpretation::operator-=(const Interpretation& other) {
    std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < n; ++w) words_[w] &= ~other.words_[w];
    return *this;
}

std::strong_ordering Interpretation::operator<=>(const Interpretation& other) const {
    if (auto c = size() <=> other.size(); c != 0) {
        return c;
    }
    std::vector<AtomId> a = ids();
    std::vector<AtomId> b = other.ids();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------
// Aggregates and programs
// ---------------------------------------------------------------------------
std::optional<std::size_t> GroundAggregate::position(AtomId id) const {
    auto it = std::lower_bound(universe.begin(), universe.end(), id);
    if (it == universe.end() || *it != id) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - universe.begin());
}

GroundAggregate compile_aggregate(const AggregateAtom& l, const Program& p, const HerbrandBase& base) {
    if (!l.is_ground()) {
        throw std::invalid_argument("aggregate atom is not ground: " + to_string(l));
    }
    GroundAggregate g;
    g.source       = l;
    g.function     = l.function;
    g.kind         = l.set.kind;
    g.op           = l.op;
    g.bound        = l.bound.value;
    g.universe_set = Interpretation(base.size());
    for (const Atom& a : atom_universe(l, p)) {
        AtomId id = base.id(a);
        g.universe.push_back(id);
        g.universe_set.insert(id);
    }
    std::sort(g.universe.begin(), g.universe.end());
    for (AtomId id : g.universe) {
        g.values.push_back(base.atom(id).args.at(l.set.grouped_position));
    }
    return g;
}

GroundProgram::GroundProgram(Program ground, std::uint64_t herbrand_limit) : program_(std::move(ground)) {
    if (!program_.is_ground()) {
        throw std::invalid_argument("program is not ground");
    }
    auto base = std::make_shared<HerbrandBase>(program_, herbrand_limit);
    auto aggs = std::make_shared<std::vector<GroundAggregate>>();
    std::map<std::string, std::size_t> agg_index;
    for (const Rule& r : program_.rules) {
        GroundRule g;
        g.head = base->id(r.head);
        for (const Atom& a : r.pos) g.pos.push_back(base->id(a));
        for (const Atom& a : r.neg) g.neg.push_back(base->id(a));
        for (const AggregateAtom& l : r.agg) {
            auto [it, inserted] = agg_index.emplace(to_string(l), aggs->size());
            if (inserted) {
                aggs->push_back(compile_aggregate(l, program_, *base));
            }
            g.agg.push_back(it->second);
        }
        rules_.push_back(std::move(g));
    }
    base_       = std::move(base);
    aggregates_ = std::move(aggs);
}

Interpretation GroundProgram::interpretation(std::span<const Atom> atoms) const {
    Interpretation out = empty_interpretation();
    for (const Atom& a : atoms) out.insert(base_->id(a));
    return out;
}

GroundProgram GroundProgram::with_rules(std::span<const std::size_t> keep) const {
    GroundProgram out;
    out.program_.constants  = program_.constants;
    out.program_.predicates = program_.predicates;
    out.base_               = base_;
    out.aggregates_         = aggregates_;
    for (std::size_t k : keep) {
        out.program_.rules.push_back(program_.rules.at(k));
        out.rules_.push_back(rules_.at(k));
    }
    return out;
}

std::vector<std::string> atom_names(const Interpretation& i, const HerbrandBase& base) {
    std::vector<std::string> out;
    for (AtomId id : i.ids()) out.push_back(to_string(base.atom(id)));
    return out;
}

std::string render(const Interpretation& i, const HerbrandBase& base) {
    std::string out = "{";
    bool        first = true;
    for (const std::string& name : atom_names(i, base)) {
        if (!first) out += ", ";
        out += name;
        first = false;
    }
    out += '}';
    return out;
}

} // namespace aggfix
