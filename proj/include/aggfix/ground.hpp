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
// Indexed representation of a ground program: the Herbrand base with
// canonically ordered atom ids, interpretations as bitsets over it, and rules
// and aggregate atoms rewritten to refer to atom ids.
#pragma once

#include "aggfix/syntax.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aggfix {

using AtomId = std::uint32_t;

/// All ground atoms over a program's predicates and constants. Ids follow the
/// canonical atom order, so sorting ids sorts atoms.
class HerbrandBase {
public:
    HerbrandBase() = default;
    explicit HerbrandBase(const Program& p, std::uint64_t limit = std::uint64_t{1} << 22);

    std::size_t size() const noexcept { return atoms_.size(); }
    const Atom& atom(AtomId id) const { return atoms_.at(id); }
    std::span<const Atom> atoms() const noexcept { return atoms_; }
    std::optional<AtomId> find(const Atom& a) const;
    /// Like find(), but throws std::invalid_argument for atoms outside the base.
    AtomId id(const Atom& a) const;

private:
    std::vector<Atom>       atoms_;
    std::map<Atom, AtomId>  index_;
};

/// A set of atoms of one Herbrand base, stored as a bitset.
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    static Interpretation of(std::size_t universe, std::span<const AtomId> ids);

    std::size_t universe() const noexcept { return universe_; }
    bool contains(AtomId id) const noexcept {
        return id < universe_ && (words_[id / 64] >> (id % 64) & 1u) != 0;
    }
    void insert(AtomId id) { words_.at(id / 64) |= std::uint64_t{1} << (id % 64); }
    void erase(AtomId id) { words_.at(id / 64) &= ~(std::uint64_t{1} << (id % 64)); }

    std::size_t size() const noexcept;
    bool empty() const noexcept;
    std::vector<AtomId> ids() const;

    bool subset_of(const Interpretation& other) const;
    bool intersects(const Interpretation& other) const;

    Interpretation& operator|=(const Interpretation& other);
    Interpretation& operator&=(const Interpretation& other);
    Interpretation& operator-=(const Interpretation& other);
    friend Interpretation operator|(Interpretation a, const Interpretation& b) { return a |= b; }
    friend Interpretation operator&(Interpretation a, const Interpretation& b) { return a &= b; }
    friend Interpretation operator-(Interpretation a, const Interpretation& b) { return a -= b; }

    bool operator==(const Interpretation&) const = default;
    /// Canonical order: by size, then lexicographically by sorted atom ids.
    std::strong_ordering operator<=>(const Interpretation& other) const;

private:
    std::size_t                universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// A ground aggregate atom with its atom universe resolved. `universe` holds
/// the pattern instances in canonical order; `values[k]` is the grouped-position
/// term of `universe[k]`.
struct GroundAggregate {
    AggregateAtom       source;
    AggFunction         function = AggFunction::Sum;
    SetKind             kind = SetKind::Set;
    CompareOp           op = CompareOp::Eq;
    std::int64_t        bound = 0;
    std::vector<AtomId> universe;
    std::vector<Term>   values;
    Interpretation      universe_set;

    /// H(l) position of an atom, if it belongs to the universe.
    std::optional<std::size_t> position(AtomId id) const;
};

GroundAggregate compile_aggregate(const AggregateAtom& l, const Program& p, const HerbrandBase& base);

struct GroundRule {
    AtomId                   head = 0;
    std::vector<AtomId>      pos;
    std::vector<AtomId>      neg;
    /// Indices into GroundProgram::aggregates().
    std::vector<std::size_t> agg;
};

/// A ground program compiled against its Herbrand base. Structurally equal
/// aggregate atoms share one entry of aggregates().
class GroundProgram {
public:
    /// `ground` must satisfy Program::is_ground(); throws std::invalid_argument otherwise.
    explicit GroundProgram(Program ground, std::uint64_t herbrand_limit = std::uint64_t{1} << 22);

    const Program& program() const noexcept { return program_; }
    const HerbrandBase& base() const noexcept { return *base_; }
    std::shared_ptr<const HerbrandBase> shared_base() const noexcept { return base_; }
    const std::vector<GroundRule>& rules() const noexcept { return rules_; }
    const std::vector<GroundAggregate>& aggregates() const noexcept { return *aggregates_; }

    Interpretation empty_interpretation() const { return Interpretation(base_->size()); }
    Interpretation interpretation(std::span<const Atom> atoms) const;

    /// The same program restricted to the rules at `keep` (in that order).
    GroundProgram with_rules(std::span<const std::size_t> keep) const;

private:
    GroundProgram() = default;

    Program                                       program_;
    std::shared_ptr<const HerbrandBase>           base_;
    std::shared_ptr<const std::vector<GroundAggregate>> aggregates_;
    std::vector<GroundRule>                       rules_;
};

/// `{p(1), p(2)}`, atoms in canonical order.
std::string render(const Interpretation& i, const HerbrandBase& base);
std::vector<std::string> atom_names(const Interpretation& i, const HerbrandBase& base);

} // namespace aggfix
