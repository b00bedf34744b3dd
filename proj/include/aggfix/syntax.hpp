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
// Abstract syntax of logic programs with aggregates, the text parser, the
// grounder and the renderer.
//
// Terms are integers, symbolic constants or variables. A variable is global
// unless it is the grouped variable of a set expression or one of the local
// variables of a multiset expression; grouped and local variables are never
// substituted by the grounder.
#pragma once

#include "aggfix/error.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace aggfix {

enum class TermKind : std::uint8_t { Integer, Symbol, Variable };
enum class VarClass : std::uint8_t { Global, Grouped, Local };

struct Term {
    TermKind      kind = TermKind::Integer;
    std::int64_t  value = 0;
    std::string   name;
    VarClass      var_class = VarClass::Global;

    static Term integer(std::int64_t v);
    static Term symbol(std::string name);
    static Term variable(std::string name, VarClass cls = VarClass::Global);

    bool is_integer() const noexcept { return kind == TermKind::Integer; }
    bool is_variable() const noexcept { return kind == TermKind::Variable; }
    bool is_ground() const noexcept { return kind != TermKind::Variable; }

    bool operator==(const Term&) const = default;
    // Integers (by value) before symbols (by name) before variables.
    std::strong_ordering operator<=>(const Term& other) const;
};

struct Atom {
    std::string       predicate;
    std::vector<Term> args;

    std::size_t arity() const noexcept { return args.size(); }
    bool is_ground() const noexcept;

    bool operator==(const Atom&) const = default;
    std::strong_ordering operator<=>(const Atom& other) const;
};

enum class SetKind : std::uint8_t { Set, Multiset };
enum class AggFunction : std::uint8_t { Sum, Count, Min, Max, Avg };
enum class CompareOp : std::uint8_t { Eq, Ne, Lt, Gt, Le, Ge };

inline constexpr AggFunction kAllFunctions[] = {AggFunction::Sum, AggFunction::Count, AggFunction::Min,
                                                AggFunction::Max, AggFunction::Avg};
inline constexpr CompareOp   kAllOps[]       = {CompareOp::Eq, CompareOp::Ne, CompareOp::Lt,
                                                CompareOp::Gt, CompareOp::Le, CompareOp::Ge};

std::string_view to_string(AggFunction fn);
std::string_view to_string(CompareOp op);

/// `{X : p(...)}` or `{{X : p(...)}}`. The grouped variable occurs exactly once
/// in the pattern, at `grouped_position`.
struct SetExpression {
    SetKind                  kind = SetKind::Set;
    std::string              grouped_var;
    std::vector<std::string> local_vars;
    Atom                     pattern;
    std::size_t              grouped_position = 0;

    bool operator==(const SetExpression&) const = default;
};

struct AggregateAtom {
    AggFunction   function = AggFunction::Sum;
    SetExpression set;
    CompareOp     op = CompareOp::Eq;
    Term          bound;

    /// No global variables left, and the bound is an integer.
    bool is_ground() const noexcept;

    bool operator==(const AggregateAtom&) const = default;
};

struct Rule {
    Atom                       head;
    std::vector<Atom>          pos;
    std::vector<Atom>          neg;
    std::vector<AggregateAtom> agg;

    bool is_fact() const noexcept { return pos.empty() && neg.empty() && agg.empty(); }
    bool is_ground() const noexcept;

    bool operator==(const Rule&) const = default;
};

struct Program {
    std::vector<Rule>                  rules;
    /// The grounding domain, sorted and duplicate-free.
    std::vector<Term>                  constants;
    /// Predicate name to arity.
    std::map<std::string, std::size_t> predicates;

    bool is_ground() const noexcept;

    bool operator==(const Program&) const = default;
};

/// Assembles a program from rules, inferring the signature. Constants are those
/// occurring in atoms and set patterns plus `extra_constants`; aggregate bounds do
/// not contribute. Throws ParseError (at 0:0) on an arity clash.
Program make_program(std::vector<Rule> rules, std::vector<Term> extra_constants = {});

/// Parses the rule language. Throws ParseError with a 1-based line and column.
Program parse_program(std::string_view text);

/// Parses a comma-separated list of ground atoms, e.g. `p(1),q`.
std::vector<Atom> parse_atom_list(std::string_view text);

/// Instantiates global variables over `p.constants`. Instances whose aggregate
/// bound becomes a symbolic constant are dropped; duplicate instances are merged.
Program ground_program(const Program& p);

/// All instances of the aggregate's pattern obtained by binding the grouped and
/// local variables to constants of `p`, in canonical order.
std::vector<Atom> atom_universe(const AggregateAtom& l, const Program& p);

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const SetExpression& s);
std::string to_string(const AggregateAtom& a);
std::string to_string(const Rule& r);
/// Renders one rule per line, preceded by a `#const` line for domain constants
/// that do not occur in any rule. The output parses back to an equal Program.
std::string to_string(const Program& p);

} // namespace aggfix
