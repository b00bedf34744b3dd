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
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

namespace aggfix::test {
namespace {

std::vector<std::int64_t> ints(const std::vector<Term>& ts) {
    std::vector<std::int64_t> out;
    for (const Term& t : ts) out.push_back(t.value);
    return out;
}

TEST_CASE("set expression values", "[eval]") {
    GroundProgram p = aggregate_program("sum{X : p(X)} > 0", "1 2 3");
    const auto&   l = p.aggregates()[0];
    CHECK(ints(eval_set_expression(l, interp(p, "p(1), p(2), p(3)"))) == std::vector<std::int64_t>{1, 2, 3});
    CHECK(eval_set_expression(l, p.empty_interpretation()).empty());

    GroundProgram m  = aggregate_program("sum{{X : q(X,Z)}} > 0", "1 2 3");
    const auto&   lm = m.aggregates()[0];
    CHECK(ints(eval_set_expression(lm, interp(m, "q(1,2), q(1,3)"))) == std::vector<std::int64_t>{1, 1});

    // The set variant of the same pattern collapses duplicates.
    GroundProgram s = compile("#const 1 2 3.\nh(Z) :- sum{X : q(X,Z)} > 0.");
    CHECK(ints(eval_set_expression(s.aggregates()[1], interp(s, "q(1,2), q(3,2)"))) == std::vector<std::int64_t>{1, 3});
}

TEST_CASE("aggregate values", "[eval]") {
    auto t = [](std::initializer_list<std::int64_t> xs) {
        std::vector<Term> out;
        for (auto x : xs) out.push_back(Term::integer(x));
        return out;
    };
    CHECK(aggregate_value(AggFunction::Sum, {}) == Rational::of(0));
    CHECK(aggregate_value(AggFunction::Count, {}) == Rational::of(0));
    CHECK_FALSE(aggregate_value(AggFunction::Min, {}).has_value());
    CHECK_FALSE(aggregate_value(AggFunction::Max, {}).has_value());
    CHECK_FALSE(aggregate_value(AggFunction::Avg, {}).has_value());
    CHECK(aggregate_value(AggFunction::Min, t({-2, 3, 7})) == Rational::of(-2));
    CHECK(aggregate_value(AggFunction::Max, t({-2, 3, 7})) == Rational::of(7));
    CHECK(aggregate_value(AggFunction::Avg, t({1, 2})) == Rational::of(3, 2));
    CHECK(aggregate_value(AggFunction::Count, {Term::symbol("a"), Term::symbol("b")}) == Rational::of(2));
    CHECK_THROWS_AS(aggregate_value(AggFunction::Sum, {Term::symbol("a")}), NonIntegerElement);
    CHECK(compare(Rational::of(3, 2), CompareOp::Gt, 1));
    CHECK(compare(Rational::of(3, 2), CompareOp::Lt, 2));
    CHECK(compare(Rational::of(3, 2), CompareOp::Ne, 1));
    CHECK_FALSE(compare(Rational::of(4, 2), CompareOp::Ne, 2));
}

TEST_CASE("aggregate atoms", "[eval]") {
    GroundProgram p = aggregate_program("sum{X : p(X)} != 0", "-1 1");
    const auto&   l = p.aggregates()[0];
    CHECK(eval_aggregate_atom(l, interp(p, "p(1)")));
    CHECK_FALSE(eval_aggregate_atom(l, interp(p, "p(1), p(-1)")));

    GroundProgram q = aggregate_program("min{X : p(X)} = 3", "3");
    CHECK_FALSE(eval_aggregate_atom(q.aggregates()[0], q.empty_interpretation()));
    CHECK(eval_aggregate_atom(q.aggregates()[0], interp(q, "p(3)")));

    GroundProgram s = aggregate_program("sum{X : p(X)} > 0", "a 1");
    CHECK_THROWS_AS(eval_aggregate_atom(s.aggregates()[0], interp(s, "p(a)")), NonIntegerElement);
    CHECK(eval_aggregate_atom(s.aggregates()[0], interp(s, "p(1)")));
}

TEST_CASE("body satisfaction and models", "[eval]") {
    GroundProgram p = compile(kSumProgram);
    const auto&   rules = p.rules();
    const auto    a = interp(p, "p(1), p(2), p(3)");
    const auto    b = interp(p, "p(1), p(2), p(3), p(5), q");
    CHECK_FALSE(satisfies_body(a, rules[4], p));
    CHECK(satisfies_body(b, rules[4], p));
    CHECK(satisfies_body(p.empty_interpretation(), rules[0], p));

    CHECK(is_model(a, p));
    CHECK(is_model(b, p));
    CHECK_FALSE(is_model(interp(p, "p(1)"), p));
    CHECK_FALSE(is_minimal_model(p.empty_interpretation(), p));
    CHECK(is_minimal_model(a, p));

    GroundProgram positive = compile("a. b :- a. c :- b, d.");
    CHECK(is_model(interp(positive, "a, b, c, d"), positive));
}

TEST_CASE("minimal models on reducts", "[eval]") {
    GroundProgram flp = compile(kFlpProgram);
    const auto    m   = interp(flp, "p(1), p(-1)");
    GroundProgram g   = flp_reduct(flp, m);
    CHECK(is_minimal_model(m, g));

    // The naive reduct of the sum example with respect to B, as a program.
    GroundProgram naive = compile("p(1). p(2). p(3). p(5) :- q. q.");
    CHECK(is_minimal_model(interp(naive, "p(1), p(2), p(3), p(5), q"), naive));

    Budget tight;
    tight.minimal_model_subsets = 2;
    GroundProgram big = compile("a. b. c. d.");
    CHECK_THROWS_AS(is_minimal_model(interp(big, "a, b, c, d"), big, tight), LimitExceeded);
}

TEST_CASE("evaluation ignores atoms outside the aggregate universe", "[eval][property]") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GenParams g;
        g.seed = seed;
        ScpInstance inst = generate_scp_instance(g);
        const auto& l    = inst.aggregate();
        RandomStream rng(seed);
        Interpretation i = inst.program.empty_interpretation();
        for (AtomId a : l.universe) {
            if (rng.chance(0.5)) i.insert(a);
        }
        Interpretation j = i;
        for (std::size_t a = 0; a < inst.program.base().size(); ++a) {
            if (!l.universe_set.contains(static_cast<AtomId>(a))) j.insert(static_cast<AtomId>(a));
        }
        CAPTURE(seed, to_string(l.source));
        try {
            CHECK(eval_aggregate_atom(l, i) == eval_aggregate_atom(l, j));
            const std::size_t expected = l.kind == SetKind::Multiset ? (i & l.universe_set).size()
                                                                     : eval_set_expression(l, i).size();
            CHECK(eval_set_expression(l, i).size() == expected);
        }
        catch (const NonIntegerElement&) {
            CHECK(l.function != AggFunction::Count);
        }
    }
}

TEST_CASE("ordinary atoms are monotone", "[eval][property]") {
    GroundProgram p = compile("q :- p(1), not p(2).\n#const 1 2 3.");
    const auto    all = all_interpretations(p);
    for (const auto& i : all) {
        for (const auto& j : all) {
            if (!i.subset_of(j)) continue;
            for (std::size_t a = 0; a < p.base().size(); ++a) {
                if (i.contains(static_cast<AtomId>(a))) CHECK(j.contains(static_cast<AtomId>(a)));
            }
        }
    }
}

} // namespace
} // namespace aggfix::test
