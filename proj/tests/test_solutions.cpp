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

const GroundAggregate& sum_aggregate(const GroundProgram& p) { return p.aggregates().front(); }

TEST_CASE("solutions of sum > 10 and sum > 6", "[solutions]") {
    GroundProgram p = compile(kSumProgram);
    const auto&   l = sum_aggregate(p);
    auto          all = enumerate_solutions(l);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == pair_of(p, "p(1), p(2), p(3), p(5)", ""));

    GroundProgram q  = aggregate_program("sum{X : p(X)} > 6", "1 2 3 5");
    const auto&   l6 = sum_aggregate(q);
    const std::vector<std::pair<const char*, const char*>> table = {
        {"p(2), p(5)", ""},          {"p(2), p(5)", "p(1)"},       {"p(2), p(5)", "p(3)"},
        {"p(2), p(5)", "p(1), p(3)"}, {"p(3), p(5)", ""},          {"p(3), p(5)", "p(1)"},
        {"p(3), p(5)", "p(2)"},       {"p(3), p(5)", "p(1), p(2)"}, {"p(1), p(2), p(5)", ""},
        {"p(1), p(2), p(5)", "p(3)"}, {"p(1), p(3), p(5)", ""},    {"p(1), p(3), p(5)", "p(2)"},
        {"p(2), p(3), p(5)", ""},    {"p(2), p(3), p(5)", "p(1)"}, {"p(1), p(2), p(3), p(5)", ""},
    };
    std::vector<SolutionPair> expected;
    for (auto [pos, neg] : table) expected.push_back(pair_of(q, pos, neg));
    CHECK(enumerate_solutions(l6) == expected);
    CHECK(is_solution(l6, pair_of(q, "p(3), p(5)", "p(1)")));
    CHECK_FALSE(is_solution(l6, pair_of(q, "p(1), p(2), p(3)", "p(5)")));
    CHECK_FALSE(is_solution_oracle(l6, pair_of(q, "p(1), p(2), p(3)", "p(5)")));
}

TEST_CASE("small solution examples", "[solutions]") {
    GroundProgram c = compile(kCountProgram);
    const auto&   l = c.aggregates().front();
    CHECK_FALSE(is_solution(l, pair_of(c, "", "")));
    CHECK_FALSE(is_solution_oracle(l, pair_of(c, "", "")));
    CHECK(is_solution(l, pair_of(c, "p(b)", "")));

    GroundProgram s = aggregate_program("sum{X : p(X)} != 5", "2 3");
    CHECK_FALSE(is_solution(sum_aggregate(s), pair_of(s, "", "")));
    GroundProgram t = aggregate_program("sum{X : p(X)} != 4", "2 3");
    CHECK(is_solution(sum_aggregate(t), pair_of(t, "", "")));

    GroundProgram z = aggregate_program("count{X : p(X)} >= 0", "1 2");
    CHECK(is_solution(sum_aggregate(z), pair_of(z, "", "")));

    // Empty universe: either the single empty pair or nothing.
    GroundProgram e1 = compile("h :- count{X : p(X)} = 0.");
    CHECK(enumerate_solutions(e1.aggregates()[0]).size() == 1);
    GroundProgram e2 = compile("h :- min{X : p(X)} <= 100.");
    CHECK(enumerate_solutions(e2.aggregates()[0]).empty());
}

TEST_CASE("conditional satisfaction", "[solutions]") {
    GroundProgram c = compile(kCountProgram);
    const auto&   l = c.aggregates().front();
    const auto    m = interp(c, "p(b), p(a)");
    CHECK_FALSE(conditionally_satisfies(c.empty_interpretation(), m, l));
    CHECK(conditionally_satisfies(interp(c, "p(b)"), m, l));
    const AtomId q = c.base().id(Atom{"q", {}});
    CHECK(conditionally_satisfies(interp(c, "q"), m, q));
    CHECK_FALSE(conditionally_satisfies(interp(c, "p(a)"), m, q));
}

TEST_CASE("subset sum instances", "[solutions]") {
    auto solved = [](std::vector<std::int64_t> values, std::int64_t t) {
        SubsetSumInstance inst = make_subset_sum_instance(values, t);
        return is_solution(inst.aggregate(), inst.pair);
    };
    CHECK_FALSE(solved({1, 2, 3}, 6));
    CHECK(solved({2, 4}, 1));
    CHECK_FALSE(solved({}, 0));
    CHECK_THROWS_AS(make_subset_sum_instance(std::vector<std::int64_t>{-1}, 0), std::invalid_argument);

    CHECK(subset_sum_reachable(std::vector<std::int64_t>{-3, 5}, 2));
    CHECK_FALSE(subset_sum_reachable(std::vector<std::int64_t>{-3, 5}, 1));
    CHECK_THROWS_AS(subset_sum_reachable(std::vector<std::int64_t>{1000, 1000}, 1, 100), LimitExceeded);
}

TEST_CASE("non-integer elements", "[solutions]") {
    GroundProgram c = aggregate_program("count{X : p(X)} >= 2", "a b 1");
    const auto&   l = c.aggregates()[0];
    for (const auto& s : all_pairs(l)) CHECK(is_solution(l, s) == is_solution_oracle(l, s));
    CHECK(enumerate_solutions(l).size() == 7);

    GroundProgram m = aggregate_program("max{X : p(X)} >= 2", "a 3");
    const auto&   lm = m.aggregates()[0];
    CHECK_THROWS_AS(is_solution(lm, pair_of(m, "p(3)", "")), NonIntegerElement);
    CHECK_THROWS_AS(is_solution_oracle(lm, pair_of(m, "p(3)", "")), NonIntegerElement);
    CHECK(is_solution(lm, pair_of(m, "p(3)", "p(a)")));
}

TEST_CASE("budgets", "[solutions]") {
    Budget b;
    b.oracle_free_atoms  = 2;
    b.enumeration_pairs  = 10;
    GroundProgram p = aggregate_program("avg{X : p(X)} != 2", "1 2 3");
    const auto&   l = p.aggregates()[0];
    CHECK_THROWS_AS(is_solution_oracle(l, pair_of(p, "", ""), b), LimitExceeded);
    CHECK_THROWS_AS(is_solution(l, pair_of(p, "", ""), b), LimitExceeded);
    CHECK_THROWS_AS(enumerate_solutions(l, b), LimitExceeded);
    CHECK(is_solution(l, pair_of(p, "p(1)", "p(3)"), b));
    CHECK_FALSE(is_solution(l, pair_of(p, "p(1)", "p(2)"), b));
}

TEST_CASE("checkers agree with the oracle on every operator", "[solutions][property]") {
    const char* domains[] = {"-2 0 1 3", "1 2 3 5", "-1 1", "0 4 4", "2", ""};
    for (AggFunction fn : kAllFunctions) {
        for (CompareOp op : kAllOps) {
            for (const char* d : domains) {
                for (std::int64_t bound : {-1, 0, 1, 2, 3, 6}) {
                    std::string agg = std::string(to_string(fn)) + "{X : p(X)} " + std::string(to_string(op)) + " " +
                                      std::to_string(bound);
                    GroundProgram p = aggregate_program(agg, d);
                    const auto&   l = p.aggregates()[0];
                    for (const auto& s : all_pairs(l)) {
                        CAPTURE(agg, d, render(s.pos, p.base()), render(s.neg, p.base()));
                        REQUIRE(is_solution(l, s) == is_solution_oracle(l, s));
                    }
                }
            }
        }
    }
}

TEST_CASE("checkers agree with the oracle on random instances", "[solutions][property]") {
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        GenParams g;
        g.seed = seed;
        ScpInstance inst = generate_scp_instance(g);
        CAPTURE(seed, to_string(inst.aggregate().source));
        bool fast = false, slow = false;
        try {
            slow = is_solution_oracle(inst.aggregate(), inst.pair);
        }
        catch (const NonIntegerElement&) {
            CHECK_THROWS_AS(is_solution(inst.aggregate(), inst.pair), NonIntegerElement);
            continue;
        }
        fast = is_solution(inst.aggregate(), inst.pair);
        REQUIRE(fast == slow);
    }
}

TEST_CASE("solution closure properties", "[solutions][property]") {
    const std::pair<const char*, const char*> cases[] = {
        {"sum{X : p(X)} != 2", "-1 0 2"}, {"avg{X : p(X)} >= 1", "-1 0 2"},  {"min{X : p(X)} = 0", "-1 0 2"},
        {"count{X : p(X)} < 2", "-1 0 2"}, {"max{X : p(X)} > 0", "-1 0 2"}, {"sum{{X : q(X,Z)}} <= 1", "0 1"}};
    for (auto [agg, domain] : cases) {
        GroundProgram p = aggregate_program(agg, domain);
        const auto&   l = p.aggregates()[0];
        const auto    pairs = all_pairs(l);
        const auto    sols  = enumerate_solutions(l);
        auto          is_sol = [&](const SolutionPair& s) {
            return std::binary_search(sols.begin(), sols.end(), s);
        };
        CAPTURE(agg);
        for (const auto& s : sols) {
            for (const auto& t : pairs) {
                if (s.pos.subset_of(t.pos) && s.neg.subset_of(t.neg)) CHECK(is_sol(t));
            }
        }
        for (const auto& m : all_interpretations(p)) {
            const auto h    = l.universe_set;
            const bool sat  = eval_aggregate_atom(l, m);
            CHECK(is_sol({m & h, h - m}) == sat);
            CHECK(conditionally_satisfies(m, m, l) == sat);
            for (const auto& s : sols) {
                if (s.pos.subset_of(m) && !s.neg.intersects(m)) CHECK(is_sol({s.pos, h - m}));
            }
        }
    }
}

TEST_CASE("conditional satisfaction is monotone in the first argument", "[solutions][property]") {
    GroundProgram p   = aggregate_program("sum{X : p(X)} != 1", "-1 1 2");
    const auto&   l   = p.aggregates()[0];
    const auto    all = all_interpretations(p);
    for (const auto& m : all) {
        for (const auto& i : all) {
            if (!conditionally_satisfies(i, m, l)) continue;
            for (const auto& j : all) {
                if (i.subset_of(j)) CHECK(conditionally_satisfies(j, m, l));
            }
        }
    }
}

} // namespace
} // namespace aggfix::test
