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

std::vector<std::size_t> heads(const GroundProgram& p, const ReductProgram& r) {
    std::vector<std::size_t> out;
    for (const ReductRule& rule : r.rules) out.push_back(rule.head);
    (void)p;
    return out;
}

TEST_CASE("reduct", "[fixpoint]") {
    GroundProgram c  = compile(kCountProgram);
    const AtomId  pa = c.base().id(parse_atom_list("p(a)")[0]);
    const AtomId  pb = c.base().id(parse_atom_list("p(b)")[0]);
    const AtomId  q  = c.base().id(parse_atom_list("q")[0]);

    ReductProgram ra = reduct(c, interp(c, "q"));
    REQUIRE(ra.rules.size() == 2);
    CHECK(ra.rules[0].head == pa);
    CHECK(ra.rules[0].agg.size() == 1);
    CHECK(ra.rules[1].head == q);
    CHECK(ra.rules[1].pos.empty());
    CHECK(ra.rules[1].agg.empty());

    ReductProgram rb = reduct(c, interp(c, "p(b), p(a)"));
    CHECK(heads(c, rb) == std::vector<std::size_t>{pa, pb});

    GroundProgram ex = compile(kSumProgram);
    for (const auto& m : {ex.empty_interpretation(), interp(ex, "p(1), q")}) {
        CHECK(reduct(ex, m).rules.size() == ex.rules().size());
    }
}

TEST_CASE("consequence operator", "[fixpoint]") {
    GroundProgram ex = compile(kSumProgram);
    const auto    a  = interp(ex, "p(1), p(2), p(3)");
    CHECK(apply_consequence(ex, a, ex.empty_interpretation()) == a);

    GroundProgram c = compile(kCountProgram);
    const auto    b = interp(c, "p(b), p(a)");
    CHECK(apply_consequence(c, b, interp(c, "p(b)")) == b);
    CHECK(apply_consequence(c, b, c.empty_interpretation()) == interp(c, "p(b)"));

    GroundProgram none = compile("");
    CHECK(apply_consequence(none, none.empty_interpretation(), none.empty_interpretation()).empty());
}

TEST_CASE("least fixpoint traces", "[fixpoint]") {
    GroundProgram ex = compile(kSumProgram);
    const auto    a  = interp(ex, "p(1), p(2), p(3)");
    const auto    b  = interp(ex, "p(1), p(2), p(3), p(5), q");

    FixpointTrace ta = least_fixpoint(ex, a);
    CHECK(ta.converged);
    CHECK(render_trace(ta, ex.base()) ==
          std::vector<std::string>{"K^0 = {}", "K^1 = {p(1), p(2), p(3)}", "K^2 = {p(1), p(2), p(3)}"});
    CHECK(least_fixpoint(ex, b).fixpoint() == a);

    GroundProgram flp = compile(kFlpProgram);
    CHECK(least_fixpoint(flp, interp(flp, "p(1), p(-1)")).fixpoint().empty());

    GroundProgram c = compile(kCountProgram);
    CHECK(render_trace(least_fixpoint(c, interp(c, "p(a), p(b)")), c.base()) ==
          std::vector<std::string>{"K^0 = {}", "K^1 = {p(b)}", "K^2 = {p(a), p(b)}", "K^3 = {p(a), p(b)}"});
}

TEST_CASE("fixpoint answer sets", "[fixpoint]") {
    GroundProgram ex = compile(kSumProgram);
    CHECK(is_fixpoint_answer_set(ex, interp(ex, "p(1), p(2), p(3)")).accepted);
    CHECK_FALSE(is_fixpoint_answer_set(ex, interp(ex, "p(1), p(2), p(3), p(5), q")).accepted);
    CHECK(enumerate_answer_sets(ex) == std::vector<Interpretation>{interp(ex, "p(1), p(2), p(3)")});

    GroundProgram c = compile(kCountProgram);
    CHECK(enumerate_answer_sets(c) == std::vector<Interpretation>{interp(c, "q"), interp(c, "p(b), p(a)")});
    for (const auto& m : all_interpretations(c)) {
        const bool expected = m == interp(c, "q") || m == interp(c, "p(a), p(b)");
        CHECK(is_fixpoint_answer_set(c, m).accepted == expected);
    }

    GroundProgram flp = compile(kFlpProgram);
    CHECK(enumerate_answer_sets(flp).empty());

    CHECK(enumerate_answer_sets(compile("")) == std::vector<Interpretation>{Interpretation(0)});

    Budget tight;
    tight.candidates = 4;
    CHECK_THROWS_AS(enumerate_answer_sets(compile("a :- not b. b :- not a. c :- not d. d :- not c."), tight),
                    LimitExceeded);
}

TEST_CASE("subset enumeration order", "[fixpoint]") {
    std::vector<AtomId>         atoms{0, 2, 3};
    std::vector<std::vector<AtomId>> seen;
    for_each_subset(atoms, 4, [&](const Interpretation& i) {
        seen.push_back(i.ids());
        return true;
    });
    CHECK(seen == std::vector<std::vector<AtomId>>{{}, {0}, {2}, {3}, {0, 2}, {0, 3}, {2, 3}, {0, 2, 3}});
    std::size_t visits = 0;
    for_each_subset(atoms, 4, [&](const Interpretation&) { return ++visits < 3; });
    CHECK(visits == 3);
}

TEST_CASE("operator and trace properties on random programs", "[fixpoint][property]") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        GenParams g;
        g.seed          = seed;
        g.max_base_size = 6;
        GroundProgram p(ground_program(generate_program(g)));
        CAPTURE(seed, to_string(p.program()));
        const auto all = all_interpretations(p);
        RandomStream rng = RandomStream(seed).split(7);
        for (int trial = 0; trial < 20; ++trial) {
            const auto& m = rng.pick(all);
            const auto& i = rng.pick(all);
            const auto& j = rng.pick(all);
            if (i.subset_of(j)) {
                CHECK(apply_consequence(p, m, i).subset_of(apply_consequence(p, m, j)));
            }
            FixpointTrace t = least_fixpoint(p, m);
            CHECK(t.converged);
            CHECK(t.stages.size() <= p.base().size() + 2);
            for (std::size_t k = 1; k < t.stages.size(); ++k) CHECK(t.stages[k - 1].subset_of(t.stages[k]));
        }
        for (const auto& m : enumerate_answer_sets(p)) {
            CHECK(is_model(m, p));
            FixpointTrace t = least_fixpoint(p, m);
            for (std::size_t a = 0; a < p.aggregates().size(); ++a) {
                const auto& l = p.aggregates()[a];
                bool        held = false;
                for (const auto& stage : t.stages) {
                    const bool now = conditionally_satisfies(stage, m, l);
                    CHECK((!held || now));
                    held = held || now;
                }
            }
        }
    }
}

TEST_CASE("normal programs match Gelfond-Lifschitz", "[fixpoint][property]") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        GenParams g;
        g.seed                  = seed;
        g.aggregate_probability = 0.0;
        g.max_base_size         = 6;
        GroundProgram p(ground_program(generate_program(g)));
        const NormalProgram n = as_normal_program(p);
        for (const auto& m : all_interpretations(p)) {
            CAPTURE(seed, render(m, p.base()));
            CHECK(is_fixpoint_answer_set(p, m).accepted == gl_answer_check(n, m));
        }
    }
}

} // namespace
} // namespace aggfix::test
