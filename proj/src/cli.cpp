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
#include "aggfix/cli.hpp"

#include "aggfix/altsem.hpp"
#include "aggfix/harness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace aggfix::cli {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GroundProgram load(const std::string& path, const RunConfig& cfg) {
    return GroundProgram(ground_program(parse_program(read_file(path))), cfg.budget.herbrand_atoms);
}

Interpretation candidate_from_text(const GroundProgram& p, std::string text) {
    auto first = text.find_first_not_of(" \t\r");
    auto last  = text.find_last_not_of(" \t\r");
    text       = first == std::string::npos ? std::string{} : text.substr(first, last - first + 1);
    if (text.size() >= 2 && text.front() == '{' && text.back() == '}') {
        text = text.substr(1, text.size() - 2);
    }
    std::vector<Atom> atoms = parse_atom_list(text);
    return p.interpretation(atoms);
}

json atoms_json(const Interpretation& i, const HerbrandBase& base) {
    return atom_names(i, base);
}

json trace_json(const FixpointTrace& t, const HerbrandBase& base) {
    json stages = json::array();
    for (const Interpretation& s : t.stages) stages.push_back(atoms_json(s, base));
    return stages;
}

void print_reduct(std::ostream& out, const GroundProgram& p, const Interpretation& m, const char* indent) {
    for (const ReductRule& r : reduct(p, m).rules) {
        std::string line = to_string(p.base().atom(r.head));
        std::vector<std::string> body;
        for (AtomId a : r.pos) body.push_back(to_string(p.base().atom(a)));
        for (std::size_t k : r.agg) body.push_back(to_string(p.aggregates()[k].source));
        for (std::size_t k = 0; k < body.size(); ++k) line += (k == 0 ? " :- " : ", ") + body[k];
        out << indent << "reduct: " << line << ".\n";
    }
}

int cmd_solve(const std::string& file, const RunConfig& cfg, std::ostream& out) {
    GroundProgram               p    = load(file, cfg);
    std::vector<Interpretation> sets = enumerate_answer_sets(p, cfg.budget);
    const int                   code = sets.empty() ? kNegative : kOk;
    if (cfg.quiet) {
        return code;
    }
    if (cfg.format == OutputFormat::Json) {
        json doc{{"version", kJsonVersion}, {"answer_sets", json::array()}, {"traces", nullptr}};
        if (cfg.trace != TraceLevel::None) doc["traces"] = json::array();
        for (const Interpretation& m : sets) {
            doc["answer_sets"].push_back(atoms_json(m, p.base()));
            if (cfg.trace != TraceLevel::None) {
                doc["traces"].push_back(trace_json(least_fixpoint(p, m, cfg.budget), p.base()));
            }
        }
        out << doc.dump() << '\n';
        return code;
    }
    for (std::size_t k = 0; k < sets.size(); ++k) {
        out << "Answer " << k + 1 << ": " << render(sets[k], p.base()) << '\n';
        if (cfg.trace == TraceLevel::Full) print_reduct(out, p, sets[k], "  ");
        if (cfg.trace != TraceLevel::None) {
            for (const std::string& line : render_trace(least_fixpoint(p, sets[k], cfg.budget), p.base())) {
                out << "  " << line << '\n';
            }
        }
    }
    out << "Answer sets: " << sets.size() << '\n';
    return code;
}

int cmd_check(const std::string& file, const std::string& candidate, const RunConfig& cfg, std::ostream& out) {
    GroundProgram  p     = load(file, cfg);
    Interpretation m     = candidate_from_text(p, candidate);
    FixpointCheck  check = is_fixpoint_answer_set(p, m, cfg.budget);
    const int      code  = check.accepted ? kOk : kNegative;
    if (cfg.quiet) {
        return code;
    }
    if (cfg.format == OutputFormat::Json) {
        json doc{{"version", kJsonVersion},
                 {"candidate", atoms_json(m, p.base())},
                 {"verdict", check.accepted},
                 {"lfp", atoms_json(check.trace.fixpoint(), p.base())},
                 {"trace", trace_json(check.trace, p.base())}};
        out << doc.dump() << '\n';
        return code;
    }
    out << "candidate: " << render(m, p.base()) << '\n';
    if (cfg.trace == TraceLevel::Full) print_reduct(out, p, m, "");
    for (const std::string& line : render_trace(check.trace, p.base())) out << line << '\n';
    out << "lfp: " << render(check.trace.fixpoint(), p.base()) << '\n';
    out << "verdict: " << (check.accepted ? "true" : "false") << '\n';
    return code;
}

std::vector<Interpretation> candidates_from_file(const GroundProgram& p, const std::string& path) {
    std::vector<Interpretation> out;
    std::istringstream          in(read_file(path));
    std::string                 line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '%') continue;
        out.push_back(candidate_from_text(p, line));
    }
    return out;
}

std::vector<Interpretation> all_candidates(const GroundProgram& p, const Budget& budget) {
    const std::size_t n = p.base().size();
    if (n >= 64 || (std::uint64_t{1} << n) > budget.candidates) {
        throw LimitExceeded("comparison candidates", n >= 64 ? UINT64_MAX : std::uint64_t{1} << n, budget.candidates);
    }
    std::vector<AtomId> atoms(n);
    for (std::size_t k = 0; k < n; ++k) atoms[k] = static_cast<AtomId>(k);
    std::vector<Interpretation> out;
    for_each_subset(atoms, n, [&](const Interpretation& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

int cmd_compare(const std::string& file, const std::string& candidates_file, bool violations_only,
                const RunConfig& cfg, std::ostream& out) {
    GroundProgram               p          = load(file, cfg);
    std::vector<Interpretation> candidates = candidates_file.empty() ? all_candidates(p, cfg.budget)
                                                                     : candidates_from_file(p, candidates_file);
    SemanticsComparator cmp(p, cfg.budget);
    std::size_t         violations = 0;
    json                reports    = json::array();
    std::ostringstream  text;
    auto flag = [](bool b) { return b ? "true" : "false"; };
    for (const Interpretation& m : candidates) {
        SemanticsReport          rep = cmp.compare(m);
        std::vector<std::string> bad = rep.violations();
        violations += bad.empty() ? 0 : 1;
        if (violations_only && bad.empty()) continue;
        reports.push_back({{"candidate", atoms_json(m, p.base())},
                           {"fixpoint", rep.fixpoint},
                           {"flp", rep.flp},
                           {"unfolding", rep.unfolding},
                           {"naive_gl", rep.naive_gl},
                           {"tr", rep.tr},
                           {"violations", bad}});
        text << render(m, p.base()) << ": fixpoint=" << flag(rep.fixpoint) << " flp=" << flag(rep.flp)
             << " unfolding=" << flag(rep.unfolding) << " naive_gl=" << flag(rep.naive_gl) << " tr=" << flag(rep.tr);
        for (const std::string& v : bad) text << " VIOLATION(" << v << ')';
        text << '\n';
    }
    const int code = violations == 0 ? kOk : kNegative;
    if (cfg.quiet) {
        return code;
    }
    if (cfg.format == OutputFormat::Json) {
        json doc{{"version", kJsonVersion},
                 {"candidates", candidates.size()},
                 {"reports", reports},
                 {"violations", violations}};
        out << doc.dump() << '\n';
        return code;
    }
    out << text.str();
    out << "candidates: " << candidates.size() << '\n';
    out << "violations: " << violations << '\n';
    return code;
}

int cmd_solutions(const std::string& file, std::size_t index, std::optional<std::int64_t> bound,
                  const RunConfig& cfg, std::ostream& out) {
    GroundProgram p = load(file, cfg);
    if (index >= p.aggregates().size()) {
        throw std::invalid_argument("aggregate index " + std::to_string(index) + " out of range (program has " +
                                    std::to_string(p.aggregates().size()) + ")");
    }
    AggregateAtom source = p.aggregates()[index].source;
    if (bound) {
        source.bound = Term::integer(*bound);
    }
    GroundAggregate           l    = compile_aggregate(source, p.program(), p.base());
    std::vector<SolutionPair> sols = enumerate_solutions(l, cfg.budget);
    if (cfg.quiet) {
        return kOk;
    }
    Interpretation universe = l.universe_set;
    if (cfg.format == OutputFormat::Json) {
        json list = json::array();
        for (const SolutionPair& s : sols) {
            list.push_back({{"pos", atoms_json(s.pos, p.base())}, {"neg", atoms_json(s.neg, p.base())}});
        }
        json doc{{"version", kJsonVersion},
                 {"aggregate", to_string(source)},
                 {"universe", atoms_json(universe, p.base())},
                 {"count", sols.size()},
                 {"solutions", list}};
        out << doc.dump() << '\n';
        return kOk;
    }
    out << "aggregate: " << to_string(source) << '\n';
    out << "universe: " << render(universe, p.base()) << '\n';
    out << sols.size() << (sols.size() == 1 ? " solution" : " solutions") << '\n';
    for (const SolutionPair& s : sols) {
        out << '<' << render(s.pos, p.base()) << ", " << render(s.neg, p.base()) << ">\n";
    }
    return kOk;
}

int cmd_ground(const std::string& file, const RunConfig& cfg, std::ostream& out) {
    Program g = ground_program(parse_program(read_file(file)));
    if (cfg.quiet) {
        return kOk;
    }
    if (cfg.format == OutputFormat::Json) {
        json rules = json::array();
        for (const Rule& r : g.rules) rules.push_back(to_string(r));
        json constants = json::array();
        for (const Term& t : g.constants) constants.push_back(to_string(t));
        out << json{{"version", kJsonVersion}, {"constants", constants}, {"rules", rules}}.dump() << '\n';
        return kOk;
    }
    out << to_string(g);
    return kOk;
}

int cmd_gen(GenParams params, std::size_t count, const std::string& dir, const RunConfig& cfg, std::ostream& out) {
    const std::uint64_t first = params.seed;
    for (std::size_t k = 0; k < count; ++k) {
        params.seed      = first + k;
        std::string name = "seed-" + std::to_string(params.seed) + ".lp";
        std::string text = to_string(generate_program(params));
        if (!dir.empty()) {
            std::filesystem::create_directories(dir);
            std::ofstream file(std::filesystem::path(dir) / name, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot write " + name);
            file << text;
            if (!cfg.quiet) out << name << '\n';
        }
        else if (!cfg.quiet) {
            out << "% " << name << '\n' << text;
        }
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fixpoint answer sets for logic programs with aggregates", "aggfix"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig   cfg;
    std::string format = "text";
    std::string trace  = "none";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--trace", trace, "Trace verbosity (bare flag means 'stages')")
        ->expected(0, 1)
        ->default_str("stages")
        ->check(CLI::IsMember({"none", "stages", "full"}));
    app.add_flag("-q,--quiet", cfg.quiet, "Report verdicts only through the exit code");
    app.add_option("--budget-oracle", cfg.budget.oracle_free_atoms, "Free-atom limit of the solution oracle")
        ->envname("AGGFIX_BUDGET_ORACLE")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget-enum", cfg.budget.enumeration_pairs, "Pair limit of solution enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget-candidates", cfg.budget.candidates, "Candidate limit for solve/compare")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget-minimal", cfg.budget.minimal_model_subsets, "Subset limit of the minimal-model check")
        ->check(CLI::PositiveNumber);

    std::string file;
    auto*       solve = app.add_subcommand("solve", "Enumerate fixpoint answer sets");
    solve->add_option("file", file, "Program file")->required();

    std::string candidate;
    auto*       check = app.add_subcommand("check", "Check one candidate and print the fixpoint trace");
    check->add_option("file", file, "Program file")->required();
    check->add_option("-m,--model", candidate, "Candidate atoms, comma separated")->required();

    std::string candidates_file;
    bool        violations_only = false;
    auto*       compare = app.add_subcommand("compare", "Compare fixpoint, FLP, unfolding, naive GL and tr(P)");
    compare->add_option("file", file, "Program file")->required();
    compare->add_option("--candidates-from-file", candidates_file, "One candidate per line");
    compare->add_flag("--violations-only", violations_only, "Only list candidates that break a relation");

    std::size_t                 index = 0;
    std::optional<std::int64_t> bound;
    auto*                       solutions = app.add_subcommand("solutions", "List the solutions of an aggregate atom");
    solutions->add_option("file", file, "Program file")->required();
    solutions->add_option("-i,--index", index, "Aggregate atom index in the ground program");
    solutions->add_option("--bound", bound, "Replace the aggregate's bound");

    auto* ground = app.add_subcommand("ground", "Print the ground program");
    ground->add_option("file", file, "Program file")->required();

    GenParams   gen_params;
    std::size_t count = 1;
    std::string out_dir;
    auto*       gen = app.add_subcommand("gen", "Generate random programs");
    gen->add_option("--seed", gen_params.seed, "First seed");
    gen->add_option("--count", count, "Number of programs");
    gen->add_option("--out", out_dir, "Directory for seed-<n>.lp files");
    gen->add_option("--rules", gen_params.num_rules, "Rules per program");
    gen->add_option("--predicates", gen_params.num_predicates, "Predicates per program");
    gen->add_option("--constants", gen_params.num_constants, "Domain size");
    gen->add_option("--max-arity", gen_params.max_arity, "Largest predicate arity");
    gen->add_option("--max-base", gen_params.max_base_size, "Largest Herbrand base");
    gen->add_option("--aggregate-probability", gen_params.aggregate_probability, "Per body element")
        ->check(CLI::Range(0.0, 1.0));

    std::vector<std::string> argv_store{"aggfix"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }
    cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
    cfg.trace  = trace == "full" ? TraceLevel::Full : trace == "stages" ? TraceLevel::Stages : TraceLevel::None;

    try {
        if (*solve) return cmd_solve(file, cfg, out);
        if (*check) return cmd_check(file, candidate, cfg, out);
        if (*compare) return cmd_compare(file, candidates_file, violations_only, cfg, out);
        if (*solutions) return cmd_solutions(file, index, bound, cfg, out);
        if (*ground) return cmd_ground(file, cfg, out);
        if (*gen) return cmd_gen(gen_params, count, out_dir, cfg, out);
    }
    catch (const LimitExceeded& e) {
        err << "aggfix: " << e.what() << '\n';
        return kLimitError;
    }
    catch (const std::exception& e) {
        err << "aggfix: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

} // namespace aggfix::cli
