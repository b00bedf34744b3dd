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
#include "aggfix/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>

namespace aggfix {

// ---------------------------------------------------------------------------
// Terms and atoms
// ---------------------------------------------------------------------------
Term Term::integer(std::int64_t v) {
    Term t;
    t.kind  = TermKind::Integer;
    t.value = v;
    return t;
}
Term Term::symbol(std::string name) {
    Term t;
    t.kind = TermKind::Symbol;
    t.name = std::move(name);
    return t;
}
Term Term::variable(std::string name, VarClass cls) {
    Term t;
    t.kind      = TermKind::Variable;
    t.name      = std::move(name);
    t.var_class = cls;
    return t;
}

std::strong_ordering Term::operator<=>(const Term& other) const {
    if (kind != other.kind) {
        return kind <=> other.kind;
    }
    if (kind == TermKind::Integer) {
        return value <=> other.value;
    }
    if (auto c = name <=> other.name; c != 0) {
        return c;
    }
    return var_class <=> other.var_class;
}

bool Atom::is_ground() const noexcept {
    return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
}

std::strong_ordering Atom::operator<=>(const Atom& other) const {
    if (auto c = predicate <=> other.predicate; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(args.begin(), args.end(), other.args.begin(), other.args.end());
}

bool AggregateAtom::is_ground() const noexcept {
    if (!bound.is_integer()) {
        return false;
    }
    return std::none_of(set.pattern.args.begin(), set.pattern.args.end(),
                        [](const Term& t) { return t.is_variable() && t.var_class == VarClass::Global; });
}

bool Rule::is_ground() const noexcept {
    auto ground = [](const Atom& a) { return a.is_ground(); };
    return head.is_ground() && std::all_of(pos.begin(), pos.end(), ground) &&
           std::all_of(neg.begin(), neg.end(), ground) &&
           std::all_of(agg.begin(), agg.end(), [](const AggregateAtom& a) { return a.is_ground(); });
}

bool Program::is_ground() const noexcept {
    return std::all_of(rules.begin(), rules.end(), [](const Rule& r) { return r.is_ground(); });
}

std::string_view to_string(AggFunction fn) {
    switch (fn) {
        case AggFunction::Sum  : return "sum";
        case AggFunction::Count: return "count";
        case AggFunction::Min  : return "min";
        case AggFunction::Max  : return "max";
        case AggFunction::Avg  : return "avg";
    }
    return "?";
}

std::string_view to_string(CompareOp op) {
    switch (op) {
        case CompareOp::Eq: return "=";
        case CompareOp::Ne: return "!=";
        case CompareOp::Lt: return "<";
        case CompareOp::Gt: return ">";
        case CompareOp::Le: return "<=";
        case CompareOp::Ge: return ">=";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Signature inference
// ---------------------------------------------------------------------------
namespace {

void collect_constants(const Atom& a, std::set<Term>& out) {
    for (const Term& t : a.args) {
        if (t.is_ground()) {
            out.insert(t);
        }
    }
}

std::set<Term> rule_constants(const std::vector<Rule>& rules) {
    std::set<Term> out;
    for (const Rule& r : rules) {
        collect_constants(r.head, out);
        for (const Atom& a : r.pos) collect_constants(a, out);
        for (const Atom& a : r.neg) collect_constants(a, out);
        for (const AggregateAtom& a : r.agg) collect_constants(a.set.pattern, out);
    }
    return out;
}

template <class Fn>
void for_each_atom(const Rule& r, Fn&& fn) {
    fn(r.head);
    for (const Atom& a : r.pos) fn(a);
    for (const Atom& a : r.neg) fn(a);
    for (const AggregateAtom& a : r.agg) fn(a.set.pattern);
}

} // namespace

Program make_program(std::vector<Rule> rules, std::vector<Term> extra_constants) {
    Program p;
    for (const Rule& r : rules) {
        for_each_atom(r, [&](const Atom& a) {
            auto [it, inserted] = p.predicates.emplace(a.predicate, a.arity());
            if (!inserted && it->second != a.arity()) {
                throw ParseError("arity clash for predicate '" + a.predicate + "'", 0, 0);
            }
        });
    }
    std::set<Term> constants = rule_constants(rules);
    for (Term& t : extra_constants) {
        if (!t.is_ground()) {
            throw ParseError("domain constant must be ground: " + to_string(t), 0, 0);
        }
        constants.insert(std::move(t));
    }
    p.constants.assign(constants.begin(), constants.end());
    p.rules = std::move(rules);
    return p;
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------
namespace {

enum class Tok : std::uint8_t {
    Ident, Var, Int, LParen, RParen, Comma, Dot, If, Colon,
    LBrace, RBrace, LBrace2, RBrace2, Eq, Ne, Lt, Gt, Le, Ge, Const, End
};

struct Token {
    Tok              kind = Tok::End;
    std::string_view text;
    std::size_t      line = 1;
    std::size_t      column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space();
        Token tok;
        tok.line   = line_;
        tok.column = column_;
        if (pos_ >= text_.size()) {
            return tok;
        }
        std::size_t start = pos_;
        char        c     = text_[pos_];
        auto        take  = [&](Tok kind, std::size_t n) {
            advance(n);
            tok.kind = kind;
            tok.text = text_.substr(start, n);
            return tok;
        };
        auto peek = [&](std::size_t off) { return pos_ + off < text_.size() ? text_[pos_ + off] : '\0'; };
        if (std::islower(static_cast<unsigned char>(c)) || std::isupper(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t n = 1;
            while (is_word(peek(n))) ++n;
            return take(std::islower(static_cast<unsigned char>(c)) ? Tok::Ident : Tok::Var, n);
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
            std::size_t n = 1;
            while (std::isdigit(static_cast<unsigned char>(peek(n)))) ++n;
            return take(Tok::Int, n);
        }
        switch (c) {
            case '(': return take(Tok::LParen, 1);
            case ')': return take(Tok::RParen, 1);
            case ',': return take(Tok::Comma, 1);
            case '.': return take(Tok::Dot, 1);
            case ':': return peek(1) == '-' ? take(Tok::If, 2) : take(Tok::Colon, 1);
            case '{': return peek(1) == '{' ? take(Tok::LBrace2, 2) : take(Tok::LBrace, 1);
            case '}': return peek(1) == '}' ? take(Tok::RBrace2, 2) : take(Tok::RBrace, 1);
            case '=': return take(Tok::Eq, 1);
            case '!':
                if (peek(1) == '=') return take(Tok::Ne, 2);
                break;
            case '<': return peek(1) == '=' ? take(Tok::Le, 2) : take(Tok::Lt, 1);
            case '>': return peek(1) == '=' ? take(Tok::Ge, 2) : take(Tok::Gt, 1);
            case '#':
                if (text_.substr(pos_, 6) == "#const" && !is_word(peek(6))) return take(Tok::Const, 6);
                break;
            default: break;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
    }

private:
    static bool is_word(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
            if (text_[pos_] == '\n') {
                ++line_;
                column_ = 1;
            }
            else {
                ++column_;
            }
        }
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
            }
            else if (std::isspace(static_cast<unsigned char>(c))) {
                advance(1);
            }
            else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t      pos_ = 0;
    std::size_t      line_ = 1;
    std::size_t      column_ = 1;
};

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------
std::optional<AggFunction> function_named(std::string_view s) {
    if (s == "sum") return AggFunction::Sum;
    if (s == "count") return AggFunction::Count;
    if (s == "min") return AggFunction::Min;
    if (s == "max") return AggFunction::Max;
    if (s == "avg") return AggFunction::Avg;
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {
        cur_  = lex_.next();
        peek_ = lex_.next();
    }

    Program program() {
        std::vector<Rule> rules;
        std::vector<Term> extra;
        while (cur_.kind != Tok::End) {
            if (cur_.kind == Tok::Const) {
                shift();
                while (cur_.kind != Tok::Dot) {
                    if (cur_.kind == Tok::Int) extra.push_back(Term::integer(integer(cur_)));
                    else if (cur_.kind == Tok::Ident) extra.push_back(Term::symbol(std::string(cur_.text)));
                    else if (cur_.kind != Tok::Comma) fail("expected constant in #const");
                    shift();
                }
                shift();
                continue;
            }
            rules.push_back(rule());
        }
        return make_program(std::move(rules), std::move(extra));
    }

    std::vector<Atom> atom_list() {
        std::vector<Atom> out;
        if (cur_.kind == Tok::End) {
            return out;
        }
        for (;;) {
            Atom a = atom(VarClass::Global);
            if (!a.is_ground()) {
                fail("expected a ground atom");
            }
            out.push_back(std::move(a));
            if (cur_.kind == Tok::End) {
                return out;
            }
            expect(Tok::Comma, "','");
        }
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, cur_.line, cur_.column); }

    void shift() {
        cur_  = peek_;
        peek_ = lex_.next();
    }

    void expect(Tok kind, const char* what) {
        if (cur_.kind != kind) {
            fail(std::string("expected ") + what);
        }
        shift();
    }

    std::int64_t integer(const Token& tok) const {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
        if (ec != std::errc{}) {
            throw ParseError("integer out of range", tok.line, tok.column);
        }
        return v;
    }

    Term term(VarClass cls) {
        Term t;
        switch (cur_.kind) {
            case Tok::Int  : t = Term::integer(integer(cur_)); break;
            case Tok::Ident: t = Term::symbol(std::string(cur_.text)); break;
            case Tok::Var  : t = Term::variable(std::string(cur_.text), cls); break;
            default        : fail("expected term");
        }
        shift();
        return t;
    }

    Atom atom(VarClass cls) {
        if (cur_.kind != Tok::Ident) {
            fail("expected atom");
        }
        Token start = cur_;
        Atom  a;
        a.predicate = std::string(cur_.text);
        shift();
        if (cur_.kind == Tok::LParen) {
            shift();
            a.args.push_back(term(cls));
            while (cur_.kind == Tok::Comma) {
                shift();
                a.args.push_back(term(cls));
            }
            expect(Tok::RParen, "')'");
        }
        note_arity(a, start);
        return a;
    }

    void note_arity(const Atom& a, const Token& at) {
        auto [it, inserted] = arity_.emplace(a.predicate, a.arity());
        if (!inserted && it->second != a.arity()) {
            throw ParseError("arity clash for predicate '" + a.predicate + "': " + std::to_string(a.arity()) +
                                 " vs " + std::to_string(it->second),
                             at.line, at.column);
        }
    }

    CompareOp compare_op() {
        CompareOp op{};
        switch (cur_.kind) {
            case Tok::Eq: op = CompareOp::Eq; break;
            case Tok::Ne: op = CompareOp::Ne; break;
            case Tok::Lt: op = CompareOp::Lt; break;
            case Tok::Gt: op = CompareOp::Gt; break;
            case Tok::Le: op = CompareOp::Le; break;
            case Tok::Ge: op = CompareOp::Ge; break;
            default     : fail("expected comparison operator");
        }
        shift();
        return op;
    }

    AggregateAtom aggregate(AggFunction fn) {
        AggregateAtom l;
        l.function = fn;
        shift();
        bool multi = cur_.kind == Tok::LBrace2;
        shift();
        l.set.kind = multi ? SetKind::Multiset : SetKind::Set;
        if (cur_.kind != Tok::Var) {
            fail("expected grouped variable");
        }
        l.set.grouped_var = std::string(cur_.text);
        shift();
        expect(Tok::Colon, "':'");
        Token at    = cur_;
        l.set.pattern = atom(VarClass::Global);
        expect(multi ? Tok::RBrace2 : Tok::RBrace, multi ? "'}}'" : "'}'");

        std::size_t occurrences = 0;
        for (std::size_t i = 0; i < l.set.pattern.args.size(); ++i) {
            Term& t = l.set.pattern.args[i];
            if (!t.is_variable()) {
                continue;
            }
            if (t.name == l.set.grouped_var) {
                t.var_class          = VarClass::Grouped;
                l.set.grouped_position = i;
                ++occurrences;
            }
            else if (multi) {
                t.var_class = VarClass::Local;
                if (std::find(l.set.local_vars.begin(), l.set.local_vars.end(), t.name) == l.set.local_vars.end()) {
                    l.set.local_vars.push_back(t.name);
                }
            }
        }
        if (occurrences != 1) {
            throw ParseError("grouped variable '" + l.set.grouped_var + "' must occur exactly once in the pattern",
                             at.line, at.column);
        }
        l.op = compare_op();
        if (cur_.kind != Tok::Int && cur_.kind != Tok::Var) {
            fail("expected integer or variable bound");
        }
        l.bound = term(VarClass::Global);
        return l;
    }

    Rule rule() {
        Rule r;
        r.head = atom(VarClass::Global);
        if (cur_.kind == Tok::If) {
            shift();
            std::vector<Token> agg_at;
            for (;;) {
                if (cur_.kind == Tok::Ident && cur_.text == "not" && peek_.kind == Tok::Ident) {
                    shift();
                    r.neg.push_back(atom(VarClass::Global));
                }
                else if (auto fn = function_named(cur_.kind == Tok::Ident ? cur_.text : std::string_view{});
                         fn && (peek_.kind == Tok::LBrace || peek_.kind == Tok::LBrace2)) {
                    agg_at.push_back(cur_);
                    r.agg.push_back(aggregate(*fn));
                }
                else {
                    r.pos.push_back(atom(VarClass::Global));
                }
                if (cur_.kind != Tok::Comma) {
                    break;
                }
                shift();
            }
            check_scoping(r, agg_at);
        }
        if (cur_.kind != Tok::Dot) {
            fail("expected '.'");
        }
        shift();
        return r;
    }

    // Grouped and local variables must not double as global variables of the rule.
    static void check_scoping(const Rule& r, const std::vector<Token>& agg_at) {
        std::set<std::string> global;
        auto                  add = [&](const Atom& a) {
            for (const Term& t : a.args) {
                if (t.is_variable() && t.var_class == VarClass::Global) global.insert(t.name);
            }
        };
        add(r.head);
        for (const Atom& a : r.pos) add(a);
        for (const Atom& a : r.neg) add(a);
        for (const AggregateAtom& l : r.agg) {
            add(l.set.pattern);
            if (l.bound.is_variable()) global.insert(l.bound.name);
        }
        for (std::size_t i = 0; i < r.agg.size(); ++i) {
            const SetExpression& s = r.agg[i].set;
            auto clash = [&](const std::string& v, const char* role) {
                if (global.count(v) != 0) {
                    throw ParseError(std::string(role) + " variable '" + v + "' also used globally", agg_at[i].line,
                                     agg_at[i].column);
                }
            };
            clash(s.grouped_var, "grouped");
            for (const std::string& v : s.local_vars) clash(v, "local");
        }
    }

    Lexer                              lex_;
    Token                              cur_;
    Token                              peek_;
    std::map<std::string, std::size_t> arity_;
};

} // namespace

Program parse_program(std::string_view text) {
    return Parser(text).program();
}

std::vector<Atom> parse_atom_list(std::string_view text) {
    return Parser(text).atom_list();
}

// ---------------------------------------------------------------------------
// Grounding
// ---------------------------------------------------------------------------
namespace {

using Binding = std::map<std::string, Term>;

Term substitute(const Term& t, const Binding& b, bool all_classes) {
    if (!t.is_variable() || (!all_classes && t.var_class != VarClass::Global)) {
        return t;
    }
    auto it = b.find(t.name);
    return it == b.end() ? t : it->second;
}

Atom substitute(const Atom& a, const Binding& b, bool all_classes = false) {
    Atom out{a.predicate, {}};
    out.args.reserve(a.args.size());
    for (const Term& t : a.args) out.args.push_back(substitute(t, b, all_classes));
    return out;
}

// Calls fn once per assignment of `vars` to `domain`, in lexicographic order.
template <class Fn>
void for_each_binding(const std::vector<std::string>& vars, const std::vector<Term>& domain, Fn&& fn) {
    if (!vars.empty() && domain.empty()) {
        return;
    }
    std::vector<std::size_t> idx(vars.size(), 0);
    Binding                  b;
    for (;;) {
        for (std::size_t i = 0; i < vars.size(); ++i) b[vars[i]] = domain[idx[i]];
        fn(b);
        std::size_t k = vars.size();
        while (k > 0) {
            --k;
            if (++idx[k] < domain.size()) break;
            idx[k] = 0;
            if (k == 0) return;
        }
        if (vars.empty()) return;
    }
}

std::vector<std::string> global_vars(const Rule& r) {
    std::set<std::string> vars;
    auto                  add = [&](const Atom& a) {
        for (const Term& t : a.args) {
            if (t.is_variable() && t.var_class == VarClass::Global) vars.insert(t.name);
        }
    };
    for_each_atom(r, add);
    for (const AggregateAtom& l : r.agg) {
        if (l.bound.is_variable()) vars.insert(l.bound.name);
    }
    return {vars.begin(), vars.end()};
}

} // namespace

Program ground_program(const Program& p) {
    Program out;
    out.constants  = p.constants;
    out.predicates = p.predicates;
    std::set<std::string> seen;
    for (const Rule& r : p.rules) {
        for_each_binding(global_vars(r), p.constants, [&](const Binding& b) {
            Rule g;
            g.head = substitute(r.head, b);
            for (const Atom& a : r.pos) g.pos.push_back(substitute(a, b));
            for (const Atom& a : r.neg) g.neg.push_back(substitute(a, b));
            for (const AggregateAtom& l : r.agg) {
                AggregateAtom gl = l;
                gl.set.pattern   = substitute(l.set.pattern, b);
                gl.bound         = substitute(l.bound, b, false);
                if (!gl.bound.is_integer()) {
                    return;
                }
                g.agg.push_back(std::move(gl));
            }
            if (seen.insert(to_string(g)).second) {
                out.rules.push_back(std::move(g));
            }
        });
    }
    return out;
}

std::vector<Atom> atom_universe(const AggregateAtom& l, const Program& p) {
    std::vector<std::string> vars{l.set.grouped_var};
    if (l.set.kind == SetKind::Multiset) {
        vars.insert(vars.end(), l.set.local_vars.begin(), l.set.local_vars.end());
    }
    std::vector<Atom> out;
    for_each_binding(vars, p.constants, [&](const Binding& b) { out.push_back(substitute(l.set.pattern, b, true)); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------
std::string to_string(const Term& t) {
    return t.is_integer() ? std::to_string(t.value) : t.name;
}

std::string to_string(const Atom& a) {
    std::string out = a.predicate;
    if (!a.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < a.args.size(); ++i) {
            if (i) out += ',';
            out += to_string(a.args[i]);
        }
        out += ')';
    }
    return out;
}

std::string to_string(const SetExpression& s) {
    bool        multi = s.kind == SetKind::Multiset;
    std::string out   = multi ? "{{" : "{";
    out += s.grouped_var + " : " + to_string(s.pattern);
    out += multi ? "}}" : "}";
    return out;
}

std::string to_string(const AggregateAtom& a) {
    std::string out(to_string(a.function));
    out += to_string(a.set);
    out += ' ';
    out += to_string(a.op);
    out += ' ';
    out += to_string(a.bound);
    return out;
}

std::string to_string(const Rule& r) {
    std::string out = to_string(r.head);
    if (!r.is_fact()) {
        out += " :- ";
        bool first = true;
        auto sep   = [&] {
            if (!first) out += ", ";
            first = false;
        };
        for (const Atom& a : r.pos) {
            sep();
            out += to_string(a);
        }
        for (const Atom& a : r.neg) {
            sep();
            out += "not " + to_string(a);
        }
        for (const AggregateAtom& a : r.agg) {
            sep();
            out += to_string(a);
        }
    }
    out += '.';
    return out;
}

std::string to_string(const Program& p) {
    std::ostringstream out;
    std::set<Term>     in_rules = rule_constants(p.rules);
    std::vector<Term>  extra;
    for (const Term& c : p.constants) {
        if (in_rules.count(c) == 0) extra.push_back(c);
    }
    if (!extra.empty()) {
        out << "#const";
        for (const Term& c : extra) out << ' ' << to_string(c);
        out << ".\n";
    }
    for (const Rule& r : p.rules) out << to_string(r) << '\n';
    return out.str();
}

} // namespace aggfix
