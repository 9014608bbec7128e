// {{{ MIT License
//
// Copyright 2026 The dhpp authors
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
// }}}

#include <dhpp/classical.hh>
#include <dhpp/parser.hh>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>

namespace dhpp {

char const *toString(ClassicalFunction fn) {
    switch (fn) {
        case ClassicalFunction::Sum: return "sum";
        case ClassicalFunction::Count: return "count";
        case ClassicalFunction::Min: return "min";
        case ClassicalFunction::Max: return "max";
        case ClassicalFunction::Times: return "times";
    }
    return "";
}

std::set<std::string> ClassicalProgram::atoms() const {
    std::set<std::string> res;
    for (auto const &rule : rules) {
        res.insert(rule.head.begin(), rule.head.end());
        for (auto const &lit : rule.body) { res.insert(lit.atom); }
        for (auto const &agg : rule.aggregates) {
            for (auto const &elem : agg.elements) {
                for (auto const &lit : elem.condition) { res.insert(lit.atom); }
            }
        }
    }
    return res;
}

bool ClassicalProgram::hasAggregates() const {
    return std::any_of(rules.begin(), rules.end(), [](ClassicalRule const &r) { return !r.aggregates.empty(); });
}

// {{{ parser

namespace {

class ClassicalParser {
public:
    ClassicalParser(std::string_view text, std::string file) : text_(text), file_(std::move(file)) { }

    ClassicalProgram parse() {
        ClassicalProgram res;
        for (skip(); pos_ < text_.size(); skip()) { res.rules.push_back(rule()); }
        return res;
    }

private:
    [[noreturn]] void fail(std::string const &msg) {
        unsigned line = 1;
        unsigned col = 1;
        for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            }
            else {
                ++col;
            }
        }
        throw Error(ErrorCode::SyntaxError, msg, Location{file_, line, col});
    }

    void skip() {
        while (pos_ < text_.size()) {
            if (std::isspace(static_cast<unsigned char>(text_[pos_]))) { ++pos_; }
            else if (text_[pos_] == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') { ++pos_; }
            }
            else { break; }
        }
    }

    bool accept(std::string_view tok) {
        skip();
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view tok) {
        if (!accept(tok)) { fail("expected '" + std::string(tok) + "'"); }
    }

    bool peekIdent() {
        skip();
        return pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_]));
    }

    std::string ident() {
        if (!peekIdent()) { fail("expected identifier"); }
        size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) { ++pos_; }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string atom() {
        auto res = ident();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            size_t depth = 0;
            do {
                char c = text_[pos_++];
                if (c == '(') { ++depth; }
                if (c == ')') { --depth; }
                if (!std::isspace(static_cast<unsigned char>(c))) { res += c; }
            } while (pos_ < text_.size() && depth > 0);
            if (depth > 0) { fail("unbalanced parentheses"); }
        }
        return res;
    }

    Rational number() {
        skip();
        size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') { ++pos_; }
        auto digitAt = [&](size_t i) { return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i])); };
        while (digitAt(pos_) || (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/') && digitAt(pos_ + 1))) { ++pos_; }
        if (start == pos_) { fail("expected number"); }
        try {
            return parseRational(text_.substr(start, pos_ - start));
        }
        catch (Error const &) {
            pos_ = start;
            fail("malformed number");
        }
    }

    Comparator comparator() {
        if (accept("!=")) { return Comparator::Ne; }
        if (accept("<=")) { return Comparator::Le; }
        if (accept(">=")) { return Comparator::Ge; }
        if (accept("<")) { return Comparator::Lt; }
        if (accept(">")) { return Comparator::Gt; }
        if (accept("=")) { return Comparator::Eq; }
        fail("expected comparison operator");
    }

    ClassicalLiteral literal() {
        bool neg = false;
        if (peekIdent() && text_.substr(pos_, 3) == "not" && pos_ + 3 < text_.size() && !std::isalnum(static_cast<unsigned char>(text_[pos_ + 3])) && text_[pos_ + 3] != '_' && text_[pos_ + 3] != '(') {
            pos_ += 3;
            neg = true;
        }
        return {atom(), neg};
    }

    void bodyItem(ClassicalRule &rule) {
        auto lit = literal();
        static std::map<std::string, ClassicalFunction> const functions{
            {"sum", ClassicalFunction::Sum}, {"count", ClassicalFunction::Count}, {"min", ClassicalFunction::Min},
            {"max", ClassicalFunction::Max}, {"times", ClassicalFunction::Times}};
        auto fn = functions.find(lit.atom);
        if (fn == functions.end() || !accept("{")) {
            rule.body.push_back(std::move(lit));
            return;
        }
        ClassicalAggregate agg;
        agg.function = fn->second;
        agg.negated = lit.negated;
        if (!accept("}")) {
            do {
                ClassicalElement elem;
                elem.weight = number();
                if (accept(":")) {
                    do { elem.condition.push_back(literal()); } while (accept(","));
                }
                agg.elements.push_back(std::move(elem));
            } while (accept(";"));
            expect("}");
        }
        agg.cmp = comparator();
        agg.bound = number();
        rule.aggregates.push_back(std::move(agg));
    }

    ClassicalRule rule() {
        ClassicalRule res;
        if (!accept(":-")) {
            do { res.head.push_back(atom()); } while (accept("|"));
            if (accept(".")) { return res; }
            expect(":-");
        }
        do { bodyItem(res); } while (accept(","));
        expect(".");
        return res;
    }

    std::string_view text_;
    std::string file_;
    size_t pos_ = 0;
};

std::string toString(Comparator cmp, Rational const &bound) {
    return std::string(" ") + dhpp::toString(cmp) + " " + toDecimal(bound);
}

} // namespace

ClassicalProgram parseClassical(std::string_view text, std::string const &file) {
    return ClassicalParser(text, file).parse();
}

std::string toString(ClassicalProgram const &program) {
    std::string out;
    auto literal = [](ClassicalLiteral const &lit) { return (lit.negated ? "not " : "") + lit.atom; };
    for (auto const &rule : program.rules) {
        std::string body;
        auto sep = [&]() {
            if (!body.empty()) { body += ", "; }
        };
        for (auto const &lit : rule.body) {
            sep();
            body += literal(lit);
        }
        for (auto const &agg : rule.aggregates) {
            sep();
            body += std::string(agg.negated ? "not " : "") + toString(agg.function) + "{";
            for (size_t i = 0; i < agg.elements.size(); ++i) {
                if (i > 0) { body += "; "; }
                body += toDecimal(agg.elements[i].weight);
                for (size_t j = 0; j < agg.elements[i].condition.size(); ++j) {
                    body += (j == 0 ? " : " : ", ") + literal(agg.elements[i].condition[j]);
                }
            }
            body += "}" + toString(agg.cmp, agg.bound);
        }
        std::string head;
        for (size_t i = 0; i < rule.head.size(); ++i) { head += (i > 0 ? " | " : "") + rule.head[i]; }
        if (body.empty()) { out += head + ".\n"; }
        else if (head.empty()) { out += ":- " + body + ".\n"; }
        else { out += head + " :- " + body + ".\n"; }
    }
    return out;
}

// }}}
// {{{ translation

Program translateDlp(ClassicalProgram const &program) {
    Program res;
    auto atom = [](std::string const &text) {
        auto formula = parseFormula(text);
        if (!formula.isAtom() || !formula.isGround()) {
            throw Error(ErrorCode::UnsupportedConstruct, "'" + text + "' is not a ground atom");
        }
        return formula.atoms.front();
    };
    auto one = Annotation::one();
    for (auto const &rule : program.rules) {
        std::vector<HeadDisjunct> head;
        std::vector<BodyLiteral> pos;
        std::vector<BodyLiteral> neg;
        for (auto const &name : rule.head) { head.push_back({atom(name), one}); }
        if (head.empty()) {
            head.push_back({constraintAtom(), one});
            neg.push_back({HybridBasicFormula::atom(constraintAtom()), one});
        }
        for (auto const &lit : rule.body) {
            (lit.negated ? neg : pos).push_back({HybridBasicFormula::atom(atom(lit.atom)), one});
        }
        for (auto const &agg : rule.aggregates) {
            AggregateAtom out;
            switch (agg.function) {
                case ClassicalFunction::Sum: out.function = AggregateFunction::SumP; break;
                case ClassicalFunction::Count: out.function = AggregateFunction::CountP; break;
                case ClassicalFunction::Min: out.function = AggregateFunction::MinP; break;
                case ClassicalFunction::Max: out.function = AggregateFunction::MaxP; break;
                case ClassicalFunction::Times: out.function = AggregateFunction::TimesP; break;
            }
            out.cmp = agg.cmp;
            out.guardLo = out.guardHi = Term::number(agg.bound);
            out.scalarGuard = true;
            for (auto const &elem : agg.elements) {
                SetElement set{Term::number(elem.weight), one, {}};
                for (auto const &lit : elem.condition) {
                    if (lit.negated) {
                        throw Error(ErrorCode::UnsupportedConstruct, "negative condition 'not " + lit.atom + "' in aggregate element");
                    }
                    set.condition.push_back({HybridBasicFormula::atom(atom(lit.atom)), one});
                }
                out.set.elements.push_back(std::move(set));
            }
            (agg.negated ? neg : pos).push_back({std::move(out), one});
        }
        res.rules.push_back(makeRule(std::move(head), std::move(pos), std::move(neg)));
    }
    return res;
}

// }}}
// {{{ oracle

namespace {

using Mask = std::uint32_t;

struct CompiledLiteral {
    unsigned atom;
    bool negated;
};

struct CompiledAggregate {
    ClassicalFunction function;
    std::vector<std::pair<Rational, std::vector<CompiledLiteral>>> elements;
    Comparator cmp;
    Rational bound;
    bool negated;
};

struct CompiledRule {
    Mask head = 0;
    std::vector<CompiledLiteral> body;
    std::vector<CompiledAggregate> aggregates;
};

bool holds(CompiledLiteral const &lit, Mask m) { return (((m >> lit.atom) & 1) != 0) != lit.negated; }

bool holds(CompiledAggregate const &agg, Mask m) {
    std::vector<Rational> weights;
    for (auto const &[w, cond] : agg.elements) {
        if (std::all_of(cond.begin(), cond.end(), [&](CompiledLiteral const &l) { return holds(l, m); })) { weights.push_back(w); }
    }
    bool sat = false;
    Rational value = 0;
    bool defined = true;
    switch (agg.function) {
        case ClassicalFunction::Sum:
            for (auto const &w : weights) { value += w; }
            break;
        case ClassicalFunction::Count: value = Rational(static_cast<unsigned long>(weights.size())); break;
        case ClassicalFunction::Times:
            value = 1;
            for (auto const &w : weights) { value *= w; }
            break;
        case ClassicalFunction::Min:
        case ClassicalFunction::Max:
            if (weights.empty()) {
                defined = false;
                break;
            }
            value = agg.function == ClassicalFunction::Min ? *std::min_element(weights.begin(), weights.end())
                                                           : *std::max_element(weights.begin(), weights.end());
            break;
    }
    sat = defined && compareScalar(value, agg.cmp, agg.bound);
    return sat != agg.negated;
}

bool bodyHolds(CompiledRule const &rule, Mask m) {
    return std::all_of(rule.body.begin(), rule.body.end(), [&](auto const &l) { return holds(l, m); }) &&
           std::all_of(rule.aggregates.begin(), rule.aggregates.end(), [&](auto const &a) { return holds(a, m); });
}

bool isModel(std::vector<CompiledRule> const &rules, Mask m) {
    return std::all_of(rules.begin(), rules.end(), [&](CompiledRule const &r) { return (r.head & m) != 0 || !bodyHolds(r, m); });
}

// Gelfond-Lifschitz reduct w.r.t. m for aggregate-free rules
std::vector<CompiledRule> glReduct(std::vector<CompiledRule> const &rules, Mask m) {
    std::vector<CompiledRule> res;
    for (auto const &rule : rules) {
        bool blocked = std::any_of(rule.body.begin(), rule.body.end(), [&](auto const &l) { return l.negated && ((m >> l.atom) & 1); });
        if (blocked) { continue; }
        CompiledRule out;
        out.head = rule.head;
        for (auto const &l : rule.body) {
            if (!l.negated) { out.body.push_back(l); }
        }
        res.push_back(std::move(out));
    }
    return res;
}

std::vector<CompiledRule> flpReduct(std::vector<CompiledRule> const &rules, Mask m) {
    std::vector<CompiledRule> res;
    for (auto const &rule : rules) {
        if (bodyHolds(rule, m)) { res.push_back(rule); }
    }
    return res;
}

} // namespace

std::set<std::set<std::string>> classicalOracle(ClassicalProgram const &program, size_t maxAtoms) {
    auto atoms = program.atoms();
    if (atoms.size() > maxAtoms || atoms.size() > 30) {
        throw Error(ErrorCode::TooLarge, std::to_string(atoms.size()) + " atoms exceed the oracle limit of " + std::to_string(maxAtoms));
    }
    std::vector<std::string> names(atoms.begin(), atoms.end());
    std::map<std::string, unsigned> index;
    for (unsigned i = 0; i < names.size(); ++i) { index[names[i]] = i; }
    auto compile = [&](ClassicalLiteral const &l) { return CompiledLiteral{index.at(l.atom), l.negated}; };
    std::vector<CompiledRule> rules;
    for (auto const &rule : program.rules) {
        CompiledRule out;
        for (auto const &h : rule.head) { out.head |= Mask(1) << index.at(h); }
        for (auto const &l : rule.body) { out.body.push_back(compile(l)); }
        for (auto const &agg : rule.aggregates) {
            CompiledAggregate ca{agg.function, {}, agg.cmp, agg.bound, agg.negated};
            for (auto const &elem : agg.elements) {
                std::vector<CompiledLiteral> cond;
                for (auto const &l : elem.condition) { cond.push_back(compile(l)); }
                std::sort(cond.begin(), cond.end(), [](auto const &a, auto const &b) {
                    return std::pair(a.atom, a.negated) < std::pair(b.atom, b.negated);
                });
                std::pair<Rational, std::vector<CompiledLiteral>> e{elem.weight, std::move(cond)};
                bool dup = std::any_of(ca.elements.begin(), ca.elements.end(), [&](auto const &o) {
                    return o.first == e.first && o.second.size() == e.second.size() &&
                           std::equal(o.second.begin(), o.second.end(), e.second.begin(), [](auto const &a, auto const &b) {
                               return a.atom == b.atom && a.negated == b.negated;
                           });
                });
                if (!dup) { ca.elements.push_back(std::move(e)); }
            }
            out.aggregates.push_back(std::move(ca));
        }
        rules.push_back(std::move(out));
    }
    bool aggregates = program.hasAggregates();
    std::set<std::set<std::string>> res;
    Mask const all = names.empty() ? 0 : Mask((std::uint64_t(1) << names.size()) - 1);
    for (Mask m = 0;; ++m) {
        if (isModel(rules, m)) {
            auto red = aggregates ? flpReduct(rules, m) : glReduct(rules, m);
            bool minimal = true;
            for (Mask sub = (m - 1) & m; minimal && sub != m; sub = (sub - 1) & m) {
                if (isModel(red, sub)) { minimal = false; }
                if (sub == 0) { break; }
            }
            if (minimal) {
                std::set<std::string> as;
                for (unsigned i = 0; i < names.size(); ++i) {
                    if ((m >> i) & 1) { as.insert(names[i]); }
                }
                res.insert(std::move(as));
            }
        }
        if (m == all) { break; }
    }
    return res;
}

// }}}

} // namespace dhpp
