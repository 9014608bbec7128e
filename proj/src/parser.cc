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

#include <dhpp/parser.hh>

#include <algorithm>
#include <cctype>

namespace dhpp {

namespace {

// {{{ lexer

enum class Tok {
    Ident, Variable, Number,
    LParen, RParen, LBrack, RBrack, LBrace, RBrace,
    Comma, Semicolon, Dot, Colon, Bar, If,
    Plus, Minus, Star, Slash,
    Eq, Ne, Lt, Gt, Le, Ge,
    End,
};

struct Token {
    Tok type;
    std::string text;
    unsigned line;
    unsigned column;
};

class Lexer {
public:
    Lexer(std::string_view text, std::string file)
    : text_(text)
    , file_(std::move(file)) { }

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skipSpace();
            if (pos_ >= text_.size()) {
                out.push_back({Tok::End, "", line_, col_});
                return out;
            }
            out.push_back(next());
        }
    }

private:
    char peek(size_t off = 0) const { return pos_ + off < text_.size() ? text_[pos_ + off] : '\0'; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        }
        else {
            ++col_;
        }
        ++pos_;
    }

    void skipSpace() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') { advance(); }
            }
            else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            }
            else {
                break;
            }
        }
    }

    static bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    Token next() {
        unsigned line = line_;
        unsigned col = col_;
        size_t start = pos_;
        char c = peek();
        auto make = [&](Tok t) { return Token{t, std::string(text_.substr(start, pos_ - start)), line, col}; };
        auto single = [&](Tok t) {
            advance();
            return make(t);
        };
        if (std::islower(static_cast<unsigned char>(c)) || (c == '#' && std::isalpha(static_cast<unsigned char>(peek(1))))) {
            advance();
            while (isIdentChar(peek())) { advance(); }
            return make(Tok::Ident);
        }
        if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
            while (isIdentChar(peek())) { advance(); }
            return make(Tok::Variable);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (std::isdigit(static_cast<unsigned char>(peek()))) { advance(); }
            if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
                advance();
                while (std::isdigit(static_cast<unsigned char>(peek()))) { advance(); }
            }
            return make(Tok::Number);
        }
        switch (c) {
            case '(': return single(Tok::LParen);
            case ')': return single(Tok::RParen);
            case '[': return single(Tok::LBrack);
            case ']': return single(Tok::RBrack);
            case '{': return single(Tok::LBrace);
            case '}': return single(Tok::RBrace);
            case ',': return single(Tok::Comma);
            case ';': return single(Tok::Semicolon);
            case '.': return single(Tok::Dot);
            case '|': return single(Tok::Bar);
            case '+': return single(Tok::Plus);
            case '-': return single(Tok::Minus);
            case '*': return single(Tok::Star);
            case '/': return single(Tok::Slash);
            case '=': return single(Tok::Eq);
            case ':':
                advance();
                if (peek() == '-') {
                    advance();
                    return make(Tok::If);
                }
                return make(Tok::Colon);
            case '!':
                advance();
                if (peek() == '=') {
                    advance();
                    return make(Tok::Ne);
                }
                break;
            case '<':
                advance();
                if (peek() == '=') {
                    advance();
                    return make(Tok::Le);
                }
                return make(Tok::Lt);
            case '>':
                advance();
                if (peek() == '=') {
                    advance();
                    return make(Tok::Ge);
                }
                return make(Tok::Gt);
            default:
                advance();
                break;
        }
        throw Error(ErrorCode::SyntaxError, "unexpected character '" + std::string(text_.substr(start, pos_ - start)) + "'",
                    Location{file_, line, col});
    }

    std::string_view text_;
    std::string file_;
    size_t pos_ = 0;
    unsigned line_ = 1;
    unsigned col_ = 1;
};

// }}}
// {{{ parser

std::optional<Comparator> comparatorOf(Tok t) {
    switch (t) {
        case Tok::Eq: return Comparator::Eq;
        case Tok::Ne: return Comparator::Ne;
        case Tok::Lt: return Comparator::Lt;
        case Tok::Gt: return Comparator::Gt;
        case Tok::Le: return Comparator::Le;
        case Tok::Ge: return Comparator::Ge;
        default:      return std::nullopt;
    }
}

class Parser {
public:
    Parser(std::string_view text, ParseOptions const &options)
    : toks_(Lexer(text, options.file).run())
    , options_(options) { }

    SourceProgram program() {
        SourceProgram out;
        out.program.registry = options_.registry;
        while (peek().type != Tok::End) { statement(out); }
        try {
            out.program.registry->at(out.program.tau.defaultStrategy, StrategyKind::Disjunctive);
        }
        catch (Error const &e) {
            throw Error(e.code(), e.detail(), loc(peek()));
        }
        return out;
    }

    void directives(Program &program) {
        while (peek().type != Tok::End) {
            if (peek().type != Tok::Ident || (peek().text != "#tau" && peek().text != "#default_tau")) {
                fail("expected #tau or #default_tau directive");
            }
            directive(program);
        }
    }

    AnnotationItem annotationItemOnly() {
        auto item = annotationItem();
        expect(Tok::End, "end of input");
        return item;
    }

    HybridBasicFormula formulaOnly() {
        auto f = formula();
        expect(Tok::End, "end of input");
        return f;
    }

    Term termOnly() {
        auto t = term();
        expect(Tok::End, "end of input");
        return t;
    }

private:
    Token const &peek(size_t off = 0) const { return toks_[std::min(pos_ + off, toks_.size() - 1)]; }
    Token const &take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool accept(Tok t) {
        if (peek().type == t) {
            ++pos_;
            return true;
        }
        return false;
    }

    Location loc(Token const &t) const { return Location{options_.file, t.line, t.column}; }

    [[noreturn]] void fail(std::string const &what) const {
        auto const &t = peek();
        std::string found = t.type == Tok::End ? "end of input" : "'" + t.text + "'";
        throw Error(ErrorCode::SyntaxError, what + ", found " + found, loc(t));
    }

    Token const &expect(Tok t, char const *what) {
        if (peek().type != t) { fail(std::string("expected ") + what); }
        return take();
    }

    // Rethrows construction errors (range, unknown names) at the given token.
    template <class F>
    auto at(Token const &t, F &&f) -> decltype(f()) {
        try {
            return f();
        }
        catch (Error const &e) {
            if (e.location()) { throw; }
            throw Error(e.code(), e.detail(), loc(t));
        }
    }

    bool isKeyword(char const *kw, size_t off = 0) const {
        return peek(off).type == Tok::Ident && peek(off).text == kw;
    }

    // {{{ statements

    void statement(SourceProgram &out) {
        Token const &first = peek();
        if (first.type == Tok::Ident && (first.text == "#tau" || first.text == "#default_tau")) {
            directive(out.program);
            return;
        }
        if (options_.directivesOnly) { fail("expected directive"); }
        Rule r = rule();
        at(first, [&] {
            checkStrategies(r);
            checkSafety(r);
        });
        out.program.rules.push_back(std::move(r));
        out.locations.push_back(loc(first));
    }

    void directive(Program &program) {
        Token const &kw = take();
        expect(Tok::LParen, "'('");
        if (kw.text == "#tau") {
            std::string pred = expect(Tok::Ident, "predicate name").text;
            expect(Tok::Comma, "','");
            Token const &name = expect(Tok::Ident, "strategy name");
            at(name, [&] { return &options_.registry->at(name.text, StrategyKind::Disjunctive); });
            program.tau.byPredicate[pred] = name.text;
        }
        else {
            Token const &name = expect(Tok::Ident, "strategy name");
            at(name, [&] { return &options_.registry->at(name.text, StrategyKind::Disjunctive); });
            program.tau.defaultStrategy = name.text;
        }
        expect(Tok::RParen, "')'");
        expect(Tok::Dot, "'.'");
    }

    Rule rule() {
        std::vector<HeadDisjunct> head;
        std::vector<BodyLiteral> pos;
        std::vector<BodyLiteral> neg;
        std::vector<Comparison> cmps;
        bool constraint = false;
        if (accept(Tok::If)) {
            constraint = true;
        }
        else {
            do {
                Token const &t = peek();
                Term tm = term();
                HeadDisjunct hd{toAtom(tm, t), Annotation::one()};
                if (accept(Tok::Colon)) { hd.annotation = annotation(); }
                head.push_back(std::move(hd));
            } while (accept(Tok::Bar));
            if (!accept(Tok::If)) {
                expect(Tok::Dot, "'.' or ':-'");
                return makeRule(std::move(head));
            }
        }
        do { bodyItem(pos, neg, cmps); } while (accept(Tok::Comma));
        expect(Tok::Dot, "'.'");
        if (constraint) {
            head.push_back({constraintAtom(), Annotation::one()});
            neg.insert(neg.begin(), BodyLiteral{HybridBasicFormula::atom(constraintAtom()), Annotation::one()});
        }
        return makeRule(std::move(head), std::move(pos), std::move(neg), std::move(cmps));
    }

    void bodyItem(std::vector<BodyLiteral> &pos, std::vector<BodyLiteral> &neg, std::vector<Comparison> &cmps) {
        bool negated = false;
        if (isKeyword("not") && peek(1).type != Tok::LParen) {
            take();
            negated = true;
        }
        if (peek().type == Tok::Ident && peek(1).type == Tok::LBrace) {
            BodyLiteral lit{aggregate(), Annotation::one()};
            if (accept(Tok::Colon)) { lit.annotation = annotation(); }
            (negated ? neg : pos).push_back(std::move(lit));
            return;
        }
        Token const &t = peek();
        Term lhs = term();
        if (auto cmp = comparatorOf(peek().type)) {
            take();
            Term rhs = term();
            cmps.push_back({std::move(lhs), negated ? negate(*cmp) : *cmp, std::move(rhs)});
            return;
        }
        HybridBasicFormula f = formulaFrom(toAtom(lhs, t));
        BodyLiteral lit{std::move(f), Annotation::one()};
        if (accept(Tok::Colon)) { lit.annotation = annotation(); }
        (negated ? neg : pos).push_back(std::move(lit));
    }

    // }}}
    // {{{ formulae, aggregates, annotations

    HybridBasicFormula formula() {
        Token const &t = peek();
        return formulaFrom(toAtom(term(), t));
    }

    HybridBasicFormula formulaFrom(Atom first) {
        HybridBasicFormula f = HybridBasicFormula::atom(std::move(first));
        while ((isKeyword("and") || isKeyword("or")) && peek(1).type == Tok::LBrack) {
            Token const &kw = take();
            Connective c = kw.text == "and" ? Connective::And : Connective::Or;
            take();
            Token const &name = expect(Tok::Ident, "strategy name");
            expect(Tok::RBrack, "']'");
            if (f.connective == Connective::None) {
                f.connective = c;
                f.strategy = name.text;
            }
            else if (f.connective != c || f.strategy != name.text) {
                throw Error(ErrorCode::SyntaxError, "a hybrid formula uses a single connective and strategy", loc(kw));
            }
            Token const &at = peek();
            Atom a = toAtom(term(), at);
            if (std::find(f.atoms.begin(), f.atoms.end(), a) != f.atoms.end()) {
                throw Error(ErrorCode::SyntaxError, "atoms of a hybrid formula must be distinct", loc(at));
            }
            f.atoms.push_back(std::move(a));
        }
        return f;
    }

    AggregateAtom aggregate() {
        Token const &name = take();
        auto fn = aggregateFunction(name.text);
        if (!fn) { throw Error(ErrorCode::UnknownAggregateFunction, "'" + name.text + "'", loc(name)); }
        AggregateAtom agg;
        agg.function = *fn;
        expect(Tok::LBrace, "'{'");
        if (peek().type != Tok::RBrace) {
            do { agg.set.elements.push_back(element()); } while (accept(Tok::Semicolon));
        }
        expect(Tok::RBrace, "'}'");
        auto cmp = comparatorOf(peek().type);
        if (!cmp) { fail("expected comparison after aggregate"); }
        take();
        agg.cmp = *cmp;
        if (accept(Tok::LBrack)) {
            agg.guardLo = term();
            expect(Tok::Comma, "','");
            agg.guardHi = term();
            expect(Tok::RBrack, "']'");
            agg.scalarGuard = false;
        }
        else {
            agg.guardLo = term();
            agg.guardHi = agg.guardLo;
            agg.scalarGuard = true;
        }
        return agg;
    }

    SetElement element() {
        SetElement e;
        e.value = term();
        e.annotation = Annotation::one();
        if (accept(Tok::Colon)) { e.annotation = annotation(); }
        if (accept(Tok::Bar)) {
            do {
                if (isKeyword("not")) { fail("set conditions are conjunctions of positive annotated formulae"); }
                AnnotatedFormula c{formula(), Annotation::one()};
                if (accept(Tok::Colon)) { c.annotation = annotation(); }
                e.condition.push_back(std::move(c));
            } while (accept(Tok::Comma));
        }
        return e;
    }

    Annotation annotation() {
        Token const open = peek();
        if (accept(Tok::LBrack)) {
            AnnotationItem lo = annotationItem();
            expect(Tok::Comma, "','");
            AnnotationItem hi = annotationItem();
            expect(Tok::RBrack, "']'");
            Annotation ann{std::move(lo), std::move(hi)};
            if (ann.lo.kind() == AnnotationItem::Kind::Constant && ann.hi.kind() == AnnotationItem::Kind::Constant) {
                at(open, [&] { return ann.evaluate(); });
            }
            return ann;
        }
        AnnotationItem item = annotationItem();
        return {item, item};
    }

    AnnotationItem annotationItem() {
        Token const &t = peek();
        switch (t.type) {
            case Tok::Number: {
                take();
                std::string text = t.text;
                if (accept(Tok::Slash)) { text += "/" + expect(Tok::Number, "denominator").text; }
                return at(t, [&] { return AnnotationItem::constant(parseRational(text)); });
            }
            case Tok::Minus: {
                take();
                Token const &num = expect(Tok::Number, "number");
                return at(t, [&] { return AnnotationItem::constant(-parseRational(num.text)); });
            }
            case Tok::Variable:
                take();
                return AnnotationItem::variable(t.text);
            case Tok::Ident: {
                take();
                expect(Tok::LParen, "'(' after annotation function name");
                std::vector<AnnotationItem> args;
                do { args.push_back(annotationItem()); } while (accept(Tok::Comma));
                expect(Tok::RParen, "')'");
                return at(t, [&] { return AnnotationItem::function(t.text, std::move(args)); });
            }
            default:
                fail("expected probability annotation item");
        }
    }

    // }}}
    // {{{ terms

    Atom toAtom(Term const &t, Token const &tok) {
        if (t.kind() == Term::Kind::Symbol) { return Atom{t.name(), {}}; }
        if (t.kind() == Term::Kind::Function) { return Atom{t.name(), t.args()}; }
        throw Error(ErrorCode::SyntaxError, "expected an atom, found '" + toString(t) + "'", loc(tok));
    }

    Term fold(Term t, Token const &tok) {
        return at(tok, [&] { return t.evaluate(); });
    }

    Term term() {
        Term lhs = product();
        while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
            Token const &op = take();
            Term rhs = product();
            lhs = fold(Term::binary(op.text[0], std::move(lhs), std::move(rhs)), op);
        }
        return lhs;
    }

    Term product() {
        Term lhs = unary();
        while (peek().type == Tok::Star || peek().type == Tok::Slash) {
            Token const &op = take();
            Term rhs = unary();
            lhs = fold(Term::binary(op.text[0], std::move(lhs), std::move(rhs)), op);
        }
        return lhs;
    }

    Term unary() {
        if (peek().type == Tok::Minus) {
            Token const &op = take();
            return fold(Term::negate(unary()), op);
        }
        return primary();
    }

    Term primary() {
        Token const &t = peek();
        switch (t.type) {
            case Tok::Number:
                take();
                return Term::number(parseRational(t.text));
            case Tok::Variable:
                take();
                return Term::variable(t.text);
            case Tok::Ident: {
                if (t.text == "#tau" || t.text == "#default_tau" || (t.text[0] == '#' && t.text != "#gamma")) {
                    fail("unexpected directive");
                }
                take();
                if (!accept(Tok::LParen)) { return Term::symbol(t.text); }
                std::vector<Term> args;
                do { args.push_back(term()); } while (accept(Tok::Comma));
                expect(Tok::RParen, "')'");
                return Term::function(t.text, std::move(args));
            }
            case Tok::LParen: {
                take();
                Term inner = term();
                expect(Tok::RParen, "')'");
                return inner;
            }
            default:
                fail("expected term");
        }
    }

    // }}}
    // {{{ checks

    void checkStrategies(Rule const &r) const {
        Program p;
        p.registry = options_.registry;
        p.rules.push_back(r);
        p.validateStrategies();
    }

    static void bindable(BodyLiteral const &lit, std::set<std::string> &out) {
        lit.formula().collectBindableVariables(out);
        if (lit.annotation.lo.kind() == AnnotationItem::Kind::Variable) { out.insert(lit.annotation.lo.name()); }
        if (lit.annotation.hi.kind() == AnnotationItem::Kind::Variable) { out.insert(lit.annotation.hi.name()); }
    }

    static void setVariables(AggregateAtom const &agg, std::set<std::string> &out) {
        for (auto const &e : agg.set.elements) { e.collectVariables(out); }
    }

    static void unsafe(std::set<std::string> const &vars, std::set<std::string> const &bound, char const *where) {
        for (auto const &v : vars) {
            if (bound.count(v) == 0) {
                throw Error(ErrorCode::UnsafeVariable, "variable " + v + " in " + where + " is not bound by a positive body literal");
            }
        }
    }

    void checkSafety(Rule const &r) const {
        std::set<std::string> bound;
        for (auto const &lit : r.positive) {
            if (!lit.isAggregate()) { bindable(lit, bound); }
        }
        // variables occurring in the rule outside each probability set
        std::vector<std::set<std::string>> setVars;
        std::vector<AggregateAtom const *> aggs;
        for (auto const *lits : {&r.positive, &r.negative}) {
            for (auto const &lit : *lits) {
                if (lit.isAggregate()) {
                    aggs.push_back(&lit.aggregate());
                    setVars.emplace_back();
                    setVariables(lit.aggregate(), setVars.back());
                }
            }
        }
        std::set<std::string> outside;
        for (auto const &h : r.head) {
            h.atom.collectVariables(outside);
            h.annotation.collectVariables(outside);
        }
        for (auto const *lits : {&r.positive, &r.negative}) {
            for (auto const &lit : *lits) {
                lit.annotation.collectVariables(outside);
                if (lit.isAggregate()) {
                    lit.aggregate().guardLo.collectVariables(outside);
                    lit.aggregate().guardHi.collectVariables(outside);
                }
                else {
                    lit.formula().collectVariables(outside);
                }
            }
        }
        for (auto const &c : r.comparisons) {
            c.lhs.collectVariables(outside);
            c.rhs.collectVariables(outside);
        }
        for (size_t i = 0; i < aggs.size(); ++i) {
            std::set<std::string> global;
            std::set<std::string> others = outside;
            for (size_t j = 0; j < aggs.size(); ++j) {
                if (j != i) { others.insert(setVars[j].begin(), setVars[j].end()); }
            }
            for (auto const &e : aggs[i]->set.elements) {
                std::set<std::string> vars;
                e.collectVariables(vars);
                std::set<std::string> local;
                for (auto const &v : vars) {
                    (others.count(v) ? global : local).insert(v);
                }
                std::set<std::string> condBound;
                for (auto const &c : e.condition) {
                    c.formula.collectBindableVariables(condBound);
                    if (c.annotation.lo.kind() == AnnotationItem::Kind::Variable) { condBound.insert(c.annotation.lo.name()); }
                    if (c.annotation.hi.kind() == AnnotationItem::Kind::Variable) { condBound.insert(c.annotation.hi.name()); }
                }
                unsafe(local, condBound, "a probability set");
            }
            outside.insert(global.begin(), global.end());
        }
        unsafe(outside, bound, "the rule");
    }

    // }}}

    std::vector<Token> toks_;
    size_t pos_ = 0;
    ParseOptions const &options_;
};

// }}}

} // namespace

SourceProgram parseProgram(std::string_view text, ParseOptions const &options) {
    Parser p(text, options);
    return p.program();
}

void applyStrategyConfig(Program &program, std::string_view text, std::string const &file) {
    ParseOptions options;
    options.file = file;
    options.registry = program.registry;
    options.directivesOnly = true;
    Parser p(text, options);
    p.directives(program);
}

AnnotationItem parseAnnotationItem(std::string_view text) {
    ParseOptions options;
    Parser p(text, options);
    return p.annotationItemOnly();
}

HybridBasicFormula parseFormula(std::string_view text) {
    ParseOptions options;
    Parser p(text, options);
    return p.formulaOnly();
}

Term parseTerm(std::string_view text) {
    ParseOptions options;
    Parser p(text, options);
    return p.termOnly();
}

} // namespace dhpp
