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

#include <dhpp/term.hh>
#include <dhpp/error.hh>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace dhpp {

Term Term::symbol(std::string name) {
    Term t;
    t.kind_ = Kind::Symbol;
    t.name_ = std::move(name);
    return t;
}

Term Term::number(Rational value) {
    Term t;
    t.kind_ = Kind::Number;
    t.value_ = std::move(value);
    t.value_.canonicalize();
    return t;
}

Term Term::variable(std::string name) {
    Term t;
    t.kind_ = Kind::Variable;
    t.name_ = std::move(name);
    return t;
}

Term Term::function(std::string name, std::vector<Term> args) {
    Term t;
    t.kind_ = Kind::Function;
    t.name_ = std::move(name);
    t.args_ = std::move(args);
    return t;
}

Term Term::binary(char op, Term lhs, Term rhs) {
    Term t;
    t.kind_ = Kind::Binary;
    t.op_ = op;
    t.args_.push_back(std::move(lhs));
    t.args_.push_back(std::move(rhs));
    return t;
}

Term Term::negate(Term arg) {
    Term t;
    t.kind_ = Kind::Negate;
    t.args_.push_back(std::move(arg));
    return t;
}

bool Term::isGround() const {
    if (kind_ == Kind::Variable) { return false; }
    return std::all_of(args_.begin(), args_.end(), [](Term const &t) { return t.isGround(); });
}

unsigned Term::depth() const {
    unsigned d = 0;
    for (auto const &arg : args_) { d = std::max(d, arg.depth()); }
    return kind_ == Kind::Function ? d + 1 : d;
}

void Term::collectVariables(std::set<std::string> &out) const {
    if (kind_ == Kind::Variable) { out.insert(name_); }
    for (auto const &arg : args_) { arg.collectVariables(out); }
}

void Term::collectBindableVariables(std::set<std::string> &out) const {
    if (kind_ == Kind::Variable) { out.insert(name_); }
    if (kind_ == Kind::Function) {
        for (auto const &arg : args_) { arg.collectBindableVariables(out); }
    }
}

Term Term::substitute(Substitution const &subst) const {
    if (kind_ == Kind::Variable) {
        auto it = subst.find(name_);
        return it != subst.end() ? it->second : *this;
    }
    if (args_.empty()) { return *this; }
    Term t = *this;
    for (auto &arg : t.args_) { arg = arg.substitute(subst); }
    return t;
}

Term Term::evaluate() const {
    switch (kind_) {
        case Kind::Symbol:
        case Kind::Number:
        case Kind::Variable:
            return *this;
        case Kind::Function: {
            Term t = *this;
            for (auto &arg : t.args_) { arg = arg.evaluate(); }
            return t;
        }
        case Kind::Negate: {
            Term arg = args_[0].evaluate();
            if (!arg.isGround()) { return negate(std::move(arg)); }
            if (!arg.isNumber()) { throw Error(ErrorCode::EvaluationError, "cannot negate non-numeric term " + toString(arg)); }
            return number(-arg.value());
        }
        case Kind::Binary: {
            Term lhs = args_[0].evaluate();
            Term rhs = args_[1].evaluate();
            if (!lhs.isGround() || !rhs.isGround()) { return binary(op_, std::move(lhs), std::move(rhs)); }
            if (!lhs.isNumber() || !rhs.isNumber()) {
                throw Error(ErrorCode::EvaluationError, "arithmetic on non-numeric terms in " + toString(binary(op_, lhs, rhs)));
            }
            Rational const &a = lhs.value();
            Rational const &b = rhs.value();
            switch (op_) {
                case '+': return number(a + b);
                case '-': return number(a - b);
                case '*': return number(a * b);
                case '/':
                    if (b == 0) { throw Error(ErrorCode::EvaluationError, "division by zero"); }
                    return number(a / b);
            }
            throw Error(ErrorCode::EvaluationError, std::string("unknown operator ") + op_);
        }
    }
    return *this;
}

std::strong_ordering operator<=>(Term const &a, Term const &b) {
    if (a.kind_ != b.kind_) { return a.kind_ <=> b.kind_; }
    switch (a.kind_) {
        case Term::Kind::Number:
            return compareRational(a.value_, b.value_);
        case Term::Kind::Symbol:
        case Term::Kind::Variable:
            return a.name_ <=> b.name_;
        default:
            break;
    }
    if (auto c = a.name_ <=> b.name_; c != 0) { return c; }
    if (auto c = a.op_ <=> b.op_; c != 0) { return c; }
    return std::lexicographical_compare_three_way(a.args_.begin(), a.args_.end(), b.args_.begin(), b.args_.end());
}

bool match(Term const &pattern, Term const &ground, Substitution &subst) {
    switch (pattern.kind()) {
        case Term::Kind::Variable: {
            auto [it, inserted] = subst.emplace(pattern.name(), ground);
            return inserted || it->second == ground;
        }
        case Term::Kind::Symbol:
        case Term::Kind::Number:
            return pattern == ground;
        case Term::Kind::Function: {
            if (ground.kind() != Term::Kind::Function || ground.name() != pattern.name() || ground.args().size() != pattern.args().size()) {
                return false;
            }
            for (size_t i = 0; i < pattern.args().size(); ++i) {
                if (!match(pattern.args()[i], ground.args()[i], subst)) { return false; }
            }
            return true;
        }
        case Term::Kind::Binary:
        case Term::Kind::Negate: {
            Term value = pattern.substitute(subst);
            if (!value.isGround()) { return false; }
            return value.evaluate() == ground;
        }
    }
    return false;
}

namespace {

int precedence(Term const &t) {
    if (t.kind() == Term::Kind::Binary) { return t.op() == '+' || t.op() == '-' ? 1 : 2; }
    return 3;
}

void print(std::ostream &out, Term const &t) {
    switch (t.kind()) {
        case Term::Kind::Symbol:
        case Term::Kind::Variable:
            out << t.name();
            break;
        case Term::Kind::Number:
            out << toDecimal(t.value());
            break;
        case Term::Kind::Function: {
            out << t.name() << "(";
            for (size_t i = 0; i < t.args().size(); ++i) {
                if (i > 0) { out << ","; }
                print(out, t.args()[i]);
            }
            out << ")";
            break;
        }
        case Term::Kind::Negate:
            out << "-";
            if (precedence(t.args()[0]) < 3 || t.args()[0].isNumber()) {
                out << "(";
                print(out, t.args()[0]);
                out << ")";
            }
            else {
                print(out, t.args()[0]);
            }
            break;
        case Term::Kind::Binary: {
            // left-associative: parenthesize a left child of lower, a right child of lower-or-equal precedence
            int p = precedence(t);
            bool lp = precedence(t.args()[0]) < p;
            bool rp = precedence(t.args()[1]) <= p;
            if (lp) { out << "("; }
            print(out, t.args()[0]);
            if (lp) { out << ")"; }
            out << t.op();
            if (rp) { out << "("; }
            print(out, t.args()[1]);
            if (rp) { out << ")"; }
            break;
        }
    }
}

} // namespace

std::string toString(Term const &term) {
    std::ostringstream out;
    print(out, term);
    return out.str();
}

std::ostream &operator<<(std::ostream &out, Term const &term) {
    print(out, term);
    return out;
}

bool Atom::isGround() const {
    return std::all_of(args.begin(), args.end(), [](Term const &t) { return t.isGround(); });
}

unsigned Atom::depth() const {
    unsigned d = 0;
    for (auto const &arg : args) { d = std::max(d, arg.depth()); }
    return d;
}

void Atom::collectVariables(std::set<std::string> &out) const {
    for (auto const &arg : args) { arg.collectVariables(out); }
}

void Atom::collectBindableVariables(std::set<std::string> &out) const {
    for (auto const &arg : args) { arg.collectBindableVariables(out); }
}

Atom Atom::substitute(Substitution const &subst) const {
    Atom a{predicate, {}};
    a.args.reserve(args.size());
    for (auto const &arg : args) { a.args.push_back(arg.substitute(subst)); }
    return a;
}

Atom Atom::evaluate() const {
    Atom a{predicate, {}};
    a.args.reserve(args.size());
    for (auto const &arg : args) { a.args.push_back(arg.evaluate()); }
    return a;
}

std::strong_ordering operator<=>(Atom const &a, Atom const &b) {
    if (auto c = a.predicate <=> b.predicate; c != 0) { return c; }
    if (auto c = a.args.size() <=> b.args.size(); c != 0) { return c; }
    return std::lexicographical_compare_three_way(a.args.begin(), a.args.end(), b.args.begin(), b.args.end());
}

bool match(Atom const &pattern, Atom const &ground, Substitution &subst) {
    if (pattern.predicate != ground.predicate || pattern.args.size() != ground.args.size()) { return false; }
    for (size_t i = 0; i < pattern.args.size(); ++i) {
        if (!match(pattern.args[i], ground.args[i], subst)) { return false; }
    }
    return true;
}

namespace {

bool matchable(Term const &t, std::set<std::string> const &bound) {
    if (t.isArithmetic()) {
        std::set<std::string> vars;
        t.collectVariables(vars);
        return std::includes(bound.begin(), bound.end(), vars.begin(), vars.end());
    }
    return std::all_of(t.args().begin(), t.args().end(), [&](Term const &arg) { return matchable(arg, bound); });
}

} // namespace

bool matchable(Atom const &pattern, std::set<std::string> const &bound) {
    return std::all_of(pattern.args.begin(), pattern.args.end(), [&](Term const &arg) { return matchable(arg, bound); });
}

std::string toString(Atom const &atom) {
    std::ostringstream out;
    out << atom;
    return out.str();
}

std::ostream &operator<<(std::ostream &out, Atom const &atom) {
    out << atom.predicate;
    if (!atom.args.empty()) {
        out << "(";
        for (size_t i = 0; i < atom.args.size(); ++i) {
            if (i > 0) { out << ","; }
            out << atom.args[i];
        }
        out << ")";
    }
    return out;
}

} // namespace dhpp
