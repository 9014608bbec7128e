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

#ifndef DHPP_TERM_HH
#define DHPP_TERM_HH

#include <dhpp/rational.hh>

#include <compare>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace dhpp {

class Term;
using Substitution = std::map<std::string, Term>;

// Object-level term: constants, numbers, variables, function terms and arithmetic.
class Term {
public:
    enum class Kind { Symbol, Number, Variable, Function, Binary, Negate };

    Term() = default;

    static Term symbol(std::string name);
    static Term number(Rational value);
    static Term variable(std::string name);
    static Term function(std::string name, std::vector<Term> args);
    // op is one of + - * /
    static Term binary(char op, Term lhs, Term rhs);
    static Term negate(Term arg);

    Kind kind() const noexcept { return kind_; }
    std::string const &name() const noexcept { return name_; }
    Rational const &value() const noexcept { return value_; }
    std::vector<Term> const &args() const noexcept { return args_; }
    char op() const noexcept { return op_; }

    bool isGround() const;
    bool isNumber() const { return kind_ == Kind::Number; }
    bool isArithmetic() const { return kind_ == Kind::Binary || kind_ == Kind::Negate; }
    // nesting depth of function symbols; constants have depth 0
    unsigned depth() const;
    void collectVariables(std::set<std::string> &out) const;
    // variables in positions that can be bound by matching (outside arithmetic)
    void collectBindableVariables(std::set<std::string> &out) const;

    Term substitute(Substitution const &subst) const;
    // Folds ground arithmetic into numbers. Throws EvaluationError on non-numeric operands
    // or division by zero; non-ground arithmetic is left in place.
    Term evaluate() const;

    friend std::strong_ordering operator<=>(Term const &a, Term const &b);
    friend bool operator==(Term const &a, Term const &b) { return (a <=> b) == 0; }

private:
    Kind kind_ = Kind::Symbol;
    std::string name_;
    Rational value_;
    char op_ = 0;
    std::vector<Term> args_;
};

// Matches a pattern against a ground term, extending subst. Arithmetic subterms must be
// evaluable under subst (their variables bound); otherwise the match fails.
bool match(Term const &pattern, Term const &ground, Substitution &subst);

std::string toString(Term const &term);
std::ostream &operator<<(std::ostream &out, Term const &term);

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    bool isGround() const;
    unsigned depth() const;
    void collectVariables(std::set<std::string> &out) const;
    void collectBindableVariables(std::set<std::string> &out) const;
    Atom substitute(Substitution const &subst) const;
    Atom evaluate() const;

    friend std::strong_ordering operator<=>(Atom const &a, Atom const &b);
    friend bool operator==(Atom const &a, Atom const &b) { return (a <=> b) == 0; }
};

bool match(Atom const &pattern, Atom const &ground, Substitution &subst);
// true if every arithmetic subterm of the pattern only uses variables in bound
bool matchable(Atom const &pattern, std::set<std::string> const &bound);

std::string toString(Atom const &atom);
std::ostream &operator<<(std::ostream &out, Atom const &atom);

} // namespace dhpp

#endif // DHPP_TERM_HH
