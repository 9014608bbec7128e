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

#ifndef DHPP_CLASSICAL_HH
#define DHPP_CLASSICAL_HH

#include <dhpp/program.hh>

#include <set>
#include <string>
#include <vector>

namespace dhpp {

// Ground classical disjunctive programs with optional aggregates, e.g.
//   a | b :- c, not d, sum{2 : a, b; 3 : c} >= 3.
//   :- not a.

enum class ClassicalFunction { Sum, Count, Min, Max, Times };

char const *toString(ClassicalFunction fn);

struct ClassicalLiteral {
    std::string atom;
    bool negated = false;

    friend bool operator==(ClassicalLiteral const &, ClassicalLiteral const &) = default;
    friend auto operator<=>(ClassicalLiteral const &, ClassicalLiteral const &) = default;
};

struct ClassicalElement {
    Rational weight;
    std::vector<ClassicalLiteral> condition;

    friend bool operator==(ClassicalElement const &, ClassicalElement const &) = default;
};

struct ClassicalAggregate {
    ClassicalFunction function = ClassicalFunction::Sum;
    std::vector<ClassicalElement> elements;
    Comparator cmp = Comparator::Ge;
    Rational bound;
    bool negated = false;

    friend bool operator==(ClassicalAggregate const &, ClassicalAggregate const &) = default;
};

struct ClassicalRule {
    // empty for constraints
    std::vector<std::string> head;
    std::vector<ClassicalLiteral> body;
    std::vector<ClassicalAggregate> aggregates;

    friend bool operator==(ClassicalRule const &, ClassicalRule const &) = default;
};

struct ClassicalProgram {
    std::vector<ClassicalRule> rules;

    std::set<std::string> atoms() const;
    bool hasAggregates() const;
    friend bool operator==(ClassicalProgram const &, ClassicalProgram const &) = default;
};

// Throws SyntaxError with location.
ClassicalProgram parseClassical(std::string_view text, std::string const &file = "<string>");
std::string toString(ClassicalProgram const &program);

// Every literal annotated [1,1]; aggregates become P-family aggregates with [1,1]
// conditions. Throws UnsupportedConstruct for negative aggregate conditions.
Program translateDlp(ClassicalProgram const &program);

// Brute-force answer sets: Gelfond-Lifschitz reduct for aggregate-free programs, the
// reduct keeping rules with true bodies otherwise, each with subset-minimality.
// Throws TooLarge beyond maxAtoms atoms.
std::set<std::set<std::string>> classicalOracle(ClassicalProgram const &program, size_t maxAtoms = 12);

} // namespace dhpp

#endif // DHPP_CLASSICAL_HH
