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

#ifndef DHPP_SEMANTICS_HH
#define DHPP_SEMANTICS_HH

#include <dhpp/aggregates.hh>
#include <dhpp/ground_program.hh>

#include <optional>
#include <string>
#include <vector>

namespace dhpp {

struct SatisfactionReport {
    // per rule of the program
    std::vector<bool> rules;
    // per FormulaId; true for compound formulae
    std::vector<bool> atoms;
    // per FormulaId; true for atoms
    std::vector<bool> formulas;
    // description of the first failure
    std::optional<std::string> witness;

    bool satisfied() const { return !witness.has_value(); }
};

// h satisfies L (positive) or not L (negative).
bool satisfiesLiteral(GroundProgram const &prg, Valuation const &h, GroundLiteral const &lit, bool positive);
bool satisfiesAggregate(GroundAggregate const &agg, ProbInterval const &annotation, Valuation const &h, bool positive);
bool satisfiesBody(GroundProgram const &prg, Valuation const &h, GroundRule const &rule);
bool satisfiesHead(Valuation const &h, GroundRule const &rule);
// body satisfied implies some head disjunct satisfied
bool satisfiesRule(GroundProgram const &prg, Valuation const &h, GroundRule const &rule);

// Rule satisfaction plus the combination conditions on atoms and on compound formulae.
SatisfactionReport checkProgram(GroundProgram const &prg, Valuation const &h);
bool satisfiesProgram(GroundProgram const &prg, Valuation const &h);
bool satisfiesProgram(GroundProgram const &prg, PInterpretation const &h);

// combined annotation of an atom: tau-fold of the satisfied supporting head annotations
std::optional<ProbInterval> supportFold(GroundProgram const &prg, Valuation const &h, FormulaId atom);
// c_rho of the component values of a compound formula
ProbInterval compose(GroundProgram const &prg, Valuation const &h, FormulaId formula);

// Rules whose whole body h satisfies, verbatim.
GroundProgram reduct(GroundProgram const &prg, Valuation const &h);
GroundProgram reduct(GroundProgram const &prg, PInterpretation const &h);

} // namespace dhpp

#endif // DHPP_SEMANTICS_HH
