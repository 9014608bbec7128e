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

#ifndef DHPP_TESTS_HELPERS_HH
#define DHPP_TESTS_HELPERS_HH

#include <dhpp/grounder.hh>
#include <dhpp/parser.hh>
#include <dhpp/printer.hh>
#include <dhpp/solver.hh>

#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

namespace dhpp::test {

inline Rational q(char const *text) { return parseRational(text); }
inline ProbInterval pi(char const *lo, char const *hi) { return {q(lo), q(hi)}; }
inline ProbInterval pt(char const *p) { return ProbInterval::point(q(p)); }
inline Atom atom(char const *text) { return parseFormula(text).atoms.front(); }

inline std::string dataFile(std::string const &name) {
    std::ifstream in(std::string(DHPP_DATA_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Program parse(std::string const &text) { return parseProgram(text).program; }
inline GroundProgram ground(std::string const &text) { return groundProgram(parse(text)); }

inline std::vector<PInterpretation> solve(std::string const &text, SolverOptions const &options = {}) {
    return enumerateAnswerSets(ground(text), options).interpretations;
}

// {{{ random programs

// Propositional program over atoms a..e: head width <= 2, annotations from
// {0.3, 0.5, 0.7, 1}, occasional compound formulae and P-family aggregates.
std::string randomProgram(std::mt19937_64 &rng, unsigned maxAtoms = 5, unsigned maxRules = 6, bool aggregates = true);

// Classical disjunctive program over atoms a..f, no aggregates.
std::string randomClassical(std::mt19937_64 &rng, unsigned maxAtoms = 6, unsigned maxRules = 8);

// Random valuation over the formula table with endpoints from {0, 0.3, 0.5, 0.7, 1}.
Valuation randomValuation(std::mt19937_64 &rng, GroundProgram const &prg);

// Random pair h1 <=t h2.
std::pair<Valuation, Valuation> randomChain(std::mt19937_64 &rng, GroundProgram const &prg);

// Grid of intervals with endpoints from {0, 0.3, 0.5, 0.7, 1}.
std::vector<ProbInterval> const &grid();

// Atoms mapped to [1,1]; nullopt if some formula other than the constraint atom takes another non-zero value.
std::optional<std::set<std::string>> classicalImage(PInterpretation const &h);

// }}}
// {{{ brute force over the grid

// Every atom ranges over grid(); compound formulae take the composition of their atoms.
// Exact for programs whose strategies are min/max based and whose annotations lie on the grid.
std::optional<Valuation> bruteLowerModel(GroundProgram const &prg, Valuation const &h);
std::vector<PInterpretation> bruteAnswerSets(GroundProgram const &prg);

// }}}

} // namespace dhpp::test

#endif // DHPP_TESTS_HELPERS_HH
