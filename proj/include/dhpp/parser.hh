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

#ifndef DHPP_PARSER_HH
#define DHPP_PARSER_HH

#include <dhpp/program.hh>

#include <string>
#include <string_view>
#include <vector>

namespace dhpp {

// Parsed program plus the source location of every rule.
struct SourceProgram {
    Program program;
    std::vector<Location> locations;
};

struct ParseOptions {
    std::string file;
    std::shared_ptr<StrategyRegistry const> registry = std::make_shared<StrategyRegistry const>(StrategyRegistry::withBuiltins());
    // directives only (strategy config files): rules are rejected
    bool directivesOnly = false;
};

// Surface syntax:
//   a(1,1):0.5 | a(2,1):0.5.                       disjunctive fact
//   nutr(F,V,U*N,S):P :- units(F,V,U,S):P, pckg(F,N,S).
//   g :- not g, valE{X:P | nutr(F,a,X,S):P} < 230.
//   :- body.                                       constraint, sugar for #gamma :- not #gamma, body.
//   q :- a and[inc] b : [0.2,0.4], X < 3, ...      hybrid formulae and comparison built-ins
//   #tau(pred, rho).  #default_tau(rho).           tau directives
//   % comment
// Throws Error (SyntaxError, ConstantOutOfRange, UnknownAggregateFunction, UnknownAnnotationFunction,
// UnknownStrategy, StrategyKindMismatch, UnsafeVariable) with a location.
SourceProgram parseProgram(std::string_view text, ParseOptions const &options = {});

// Reads tau directives into an existing program (strategy config file).
void applyStrategyConfig(Program &program, std::string_view text, std::string const &file = {});

// "0.7", "P", "pmul(P1,P2)"
AnnotationItem parseAnnotationItem(std::string_view text);
// "a(1,2)", "a and[inc] b"
HybridBasicFormula parseFormula(std::string_view text);
Term parseTerm(std::string_view text);

} // namespace dhpp

#endif // DHPP_PARSER_HH
