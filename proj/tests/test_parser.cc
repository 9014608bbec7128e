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

#include "helpers.hh"

#include <doctest.h>

using namespace dhpp;
using namespace dhpp::test;

namespace {

ErrorCode errorOf(std::string const &text) {
    try {
        parseProgram(text);
    }
    catch (Error const &e) {
        return e.code();
    }
    FAIL("no error for: " << text);
    return ErrorCode::IoError;
}

} // namespace

TEST_CASE("disjunctive fact") {
    auto prg = parse("a(1,1):0.5 | a(2,1):0.5.");
    REQUIRE(prg.rules.size() == 1);
    auto const &r = prg.rules[0];
    REQUIRE(r.head.size() == 2);
    CHECK(r.head[0].atom == atom("a(1,1)"));
    CHECK(r.head[1].atom == atom("a(2,1)"));
    CHECK(r.head[0].annotation.evaluate() == pt("0.5"));
    CHECK(r.positive.empty());
    CHECK(r.negative.empty());
}

TEST_CASE("constraint with expected value aggregate") {
    auto prg = parse("g :- not g, valE{ X:P | nutr(F,a,X,S):P } < 230.");
    auto const &r = prg.rules[0];
    REQUIRE(r.negative.size() == 1);
    CHECK(r.negative[0].formula() == HybridBasicFormula::atom(atom("g")));
    CHECK(r.negative[0].annotation == Annotation::one());
    REQUIRE(r.positive.size() == 1);
    REQUIRE(r.positive[0].isAggregate());
    auto const &agg = r.positive[0].aggregate();
    CHECK(agg.function == AggregateFunction::ValE);
    CHECK(agg.cmp == Comparator::Lt);
    CHECK(agg.guardLo == Term::number(230));
    CHECK(agg.guardHi == Term::number(230));
    CHECK(r.positive[0].annotation == Annotation::one());
    REQUIRE(agg.set.elements.size() == 1);
    CHECK(agg.set.elements[0].condition.size() == 1);
}

TEST_CASE("headless constraints desugar to the reserved atom") {
    auto prg = parse(":- not a.");
    auto const &r = prg.rules[0];
    REQUIRE(r.head.size() == 1);
    CHECK(r.head[0].atom == constraintAtom());
    REQUIRE(r.negative.size() == 2);
}

TEST_CASE("interval guards, formulae, comparisons and directives") {
    auto prg = parse("#tau(p, ind). #default_tau(pcd).\n"
                     "q(X) :- p(X) and[inc] r(X) : [0.2,0.4], minP{Y:[P,P] | s(Y):P} >= [0.45,0.6], X < 3, X != 1.\n"
                     "p(1). p(2). r(1). r(2). s(1):0.5.");
    CHECK(prg.tau.strategyFor("p") == "ind");
    CHECK(prg.tau.strategyFor("q") == "pcd");
    auto const &r = prg.rules[0];
    CHECK(r.positive[0].formula().connective == Connective::And);
    CHECK(r.positive[0].formula().strategy == "inc");
    CHECK(r.positive[1].aggregate().scalarGuard == false);
    CHECK(r.comparisons.size() == 2);
}

TEST_CASE("syntax errors carry locations") {
    try {
        parseProgram("a.\np(X) :-", {"prog.dhpp"});
        CHECK(false);
    }
    catch (Error const &e) {
        CHECK(e.code() == ErrorCode::SyntaxError);
        REQUIRE(e.location());
        CHECK(e.location()->file == "prog.dhpp");
        CHECK(e.location()->line == 2);
        CHECK(std::string(e.what()).find("prog.dhpp:2:") == 0);
    }
}

TEST_CASE("error codes") {
    CHECK(errorOf("p(X) :-") == ErrorCode::SyntaxError);
    CHECK(errorOf("a:1.5.") == ErrorCode::ConstantOutOfRange);
    CHECK(errorOf("a :- fooE{X | b(X)} > 1.") == ErrorCode::UnknownAggregateFunction);
    CHECK(errorOf("a :- b and[xyz] c.") == ErrorCode::UnknownStrategy);
    CHECK(errorOf("#tau(a, inc).") == ErrorCode::StrategyKindMismatch);
    CHECK(errorOf("a :- b or[inc] c.") == ErrorCode::StrategyKindMismatch);
    CHECK(errorOf("p(X) :- not q(X).") == ErrorCode::UnsafeVariable);
    CHECK(errorOf("a:pfoo(0.5).") == ErrorCode::UnknownAnnotationFunction);
    CHECK(errorOf("a:[0.7,0.2].") == ErrorCode::InvalidInterval);
}

TEST_CASE("annotation variables need binding by a positive literal") {
    CHECK(errorOf("a:P :- not b:P.") == ErrorCode::UnsafeVariable);
    CHECK_NOTHROW(parse("a:P :- b:P."));
    CHECK_NOTHROW(parse("a:pmul(P,0.5) :- b:P."));
}

TEST_CASE("local set variables need binding by the set condition") {
    CHECK_NOTHROW(parse("g :- sumP{X:P | a(X,Y):P} >= 3 : 0.3."));
    CHECK(errorOf("g :- sumP{X:P | a(Y):P} >= 3.") == ErrorCode::UnsafeVariable);
}

TEST_CASE("print then parse is a fixpoint") {
    std::vector<std::string> programs{
        dataFile("dice.dhpp"),
        dataFile("diet.dhpp"),
        dataFile("inconsistent.dhpp"),
        "#tau(p, ind). #default_tau(ind).\nq(X):[0.2,P] :- p(X):P, r(X) or[ind] s(X) : 0.3, not t(X) : [0.1,0.9], X >= 2, X*2 != 6.\n"
        "p(1):0.4. r(2). s(-1).\n"
        "z :- countE{f(X):P | p(X):P; 3 | r(3)} = [1,2], not maxP{-2:0.5} <= 1 : 0.5.\n"
        "w:pmul(P,pcomp(0.25)) :- p(Y):P, Y < 1/2+1.\n",
    };
    for (auto const &text : programs) {
        auto first = parse(text);
        auto printed = toString(first);
        auto second = parse(printed);
        CHECK(toString(second) == printed);
        CHECK(second.rules == first.rules);
        CHECK(second.tau == first.tau);
    }
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        auto first = parse(randomProgram(rng));
        auto second = parse(toString(first));
        CHECK(second.rules == first.rules);
    }
}

TEST_CASE("annotations are always intervals after parsing") {
    auto prg = parse("a:0.3. b :- a:0.3. c:[0.2,0.5] :- not b.");
    CHECK(prg.rules[0].head[0].annotation == Annotation::constant(pt("0.3")));
    CHECK(prg.rules[1].head[0].annotation == Annotation::one());
    CHECK(prg.rules[1].positive[0].annotation == Annotation::constant(pt("0.3")));
    CHECK(prg.rules[2].negative[0].annotation == Annotation::one());
    CHECK(prg.rules[2].head[0].annotation == Annotation::constant(pi("0.2", "0.5")));
}

TEST_CASE("strategy config files") {
    auto prg = parse("a.");
    applyStrategyConfig(prg, "#tau(a, ind).\n#default_tau(pcd).\n", "s.cfg");
    CHECK(prg.tau.strategyFor("a") == "ind");
    CHECK_THROWS_AS(applyStrategyConfig(prg, "a.\n", "s.cfg"), Error);
}
