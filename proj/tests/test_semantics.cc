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

#include <dhpp/semantics.hh>

#include <doctest.h>

#include <algorithm>

using namespace dhpp;
using namespace dhpp::test;

namespace {

HybridBasicFormula f(char const *text) { return parseFormula(text); }

PInterpretation interp(std::vector<std::pair<char const *, ProbInterval>> const &items) {
    PInterpretation h;
    for (auto const &[a, v] : items) { h.set(f(a), v); }
    return h;
}

} // namespace

TEST_CASE("dice p-models") {
    auto prg = ground(dataFile("dice.dhpp"));
    CHECK(satisfiesProgram(prg, interp({{"a(1,1)", pt("0.5")}, {"a(1,2)", pt("0.7")}})));
    auto bad = interp({{"a(1,2)", pt("0.7")}, {"a(2,1)", pt("0.5")}});
    CHECK_FALSE(satisfiesProgram(prg, bad));
    auto report = checkProgram(prg, prg.valuation(bad));
    REQUIRE(report.witness);
    CHECK(std::count(report.rules.begin(), report.rules.end(), false) >= 1);
    CHECK(satisfiesProgram(ground(""), PInterpretation{}));
}

TEST_CASE("literal satisfaction") {
    auto prg = ground("a(1,2):0.7.");
    auto id = *prg.find(f("a(1,2)"));
    GroundLiteral lit{GroundLiteral::Kind::Formula, id, pt("0.7")};
    Valuation h = prg.bottom();
    h[id] = pt("0.7");
    CHECK(satisfiesLiteral(prg, h, lit, true));
    CHECK_FALSE(satisfiesLiteral(prg, h, lit, false));
    h[id] = pt("0.6");
    CHECK_FALSE(satisfiesLiteral(prg, h, lit, true));
    CHECK(satisfiesLiteral(prg, h, lit, false));
}

TEST_CASE("undefined aggregates satisfy negation as failure") {
    auto prg = ground("g :- not minE{X:P | q(X):P} < 5.");
    REQUIRE(prg.aggregates().size() == 1);
    auto const &agg = prg.aggregate(0);
    CHECK(satisfiesAggregate(agg, ProbInterval::one(), prg.bottom(), false));
    CHECK_FALSE(satisfiesAggregate(agg, ProbInterval::one(), prg.bottom(), true));
    CHECK(solve("g :- not minE{X:P | q(X):P} < 5.").size() == 1);
}

TEST_CASE("rule satisfaction") {
    auto prg = ground("a:0.5 | b:0.5.");
    auto const &r = prg.rules()[0];
    Valuation h = prg.bottom();
    CHECK_FALSE(satisfiesRule(prg, h, r));
    h[*prg.find(f("a"))] = pt("0.5");
    CHECK(satisfiesRule(prg, h, r));
    CHECK(satisfiesHead(h, r));

    auto dice = ground(dataFile("dice.dhpp"));
    auto h1 = dice.valuation(interp({{"a(1,1)", pt("0.5")}, {"a(1,2)", pt("0.7")}}));
    for (auto const &rule : dice.rules()) { CHECK(satisfiesRule(dice, h1, rule)); }
    CHECK_FALSE(satisfiesBody(dice, h1, dice.rules()[2]));
}

TEST_CASE("head support fold") {
    auto prg = ground("#tau(a, ind). a:0.5. a:0.4 :- b. b.");
    auto h = prg.valuation(interp({{"a", pt("0.7")}, {"b", ProbInterval::one()}}));
    CHECK(*supportFold(prg, h, *prg.find(f("a"))) == pt("0.7"));
    CHECK(satisfiesProgram(prg, h));
    h[*prg.find(f("a"))] = pt("0.6");
    CHECK_FALSE(satisfiesProgram(prg, h));
    auto unsupported = ground("a :- not b.");
    CHECK_FALSE(supportFold(unsupported, unsupported.bottom(), *unsupported.find(f("a"))).has_value());
}

TEST_CASE("compound composition") {
    auto prg = ground("a:0.5. b:0.4. c :- a and[inc] b : 0.2.");
    auto ab = *prg.find(f("a and[inc] b"));
    auto h = prg.valuation(interp({{"a", pt("0.5")}, {"b", pt("0.4")}, {"c", ProbInterval::one()}}));
    CHECK(compose(prg, h, ab) == pt("0.2"));
    CHECK_FALSE(satisfiesProgram(prg, h));
    h[ab] = pt("0.2");
    CHECK(satisfiesProgram(prg, h));
    auto sets = solve("a:0.5. b:0.4. c :- a and[inc] b : 0.2.");
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].lookup(atom("c")) == ProbInterval::one());
    CHECK(sets[0].lookup(f("a and[inc] b")) == pt("0.2"));
}

TEST_CASE("reduct") {
    auto facts = ground("a:0.5. b:0.5 | c:0.3.");
    CHECK(reduct(facts, facts.bottom()).rules() == facts.rules());

    auto dice = ground(dataFile("dice.dhpp"));
    auto h1 = interp({{"a(1,1)", pt("0.5")}, {"a(1,2)", pt("0.7")}});
    auto r = reduct(dice, h1);
    REQUIRE(r.size() == 2);
    CHECK(r.rules()[0] == dice.rules()[0]);
    CHECK(r.rules()[1] == dice.rules()[1]);

    auto withGamma = dice.valuation(h1);
    withGamma[*dice.find(HybridBasicFormula::atom(constraintAtom()))] = ProbInterval::one();
    CHECK(reduct(dice, withGamma).size() == 2);
}

// {{{ properties

TEST_CASE("formula literals are monotone, negated ones antimonotone") {
    std::mt19937_64 rng(13);
    auto const &values = grid();
    size_t samples = 0;
    while (samples < 1000) {
        auto prg = ground(randomProgram(rng));
        if (prg.formulas().empty()) { continue; }
        auto [lo, hi] = randomChain(rng, prg);
        GroundLiteral lit{GroundLiteral::Kind::Formula, FormulaId(rng() % prg.formulas().size()),
                          values[rng() % values.size()]};
        if (satisfiesLiteral(prg, lo, lit, true)) { CHECK(satisfiesLiteral(prg, hi, lit, true)); }
        if (satisfiesLiteral(prg, hi, lit, false)) { CHECK(satisfiesLiteral(prg, lo, lit, false)); }
        ++samples;
    }
}

TEST_CASE("reduct is a sub-program and idempotent") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        auto prg = ground(randomProgram(rng));
        auto h = randomValuation(rng, prg);
        auto r = reduct(prg, h);
        for (auto const &rule : r.rules()) {
            CHECK(std::find(prg.rules().begin(), prg.rules().end(), rule) != prg.rules().end());
        }
        CHECK(reduct(r, h).rules() == r.rules());
        if (satisfiesProgram(prg, h)) { CHECK(satisfiesProgram(r, h)); }
    }
}

TEST_CASE("satisfaction report decomposes") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 200; ++i) {
        auto prg = ground(randomProgram(rng));
        auto h = randomValuation(rng, prg);
        auto report = checkProgram(prg, h);
        bool rules = true;
        for (size_t k = 0; k < prg.size(); ++k) {
            CHECK(report.rules[k] == satisfiesRule(prg, h, prg.rules()[k]));
            rules = rules && report.rules[k];
        }
        bool atoms = true;
        bool formulas = true;
        for (FormulaId id = 0; id < prg.formulas().size(); ++id) {
            if (prg.formula(id).isAtom()) {
                auto fold = supportFold(prg, h, id);
                CHECK(report.atoms[id] == (!fold || truthLeq(*fold, h[id])));
                CHECK(report.formulas[id]);
            }
            else {
                CHECK(report.atoms[id]);
                CHECK(report.formulas[id] == truthLeq(compose(prg, h, id), h[id]));
            }
            atoms = atoms && report.atoms[id];
            formulas = formulas && report.formulas[id];
        }
        CHECK(report.satisfied() == (rules && atoms && formulas));
        CHECK(report.satisfied() == satisfiesProgram(prg, h));
    }
}

// }}}
