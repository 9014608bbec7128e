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

#include "golden.hh"

#include <dhpp/semantics.hh>

#include <doctest.h>

using namespace dhpp;
using namespace dhpp::test;

namespace {

PInterpretation interp(std::vector<std::pair<char const *, ProbInterval>> const &items) {
    PInterpretation h;
    for (auto const &[a, v] : items) { h.set(parseFormula(a), v); }
    return h;
}

} // namespace

TEST_CASE("dice answer sets") {
    auto res = enumerateAnswerSets(ground(dataFile("dice.dhpp")));
    CHECK(res.interpretations == diceAnswerSets());
    CHECK_FALSE(res.truncated);
    CHECK(checkIncomparability(res));
    REQUIRE(res.certificates.size() == 3);
    for (auto const &c : res.certificates) { CHECK(c.reductSize == 2); }
}

TEST_CASE("diet answer sets") {
    auto res = solve(dataFile("diet.dhpp"));
    REQUIRE(res.size() == 4);
    std::set<PInterpretation> found;
    for (auto const &h : res) {
        found.insert(restrict(h, {"pckg", "nutr"}));
        CHECK(expectedIntake(h, "a") >= 230);
        CHECK(expectedIntake(h, "b") >= 75);
        CHECK(expectedIntake(h, "c") >= 95);
    }
    auto golden = dietAnswerSets();
    CHECK(found == std::set<PInterpretation>(golden.begin(), golden.end()));
    CHECK(checkIncomparability(res));
}

TEST_CASE("small programs") {
    auto res = solve("a:0.5 :- not b.");
    REQUIRE(res.size() == 1);
    CHECK(res[0] == interp({{"a", pt("0.5")}}));
    CHECK(solve(dataFile("inconsistent.dhpp")).empty());
    CHECK(solve("") == std::vector<PInterpretation>{PInterpretation{}});
    CHECK(solve("a :- not b. b :- not a.").size() == 2);
    CHECK(solve("a :- not a.").empty());
    auto ind = solve("#tau(a, ind). a:0.5. a:0.4 :- b. b.");
    REQUIRE(ind.size() == 1);
    CHECK(ind[0].lookup(atom("a")) == pt("0.7"));
}

TEST_CASE("minimality") {
    auto dice = ground(dataFile("dice.dhpp"));
    auto h1 = diceAnswerSets()[0];
    CHECK(isMinimalModel(reduct(dice, h1), h1));
    CHECK(isAnswerSet(dice, dice.valuation(h1)));

    auto raised = interp({{"a(1,1)", pt("0.7")}, {"a(1,2)", pt("0.7")}});
    auto red = reduct(dice, raised);
    CHECK(satisfiesProgram(red, raised));
    auto m = checkMinimality(red, red.valuation(raised));
    CHECK_FALSE(m.minimal);
    REQUIRE(m.witness);
    CHECK(satisfiesProgram(red, *m.witness));

    auto empty = ground("");
    CHECK(isMinimalModel(empty, empty.bottom()));

    // with aggregates the lattice search is used
    auto prg = ground("a:0.5. b:0.7 | c:0.3 :- sumP{1:P | a:P} >= 1 : 0.5.");
    auto high = interp({{"a", pt("0.5")}, {"b", pt("0.7")}, {"c", pt("0.3")}});
    CHECK(satisfiesProgram(prg, high));
    CHECK_FALSE(isMinimalModel(reduct(prg, high), high));
    CHECK(solve("a:0.5. b:0.7 | c:0.3 :- sumP{1:P | a:P} >= 1 : 0.5.").size() == 2);
}

TEST_CASE("incomparability") {
    CHECK(checkIncomparability(diceAnswerSets()));
    CHECK(checkIncomparability(std::vector<PInterpretation>{interp({{"a", pt("0.5")}})}));
    CHECK_FALSE(checkIncomparability(
        std::vector<PInterpretation>{interp({{"a", pt("0.5")}}), interp({{"a", pt("0.5")}, {"b", pt("0.3")}})}));
}

TEST_CASE("limit and truncation") {
    SolverOptions options;
    options.limit = 2;
    auto res = enumerateAnswerSets(ground(dataFile("dice.dhpp")), options);
    CHECK(res.interpretations.size() == 2);
    CHECK(res.truncated);
    options.limit = 3;
    res = enumerateAnswerSets(ground(dataFile("dice.dhpp")), options);
    CHECK(res.interpretations.size() == 3);
}

TEST_CASE("seeded exploration is deterministic") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
        auto prg = ground(randomProgram(rng));
        auto base = enumerateAnswerSets(prg).interpretations;
        for (std::uint64_t seed : {1u, 42u, 1234567u}) {
            SolverOptions options;
            options.seed = seed;
            CHECK(enumerateAnswerSets(prg, options).interpretations == base);
        }
    }
}

TEST_CASE("value lattice") {
    auto prg = ground("#tau(a, ind). a:0.5. a:0.4 :- b. b.");
    auto lattice = ValueLattice::build(prg);
    auto const &a = lattice.values(*prg.find(parseFormula("a")));
    for (auto v : {ProbInterval::zero(), pt("0.5"), pt("0.4"), pt("0.7")}) {
        CHECK(std::find(a.begin(), a.end(), v) != a.end());
    }
    CHECK_THROWS_AS(ValueLattice::build(prg, 2), Error);
}

// {{{ properties

TEST_CASE("answer sets agree with exhaustive search") {
    std::mt19937_64 rng(29);
    size_t checked = 0;
    for (int i = 0; i < 150; ++i) {
        auto text = randomProgram(rng, 3, 5);
        auto prg = ground(text);
        size_t atoms = 0;
        for (auto const &info : prg.formulas()) { atoms += info.isAtom(); }
        if (atoms > 4) { continue; }
        INFO(text);
        auto res = enumerateAnswerSets(prg);
        CHECK(res.interpretations == bruteAnswerSets(prg));
        CHECK(checkIncomparability(res));
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("definite programs have the least fixpoint as unique answer set") {
    auto res = solve("a:0.5. b:0.3 :- a:0.5. c :- a, b. d:[0.2,0.6] :- b:0.3.");
    REQUIRE(res.size() == 1);
    CHECK(res[0] == interp({{"a", pt("0.5")}, {"b", pt("0.3")}, {"d", pi("0.2", "0.6")}}));
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        std::string text;
        for (int r = 0; r < 4; ++r) {
            text += std::string(1, char('a' + rng() % 4)) + ":0." + std::to_string(3 + 2 * (rng() % 3));
            if (rng() % 2) { text += std::string(" :- ") + char('a' + rng() % 4); }
            text += ".\n";
        }
        auto prg = ground(text);
        auto sets = enumerateAnswerSets(prg).interpretations;
        REQUIRE(sets.size() == 1);
        // least fixpoint by iterating immediate consequences from the bottom
        Valuation v = prg.bottom();
        for (bool changed = true; changed;) {
            changed = false;
            for (auto const &rule : prg.rules()) {
                if (satisfiesBody(prg, v, rule) && !truthLeq(rule.head[0].annotation, v[rule.head[0].atom])) {
                    v[rule.head[0].atom] = join(v[rule.head[0].atom], rule.head[0].annotation);
                    changed = true;
                }
            }
        }
        CHECK(sets[0] == prg.interpretation(v));
    }
}

// }}}
