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

#include <dhpp/aggregates.hh>
#include <dhpp/classical.hh>
#include <dhpp/semantics.hh>

#include <chrono>
#include <functional>
#include <iostream>

using namespace dhpp;
using namespace dhpp::test;

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

int failures = 0;

void report(int id, std::string const &name, std::function<std::string(bool &)> const &check) {
    bool ok = true;
    std::string detail;
    try {
        detail = check(ok);
    }
    catch (std::exception const &e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    if (!ok) { ++failures; }
    std::cout << (ok ? "PASS" : "FAIL") << " " << id << " " << name << (detail.empty() ? "" : ": " + detail) << std::endl;
}

std::string pairText(GroundProgram const &prg, GroundPair const &p) {
    std::string res = toString(p.value) + ":" + toString(p.probability);
    for (auto const &c : p.condition) {
        res += "|" + toString(prg.formula(c.formula).formula) + ":" + toString(c.annotation);
    }
    return res;
}

} // namespace

int main() {
    report(1, "dice program has exactly the three listed answer sets", [](bool &ok) {
        auto start = Clock::now();
        auto res = solve(dataFile("dice.dhpp"));
        double t = seconds(start);
        ok = res == diceAnswerSets() && t < 1.0;
        return std::to_string(res.size()) + " answer sets in " + std::to_string(t) + " s";
    });

    report(2, "sum_P over the dice set is (3, [0.35,0.35]) and satisfies >= 3 : 0.3", [](bool &ok) {
        auto prg = ground(dataFile("dice.dhpp"));
        Valuation h = prg.bottom();
        h[*prg.find(parseFormula("a(1,2)"))] = pt("0.7");
        h[*prg.find(parseFormula("a(2,1)"))] = pt("0.5");
        auto const &agg = prg.aggregate(0);
        auto value = evalAggregate(agg.function, buildSh(agg, h));
        ok = value == AggregateResult(PValue{3, pt("0.35")}) && satisfiesAggregate(agg, pt("0.3"), h, true);
        return "sum_P = " + toString(value);
    });

    report(3, "diet program has exactly the four listed answer sets meeting the vitamin requirements", [](bool &ok) {
        auto start = Clock::now();
        auto res = solve(dataFile("diet.dhpp"));
        double t = seconds(start);
        std::set<PInterpretation> found;
        std::string intakes;
        for (auto const &h : res) {
            found.insert(restrict(h, {"pckg", "nutr"}));
            auto a = expectedIntake(h, "a");
            auto b = expectedIntake(h, "b");
            auto c = expectedIntake(h, "c");
            ok = ok && a >= 230 && b >= 75 && c >= 95;
            intakes += " (" + toDecimal(a) + "," + toDecimal(b) + "," + toDecimal(c) + ")";
        }
        auto golden = dietAnswerSets();
        ok = ok && res.size() == 4 && found == std::set<PInterpretation>(golden.begin(), golden.end()) && t < 60.0;
        return std::to_string(res.size()) + " answer sets in " + std::to_string(t) + " s, expected a/b/c intake" + intakes;
    });

    report(4, "ground vitamin-a constraint contains the 12 listed pairs", [](bool &ok) {
        auto prg = ground(dataFile("diet.dhpp"));
        std::set<std::string> expected;
        struct Row { char const *food; int value; char const *scenario; char const *p; };
        Row const rows[] = {{"beef", 60, "s1", "0.7"}, {"beef", 120, "s1", "0.7"}, {"beef", 50, "s2", "0.3"},
                            {"beef", 100, "s2", "0.3"}, {"fish", 8, "s1", "0.8"},  {"fish", 16, "s1", "0.8"},
                            {"fish", 11, "s2", "0.2"},  {"fish", 22, "s2", "0.2"},  {"turk", 60, "s1", "0.8"},
                            {"turk", 120, "s1", "0.8"}, {"turk", 55, "s2", "0.2"},  {"turk", 110, "s2", "0.2"}};
        for (auto const &r : rows) {
            auto p = toString(pt(r.p));
            expected.insert(std::to_string(r.value) + ":" + p + "|nutr(" + r.food + ",a," + std::to_string(r.value) +
                            "," + r.scenario + "):" + p);
        }
        for (auto const &agg : prg.aggregates()) {
            if (!(agg.guard == ValueInterval::point(230))) { continue; }
            std::set<std::string> pairs;
            for (auto const &p : agg.set) { pairs.insert(pairText(prg, p)); }
            size_t hits = 0;
            for (auto const &e : expected) { hits += pairs.count(e); }
            ok = hits == 12 && agg.function == AggregateFunction::ValE && agg.cmp == Comparator::Lt;
            return std::to_string(hits) + "/12 listed pairs among " + std::to_string(pairs.size()) + " ground pairs";
        }
        ok = false;
        return std::string("vitamin-a constraint not found");
    });

    report(5, "empty multiset conventions", [](bool &ok) {
        SampleMultiset e;
        using AF = AggregateFunction;
        int passed = 0;
        auto expect = [&](bool b) { passed += b; };
        expect(evalAggregate(AF::SumE, e) == AggregateResult(EValue{ValueInterval::point(0)}));
        expect(evalAggregate(AF::TimesE, e) == AggregateResult(EValue{ValueInterval::point(1)}));
        expect(evalAggregate(AF::ValE, e) == AggregateResult(EValue{ValueInterval::point(0)}));
        expect(evalAggregate(AF::CountE, e) == AggregateResult(EValue{ValueInterval::point(0)}));
        expect(evalAggregate(AF::SumP, e) == AggregateResult(PValue{0, ProbInterval::one()}));
        expect(evalAggregate(AF::TimesP, e) == AggregateResult(PValue{1, ProbInterval::one()}));
        expect(evalAggregate(AF::CountP, e) == AggregateResult(PValue{0, ProbInterval::one()}));
        expect(isBottom(evalAggregate(AF::MinE, e)) && isBottom(evalAggregate(AF::MaxE, e)) &&
               isBottom(evalAggregate(AF::MinP, e)) && isBottom(evalAggregate(AF::MaxP, e)));
        ok = passed == 8;
        return std::to_string(passed) + "/8 assertions";
    });

    report(6, "answer sets of 100 random programs are minimal p-models of their reducts and incomparable", [](bool &ok) {
        std::mt19937_64 rng(2026);
        size_t programs = 0, sets = 0, bad = 0;
        auto start = Clock::now();
        while (programs < 100) {
            auto prg = ground(randomProgram(rng, 5, 6));
            auto res = enumerateAnswerSets(prg);
            ++programs;
            if (!checkIncomparability(res)) { ++bad; }
            for (auto const &h : res.interpretations) {
                ++sets;
                auto v = prg.valuation(h);
                auto red = reduct(prg, v);
                bool good = satisfiesProgram(prg, v) && checkMinimality(red, v).minimal && !bruteLowerModel(red, v);
                if (!good) { ++bad; }
            }
        }
        ok = bad == 0;
        return std::to_string(programs) + " programs, " + std::to_string(sets) + " answer sets, " +
               std::to_string(bad) + " violations, " + std::to_string(seconds(start)) + " s";
    });

    report(7, "translated classical programs match the classical answer sets on 200 random programs", [](bool &ok) {
        std::mt19937_64 rng(7007);
        size_t mismatches = 0;
        for (int i = 0; i < 200; ++i) {
            auto classical = parseClassical(randomClassical(rng, 6, 8));
            auto expected = classicalOracle(classical);
            std::set<std::set<std::string>> got;
            auto res = enumerateAnswerSets(groundProgram(translateDlp(classical)));
            bool good = true;
            for (auto const &h : res.interpretations) {
                auto image = classicalImage(h);
                if (!image) { good = false; }
                else { got.insert(*image); }
            }
            if (!good || got != expected || got.size() != res.interpretations.size()) { ++mismatches; }
        }
        ok = mismatches == 0;
        return std::to_string(mismatches) + " mismatches";
    });

    report(8, "formula literals are monotone and their negations antimonotone on 1000 samples", [](bool &ok) {
        std::mt19937_64 rng(8008);
        auto const &values = grid();
        size_t samples = 0, violations = 0;
        while (samples < 1000) {
            auto prg = ground(randomProgram(rng));
            if (prg.formulas().empty()) { continue; }
            auto [lo, hi] = randomChain(rng, prg);
            GroundLiteral lit{GroundLiteral::Kind::Formula, FormulaId(rng() % prg.formulas().size()),
                              values[rng() % values.size()]};
            if (satisfiesLiteral(prg, lo, lit, true) && !satisfiesLiteral(prg, hi, lit, true)) { ++violations; }
            if (satisfiesLiteral(prg, hi, lit, false) && !satisfiesLiteral(prg, lo, lit, false)) { ++violations; }
            ++samples;
        }
        ok = violations == 0;
        return std::to_string(samples) + " samples, " + std::to_string(violations) + " violations";
    });

    return failures == 0 ? 0 : 1;
}
