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

#include <dhpp/semantics.hh>
#include <dhpp/printer.hh>

#include <algorithm>

namespace dhpp {

namespace {

ProbInterval value(Valuation const &h, FormulaId id) {
    return id < h.size() ? h[id] : ProbInterval::zero();
}

} // namespace

bool satisfiesAggregate(GroundAggregate const &agg, ProbInterval const &annotation, Valuation const &h, bool positive) {
    auto res = evalAggregate(agg.function, buildSh(agg, h));
    bool sat = false;
    if (auto const *e = std::get_if<EValue>(&res)) {
        sat = intervalCompare(e->value, agg.cmp, agg.guard);
    }
    else if (auto const *p = std::get_if<PValue>(&res)) {
        sat = intervalCompare(ValueInterval::point(p->x), agg.cmp, agg.guard) && truthLeq(annotation, p->nu);
    }
    return positive ? sat : !sat;
}

bool satisfiesLiteral(GroundProgram const &prg, Valuation const &h, GroundLiteral const &lit, bool positive) {
    if (lit.isAggregate()) { return satisfiesAggregate(prg.aggregate(lit.id), lit.annotation, h, positive); }
    bool sat = truthLeq(lit.annotation, value(h, lit.id));
    return positive ? sat : !sat;
}

bool satisfiesBody(GroundProgram const &prg, Valuation const &h, GroundRule const &rule) {
    return std::all_of(rule.positive.begin(), rule.positive.end(), [&](auto const &lit) { return satisfiesLiteral(prg, h, lit, true); }) &&
           std::all_of(rule.negative.begin(), rule.negative.end(), [&](auto const &lit) { return satisfiesLiteral(prg, h, lit, false); });
}

bool satisfiesHead(Valuation const &h, GroundRule const &rule) {
    return std::any_of(rule.head.begin(), rule.head.end(), [&](GroundHead const &hd) { return truthLeq(hd.annotation, value(h, hd.atom)); });
}

bool satisfiesRule(GroundProgram const &prg, Valuation const &h, GroundRule const &rule) {
    return satisfiesHead(h, rule) || !satisfiesBody(prg, h, rule);
}

std::optional<ProbInterval> supportFold(GroundProgram const &prg, Valuation const &h, FormulaId atom) {
    std::vector<ProbInterval> support;
    auto current = value(h, atom);
    for (auto const &[ri, hi] : prg.headOccurrences(atom)) {
        auto const &rule = prg.rules()[ri];
        auto const &mu = rule.head[hi].annotation;
        if (truthLeq(mu, current) && satisfiesBody(prg, h, rule)) { support.push_back(mu); }
    }
    if (support.empty()) { return std::nullopt; }
    return composeFold(*prg.formula(atom).strategy, support);
}

ProbInterval compose(GroundProgram const &prg, Valuation const &h, FormulaId formula) {
    auto const &info = prg.formula(formula);
    std::vector<ProbInterval> parts;
    for (auto id : info.components) { parts.push_back(value(h, id)); }
    return composeFold(*info.strategy, parts);
}

SatisfactionReport checkProgram(GroundProgram const &prg, Valuation const &h) {
    SatisfactionReport report;
    auto fail = [&](std::string msg) {
        if (!report.witness) { report.witness = std::move(msg); }
    };
    for (auto const &rule : prg.rules()) {
        bool ok = satisfiesRule(prg, h, rule);
        report.rules.push_back(ok);
        if (!ok) {
            GroundProgram single = prg.withRules({rule});
            auto text = toString(single);
            while (!text.empty() && text.back() == '\n') { text.pop_back(); }
            fail("rule not satisfied: " + text);
        }
    }
    auto const n = prg.formulas().size();
    report.atoms.assign(n, true);
    report.formulas.assign(n, true);
    for (FormulaId id = 0; id < n; ++id) {
        auto const &info = prg.formula(id);
        if (info.isAtom()) {
            auto fold = supportFold(prg, h, id);
            if (fold && !truthLeq(*fold, value(h, id))) {
                report.atoms[id] = false;
                fail("combined annotation " + toString(*fold) + " of " + toString(info.formula) + " exceeds " + toString(value(h, id)));
            }
        }
        else {
            auto composed = compose(prg, h, id);
            if (!truthLeq(composed, value(h, id))) {
                report.formulas[id] = false;
                fail("composition " + toString(composed) + " of " + toString(info.formula) + " exceeds " + toString(value(h, id)));
            }
        }
    }
    return report;
}

bool satisfiesProgram(GroundProgram const &prg, Valuation const &h) {
    for (auto const &rule : prg.rules()) {
        if (!satisfiesRule(prg, h, rule)) { return false; }
    }
    for (FormulaId id = 0; id < prg.formulas().size(); ++id) {
        if (prg.formula(id).isAtom()) {
            auto fold = supportFold(prg, h, id);
            if (fold && !truthLeq(*fold, value(h, id))) { return false; }
        }
        else if (!truthLeq(compose(prg, h, id), value(h, id))) {
            return false;
        }
    }
    return true;
}

bool satisfiesProgram(GroundProgram const &prg, PInterpretation const &h) {
    return satisfiesProgram(prg, prg.valuation(h));
}

GroundProgram reduct(GroundProgram const &prg, Valuation const &h) {
    std::vector<GroundRule> rules;
    for (auto const &rule : prg.rules()) {
        if (satisfiesBody(prg, h, rule)) { rules.push_back(rule); }
    }
    return prg.withRules(std::move(rules));
}

GroundProgram reduct(GroundProgram const &prg, PInterpretation const &h) {
    return reduct(prg, prg.valuation(h));
}

} // namespace dhpp
