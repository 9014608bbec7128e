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

#include <dhpp/aggregates.hh>

#include <algorithm>

namespace dhpp {

namespace {

bool holds(std::vector<GroundCondition> const &condition, Valuation const &h) {
    return std::all_of(condition.begin(), condition.end(), [&](GroundCondition const &c) {
        return c.formula < h.size() ? truthLeq(c.annotation, h[c.formula]) : truthLeq(c.annotation, ProbInterval::zero());
    });
}

bool numeric(SampleMultiset const &sh) {
    return std::all_of(sh.begin(), sh.end(), [](SampledValue const &v) { return v.value.isNumber(); });
}

// classical aggregate over the values; nullopt for min/max on the empty multiset
std::optional<Rational> classical(AggregateFunction fn, SampleMultiset const &sh) {
    switch (fn) {
        case AggregateFunction::CountE:
        case AggregateFunction::CountP: return Rational(static_cast<unsigned long>(sh.size()));
        case AggregateFunction::SumE:
        case AggregateFunction::SumP: {
            Rational res = 0;
            for (auto const &v : sh) { res += v.value.value(); }
            return res;
        }
        case AggregateFunction::TimesE:
        case AggregateFunction::TimesP: {
            Rational res = 1;
            for (auto const &v : sh) { res *= v.value.value(); }
            return res;
        }
        case AggregateFunction::MinE:
        case AggregateFunction::MinP:
        case AggregateFunction::MaxE:
        case AggregateFunction::MaxP: {
            if (sh.empty()) { return std::nullopt; }
            bool isMin = fn == AggregateFunction::MinE || fn == AggregateFunction::MinP;
            Rational res = sh.front().value.value();
            for (auto const &v : sh) {
                if (isMin ? v.value.value() < res : v.value.value() > res) { res = v.value.value(); }
            }
            return res;
        }
        case AggregateFunction::ValE: break;
    }
    return std::nullopt;
}

} // namespace

SampleMultiset buildSh(GroundAggregate const &aggregate, Valuation const &h) {
    SampleMultiset res;
    for (auto const &pair : aggregate.set) {
        if (holds(pair.condition, h)) { res.push_back({pair.value, pair.probability}); }
    }
    return res;
}

SampleMultiset buildSh(ProbabilitySet const &set, PInterpretation const &h) {
    SampleMultiset res;
    for (auto const &elem : set.elements) {
        bool ok = std::all_of(elem.condition.begin(), elem.condition.end(), [&](AnnotatedFormula const &c) {
            return truthLeq(c.annotation.evaluate(), h.lookup(c.formula));
        });
        if (ok) { res.push_back({elem.value.evaluate(), elem.annotation.evaluate()}); }
    }
    return res;
}

ProbInterval jointProbability(SampleMultiset const &sh) {
    Rational lo = 1;
    Rational hi = 1;
    for (auto const &v : sh) {
        lo *= v.probability.lo();
        hi *= v.probability.hi();
    }
    return {lo, hi};
}

ValueInterval scalarIntervalProduct(Rational const &c, ProbInterval const &iv) {
    if (c < 0) { return {c * iv.hi(), c * iv.lo()}; }
    return {c * iv.lo(), c * iv.hi()};
}

AggregateResult evalAggregate(AggregateFunction fn, SampleMultiset const &sh) {
    bool counting = fn == AggregateFunction::CountE || fn == AggregateFunction::CountP;
    if (!counting && !numeric(sh)) { return Bottom{}; }
    if (fn == AggregateFunction::ValE) {
        Rational lo = 0;
        Rational hi = 0;
        for (auto const &v : sh) {
            auto term = scalarIntervalProduct(v.value.value(), v.probability);
            lo += term.lo();
            hi += term.hi();
        }
        return EValue{{lo, hi}};
    }
    auto x = classical(fn, sh);
    if (!x) { return Bottom{}; }
    auto joint = jointProbability(sh);
    if (isExpectedValue(fn)) { return EValue{scalarIntervalProduct(*x, joint)}; }
    return PValue{*x, joint};
}

std::string toString(AggregateResult const &res) {
    if (auto const *e = std::get_if<EValue>(&res)) { return toString(e->value); }
    if (auto const *p = std::get_if<PValue>(&res)) { return "(" + toDecimal(p->x) + ", " + toString(p->nu) + ")"; }
    return "bottom";
}

} // namespace dhpp
