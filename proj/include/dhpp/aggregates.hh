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

#ifndef DHPP_AGGREGATES_HH
#define DHPP_AGGREGATES_HH

#include <dhpp/ground_program.hh>

#include <variant>
#include <vector>

namespace dhpp {

// One member F^g : [P1,P2] of S_h.
struct SampledValue {
    Term value;
    ProbInterval probability;

    friend bool operator==(SampledValue const &, SampledValue const &) = default;
};

using SampleMultiset = std::vector<SampledValue>;

// E-family result
struct EValue {
    ValueInterval value;
    friend bool operator==(EValue const &, EValue const &) = default;
};

// P-family result (x, nu)
struct PValue {
    Rational x;
    ProbInterval nu;
    friend bool operator==(PValue const &, PValue const &) = default;
};

// undefined result
struct Bottom {
    friend bool operator==(Bottom const &, Bottom const &) = default;
};

using AggregateResult = std::variant<Bottom, EValue, PValue>;

inline bool isBottom(AggregateResult const &res) { return std::holds_alternative<Bottom>(res); }

// Pairs whose conditions hold in the valuation, duplicates preserved.
SampleMultiset buildSh(GroundAggregate const &aggregate, Valuation const &h);
// Same over a ground probability set and a sparse interpretation.
SampleMultiset buildSh(ProbabilitySet const &set, PInterpretation const &h);

// Componentwise product of all probability intervals; [1,1] on the empty multiset.
ProbInterval jointProbability(SampleMultiset const &sh);

// c x [lo,hi], swapping endpoints for negative c.
ValueInterval scalarIntervalProduct(Rational const &c, ProbInterval const &iv);

// Applies one of the eleven aggregate functions. Min/max on the empty multiset and
// numeric functions over non-numeric values yield Bottom.
AggregateResult evalAggregate(AggregateFunction fn, SampleMultiset const &sh);

std::string toString(AggregateResult const &res);

} // namespace dhpp

#endif // DHPP_AGGREGATES_HH
