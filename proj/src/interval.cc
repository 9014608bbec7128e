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

#include <dhpp/interval.hh>
#include <dhpp/error.hh>

#include <ostream>

namespace dhpp {

ProbInterval::ProbInterval(Rational lo, Rational hi)
: lo_(std::move(lo))
, hi_(std::move(hi)) {
    lo_.canonicalize();
    hi_.canonicalize();
    if (lo_ < 0 || hi_ > 1 || lo_ > hi_) {
        throw Error(ErrorCode::InvalidInterval, "[" + toDecimal(lo_) + "," + toDecimal(hi_) + "] is not a subinterval of [0,1]");
    }
}

std::strong_ordering operator<=>(ProbInterval const &a, ProbInterval const &b) {
    if (auto c = compareRational(a.lo_, b.lo_); c != 0) { return c; }
    return compareRational(a.hi_, b.hi_);
}

ValueInterval::ValueInterval(Rational lo, Rational hi)
: lo_(std::move(lo))
, hi_(std::move(hi)) {
    lo_.canonicalize();
    hi_.canonicalize();
    if (lo_ > hi_) {
        throw Error(ErrorCode::InvalidInterval, "[" + toDecimal(lo_) + "," + toDecimal(hi_) + "] has lo > hi");
    }
}

std::strong_ordering operator<=>(ValueInterval const &a, ValueInterval const &b) {
    if (auto c = compareRational(a.lo_, b.lo_); c != 0) { return c; }
    return compareRational(a.hi_, b.hi_);
}

bool truthLeq(ProbInterval const &x, ProbInterval const &y) { return x.lo() <= y.lo() && x.hi() <= y.hi(); }
bool truthLeq(ValueInterval const &x, ValueInterval const &y) { return x.lo() <= y.lo() && x.hi() <= y.hi(); }
bool truthLt(ProbInterval const &x, ProbInterval const &y) { return truthLeq(x, y) && !(x == y); }
bool truthLt(ValueInterval const &x, ValueInterval const &y) { return truthLeq(x, y) && !(x == y); }

ProbInterval join(ProbInterval const &x, ProbInterval const &y) {
    return {x.lo() < y.lo() ? y.lo() : x.lo(), x.hi() < y.hi() ? y.hi() : x.hi()};
}

ProbInterval meet(ProbInterval const &x, ProbInterval const &y) {
    return {x.lo() < y.lo() ? x.lo() : y.lo(), x.hi() < y.hi() ? x.hi() : y.hi()};
}

char const *toString(Comparator cmp) {
    switch (cmp) {
        case Comparator::Eq: return "=";
        case Comparator::Ne: return "!=";
        case Comparator::Lt: return "<";
        case Comparator::Gt: return ">";
        case Comparator::Le: return "<=";
        case Comparator::Ge: return ">=";
    }
    return "?";
}

Comparator negate(Comparator cmp) {
    switch (cmp) {
        case Comparator::Eq: return Comparator::Ne;
        case Comparator::Ne: return Comparator::Eq;
        case Comparator::Lt: return Comparator::Ge;
        case Comparator::Gt: return Comparator::Le;
        case Comparator::Le: return Comparator::Gt;
        case Comparator::Ge: return Comparator::Lt;
    }
    return cmp;
}

Comparator mirror(Comparator cmp) {
    switch (cmp) {
        case Comparator::Lt: return Comparator::Gt;
        case Comparator::Gt: return Comparator::Lt;
        case Comparator::Le: return Comparator::Ge;
        case Comparator::Ge: return Comparator::Le;
        default:             return cmp;
    }
}

bool compareScalar(Rational const &a, Comparator cmp, Rational const &b) {
    switch (cmp) {
        case Comparator::Eq: return a == b;
        case Comparator::Ne: return a != b;
        case Comparator::Lt: return a < b;
        case Comparator::Gt: return a > b;
        case Comparator::Le: return a <= b;
        case Comparator::Ge: return a >= b;
    }
    return false;
}

bool intervalCompare(ValueInterval const &x, Comparator cmp, ValueInterval const &t) {
    if (cmp == Comparator::Ne) { return !intervalCompare(x, Comparator::Eq, t); }
    return compareScalar(x.lo(), cmp, t.lo()) && compareScalar(x.hi(), cmp, t.hi());
}

std::string toString(ProbInterval const &x) { return "[" + toDecimal(x.lo()) + "," + toDecimal(x.hi()) + "]"; }
std::string toString(ValueInterval const &x) { return "[" + toDecimal(x.lo()) + "," + toDecimal(x.hi()) + "]"; }
std::ostream &operator<<(std::ostream &out, ProbInterval const &x) { return out << toString(x); }
std::ostream &operator<<(std::ostream &out, ValueInterval const &x) { return out << toString(x); }

} // namespace dhpp
