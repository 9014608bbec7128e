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

#ifndef DHPP_INTERVAL_HH
#define DHPP_INTERVAL_HH

#include <dhpp/rational.hh>

#include <iosfwd>
#include <string>

namespace dhpp {

// Closed subinterval [lo,hi] of [0,1].
class ProbInterval {
public:
    // [0,0]
    ProbInterval() = default;
    // Throws InvalidInterval unless 0 <= lo <= hi <= 1.
    ProbInterval(Rational lo, Rational hi);

    static ProbInterval point(Rational const &p) { return {p, p}; }
    static ProbInterval zero() { return {}; }
    static ProbInterval one() { return point(1); }

    Rational const &lo() const noexcept { return lo_; }
    Rational const &hi() const noexcept { return hi_; }
    bool isPoint() const { return lo_ == hi_; }

    friend bool operator==(ProbInterval const &a, ProbInterval const &b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }
    // lexicographic; used for containers only, unrelated to the truth order
    friend std::strong_ordering operator<=>(ProbInterval const &a, ProbInterval const &b);

private:
    Rational lo_ = 0;
    Rational hi_ = 0;
};

// Closed interval with unbounded rational endpoints; result type of expected-value aggregates.
class ValueInterval {
public:
    ValueInterval() = default;
    // Throws InvalidInterval unless lo <= hi.
    ValueInterval(Rational lo, Rational hi);
    ValueInterval(ProbInterval const &p) : lo_(p.lo()), hi_(p.hi()) { }

    static ValueInterval point(Rational const &v) { return {v, v}; }

    Rational const &lo() const noexcept { return lo_; }
    Rational const &hi() const noexcept { return hi_; }

    friend bool operator==(ValueInterval const &a, ValueInterval const &b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }
    friend std::strong_ordering operator<=>(ValueInterval const &a, ValueInterval const &b);

private:
    Rational lo_ = 0;
    Rational hi_ = 0;
};

// Truth order: componentwise <=.
bool truthLeq(ProbInterval const &x, ProbInterval const &y);
bool truthLeq(ValueInterval const &x, ValueInterval const &y);
bool truthLt(ProbInterval const &x, ProbInterval const &y);
bool truthLt(ValueInterval const &x, ValueInterval const &y);

// Componentwise join/meet w.r.t. the truth order.
ProbInterval join(ProbInterval const &x, ProbInterval const &y);
ProbInterval meet(ProbInterval const &x, ProbInterval const &y);

enum class Comparator { Eq, Ne, Lt, Gt, Le, Ge };

char const *toString(Comparator cmp);
Comparator negate(Comparator cmp);
// a cmp b <=> b (mirror cmp) a
Comparator mirror(Comparator cmp);
bool compareScalar(Rational const &a, Comparator cmp, Rational const &b);

// Guard comparison. = and != compare both endpoints; the order comparisons must hold
// on both endpoints, so scalars coerced to [v,v] compare as ordinary numbers.
bool intervalCompare(ValueInterval const &x, Comparator cmp, ValueInterval const &t);

std::string toString(ProbInterval const &x);
std::string toString(ValueInterval const &x);
std::ostream &operator<<(std::ostream &out, ProbInterval const &x);
std::ostream &operator<<(std::ostream &out, ValueInterval const &x);

} // namespace dhpp

#endif // DHPP_INTERVAL_HH
