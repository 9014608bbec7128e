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

#ifndef DHPP_RATIONAL_HH
#define DHPP_RATIONAL_HH

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace dhpp {

// Exact rational numbers; all probabilities and aggregate values use this type.
using Rational = mpq_class;

// Parses "12", "-3", "0.35", "7/20" or "-1.5e0"-free decimal forms. Throws SyntaxError.
Rational parseRational(std::string_view text);

// "0.35" when the value has a finite decimal expansion, otherwise "7/3".
std::string toDecimal(Rational const &value);

// Always "num/den", e.g. "7/20", "1/1".
std::string toFraction(Rational const &value);

inline std::strong_ordering compareRational(Rational const &a, Rational const &b) {
    int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

inline bool isInteger(Rational const &value) { return value.get_den() == 1; }

} // namespace dhpp

#endif // DHPP_RATIONAL_HH
