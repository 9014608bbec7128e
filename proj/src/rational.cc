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

#include <dhpp/rational.hh>
#include <dhpp/error.hh>

#include <cctype>

namespace dhpp {

namespace {

bool allDigits(std::string_view s) {
    if (s.empty()) { return false; }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) { return false; }
    }
    return true;
}

Rational parseUnsignedDecimal(std::string_view text) {
    auto dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (!allDigits(whole) || (dot != std::string_view::npos && !allDigits(frac))) {
        throw Error(ErrorCode::SyntaxError, "malformed number '" + std::string(text) + "'");
    }
    mpz_class num(std::string(whole) + std::string(frac), 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace

Rational parseRational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational r;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational num = parseUnsignedDecimal(text.substr(0, slash));
        Rational den = parseUnsignedDecimal(text.substr(slash + 1));
        if (den == 0) { throw Error(ErrorCode::EvaluationError, "division by zero"); }
        r = num / den;
    }
    else {
        r = parseUnsignedDecimal(text);
    }
    return negative ? Rational(-r) : r;
}

std::string toDecimal(Rational const &value) {
    mpz_class den = value.get_den();
    unsigned twos = 0;
    unsigned fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
    if (den != 1) { return value.get_str(); }
    unsigned digits = std::max(twos, fives);
    if (digits == 0) { return value.get_num().get_str(); }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class scaled = value.get_num() * scale / value.get_den();
    bool negative = scaled < 0;
    if (negative) { scaled = -scaled; }
    std::string s = scaled.get_str();
    if (s.size() <= digits) { s.insert(0, digits + 1 - s.size(), '0'); }
    s.insert(s.size() - digits, ".");
    return negative ? "-" + s : s;
}

std::string toFraction(Rational const &value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

} // namespace dhpp
