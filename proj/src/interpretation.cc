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

#include <dhpp/interpretation.hh>

namespace dhpp {

PInterpretation::PInterpretation(std::initializer_list<Map::value_type> init) {
    for (auto const &[f, v] : init) { set(f, v); }
}

ProbInterval PInterpretation::lookup(HybridBasicFormula const &f) const {
    auto it = values_.find(f);
    return it == values_.end() ? ProbInterval::zero() : it->second;
}

void PInterpretation::set(HybridBasicFormula const &f, ProbInterval value) {
    if (value == ProbInterval::zero()) {
        values_.erase(f);
    }
    else {
        values_.insert_or_assign(f, std::move(value));
    }
}

std::strong_ordering operator<=>(PInterpretation const &a, PInterpretation const &b) {
    return std::lexicographical_compare_three_way(a.values_.begin(), a.values_.end(), b.values_.begin(), b.values_.end());
}

bool pointwiseLeq(PInterpretation const &h1, PInterpretation const &h2) {
    // formulae outside the support of h1 are [0,0] and below anything
    for (auto const &[f, v] : h1.support()) {
        if (!truthLeq(v, h2.lookup(f))) { return false; }
    }
    return true;
}

} // namespace dhpp
