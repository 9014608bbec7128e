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

#ifndef DHPP_INTERPRETATION_HH
#define DHPP_INTERPRETATION_HH

#include <dhpp/program.hh>

#include <map>

namespace dhpp {

// Finitely supported p-interpretation; formulae not stored read as [0,0].
class PInterpretation {
public:
    using Map = std::map<HybridBasicFormula, ProbInterval>;

    PInterpretation() = default;
    PInterpretation(std::initializer_list<Map::value_type> init);

    ProbInterval lookup(HybridBasicFormula const &f) const;
    ProbInterval lookup(Atom const &a) const { return lookup(HybridBasicFormula::atom(a)); }
    // storing [0,0] erases the entry
    void set(HybridBasicFormula const &f, ProbInterval value);
    void set(Atom const &a, ProbInterval value) { set(HybridBasicFormula::atom(a), std::move(value)); }

    // entries different from [0,0], sorted by formula
    Map const &support() const noexcept { return values_; }
    bool empty() const noexcept { return values_.empty(); }

    friend bool operator==(PInterpretation const &, PInterpretation const &) = default;
    friend std::strong_ordering operator<=>(PInterpretation const &a, PInterpretation const &b);

private:
    Map values_;
};

// h1 <=t h2 on every formula
bool pointwiseLeq(PInterpretation const &h1, PInterpretation const &h2);

} // namespace dhpp

#endif // DHPP_INTERPRETATION_HH
