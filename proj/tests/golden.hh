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

#ifndef DHPP_TESTS_GOLDEN_HH
#define DHPP_TESTS_GOLDEN_HH

#include "helpers.hh"

#include <map>
#include <sstream>

namespace dhpp::test {

// answer sets of the dice program
inline std::vector<PInterpretation> diceAnswerSets() {
    auto make = [](char const *x, char const *px, char const *y, char const *py) {
        PInterpretation h;
        h.set(atom(x), pt(px));
        h.set(atom(y), pt(py));
        return h;
    };
    return {make("a(1,1)", "0.5", "a(1,2)", "0.7"), make("a(1,1)", "0.5", "a(2,2)", "0.3"),
            make("a(2,1)", "0.5", "a(2,2)", "0.3")};
}

// pckg and nutr atoms of the four answer sets of the diet program
inline std::vector<PInterpretation> dietAnswerSets() {
    char const *const lists[] = {
        "pckg(beef,2,s1) pckg(fish,2,s1) pckg(turk,2,s1) pckg(beef,1,s2) pckg(fish,2,s2) pckg(turk,2,s2) "
        "nutr(beef,a,120,s1):0.7 nutr(fish,a,16,s1):0.8 nutr(turk,a,120,s1):0.8 nutr(beef,a,50,s2):0.3 "
        "nutr(fish,a,22,s2):0.2 nutr(turk,a,110,s2):0.2 nutr(turk,b,30,s1):0.7 nutr(fish,b,30,s1):0.5 "
        "nutr(beef,b,20,s1):0.6 nutr(turk,b,40,s2):0.3 nutr(fish,b,36,s2):0.5 nutr(beef,b,8,s2):0.4 "
        "nutr(beef,c,40,s1):0.8 nutr(fish,c,26,s2):0.6 nutr(turk,c,50,s2):0.1 nutr(beef,c,15,s2):0.2 "
        "nutr(turk,c,40,s1):0.9 nutr(fish,c,20,s1):0.4",
        "pckg(beef,2,s1) pckg(fish,2,s1) pckg(turk,2,s1) pckg(beef,2,s2) pckg(fish,2,s2) pckg(turk,2,s2) "
        "nutr(beef,a,120,s1):0.7 nutr(fish,a,16,s1):0.8 nutr(turk,a,120,s1):0.8 nutr(beef,a,100,s2):0.3 "
        "nutr(fish,a,22,s2):0.2 nutr(turk,a,110,s2):0.2 nutr(beef,b,20,s1):0.6 nutr(fish,b,30,s1):0.5 "
        "nutr(turk,b,30,s1):0.7 nutr(beef,b,16,s2):0.4 nutr(fish,b,36,s2):0.5 nutr(turk,b,40,s2):0.3 "
        "nutr(beef,c,40,s1):0.8 nutr(fish,c,20,s1):0.4 nutr(turk,c,40,s1):0.9 nutr(beef,c,30,s2):0.2 "
        "nutr(fish,c,26,s2):0.6 nutr(turk,c,50,s2):0.1",
        "pckg(beef,2,s1) pckg(fish,2,s1) pckg(turk,2,s1) pckg(beef,2,s2) pckg(fish,2,s2) pckg(turk,1,s2) "
        "nutr(beef,a,120,s1):0.7 nutr(fish,a,16,s1):0.8 nutr(turk,a,120,s1):0.8 nutr(beef,a,100,s2):0.3 "
        "nutr(fish,a,22,s2):0.2 nutr(turk,a,55,s2):0.2 nutr(beef,b,20,s1):0.6 nutr(fish,b,30,s1):0.5 "
        "nutr(turk,b,30,s1):0.7 nutr(beef,b,16,s2):0.4 nutr(fish,b,36,s2):0.5 nutr(turk,b,20,s2):0.3 "
        "nutr(beef,c,40,s1):0.8 nutr(fish,c,20,s1):0.4 nutr(turk,c,40,s1):0.9 nutr(beef,c,30,s2):0.2 "
        "nutr(fish,c,26,s2):0.6 nutr(turk,c,25,s2):0.1",
        "pckg(beef,2,s1) pckg(fish,1,s1) pckg(turk,2,s1) pckg(beef,2,s2) pckg(fish,2,s2) pckg(turk,2,s2) "
        "nutr(beef,a,120,s1):0.7 nutr(fish,a,8,s1):0.8 nutr(turk,a,120,s1):0.8 nutr(beef,a,100,s2):0.3 "
        "nutr(fish,a,22,s2):0.2 nutr(turk,a,110,s2):0.2 nutr(beef,b,20,s1):0.6 nutr(fish,b,15,s1):0.5 "
        "nutr(turk,b,30,s1):0.7 nutr(beef,b,16,s2):0.4 nutr(fish,b,36,s2):0.5 nutr(turk,b,40,s2):0.3 "
        "nutr(beef,c,40,s1):0.8 nutr(fish,c,10,s1):0.4 nutr(turk,c,40,s1):0.9 nutr(beef,c,30,s2):0.2 "
        "nutr(fish,c,26,s2):0.6 nutr(turk,c,50,s2):0.1",
    };
    std::vector<PInterpretation> res;
    for (auto const *list : lists) {
        PInterpretation h;
        std::istringstream in(list);
        std::string item;
        while (in >> item) {
            auto colon = item.find(':');
            auto name = item.substr(0, colon);
            auto value = colon == std::string::npos ? ProbInterval::one() : pt(item.substr(colon + 1).c_str());
            h.set(atom(name.c_str()), value);
        }
        res.push_back(std::move(h));
    }
    return res;
}

inline PInterpretation restrict(PInterpretation const &h, std::set<std::string> const &predicates) {
    PInterpretation res;
    for (auto const &[f, v] : h.support()) {
        if (f.isAtom() && predicates.count(f.atoms[0].predicate)) { res.set(f, v); }
    }
    return res;
}

// sum of value * lower probability over nutr(F,vitamin,X,S) atoms, computed from the values directly
inline Rational expectedIntake(PInterpretation const &h, std::string const &vitamin) {
    Rational total = 0;
    for (auto const &[f, v] : h.support()) {
        if (!f.isAtom() || f.atoms[0].predicate != "nutr") { continue; }
        auto const &args = f.atoms[0].args;
        if (args.size() == 4 && toString(args[1]) == vitamin) {
            total += parseRational(toString(args[2])) * v.lo();
        }
    }
    return total;
}

} // namespace dhpp::test

#endif // DHPP_TESTS_GOLDEN_HH
