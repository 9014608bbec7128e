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

#include "helpers.hh"

#include <dhpp/semantics.hh>

#include <algorithm>
#include <functional>

namespace dhpp::test {

namespace {

char const *const Probabilities[] = {"0.3", "0.5", "0.7", "1"};

std::string pick(std::mt19937_64 &rng, std::vector<std::string> const &xs) {
    return xs[std::uniform_int_distribution<size_t>(0, xs.size() - 1)(rng)];
}

unsigned uniform(std::mt19937_64 &rng, unsigned lo, unsigned hi) {
    return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

std::string annotation(std::mt19937_64 &rng) {
    auto p = Probabilities[uniform(rng, 0, 3)];
    if (uniform(rng, 0, 5) == 0) {
        auto u = Probabilities[uniform(rng, 0, 3)];
        if (q(u) >= q(p)) { return std::string(":[") + p + "," + u + "]"; }
    }
    return std::string(p) == "1" ? "" : std::string(":") + p;
}

} // namespace

std::vector<ProbInterval> const &grid() {
    static std::vector<ProbInterval> const res = [] {
        std::vector<ProbInterval> out;
        char const *ends[] = {"0", "0.3", "0.5", "0.7", "1"};
        for (auto lo : ends) {
            for (auto hi : ends) {
                if (q(lo) <= q(hi)) { out.push_back(pi(lo, hi)); }
            }
        }
        return out;
    }();
    return res;
}

std::string randomProgram(std::mt19937_64 &rng, unsigned maxAtoms, unsigned maxRules, bool aggregates) {
    std::vector<std::string> atoms;
    auto n = uniform(rng, 2, maxAtoms);
    for (unsigned i = 0; i < n; ++i) { atoms.push_back(std::string(1, char('a' + i))); }
    std::string out;
    auto rules = uniform(rng, 1, maxRules);
    for (unsigned r = 0; r < rules; ++r) {
        std::string head;
        auto width = uniform(rng, 0, 4) == 0 ? 2u : 1u;
        auto h1 = pick(rng, atoms);
        head = h1 + annotation(rng);
        if (width == 2) {
            auto h2 = pick(rng, atoms);
            if (h2 != h1) { head += " | " + h2 + annotation(rng); }
        }
        std::vector<std::string> body;
        auto literals = uniform(rng, 0, 2);
        for (unsigned i = 0; i < literals; ++i) {
            auto kind = uniform(rng, 0, 9);
            std::string lit;
            if (kind <= 5) { lit = pick(rng, atoms) + annotation(rng); }
            else if (kind <= 7) {
                auto x = pick(rng, atoms);
                auto y = pick(rng, atoms);
                if (x == y) { lit = x + annotation(rng); }
                else { lit = x + (uniform(rng, 0, 1) ? " and[pcc] " : " or[pcd] ") + y + annotation(rng); }
            }
            else if (aggregates) {
                static std::vector<std::string> const fns{"sumP", "countP", "maxP", "minP"};
                auto x = pick(rng, atoms);
                auto y = pick(rng, atoms);
                auto px = Probabilities[uniform(rng, 0, 3)];
                auto py = Probabilities[uniform(rng, 0, 3)];
                lit = pick(rng, fns) + "{1:" + px + " | " + x + ":" + px + "; 2:" + py + " | " + y + ":" + py + "} " +
                      pick(rng, {">=", "<", "=", "!="}) + " " + std::to_string(uniform(rng, 0, 3));
                if (uniform(rng, 0, 1)) { lit += std::string(" : ") + Probabilities[uniform(rng, 0, 2)]; }
            }
            else {
                lit = pick(rng, atoms);
            }
            if (uniform(rng, 0, 2) == 0) { lit = "not " + lit; }
            body.push_back(lit);
        }
        out += head;
        for (size_t i = 0; i < body.size(); ++i) { out += (i == 0 ? " :- " : ", ") + body[i]; }
        out += ".\n";
    }
    return out;
}

std::string randomClassical(std::mt19937_64 &rng, unsigned maxAtoms, unsigned maxRules) {
    std::vector<std::string> atoms;
    auto n = uniform(rng, 1, maxAtoms);
    for (unsigned i = 0; i < n; ++i) { atoms.push_back(std::string(1, char('a' + i))); }
    std::string out;
    auto rules = uniform(rng, 1, maxRules);
    for (unsigned r = 0; r < rules; ++r) {
        auto width = uniform(rng, 0, 9);
        std::string head;
        if (width > 0) {
            auto h1 = pick(rng, atoms);
            head = h1;
            if (width >= 7) {
                auto h2 = pick(rng, atoms);
                if (h2 != h1) { head += " | " + h2; }
            }
        }
        std::vector<std::string> body;
        auto literals = uniform(rng, head.empty() ? 1 : 0, 3);
        for (unsigned i = 0; i < literals; ++i) { body.push_back((uniform(rng, 0, 1) ? "not " : "") + pick(rng, atoms)); }
        if (head.empty()) { out += ":- "; }
        else {
            out += head;
            if (!body.empty()) { out += " :- "; }
        }
        for (size_t i = 0; i < body.size(); ++i) { out += (i == 0 ? "" : ", ") + body[i]; }
        out += ".\n";
    }
    return out;
}

Valuation randomValuation(std::mt19937_64 &rng, GroundProgram const &prg) {
    Valuation v = prg.bottom();
    auto const &values = grid();
    for (auto &x : v) { x = values[uniform(rng, 0, values.size() - 1)]; }
    return v;
}

std::pair<Valuation, Valuation> randomChain(std::mt19937_64 &rng, GroundProgram const &prg) {
    auto lo = randomValuation(rng, prg);
    auto hi = randomValuation(rng, prg);
    for (size_t i = 0; i < lo.size(); ++i) {
        auto a = lo[i];
        auto b = hi[i];
        lo[i] = meet(a, b);
        hi[i] = join(a, b);
    }
    return {lo, hi};
}

std::optional<std::set<std::string>> classicalImage(PInterpretation const &h) {
    std::set<std::string> res;
    for (auto const &[f, v] : h.support()) {
        if (!f.isAtom() || v != ProbInterval::one()) { return std::nullopt; }
        if (f.atoms[0] == constraintAtom()) { return std::nullopt; }
        res.insert(toString(f.atoms[0]));
    }
    return res;
}

namespace {

void completeCompounds(GroundProgram const &prg, Valuation &v) {
    for (FormulaId id = 0; id < prg.formulas().size(); ++id) {
        if (!prg.formula(id).isAtom()) { v[id] = compose(prg, v, id); }
    }
}

// calls visit for every grid assignment of the atoms with values <=t bound; stops when visit returns true
bool enumerateGrid(GroundProgram const &prg, Valuation const &bound, std::function<bool(Valuation const &)> const &visit) {
    std::vector<FormulaId> atoms;
    std::vector<std::vector<ProbInterval>> domains;
    for (FormulaId id = 0; id < prg.formulas().size(); ++id) {
        if (!prg.formula(id).isAtom()) { continue; }
        atoms.push_back(id);
        domains.emplace_back();
        for (auto const &x : grid()) {
            if (truthLeq(x, bound[id])) { domains.back().push_back(x); }
        }
    }
    std::vector<size_t> pos(atoms.size(), 0);
    Valuation v = prg.bottom();
    while (true) {
        for (size_t i = 0; i < atoms.size(); ++i) { v[atoms[i]] = domains[i][pos[i]]; }
        completeCompounds(prg, v);
        if (visit(v)) { return true; }
        size_t i = 0;
        for (; i < atoms.size(); ++i) {
            if (++pos[i] < domains[i].size()) { break; }
            pos[i] = 0;
        }
        if (i == atoms.size()) { return false; }
    }
}

} // namespace

std::optional<Valuation> bruteLowerModel(GroundProgram const &prg, Valuation const &h) {
    std::optional<Valuation> res;
    enumerateGrid(prg, h, [&](Valuation const &v) {
        if (v != h && satisfiesProgram(prg, v)) {
            res = v;
            return true;
        }
        return false;
    });
    return res;
}

std::vector<PInterpretation> bruteAnswerSets(GroundProgram const &prg) {
    Valuation top(prg.formulas().size(), ProbInterval::one());
    std::vector<PInterpretation> res;
    enumerateGrid(prg, top, [&](Valuation const &v) {
        if (satisfiesProgram(prg, v) && !bruteLowerModel(reduct(prg, v), v)) { res.push_back(prg.interpretation(v)); }
        return false;
    });
    std::sort(res.begin(), res.end());
    return res;
}

} // namespace dhpp::test
