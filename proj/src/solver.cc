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

#include <dhpp/solver.hh>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace dhpp {

namespace {

// {{{ helpers

bool leq(Valuation const &a, Valuation const &b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (!truthLeq(a[i], i < b.size() ? b[i] : ProbInterval::zero())) { return false; }
    }
    return true;
}

bool valueOrder(ProbInterval const &a, ProbInterval const &b) {
    auto sa = a.lo() + a.hi();
    auto sb = b.lo() + b.hi();
    if (sa != sb) { return sa < sb; }
    return a < b;
}

void addUnique(std::vector<ProbInterval> &values, ProbInterval const &v) {
    if (std::find(values.begin(), values.end(), v) == values.end()) { values.push_back(v); }
}

bool hasAggregates(GroundProgram const &prg) {
    for (auto const &rule : prg.rules()) {
        for (auto const &lit : rule.positive) { if (lit.isAggregate()) { return true; } }
        for (auto const &lit : rule.negative) { if (lit.isAggregate()) { return true; } }
    }
    return false;
}

// }}}
// {{{ fixpoint

using Choice = std::vector<int>;

struct FixpointResult {
    Valuation h;
    // firing disjunctive rules without a chosen disjunct
    std::vector<size_t> undecided;
};

// Least fixpoint of the rules marked enabled, positive formula literals evaluated on the
// current values. A firing rule contributes its chosen disjunct and any disjunct that is
// already satisfied; an atom takes the tau-fold of its contributions, raised to cover each.
FixpointResult fixpoint(GroundProgram const &prg, std::vector<bool> const &enabled, Choice const &choice) {
    auto const n = prg.formulas().size();
    size_t width = 1;
    for (auto const &rule : prg.rules()) { width += rule.head.size(); }
    size_t const cap = 2 * width + 8;
    FixpointResult res;
    res.h = prg.bottom();
    std::vector<std::vector<ProbInterval>> contrib(n);
    for (size_t it = 0;; ++it) {
        for (auto &c : contrib) { c.clear(); }
        res.undecided.clear();
        for (size_t r = 0; r < prg.size(); ++r) {
            if (!enabled[r]) { continue; }
            auto const &rule = prg.rules()[r];
            bool fires = std::all_of(rule.positive.begin(), rule.positive.end(), [&](GroundLiteral const &lit) {
                return lit.isAggregate() || truthLeq(lit.annotation, res.h[lit.id]);
            });
            if (!fires) { continue; }
            if (rule.head.size() == 1) {
                contrib[rule.head.front().atom].push_back(rule.head.front().annotation);
                continue;
            }
            for (size_t j = 0; j < rule.head.size(); ++j) {
                auto const &hd = rule.head[j];
                if (choice[r] == static_cast<int>(j) || truthLeq(hd.annotation, res.h[hd.atom])) {
                    contrib[hd.atom].push_back(hd.annotation);
                }
            }
            if (choice[r] < 0) { res.undecided.push_back(r); }
        }
        Valuation next(n);
        for (FormulaId id = 0; id < n; ++id) {
            auto const &info = prg.formula(id);
            if (!info.isAtom() || contrib[id].empty()) { continue; }
            next[id] = composeFold(*info.strategy, contrib[id]);
            for (auto const &mu : contrib[id]) { next[id] = join(next[id], mu); }
        }
        for (FormulaId id = 0; id < n; ++id) {
            if (!prg.formula(id).isAtom()) { next[id] = compose(prg, next, id); }
        }
        if (next == res.h || it > cap) {
            res.h = std::move(next);
            break;
        }
        res.h = std::move(next);
    }
    return res;
}

// }}}
// {{{ minimality

// Exact check for programs without aggregates whose negative literals all hold in h:
// every lower p-model lies above a fixpoint of some disjunct choice.
MinimalityResult fixpointMinimality(GroundProgram const &prg, Valuation const &h, SolverOptions const &options) {
    MinimalityResult res;
    std::vector<bool> enabled(prg.size(), true);
    Choice choice(prg.size(), -1);
    std::function<bool()> explore = [&]() {
        if (++res.examined > options.maxSearchNodes) {
            throw Error(ErrorCode::SearchSpaceOverflow, "minimality search exceeds " + std::to_string(options.maxSearchNodes) + " nodes");
        }
        auto fp = fixpoint(prg, enabled, choice);
        if (!fp.undecided.empty()) {
            auto r = fp.undecided.front();
            auto const &rule = prg.rules()[r];
            for (size_t j = 0; j < rule.head.size(); ++j) {
                if (!truthLeq(rule.head[j].annotation, h[rule.head[j].atom])) { continue; }
                choice[r] = static_cast<int>(j);
                bool found = explore();
                choice[r] = -1;
                if (found) { return true; }
            }
            return false;
        }
        if (fp.h != h && leq(fp.h, h) && satisfiesProgram(prg, fp.h)) {
            res.minimal = false;
            res.witness = std::move(fp.h);
            return true;
        }
        return false;
    };
    explore();
    return res;
}

// Depth-first search over the value lattice below h. Rules and combination conditions are
// checked as soon as all formulae they mention are assigned.
class LatticeSearch {
public:
    LatticeSearch(GroundProgram const &prg, Valuation const &top, SolverOptions const &options)
    : prg_(prg), top_(top), options_(options), lattice_(ValueLattice::build(prg, options.maxLatticeSize)) {
        auto const n = prg.formulas().size();
        for (FormulaId id = 0; id < n; ++id) {
            if (prg.formula(id).isAtom()) { order_.push_back(id); }
        }
        for (FormulaId id = 0; id < n; ++id) {
            if (!prg.formula(id).isAtom()) { order_.push_back(id); }
        }
        pos_.resize(n);
        for (size_t k = 0; k < order_.size(); ++k) { pos_[order_[k]] = k; }
        domains_.resize(n);
        for (FormulaId id = 0; id < n; ++id) {
            if (!prg.formula(id).isAtom()) { continue; }
            for (auto const &v : lattice_.values(id)) {
                if (truthLeq(v, top[id])) { addUnique(domains_[id], v); }
            }
            addUnique(domains_[id], top[id]);
            std::sort(domains_[id].begin(), domains_[id].end(), valueOrder);
        }
        rulesAt_.resize(order_.size());
        atomsAt_.resize(order_.size());
        std::vector<size_t> ruleLast(prg.size(), 0);
        for (size_t r = 0; r < prg.size(); ++r) {
            size_t last = 0;
            auto touch = [&](FormulaId id) { last = std::max(last, pos_[id]); };
            auto const &rule = prg.rules()[r];
            for (auto const &hd : rule.head) { touch(hd.atom); }
            for (auto const *lits : {&rule.positive, &rule.negative}) {
                for (auto const &lit : *lits) {
                    if (!lit.isAggregate()) {
                        touch(lit.id);
                        continue;
                    }
                    for (auto const &pair : prg.aggregate(lit.id).set) {
                        for (auto const &cond : pair.condition) { touch(cond.formula); }
                    }
                }
            }
            ruleLast[r] = last;
            rulesAt_[last].push_back(r);
        }
        for (FormulaId id = 0; id < n; ++id) {
            if (!prg.formula(id).isAtom() || prg.headOccurrences(id).empty()) { continue; }
            size_t last = pos_[id];
            for (auto const &[r, j] : prg.headOccurrences(id)) { last = std::max(last, ruleLast[r]); }
            atomsAt_[last].push_back(id);
        }
        cur_ = prg.bottom();
    }

    MinimalityResult run() {
        dfs(0);
        return std::move(res_);
    }

private:
    bool consistent(size_t k) {
        for (auto r : rulesAt_[k]) {
            if (!satisfiesRule(prg_, cur_, prg_.rules()[r])) { return false; }
        }
        for (auto id : atomsAt_[k]) {
            auto fold = supportFold(prg_, cur_, id);
            if (fold && !truthLeq(*fold, cur_[id])) { return false; }
        }
        return true;
    }

    std::vector<ProbInterval> domain(FormulaId id) {
        if (prg_.formula(id).isAtom()) { return domains_[id]; }
        auto low = compose(prg_, cur_, id);
        std::vector<ProbInterval> res;
        if (!truthLeq(low, top_[id])) { return res; }
        res.push_back(low);
        for (auto const &v : lattice_.values(id)) {
            if (truthLeq(low, v) && truthLeq(v, top_[id])) { addUnique(res, v); }
        }
        addUnique(res, top_[id]);
        std::sort(res.begin(), res.end(), valueOrder);
        return res;
    }

    bool dfs(size_t k) {
        if (++res_.examined > options_.maxSearchNodes) {
            throw Error(ErrorCode::SearchSpaceOverflow, "minimality search exceeds " + std::to_string(options_.maxSearchNodes) + " nodes");
        }
        if (k == order_.size()) {
            if (cur_ != top_ && satisfiesProgram(prg_, cur_)) {
                res_.minimal = false;
                res_.witness = cur_;
                return true;
            }
            return false;
        }
        auto id = order_[k];
        for (auto const &v : domain(id)) {
            cur_[id] = v;
            if (consistent(k) && dfs(k + 1)) { return true; }
        }
        cur_[id] = ProbInterval::zero();
        return false;
    }

    GroundProgram const &prg_;
    Valuation const &top_;
    SolverOptions const &options_;
    ValueLattice lattice_;
    std::vector<FormulaId> order_;
    std::vector<size_t> pos_;
    std::vector<std::vector<ProbInterval>> domains_;
    std::vector<std::vector<size_t>> rulesAt_;
    std::vector<std::vector<FormulaId>> atomsAt_;
    Valuation cur_;
    MinimalityResult res_;
};

// }}}

} // namespace

// {{{ value lattice

ValueLattice ValueLattice::build(GroundProgram const &prg, size_t maxSize) {
    ValueLattice res;
    auto const n = prg.formulas().size();
    res.values_.assign(n, {ProbInterval::zero()});
    auto overflow = [&](FormulaId id) {
        return Error(ErrorCode::SearchSpaceOverflow, "value lattice of " + toString(prg.formula(id).formula) +
                                                         " exceeds " + std::to_string(maxSize) + " values");
    };
    for (FormulaId id = 0; id < n; ++id) {
        auto const &info = prg.formula(id);
        if (!info.isAtom()) { continue; }
        std::map<ProbInterval, size_t> counts;
        for (auto const &[r, j] : prg.headOccurrences(id)) { ++counts[prg.rules()[r].head[j].annotation]; }
        std::vector<std::pair<ProbInterval, size_t>> distinct;
        size_t combinations = 1;
        for (auto [value, count] : counts) {
            if (info.strategy->compose(value, value) == value) { count = 1; }
            distinct.emplace_back(value, count);
            combinations *= count + 1;
            if (combinations > maxSize) { throw overflow(id); }
        }
        std::vector<ProbInterval> chosen;
        std::function<void(size_t)> enumerate = [&](size_t k) {
            if (k == distinct.size()) {
                if (!chosen.empty()) { addUnique(res.values_[id], composeFold(*info.strategy, chosen)); }
                return;
            }
            for (size_t c = 0; c <= distinct[k].second; ++c) {
                enumerate(k + 1);
                chosen.push_back(distinct[k].first);
            }
            chosen.resize(chosen.size() - distinct[k].second - 1);
        };
        enumerate(0);
    }
    auto note = [&](FormulaId id, ProbInterval const &v) { addUnique(res.values_[id], v); };
    for (auto const &rule : prg.rules()) {
        for (auto const *lits : {&rule.positive, &rule.negative}) {
            for (auto const &lit : *lits) {
                if (!lit.isAggregate()) {
                    note(lit.id, lit.annotation);
                    continue;
                }
                for (auto const &pair : prg.aggregate(lit.id).set) {
                    for (auto const &cond : pair.condition) { note(cond.formula, cond.annotation); }
                }
            }
        }
    }
    for (FormulaId id = 0; id < n; ++id) {
        auto &values = res.values_[id];
        for (size_t i = 0; i < values.size(); ++i) {
            for (size_t j = 0; j < i; ++j) {
                auto v = join(values[i], values[j]);
                if (std::find(values.begin(), values.end(), v) == values.end()) {
                    values.push_back(v);
                    if (values.size() > maxSize) { throw overflow(id); }
                }
            }
        }
        std::sort(values.begin(), values.end(), valueOrder);
    }
    return res;
}

// }}}
// {{{ minimality

MinimalityResult checkMinimality(GroundProgram const &prg, Valuation const &h, SolverOptions const &options) {
    Valuation top = h;
    top.resize(prg.formulas().size());
    bool negativeHold = true;
    for (auto const &rule : prg.rules()) {
        for (auto const &lit : rule.negative) { negativeHold = negativeHold && satisfiesLiteral(prg, top, lit, false); }
    }
    if (negativeHold && !hasAggregates(prg)) { return fixpointMinimality(prg, top, options); }
    return LatticeSearch(prg, top, options).run();
}

bool isMinimalModel(GroundProgram const &prg, Valuation const &h, SolverOptions const &options) {
    return checkMinimality(prg, h, options).minimal;
}

bool isMinimalModel(GroundProgram const &prg, PInterpretation const &h, SolverOptions const &options) {
    return isMinimalModel(prg, prg.valuation(h), options);
}

bool isAnswerSet(GroundProgram const &prg, Valuation const &h, SolverOptions const &options) {
    return satisfiesProgram(prg, h) && isMinimalModel(reduct(prg, h), h, options);
}

// }}}
// {{{ enumeration

AnswerSetResult enumerateAnswerSets(GroundProgram const &prg, SolverOptions const &options) {
    struct Assumption {
        GroundLiteral literal;
        bool positive;
    };
    std::vector<Assumption> assumptions;
    std::map<std::pair<bool, GroundLiteral>, size_t> index;
    std::vector<std::vector<size_t>> ruleAssumptions(prg.size());
    auto assume = [&](size_t r, GroundLiteral const &lit, bool positive) {
        auto [it, fresh] = index.try_emplace({positive, lit}, assumptions.size());
        if (fresh) { assumptions.push_back({lit, positive}); }
        ruleAssumptions[r].push_back(it->second);
    };
    for (size_t r = 0; r < prg.size(); ++r) {
        auto const &rule = prg.rules()[r];
        for (auto const &lit : rule.positive) {
            if (lit.isAggregate()) { assume(r, lit, true); }
        }
        for (auto const &lit : rule.negative) { assume(r, lit, false); }
    }
    auto const k = assumptions.size();
    if (k >= 63 || (size_t(1) << k) > options.maxGuesses) {
        throw Error(ErrorCode::SearchSpaceOverflow, std::to_string(k) + " guessed literals exceed the guess cap");
    }
    std::vector<size_t> bits(k);
    std::iota(bits.begin(), bits.end(), 0);
    std::uint64_t flip = 0;
    if (options.seed) {
        std::mt19937_64 rng(*options.seed);
        std::shuffle(bits.begin(), bits.end(), rng);
        flip = k == 0 ? 0 : rng() & ((std::uint64_t(1) << k) - 1);
    }

    std::set<Valuation> seen;
    std::vector<std::pair<Valuation, AnswerSetCertificate>> found;
    AnswerSetResult res;
    std::vector<bool> guess(k);
    std::vector<bool> enabled(prg.size());
    Choice choice(prg.size(), -1);
    bool stop = false;

    std::function<void()> explore = [&]() {
        auto fp = fixpoint(prg, enabled, choice);
        if (!fp.undecided.empty()) {
            auto r = fp.undecided.front();
            for (size_t j = 0; j < prg.rules()[r].head.size() && !stop; ++j) {
                choice[r] = static_cast<int>(j);
                explore();
            }
            choice[r] = -1;
            return;
        }
        for (size_t i = 0; i < k; ++i) {
            if (satisfiesLiteral(prg, fp.h, assumptions[i].literal, assumptions[i].positive) != guess[i]) { return; }
        }
        if (!seen.insert(fp.h).second) { return; }
        ++res.candidates;
        if (!satisfiesProgram(prg, fp.h)) { return; }
        auto red = reduct(prg, fp.h);
        auto min = checkMinimality(red, fp.h, options);
        if (!min.minimal) { return; }
        found.push_back({fp.h, {red.size(), min.examined}});
        if (options.limit != 0 && found.size() >= options.limit) { stop = true; }
    };

    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k) && !stop; ++mask) {
        auto m = mask ^ flip;
        for (size_t i = 0; i < k; ++i) { guess[bits[i]] = (m >> i) & 1; }
        for (size_t r = 0; r < prg.size(); ++r) {
            enabled[r] = std::all_of(ruleAssumptions[r].begin(), ruleAssumptions[r].end(), [&](size_t i) { return guess[i]; });
        }
        explore();
    }
    res.truncated = stop;

    std::vector<std::pair<PInterpretation, AnswerSetCertificate>> sorted;
    for (auto &[v, cert] : found) { sorted.emplace_back(prg.interpretation(v), cert); }
    std::sort(sorted.begin(), sorted.end(), [](auto const &a, auto const &b) { return a.first < b.first; });
    for (auto &[h, cert] : sorted) {
        res.interpretations.push_back(std::move(h));
        res.certificates.push_back(cert);
    }
    return res;
}

bool checkIncomparability(std::vector<PInterpretation> const &interpretations) {
    for (size_t i = 0; i < interpretations.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            if (pointwiseLeq(interpretations[i], interpretations[j]) || pointwiseLeq(interpretations[j], interpretations[i])) {
                return false;
            }
        }
    }
    return true;
}

// }}}

} // namespace dhpp
