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

#include <dhpp/strategy.hh>
#include <dhpp/error.hh>

namespace dhpp {

char const *toString(StrategyKind kind) {
    return kind == StrategyKind::Conjunctive ? "conjunctive" : "disjunctive";
}

ProbInterval composeFold(PStrategy const &strategy, std::span<ProbInterval const> multiset) {
    if (multiset.empty()) {
        throw Error(ErrorCode::EmptyMultiset, "cannot fold strategy '" + strategy.name + "' over an empty multiset");
    }
    ProbInterval acc = multiset.back();
    for (size_t i = multiset.size() - 1; i-- > 0;) { acc = strategy.compose(multiset[i], acc); }
    return acc;
}

namespace strategies {

ProbInterval independenceConjunction(ProbInterval const &x, ProbInterval const &y) {
    return {x.lo() * y.lo(), x.hi() * y.hi()};
}

ProbInterval independenceDisjunction(ProbInterval const &x, ProbInterval const &y) {
    return {x.lo() + y.lo() - x.lo() * y.lo(), x.hi() + y.hi() - x.hi() * y.hi()};
}

ProbInterval positiveCorrelationConjunction(ProbInterval const &x, ProbInterval const &y) {
    return meet(x, y);
}

ProbInterval positiveCorrelationDisjunction(ProbInterval const &x, ProbInterval const &y) {
    return join(x, y);
}

} // namespace strategies

StrategyRegistry StrategyRegistry::withBuiltins() {
    StrategyRegistry reg;
    reg.registerStrategy(strategies::IndependenceConj, StrategyKind::Conjunctive, strategies::independenceConjunction);
    reg.registerStrategy(strategies::IndependenceDisj, StrategyKind::Disjunctive, strategies::independenceDisjunction);
    reg.registerStrategy(strategies::PositiveConj, StrategyKind::Conjunctive, strategies::positiveCorrelationConjunction);
    reg.registerStrategy(strategies::PositiveDisj, StrategyKind::Disjunctive, strategies::positiveCorrelationDisjunction);
    return reg;
}

StrategyRegistry &StrategyRegistry::registerStrategy(std::string name, StrategyKind kind, ComposeFunction compose) {
    if (strategies_.count(name) != 0) {
        throw Error(ErrorCode::DuplicateName, "strategy '" + name + "' is already registered");
    }
    auto strategy = std::make_shared<PStrategy const>(PStrategy{name, kind, std::move(compose)});
    strategies_.emplace(std::move(name), std::move(strategy));
    return *this;
}

PStrategy const *StrategyRegistry::find(std::string const &name) const {
    auto it = strategies_.find(name);
    return it == strategies_.end() ? nullptr : it->second.get();
}

PStrategy const &StrategyRegistry::at(std::string const &name) const {
    if (auto const *s = find(name)) { return *s; }
    throw Error(ErrorCode::UnknownStrategy, "'" + name + "'");
}

PStrategy const &StrategyRegistry::at(std::string const &name, StrategyKind kind) const {
    auto const &s = at(name);
    if (s.kind != kind) {
        throw Error(ErrorCode::StrategyKindMismatch, "'" + name + "' is " + toString(s.kind) + ", expected " + toString(kind));
    }
    return s;
}

} // namespace dhpp
