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

#ifndef DHPP_STRATEGY_HH
#define DHPP_STRATEGY_HH

#include <dhpp/interval.hh>

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>

namespace dhpp {

enum class StrategyKind { Conjunctive, Disjunctive };

char const *toString(StrategyKind kind);

using ComposeFunction = std::function<ProbInterval(ProbInterval const &, ProbInterval const &)>;

// Probability strategy with its composition function.
struct PStrategy {
    std::string name;
    StrategyKind kind;
    ComposeFunction compose;
};

// Right fold c(m1, c(m2, ... c(m_{n-1}, m_n))). Throws EmptyMultiset on an empty range.
ProbInterval composeFold(PStrategy const &strategy, std::span<ProbInterval const> multiset);

namespace strategies {

// independence: product / noisy-or
ProbInterval independenceConjunction(ProbInterval const &x, ProbInterval const &y);
ProbInterval independenceDisjunction(ProbInterval const &x, ProbInterval const &y);
// positive correlation: min / max
ProbInterval positiveCorrelationConjunction(ProbInterval const &x, ProbInterval const &y);
ProbInterval positiveCorrelationDisjunction(ProbInterval const &x, ProbInterval const &y);

inline constexpr char const *IndependenceConj = "inc";
inline constexpr char const *IndependenceDisj = "ind";
inline constexpr char const *PositiveConj = "pcc";
inline constexpr char const *PositiveDisj = "pcd";
// tau default for atoms without a #tau directive
inline constexpr char const *DefaultTau = PositiveDisj;

} // namespace strategies

class StrategyRegistry {
public:
    // registry with the four built-in strategies inc, ind, pcc, pcd
    static StrategyRegistry withBuiltins();

    // Throws DuplicateName if the name is taken.
    StrategyRegistry &registerStrategy(std::string name, StrategyKind kind, ComposeFunction compose);

    PStrategy const *find(std::string const &name) const;
    // Throws UnknownStrategy.
    PStrategy const &at(std::string const &name) const;
    // Throws UnknownStrategy or StrategyKindMismatch.
    PStrategy const &at(std::string const &name, StrategyKind kind) const;

    size_t size() const { return strategies_.size(); }

private:
    std::map<std::string, std::shared_ptr<PStrategy const>> strategies_;
};

} // namespace dhpp

#endif // DHPP_STRATEGY_HH
