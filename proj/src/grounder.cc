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

#include <dhpp/grounder.hh>
#include <dhpp/printer.hh>

#include <functional>
#include <limits>
#include <optional>
#include <set>

namespace dhpp {

// {{{ derivable index

DerivableIndex::DerivableIndex(DerivableIndex const &other)
: entries_(other.entries_) {
    for (auto const &[atom, entry] : entries_) {
        byPredicate_[{atom.predicate, atom.args.size()}].push_back(&entry);
    }
}

DerivableIndex &DerivableIndex::operator=(DerivableIndex const &other) {
    if (this != &other) { *this = DerivableIndex(other); }
    return *this;
}

bool DerivableIndex::add(Atom const &atom, ProbInterval const &annotation, Round round) {
    auto [it, fresh] = entries_.try_emplace(atom);
    if (fresh) {
        it->second.atom = atom;
        it->second.round = round;
        byPredicate_[{atom.predicate, atom.args.size()}].push_back(&it->second);
    }
    auto res = it->second.annotations.try_emplace(annotation, round);
    return fresh || res.second;
}

DerivableIndex::Entry const *DerivableIndex::find(Atom const &atom) const {
    auto it = entries_.find(atom);
    return it == entries_.end() ? nullptr : &it->second;
}

std::vector<DerivableIndex::Entry const *> const &DerivableIndex::candidates(std::string const &predicate, size_t arity) const {
    static std::vector<Entry const *> const none;
    auto it = byPredicate_.find({predicate, arity});
    return it == byPredicate_.end() ? none : it->second;
}

// }}}

namespace {

using Round = DerivableIndex::Round;
constexpr Round AllRounds = std::numeric_limits<Round>::max();

struct JoinLiteral {
    HybridBasicFormula const *formula;
    Annotation const *annotation;
};

// Enumerates the substitutions making a conjunction of annotated formulae derivable.
// With a delta literal, only matches using at least one entry of the newest visible round
// are reported for it.
class Joiner {
public:
    using Callback = std::function<void(Substitution const &)>;

    Joiner(DerivableIndex const &index, StrategyRegistry const &registry, Round visible)
    : index_(index), registry_(registry), visible_(visible) { }

    void run(std::vector<JoinLiteral> literals, std::optional<size_t> delta, Substitution subst, Callback emit) {
        literals_ = std::move(literals);
        done_.assign(literals_.size(), false);
        delta_ = delta;
        emit_ = std::move(emit);
        step(subst, literals_.size());
    }

private:
    bool isDelta(size_t i) const { return delta_ && *delta_ == i; }
    bool visible(Round round) const { return round <= visible_; }
    bool newest(Round round) const { return round == visible_; }

    void step(Substitution &subst, size_t remaining) {
        if (remaining == 0) {
            emit_(subst);
            return;
        }
        std::set<std::string> bound;
        for (auto const &[var, val] : subst) { bound.insert(var); }
        std::optional<size_t> next;
        for (size_t i = 0; i < literals_.size(); ++i) {
            if (done_[i]) { continue; }
            bool ok = true;
            for (auto const &atom : literals_[i].formula->atoms) { ok = ok && matchable(atom, bound); }
            if (!ok) { continue; }
            if (!next || isDelta(i)) { next = i; }
            if (isDelta(i)) { break; }
        }
        if (!next) {
            throw Error(ErrorCode::UnsafeVariable, "arithmetic over unbound variables in positive body");
        }
        done_[*next] = true;
        std::vector<DerivableIndex::Entry const *> entries;
        atoms(*next, 0, subst, false, entries, remaining);
        done_[*next] = false;
    }

    void atoms(size_t i, size_t j, Substitution const &subst, bool deltaUsed,
               std::vector<DerivableIndex::Entry const *> &entries, size_t remaining) {
        auto const &formula = *literals_[i].formula;
        if (j == formula.atoms.size()) {
            annotations(i, subst, deltaUsed, entries, remaining);
            return;
        }
        auto pattern = formula.atoms[j].substitute(subst).evaluate();
        auto visit = [&](DerivableIndex::Entry const *entry) {
            if (!visible(entry->round)) { return; }
            for (auto const *prev : entries) {
                if (prev == entry) { return; }
            }
            Substitution ext = subst;
            if (!match(pattern, entry->atom, ext)) { return; }
            entries.push_back(entry);
            atoms(i, j + 1, ext, deltaUsed || newest(entry->round), entries, remaining);
            entries.pop_back();
        };
        if (pattern.isGround()) {
            if (auto const *entry = index_.find(pattern)) { visit(entry); }
        }
        else {
            for (auto const *entry : index_.candidates(pattern.predicate, pattern.args.size())) { visit(entry); }
        }
    }

    static bool bindItem(AnnotationItem const &item, Rational const &value, Substitution &subst) {
        if (item.kind() != AnnotationItem::Kind::Variable) { return true; }
        auto it = subst.find(item.name());
        if (it == subst.end()) {
            subst.emplace(item.name(), Term::number(value));
            return true;
        }
        return it->second.isNumber() && it->second.value() == value;
    }

    void annotations(size_t i, Substitution const &subst, bool deltaUsed,
                     std::vector<DerivableIndex::Entry const *> const &entries, size_t remaining) {
        auto const &formula = *literals_[i].formula;
        auto annotation = literals_[i].annotation->substitute(subst);
        auto unbound = [](AnnotationItem const &item) { return item.kind() == AnnotationItem::Kind::Variable; };
        if (!unbound(annotation.lo) && !unbound(annotation.hi)) {
            if (isDelta(i) && !deltaUsed) { return; }
            Substitution ext = subst;
            step(ext, remaining - 1);
            return;
        }
        // value -> obtained from an entry of the newest round
        std::map<ProbInterval, bool> values;
        if (formula.isAtom()) {
            for (auto const &[value, round] : entries.front()->annotations) {
                if (visible(round)) { values[value] = values[value] || newest(round); }
            }
        }
        else {
            auto kind = formula.connective == Connective::And ? StrategyKind::Conjunctive : StrategyKind::Disjunctive;
            auto const &strategy = registry_.at(formula.strategy, kind);
            std::vector<ProbInterval> chosen;
            std::function<void(size_t, bool)> product = [&](size_t k, bool fresh) {
                if (k == entries.size()) {
                    auto value = composeFold(strategy, chosen);
                    values[value] = values[value] || fresh;
                    return;
                }
                for (auto const &[value, round] : entries[k]->annotations) {
                    if (!visible(round)) { continue; }
                    chosen.push_back(value);
                    product(k + 1, fresh || newest(round));
                    chosen.pop_back();
                }
            };
            product(0, false);
        }
        for (auto const &[value, fresh] : values) {
            if (isDelta(i) && !fresh) { continue; }
            Substitution ext = subst;
            if (bindItem(annotation.lo, value.lo(), ext) && bindItem(annotation.hi, value.hi(), ext)) {
                step(ext, remaining - 1);
            }
        }
    }

    DerivableIndex const &index_;
    StrategyRegistry const &registry_;
    Round visible_;
    std::vector<JoinLiteral> literals_;
    std::vector<bool> done_;
    std::optional<size_t> delta_;
    Callback emit_;
};

std::vector<JoinLiteral> joinLiterals(Rule const &rule) {
    std::vector<JoinLiteral> res;
    for (auto const &lit : rule.positive) {
        if (!lit.isAggregate()) { res.push_back({&lit.formula(), &lit.annotation}); }
    }
    return res;
}

Annotation constantAnnotation(Annotation const &annotation, Substitution const &subst) {
    return Annotation::constant(annotation.substitute(subst).evaluate());
}

HybridBasicFormula groundFormula(HybridBasicFormula const &formula, Substitution const &subst) {
    auto res = formula.substitute(subst).evaluate();
    if (!res.isGround()) {
        throw Error(ErrorCode::UnsafeVariable, "formula " + toString(res) + " is not ground after grounding");
    }
    return res;
}

BodyLiteral instantiate(BodyLiteral const &lit, Substitution const &subst) {
    if (!lit.isAggregate()) {
        return {groundFormula(lit.formula(), subst), constantAnnotation(lit.annotation, subst)};
    }
    auto agg = lit.aggregate();
    agg.guardLo = agg.guardLo.substitute(subst).evaluate();
    agg.guardHi = agg.guardHi.substitute(subst).evaluate();
    if (!agg.guardLo.isGround() || !agg.guardHi.isGround()) {
        throw Error(ErrorCode::UnsafeVariable, "aggregate guard is not ground after grounding");
    }
    for (auto &elem : agg.set.elements) {
        elem.value = elem.value.substitute(subst);
        elem.annotation = elem.annotation.substitute(subst);
        for (auto &cond : elem.condition) {
            cond.formula = cond.formula.substitute(subst);
            cond.annotation = cond.annotation.substitute(subst);
        }
    }
    return {std::move(agg), constantAnnotation(lit.annotation, subst)};
}

std::optional<Rule> instantiate(Rule const &rule, Substitution const &subst, GroundingOptions const &options) {
    for (auto const &cmp : rule.comparisons) {
        Comparison ground{cmp.lhs.substitute(subst), cmp.cmp, cmp.rhs.substitute(subst)};
        if (!ground.lhs.isGround() || !ground.rhs.isGround()) {
            throw Error(ErrorCode::UnsafeVariable, "comparison over unbound variables");
        }
        if (!holds(ground)) { return std::nullopt; }
    }
    Rule res;
    for (auto const &disjunct : rule.head) {
        auto atom = disjunct.atom.substitute(subst).evaluate();
        if (!atom.isGround()) {
            throw Error(ErrorCode::UnsafeVariable, "head atom " + toString(atom) + " is not ground after grounding");
        }
        if (atom.depth() > options.maxTermDepth) {
            throw Error(ErrorCode::UniverseOverflow, "term depth of " + toString(atom) + " exceeds " + std::to_string(options.maxTermDepth));
        }
        res.head.push_back({std::move(atom), constantAnnotation(disjunct.annotation, subst)});
    }
    for (auto const &lit : rule.positive) { res.positive.push_back(instantiate(lit, subst)); }
    for (auto const &lit : rule.negative) { res.negative.push_back(instantiate(lit, subst)); }
    return res;
}

void groundRound(Rule const &rule, DerivableIndex const &index, StrategyRegistry const &registry,
                 GroundingOptions const &options, Round visible, std::optional<size_t> delta,
                 std::function<void(Rule)> const &emit) {
    Joiner joiner(index, registry, visible);
    joiner.run(joinLiterals(rule), delta, {}, [&](Substitution const &subst) {
        if (auto ground = instantiate(rule, subst, options)) { emit(std::move(*ground)); }
    });
}

Rule expandSets(Rule rule, DerivableIndex const &index, StrategyRegistry const &registry) {
    auto expand = [&](BodyLiteral &lit) {
        if (!lit.isAggregate()) { return; }
        auto agg = lit.aggregate();
        agg.set = groundSymbolicSet(agg.set, index, registry);
        lit.content = std::move(agg);
    };
    for (auto &lit : rule.positive) { expand(lit); }
    for (auto &lit : rule.negative) { expand(lit); }
    return rule;
}

} // namespace

std::vector<Rule> groundRule(Rule const &rule, DerivableIndex const &index, StrategyRegistry const &registry,
                             GroundingOptions const &options) {
    std::vector<Rule> res;
    std::set<std::string> seen;
    groundRound(rule, index, registry, options, AllRounds, std::nullopt, [&](Rule ground) {
        if (seen.insert(toString(ground)).second) { res.push_back(std::move(ground)); }
    });
    return res;
}

ProbabilitySet groundSymbolicSet(ProbabilitySet const &set, DerivableIndex const &index, StrategyRegistry const &registry) {
    ProbabilitySet res;
    std::set<std::string> seen;
    for (auto const &elem : set.elements) {
        std::vector<JoinLiteral> literals;
        for (auto const &cond : elem.condition) { literals.push_back({&cond.formula, &cond.annotation}); }
        Joiner joiner(index, registry, AllRounds);
        joiner.run(std::move(literals), std::nullopt, {}, [&](Substitution const &subst) {
            SetElement ground;
            ground.value = elem.value.substitute(subst).evaluate();
            if (!ground.value.isGround()) {
                throw Error(ErrorCode::UnsafeVariable, "set element " + toString(ground.value) + " is not ground after grounding");
            }
            ground.annotation = constantAnnotation(elem.annotation, subst);
            for (auto const &cond : elem.condition) {
                ground.condition.push_back({groundFormula(cond.formula, subst), constantAnnotation(cond.annotation, subst)});
            }
            auto key = toString(ground.value) + toString(ground.annotation);
            for (auto const &cond : ground.condition) { key += "|" + toString(cond.formula) + toString(cond.annotation); }
            if (seen.insert(key).second) { res.elements.push_back(std::move(ground)); }
        });
    }
    return res;
}

GroundProgram groundProgram(Program const &program, GroundingOptions const &options, DerivableIndex *out) {
    program.validateStrategies();
    auto const &registry = *program.registry;
    DerivableIndex index;
    std::vector<Rule> partial;
    std::set<std::string> seen;
    std::vector<std::pair<Atom, ProbInterval>> pending;
    auto emit = [&](Rule ground) {
        if (!seen.insert(toString(ground)).second) { return; }
        if (partial.size() >= options.maxGroundRules) {
            throw Error(ErrorCode::UniverseOverflow, "more than " + std::to_string(options.maxGroundRules) + " ground rules");
        }
        for (auto const &disjunct : ground.head) {
            pending.emplace_back(disjunct.atom, disjunct.annotation.evaluate());
        }
        partial.push_back(std::move(ground));
    };
    auto flush = [&](Round round) {
        bool changed = false;
        for (auto const &[atom, value] : pending) { changed = index.add(atom, value, round) || changed; }
        pending.clear();
        return changed;
    };
    for (auto const &rule : program.rules) {
        if (joinLiterals(rule).empty()) { groundRound(rule, index, registry, options, AllRounds, std::nullopt, emit); }
    }
    for (Round round = 1; flush(round - 1); ++round) {
        for (auto const &rule : program.rules) {
            auto literals = joinLiterals(rule);
            for (size_t i = 0; i < literals.size(); ++i) {
                groundRound(rule, index, registry, options, round - 1, i, emit);
            }
        }
    }
    GroundProgram res(program.registry, program.tau);
    for (auto const &rule : partial) { res.addRule(expandSets(rule, index, registry)); }
    if (out) { *out = std::move(index); }
    return res;
}

} // namespace dhpp
