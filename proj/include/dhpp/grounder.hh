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

#ifndef DHPP_GROUNDER_HH
#define DHPP_GROUNDER_HH

#include <dhpp/ground_program.hh>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dhpp {

struct GroundingOptions {
    // caps the number of ground rules, UniverseOverflow beyond
    size_t maxGroundRules = 1'000'000;
    // caps the function nesting depth of derived atoms, UniverseOverflow beyond
    unsigned maxTermDepth = 4;
};

// Over-approximation of the atoms that can become true, each with the head annotations
// it can be derived with. Entries remember the grounding round they were added in.
class DerivableIndex {
public:
    using Round = unsigned;
    struct Entry {
        Atom atom;
        Round round = 0;
        std::map<ProbInterval, Round> annotations;
    };

    DerivableIndex() = default;
    DerivableIndex(DerivableIndex const &other);
    DerivableIndex(DerivableIndex &&other) noexcept = default;
    DerivableIndex &operator=(DerivableIndex const &other);
    DerivableIndex &operator=(DerivableIndex &&other) noexcept = default;

    // true if the atom or the annotation is new
    bool add(Atom const &atom, ProbInterval const &annotation, Round round = 0);
    Entry const *find(Atom const &atom) const;
    bool contains(Atom const &atom) const { return find(atom) != nullptr; }
    std::vector<Entry const *> const &candidates(std::string const &predicate, size_t arity) const;
    std::map<Atom, Entry> const &entries() const noexcept { return entries_; }
    size_t size() const noexcept { return entries_.size(); }

private:
    std::map<Atom, Entry> entries_;
    std::map<std::pair<std::string, size_t>, std::vector<Entry const *>> byPredicate_;
};

// All instances of a rule whose positive formula literals are derivable in the index and
// whose comparisons hold. Annotations become constants; probability sets keep their local
// variables and are expanded by groundSymbolicSet.
std::vector<Rule> groundRule(Rule const &rule, DerivableIndex const &index, StrategyRegistry const &registry,
                             GroundingOptions const &options = {});

// Expands a probability set whose global variables are already substituted. Elements
// whose conditions cannot be derived are dropped; identical pairs are merged.
ProbabilitySet groundSymbolicSet(ProbabilitySet const &set, DerivableIndex const &index,
                                 StrategyRegistry const &registry);

// Grounds a program: semi-naive rounds up to a fixpoint of the derivable index, then
// set expansion. Throws UniverseOverflow, UnsafeVariable, UnboundAnnotationVariable.
GroundProgram groundProgram(Program const &program, GroundingOptions const &options = {},
                            DerivableIndex *index = nullptr);

} // namespace dhpp

#endif // DHPP_GROUNDER_HH
