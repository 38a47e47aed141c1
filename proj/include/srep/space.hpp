#pragma once

#include <memory>

#include "srep/code.hpp"
#include "srep/poset.hpp"

namespace srep {

enum class SpaceKind {
    Base,        // finite poset with its Alexandroff (= upper) topology
    Product,     // X x Y
    Sum,         // X + Y
    Words,       // X* with the word topology
    Pow,         // P(X) with the lower Vietoris topology
    FinInfWords, // X^{<=w} with the asymptotic subword topology
    InfWords     // X^w, the subspace of infinite words
};

class Space;
using SpaceRef = std::shared_ptr<const Space>;

/// A constructed space together with the data its codes are interpreted
/// against.  Immutable once built.
class Space {
public:
    static SpaceRef base(FinitePoset poset);
    static SpaceRef product(SpaceRef first, SpaceRef second);
    static SpaceRef sum(SpaceRef left, SpaceRef right);
    static SpaceRef words(SpaceRef inner);
    static SpaceRef pow(SpaceRef inner);
    static SpaceRef fin_inf_words(SpaceRef inner);
    static SpaceRef inf_words(SpaceRef inner);

    SpaceKind kind() const { return kind_; }
    bool is_omega() const { return kind_ == SpaceKind::FinInfWords || kind_ == SpaceKind::InfWords; }

    const FinitePoset& poset() const; // Base only
    const Space& first() const;       // Product / Sum
    const Space& second() const;      // Product / Sum
    const Space& inner() const;       // Words / Pow / FinInfWords / InfWords

    /// The covering antichain, computed once at construction.
    const ClosedSet& top() const { return top_; }

private:
    Space(SpaceKind kind, FinitePoset poset, SpaceRef first, SpaceRef second);
    static SpaceRef finish(Space* space);

    SpaceKind kind_;
    FinitePoset poset_;
    SpaceRef first_;
    SpaceRef second_;
    ClosedSet top_;
};

} // namespace srep
