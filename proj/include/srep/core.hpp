#pragma once

#include <vector>

#include "srep/code.hpp"
#include "srep/space.hpp"

namespace srep {

/// Decides containment of the denoted irreducible closed sets.  Dispatches on
/// the space constructor; both codes must belong to `s`.
bool code_leq(const Space& s, const Code& a, const Code& b);

/// Intersection of two irreducibles as a reduced antichain of codes whose
/// denotations union to the intersection.
ClosedSet code_meet(const Space& s, const Code& a, const Code& b);

/// Finite antichain of codes covering the whole space (cached on the space).
ClosedSet space_top(const Space& s);

namespace detail {
// Builds the covering antichain from the children's cached tops; called once
// per space at construction.
ClosedSet compute_space_top(const Space& s);
} // namespace detail

/// Closed-set containment: every member of `c` below some member of `d`.
bool cs_leq(const Space& s, const ClosedSet& c, const ClosedSet& d);

/// Intersection of two closed sets, reduced.
ClosedSet cs_inter(const Space& s, const ClosedSet& c, const ClosedSet& d);

/// Keeps the maximal codes of `codes` (first occurrence wins among
/// equivalents), sorted in the structural order.  Same union of denotations
/// as the input.
ClosedSet cs_reduce(const Space& s, const std::vector<Code>& codes);

/// True iff the two closed sets contain each other.
bool cs_equiv(const Space& s, const ClosedSet& c, const ClosedSet& d);

/// Deep shape check of a code against a space; throws usage_error on
/// mismatch.  Parsers and constructors call this so the operations above can
/// assume well-shaped input.
void check_code(const Space& s, const Code& c);

} // namespace srep
