#pragma once

#include <vector>

#include "srep/code.hpp"
#include "srep/point.hpp"
#include "srep/space.hpp"

namespace srep {

/// Word products over the letter space `x`: the irreducible closed subsets of
/// x*.  All functions take the LETTER space, not the word space.

/// Language inclusion of word products, by head-to-head recursion on atoms.
bool wp_leq(const Space& x, const WordProduct& p, const WordProduct& q);

/// Intersection of two word products as a set of pairwise incomparable word
/// products (subsumed members removed at every step).  Empty star atoms never
/// appear in the result.
std::vector<WordProduct> wp_meet(const Space& x, const WordProduct& p, const WordProduct& q);

/// The word product covering all of x*: top(x)*.
WordProduct wp_top(const Space& x);

/// Rewrites a product to an equivalent, usually shorter one: drops empty
/// stars, merges comparable adjacent stars, absorbs single atoms into an
/// adjacent dominating star.  Idempotent; not a canonical form (equality of
/// products is mutual wp_leq, never syntactic).
WordProduct wp_canon(const Space& x, WordProduct p);

/// Closure of the one-word language {w}: the product (dw0)? (dw1)? ... of the
/// letter closures.
WordProduct closure_fin_word(const Space& x, const std::vector<Point>& letters);

/// w in the language of p, via closure containment.
bool wp_member(const Space& x, const std::vector<Point>& letters, const WordProduct& p);

/// Subsumption removal: keeps the wp_leq-maximal products, first occurrence
/// winning among equivalent ones, sorted structurally.
std::vector<WordProduct> wp_reduce(const Space& x, const std::vector<WordProduct>& ps);

} // namespace srep
