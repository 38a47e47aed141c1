#pragma once

#include <vector>

#include "srep/code.hpp"
#include "srep/point.hpp"
#include "srep/space.hpp"

namespace srep {

/// Codes of x^{<=w} and x^w: pairs (P, u) of a word product and a closed set
/// over the letter space, denoting P u^{<=w} (resp. P u^w).  For the
/// infinite-words variant u must be non-empty.  All functions take the
/// LETTER space plus the variant flag.

using OmegaCode = Code::Omega;

enum class OmegaVariant { FinOrInf, InfOnly };

/// Containment: P u* below P' u'* as word products, and u below u'.
bool inf_leq(const Space& x, OmegaVariant variant, const OmegaCode& c, const OmegaCode& d);

/// Intersection.  Computed through wp_meet(P u*, P' u'*); every resulting
/// product must end in the star of u'' = cs_inter(u, u'), which is stripped
/// off.  A missing trailing star is an internal error and throws
/// invariant_error.  For the infinite variant an empty u'' gives the empty
/// set.
std::vector<OmegaCode> inf_meet(const Space& x, OmegaVariant variant, const OmegaCode& c,
                                const OmegaCode& d);

/// (eps, top of x); covers the whole space.
OmegaCode inf_top(const Space& x);

/// Closed set of letters occurring infinitely often in w, i.e. the reduced
/// closures of the period letters; empty for a finite word.
ClosedSet up_suf(const Space& x, const UPWord& w);

/// Word product containing exactly the finite prefixes of w (downward
/// closed): the prefix letter closures followed by (up_suf w)* when w is
/// infinite, canonicalized.
WordProduct up_pref(const Space& x, const UPWord& w);

/// Closure of {w} in x^{<=w} (resp. x^w): (prefix closures, up_suf w), with
/// leading atoms already below the limit set absorbed.  The infinite variant
/// rejects finite words.
OmegaCode up_closure(const Space& x, OmegaVariant variant, const UPWord& w);

/// Membership through the prefix/suffix pair: pref(w) below P u* and
/// suf(w) below u.
bool inf_member(const Space& x, OmegaVariant variant, const UPWord& w, const OmegaCode& c);

/// Subword preorder on ultimately periodic words, decided as membership of w
/// in the closure of w'.
bool up_subword_leq(const Space& x, const UPWord& w, const UPWord& w2);

/// Subsumption removal under inf_leq, first occurrence winning, sorted.
std::vector<OmegaCode> inf_reduce(const Space& x, OmegaVariant variant,
                                  const std::vector<OmegaCode>& cs);

} // namespace srep
