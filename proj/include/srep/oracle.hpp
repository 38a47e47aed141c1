#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srep/code.hpp"
#include "srep/point.hpp"
#include "srep/space.hpp"

namespace srep::oracle {

/// Brute-force semantics over finite posets, for differential testing.  This
/// module never calls the decision procedures it is used to check (code_leq,
/// wp_leq, wp_meet, inf_*, up_*); everything here works by enumeration,
/// dynamic programming or greedy matching over a flat poset.

struct EnumConfig {
    int max_len = 6;    // word-length bound for enumeration
    int max_prefix = 4; // UP-word sampling bounds
    int max_period = 3;
};

using Word = std::vector<ElemId>;

struct FlatAtom {
    bool is_star = false;
    std::vector<ElemId> elems; // single: one element; star: a set
};
using FlatWP = std::vector<FlatAtom>;

struct FlatUPWord {
    Word prefix;
    Word period;
};

struct FlatOmega {
    FlatWP head;
    std::vector<ElemId> limit;
};

/// All words of length <= max_len over the poset's elements, in
/// length-lexicographic order.
std::vector<Word> enum_words(const FinitePoset& x, int max_len);

/// All UP words with |prefix| <= max_prefix and |period| <= max_period.
std::vector<FlatUPWord> enum_upwords(const FinitePoset& x, int max_prefix, int max_period);

/// w in the language of p, by dynamic programming over split positions.
bool sem_member(const FinitePoset& x, const Word& w, const FlatWP& p);

/// Language inclusion of word products, by exhausting candidate witnesses of
/// length <= |q|+1 (a minimal excluded word never needs to be longer).
bool sem_subset(const FinitePoset& x, const FlatWP& p, const FlatWP& q);

/// Scattered subword embedding w <=* w2, greedy left-to-right.
bool sem_subword(const FinitePoset& x, const Word& w, const Word& w2);

/// w in P u^{<=w} (resp. P u^w when omega_only), by bounded split search:
/// some head of w lies in P u* and every later letter lies below u.
bool sem_inf_member(const FinitePoset& x, const FlatUPWord& w, const FlatOmega& c,
                    bool omega_only);

/// A finite space (Base / Product / Sum over finite posets) materialized as
/// one flat poset.  Codes of such spaces are principal ideals, so both codes
/// and points translate to flat elements; the translation is purely
/// structural.
struct FlatSpace {
    FinitePoset poset;
    std::vector<Point> points; // index = flat element id

    ElemId elem_of_point(const Point& p) const;
    ElemId elem_of_code(const Code& c) const;
    std::vector<ElemId> elems_of_closed_set(const ClosedSet& f) const;
    FlatWP flat_wp(const WordProduct& p) const;
    FlatOmega flat_omega(const Code::Omega& c) const;
    Word flat_word(const std::vector<Point>& letters) const;
    FlatUPWord flat_upword(const UPWord& w) const;
};

/// Flattens Base, Product and Sum spaces; nullopt for any other constructor.
std::optional<FlatSpace> flatten(const Space& s);

} // namespace srep::oracle
