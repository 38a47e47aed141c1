#pragma once

#include <variant>
#include <vector>

#include "srep/box.hpp"
#include "srep/poset.hpp"

namespace srep {

struct Code;

/// Finite antichain of codes standing for the union of the sets they denote.
/// Kept reduced (no member below another) and sorted in the structural code
/// order; the empty antichain denotes the empty closed set.
using ClosedSet = std::vector<Code>;

/// One factor of a word product: either c? (the words of at most one letter,
/// that letter below c) or F* (the words whose letters all lie below F).
struct Atom {
    bool is_star = false;
    std::vector<Code> codes; // single: exactly one code; star: an antichain

    static Atom single(Code c);
    static Atom star(ClosedSet f);

    const Code& single_code() const { return codes.front(); }
    const ClosedSet& star_set() const { return codes; }
};

/// A word product A1 A2 ... AN; the empty product is epsilon.
struct WordProduct {
    std::vector<Atom> atoms;

    bool empty() const { return atoms.empty(); }
    int size() const { return static_cast<int>(atoms.size()); }
};

/// Code of one irreducible closed subset.  The active alternative matches the
/// constructor of the space the code belongs to:
///   Elem  - base poset: the principal ideal of one element
///   Pair  - product: a rectangle C x C'
///   Tag   - sum: an irreducible of one side, tagged
///   WordProduct - finite words
///   Fin   - powerset: all subsets of the union of the body's denotations
///   Omega - finite-or-infinite / infinite words: head product + limit set
struct Code {
    struct Elem {
        ElemId id;
    };
    struct Tag {
        bool right;
        box<Code> inner;
    };
    struct Pair {
        box<Code> first;
        box<Code> second;
    };
    struct Fin {
        ClosedSet body;
    };
    struct Omega {
        WordProduct head;
        ClosedSet limit;
    };

    std::variant<Elem, Pair, Tag, WordProduct, Fin, Omega> v;

    static Code elem(ElemId id) { return Code{Elem{id}}; }
    static Code pair(Code first, Code second);
    static Code left(Code inner);
    static Code right(Code inner);
    static Code word(WordProduct p) { return Code{std::move(p)}; }
    static Code fin(ClosedSet body);
    static Code omega(WordProduct head, ClosedSet limit);
};

/// Total structural order on codes; no semantic meaning, used to keep
/// antichains and result sets in one reproducible order.
int compare(const Code& a, const Code& b);
int compare(const Atom& a, const Atom& b);
int compare(const WordProduct& a, const WordProduct& b);
int compare(const ClosedSet& a, const ClosedSet& b);

bool operator==(const Code& a, const Code& b);
inline bool operator!=(const Code& a, const Code& b) { return !(a == b); }
bool operator==(const Atom& a, const Atom& b);
inline bool operator!=(const Atom& a, const Atom& b) { return !(a == b); }
bool operator==(const WordProduct& a, const WordProduct& b);
inline bool operator!=(const WordProduct& a, const WordProduct& b) { return !(a == b); }

struct CodeLess {
    bool operator()(const Code& a, const Code& b) const { return compare(a, b) < 0; }
};

// Concatenation helpers for word products.
WordProduct wp_epsilon();
WordProduct wp_of(std::vector<Atom> atoms);
WordProduct wp_concat(const WordProduct& a, const WordProduct& b);
WordProduct wp_prepend(Atom head, const WordProduct& tail);
// P with F* appended; an empty F contributes nothing (F* is then {eps}).
WordProduct wp_with_trailing_star(const WordProduct& p, const ClosedSet& f);

} // namespace srep
