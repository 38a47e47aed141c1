#pragma once

#include <variant>
#include <vector>

#include "srep/box.hpp"
#include "srep/code.hpp"
#include "srep/space.hpp"

namespace srep {

struct Point;

/// Ultimately periodic word prefix.period^w over some space's points; an
/// empty period means the word is finite (just the prefix).  Periods are kept
/// verbatim, never reduced to a primitive root.
struct UPWord {
    std::vector<Point> prefix;
    std::vector<Point> period;

    bool finite() const { return period.empty(); }
};

/// A concrete point of a constructed space: a base element, a pair, a tagged
/// point, a finite word or finite set of inner points, or an ultimately
/// periodic word for the omega constructors.
struct Point {
    struct Elem {
        ElemId id;
    };
    struct Tag {
        bool right;
        box<Point> inner;
    };
    struct Pair {
        box<Point> first;
        box<Point> second;
    };
    struct Word {
        std::vector<Point> letters;
    };
    struct Set {
        std::vector<Point> members;
    };
    struct UP {
        box<UPWord> word;
    };

    std::variant<Elem, Pair, Tag, Word, Set, UP> v;

    static Point elem(ElemId id) { return Point{Elem{id}}; }
    static Point pair(Point first, Point second);
    static Point left(Point inner);
    static Point right(Point inner);
    static Point word(std::vector<Point> letters);
    static Point set(std::vector<Point> members);
    static Point up(UPWord w);
};

bool operator==(const Point& a, const Point& b);
inline bool operator!=(const Point& a, const Point& b) { return !(a == b); }
bool operator==(const UPWord& a, const UPWord& b);

/// Shape check of a point against a space; throws usage_error on mismatch
/// (an InfWords point must have a non-empty period).
void check_point(const Space& s, const Point& p);

/// Code of the closure of {p} in `s` (the principal ideal of p in the
/// specialization order).
Code point_closure(const Space& s, const Point& p);

/// p in the set denoted by `c` (closed sets being downward closed, this is
/// closure containment).
bool point_member(const Space& s, const Point& p, const Code& c);

} // namespace srep
