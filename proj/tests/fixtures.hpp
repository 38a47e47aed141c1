#pragma once

#include <vector>

#include "srep/core.hpp"
#include "srep/omega.hpp"
#include "srep/point.hpp"
#include "srep/space.hpp"
#include "srep/words.hpp"

// Shared sample spaces: A2 = antichain {a,b}; C2 = chain a < b;
// V3 = {a,b,c} with a < c, b < c.
namespace fx {

using namespace srep;

inline SpaceRef a2() {
    static SpaceRef s = Space::base(FinitePoset::antichain2());
    return s;
}

inline SpaceRef c2() {
    static SpaceRef s = Space::base(FinitePoset::chain2());
    return s;
}

inline SpaceRef v3() {
    static SpaceRef s =
        Space::base(FinitePoset::from_covers({"a", "b", "c"}, {{0, 2}, {1, 2}}));
    return s;
}

inline Code e(int id) { return Code::elem(id); }

inline Atom single(int id) { return Atom::single(e(id)); }

inline Atom star(std::vector<int> ids) {
    ClosedSet f;
    for (int id : ids)
        f.push_back(e(id));
    return Atom::star(f);
}

inline WordProduct wp(std::vector<Atom> atoms) { return wp_of(std::move(atoms)); }

inline std::vector<Point> word(std::vector<int> ids) {
    std::vector<Point> out;
    for (int id : ids)
        out.push_back(Point::elem(id));
    return out;
}

inline UPWord up(std::vector<int> prefix, std::vector<int> period) {
    return UPWord{word(std::move(prefix)), word(std::move(period))};
}

inline ClosedSet cs(std::vector<int> ids) {
    ClosedSet out;
    for (int id : ids)
        out.push_back(e(id));
    return out;
}

} // namespace fx
