#include "srep/words.hpp"

#include <algorithm>

#include "srep/core.hpp"

namespace srep {

namespace {

// Heads of the remaining suffixes drive the recursion; indices avoid copying
// the tails around.
bool leq_rec(const Space& x, const std::vector<Atom>& p, size_t i, const std::vector<Atom>& q,
             size_t j) {
    if (i == p.size())
        return true;
    if (j == q.size())
        return false;
    const Atom& a = p[i];
    const Atom& b = q[j];
    if (!a.is_star && !b.is_star) {
        if (code_leq(x, a.single_code(), b.single_code()))
            return leq_rec(x, p, i + 1, q, j + 1);
        return leq_rec(x, p, i, q, j + 1);
    }
    if (!a.is_star && b.is_star) {
        for (const Code& c : b.star_set())
            if (code_leq(x, a.single_code(), c))
                return leq_rec(x, p, i + 1, q, j);
        return leq_rec(x, p, i, q, j + 1);
    }
    if (a.is_star && !b.is_star) {
        if (a.star_set().empty())
            return leq_rec(x, p, i + 1, q, j);
        return leq_rec(x, p, i, q, j + 1);
    }
    if (cs_leq(x, a.star_set(), b.star_set()))
        return leq_rec(x, p, i + 1, q, j);
    return leq_rec(x, p, i, q, j + 1);
}

std::vector<WordProduct> meet_rec(const Space& x, const std::vector<Atom>& p, size_t i,
                                  const std::vector<Atom>& q, size_t j);

// a? P meet u* Q, the mixed clause; `p` holds a? at position i, `q` holds u*
// at position j.
std::vector<WordProduct> meet_single_star(const Space& x, const std::vector<Atom>& p, size_t i,
                                          const std::vector<Atom>& q, size_t j) {
    const Code& a = p[i].single_code();
    const ClosedSet& u = q[j].star_set();
    ClosedSet heads = cs_inter(x, ClosedSet{a}, u);
    std::vector<WordProduct> out;
    if (!heads.empty()) {
        for (const WordProduct& rest : meet_rec(x, p, i + 1, q, j))
            for (const Code& h : heads)
                out.push_back(wp_prepend(Atom::single(h), rest));
    } else {
        for (WordProduct& rest : meet_rec(x, p, i + 1, q, j))
            out.push_back(std::move(rest));
    }
    for (WordProduct& rest : meet_rec(x, p, i, q, j + 1))
        out.push_back(std::move(rest));
    return out;
}

std::vector<WordProduct> meet_rec(const Space& x, const std::vector<Atom>& p, size_t i,
                                  const std::vector<Atom>& q, size_t j) {
    if (i == p.size() || j == q.size())
        return {wp_epsilon()};
    const Atom& a = p[i];
    const Atom& b = q[j];
    std::vector<WordProduct> out;
    if (!a.is_star && !b.is_star) {
        for (WordProduct& rest : meet_rec(x, p, i, q, j + 1))
            out.push_back(std::move(rest));
        for (WordProduct& rest : meet_rec(x, p, i + 1, q, j))
            out.push_back(std::move(rest));
        ClosedSet heads = code_meet(x, a.single_code(), b.single_code());
        if (!heads.empty())
            for (const WordProduct& rest : meet_rec(x, p, i + 1, q, j + 1))
                for (const Code& h : heads)
                    out.push_back(wp_prepend(Atom::single(h), rest));
    } else if (!a.is_star && b.is_star) {
        out = meet_single_star(x, p, i, q, j);
    } else if (a.is_star && !b.is_star) {
        out = meet_single_star(x, q, j, p, i);
    } else {
        ClosedSet star = cs_inter(x, a.star_set(), b.star_set());
        std::vector<WordProduct> rests = meet_rec(x, p, i + 1, q, j);
        for (WordProduct& rest : meet_rec(x, p, i, q, j + 1))
            rests.push_back(std::move(rest));
        // Reduce before prepending the star: afterwards the star can absorb
        // the difference between a subsumed rest and its subsumer, and the
        // vanished element may be the one carrying the trailing star shape
        // that meets of star-tailed products guarantee.
        for (const WordProduct& rest : wp_reduce(x, rests))
            out.push_back(wp_prepend(Atom::star(star), rest));
    }
    return wp_reduce(x, out);
}

} // namespace

bool wp_leq(const Space& x, const WordProduct& p, const WordProduct& q) {
    return leq_rec(x, p.atoms, 0, q.atoms, 0);
}

std::vector<WordProduct> wp_reduce(const Space& x, const std::vector<WordProduct>& ps) {
    std::vector<WordProduct> kept;
    for (const WordProduct& p : ps) {
        bool dominated = false;
        for (const WordProduct& k : kept)
            if (wp_leq(x, p, k)) {
                dominated = true;
                break;
            }
        if (dominated)
            continue;
        std::erase_if(kept, [&](const WordProduct& k) { return wp_leq(x, k, p); });
        kept.push_back(p);
    }
    std::sort(kept.begin(), kept.end(),
              [](const WordProduct& a, const WordProduct& b) { return compare(a, b) < 0; });
    return kept;
}

std::vector<WordProduct> wp_meet(const Space& x, const WordProduct& p, const WordProduct& q) {
    return meet_rec(x, p.atoms, 0, q.atoms, 0);
}

WordProduct wp_top(const Space& x) {
    return wp_of({Atom::star(space_top(x))});
}

WordProduct wp_canon(const Space& x, WordProduct p) {
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < p.atoms.size() && !changed; ++i) {
            Atom& a = p.atoms[i];
            if (a.is_star && a.codes.empty()) {
                p.atoms.erase(p.atoms.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
            if (i + 1 == p.atoms.size())
                break;
            Atom& b = p.atoms[i + 1];
            if (a.is_star && b.is_star) {
                if (cs_leq(x, a.star_set(), b.star_set())) {
                    p.atoms.erase(p.atoms.begin() + static_cast<long>(i));
                    changed = true;
                } else if (cs_leq(x, b.star_set(), a.star_set())) {
                    p.atoms.erase(p.atoms.begin() + static_cast<long>(i) + 1);
                    changed = true;
                }
            } else if (!a.is_star && b.is_star) {
                if (cs_leq(x, ClosedSet{a.single_code()}, b.star_set())) {
                    p.atoms.erase(p.atoms.begin() + static_cast<long>(i));
                    changed = true;
                }
            } else if (a.is_star && !b.is_star) {
                if (cs_leq(x, ClosedSet{b.single_code()}, a.star_set())) {
                    p.atoms.erase(p.atoms.begin() + static_cast<long>(i) + 1);
                    changed = true;
                }
            }
        }
    }
    return p;
}

WordProduct closure_fin_word(const Space& x, const std::vector<Point>& letters) {
    WordProduct p;
    p.atoms.reserve(letters.size());
    for (const Point& letter : letters)
        p.atoms.push_back(Atom::single(point_closure(x, letter)));
    return p;
}

bool wp_member(const Space& x, const std::vector<Point>& letters, const WordProduct& p) {
    return wp_leq(x, closure_fin_word(x, letters), p);
}

} // namespace srep
