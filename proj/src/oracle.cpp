#include "srep/oracle.hpp"

#include <algorithm>

#include "srep/error.hpp"

namespace srep::oracle {

std::vector<Word> enum_words(const FinitePoset& x, int max_len) {
    std::vector<Word> out;
    const int n = x.size();
    std::vector<Word> current{Word{}};
    out.push_back(Word{});
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        next.reserve(current.size() * static_cast<size_t>(n));
        for (const Word& w : current)
            for (ElemId e = 0; e < n; ++e) {
                Word w2 = w;
                w2.push_back(e);
                next.push_back(std::move(w2));
            }
        for (const Word& w : next)
            out.push_back(w);
        current = std::move(next);
    }
    return out;
}

std::vector<FlatUPWord> enum_upwords(const FinitePoset& x, int max_prefix, int max_period) {
    std::vector<FlatUPWord> out;
    std::vector<Word> prefixes = enum_words(x, max_prefix);
    std::vector<Word> periods = enum_words(x, max_period);
    for (const Word& prefix : prefixes)
        for (const Word& period : periods)
            out.push_back(FlatUPWord{prefix, period});
    return out;
}

namespace {

bool letter_in_atom(const FinitePoset& x, ElemId letter, const FlatAtom& atom) {
    for (ElemId e : atom.elems)
        if (x.leq(letter, e))
            return true;
    return false;
}

} // namespace

bool sem_member(const FinitePoset& x, const Word& w, const FlatWP& p) {
    const size_t len = w.size();
    const size_t m = p.size();
    // match[i][j]: the length-i prefix of w splits across the first j atoms.
    std::vector<std::vector<bool>> match(len + 1, std::vector<bool>(m + 1, false));
    match[0][0] = true;
    for (size_t j = 1; j <= m; ++j) {
        const FlatAtom& atom = p[j - 1];
        for (size_t i = 0; i <= len; ++i) {
            if (match[i][j - 1]) {
                match[i][j] = true; // the atom contributes the empty word
                continue;
            }
            if (i == 0)
                continue;
            if (!letter_in_atom(x, w[i - 1], atom))
                continue;
            if (atom.is_star ? match[i - 1][j] : match[i - 1][j - 1])
                match[i][j] = true;
        }
    }
    return match[len][m];
}

bool sem_subset(const FinitePoset& x, const FlatWP& p, const FlatWP& q) {
    const int bound = static_cast<int>(q.size()) + 1;
    for (const Word& w : enum_words(x, bound))
        if (sem_member(x, w, p) && !sem_member(x, w, q))
            return false;
    return true;
}

bool sem_subword(const FinitePoset& x, const Word& w, const Word& w2) {
    size_t j = 0;
    for (size_t i = 0; i < w2.size() && j < w.size(); ++i)
        if (x.leq(w[j], w2[i]))
            ++j;
    return j == w.size();
}

bool sem_inf_member(const FinitePoset& x, const FlatUPWord& w, const FlatOmega& c,
                    bool omega_only) {
    if (omega_only && w.period.empty())
        return false;
    FlatWP head_lang = c.head;
    head_lang.push_back(FlatAtom{true, c.limit});
    auto letter_at = [&](size_t i) -> ElemId {
        if (i < w.prefix.size())
            return w.prefix[i];
        return w.period[(i - w.prefix.size()) % w.period.size()];
    };
    auto below_limit = [&](ElemId e) {
        for (ElemId f : c.limit)
            if (x.leq(e, f))
                return true;
        return false;
    };
    // Splitting later than one full period past the last atom only repeats
    // letter multisets, so this bound is exhaustive.
    size_t max_split = w.period.empty()
                           ? w.prefix.size()
                           : w.prefix.size() + w.period.size() * (c.head.size() + 2);
    for (size_t n = 0; n <= max_split; ++n) {
        Word head(n);
        for (size_t i = 0; i < n; ++i)
            head[i] = letter_at(i);
        if (!sem_member(x, head, head_lang))
            continue;
        bool tail_ok = true;
        for (size_t i = n; i < w.prefix.size() && tail_ok; ++i)
            tail_ok = below_limit(w.prefix[i]);
        if (tail_ok && !w.period.empty())
            for (ElemId e : w.period) {
                if (!below_limit(e)) {
                    tail_ok = false;
                    break;
                }
            }
        if (tail_ok)
            return true;
    }
    return false;
}

ElemId FlatSpace::elem_of_point(const Point& p) const {
    for (size_t i = 0; i < points.size(); ++i)
        if (points[i] == p)
            return static_cast<ElemId>(i);
    throw usage_error("point is not an element of this finite space");
}

namespace {

Point point_of_code(const Code& c) {
    struct ToPoint {
        Point operator()(const Code::Elem& e) const { return Point::elem(e.id); }
        Point operator()(const Code::Pair& p) const {
            return Point::pair(point_of_code(*p.first), point_of_code(*p.second));
        }
        Point operator()(const Code::Tag& t) const {
            Point inner = point_of_code(*t.inner);
            return t.right ? Point::right(std::move(inner)) : Point::left(std::move(inner));
        }
        Point operator()(const WordProduct&) const {
            throw usage_error("not a code of a finite space");
        }
        Point operator()(const Code::Fin&) const {
            throw usage_error("not a code of a finite space");
        }
        Point operator()(const Code::Omega&) const {
            throw usage_error("not a code of a finite space");
        }
    };
    return std::visit(ToPoint{}, c.v);
}

} // namespace

ElemId FlatSpace::elem_of_code(const Code& c) const { return elem_of_point(point_of_code(c)); }

std::vector<ElemId> FlatSpace::elems_of_closed_set(const ClosedSet& f) const {
    std::vector<ElemId> out;
    out.reserve(f.size());
    for (const Code& c : f)
        out.push_back(elem_of_code(c));
    return out;
}

FlatWP FlatSpace::flat_wp(const WordProduct& p) const {
    FlatWP out;
    out.reserve(p.atoms.size());
    for (const Atom& a : p.atoms) {
        if (a.is_star)
            out.push_back(FlatAtom{true, elems_of_closed_set(a.star_set())});
        else
            out.push_back(FlatAtom{false, {elem_of_code(a.single_code())}});
    }
    return out;
}

FlatOmega FlatSpace::flat_omega(const Code::Omega& c) const {
    return FlatOmega{flat_wp(c.head), elems_of_closed_set(c.limit)};
}

Word FlatSpace::flat_word(const std::vector<Point>& letters) const {
    Word out;
    out.reserve(letters.size());
    for (const Point& p : letters)
        out.push_back(elem_of_point(p));
    return out;
}

FlatUPWord FlatSpace::flat_upword(const UPWord& w) const {
    return FlatUPWord{flat_word(w.prefix), flat_word(w.period)};
}

std::optional<FlatSpace> flatten(const Space& s) {
    switch (s.kind()) {
    case SpaceKind::Base: {
        FlatSpace flat;
        flat.poset = s.poset();
        for (ElemId e = 0; e < s.poset().size(); ++e)
            flat.points.push_back(Point::elem(e));
        return flat;
    }
    case SpaceKind::Product: {
        auto a = flatten(s.first());
        auto b = flatten(s.second());
        if (!a || !b)
            return std::nullopt;
        FlatSpace flat;
        std::vector<std::string> names;
        std::vector<std::pair<ElemId, ElemId>> rel;
        const int na = a->poset.size(), nb = b->poset.size();
        for (ElemId i = 0; i < na; ++i)
            for (ElemId j = 0; j < nb; ++j) {
                names.push_back("(" + a->poset.name(i) + "," + b->poset.name(j) + ")");
                flat.points.push_back(Point::pair(a->points[static_cast<size_t>(i)],
                                                  b->points[static_cast<size_t>(j)]));
            }
        for (ElemId i = 0; i < na; ++i)
            for (ElemId j = 0; j < nb; ++j)
                for (ElemId i2 = 0; i2 < na; ++i2)
                    for (ElemId j2 = 0; j2 < nb; ++j2)
                        if (a->poset.leq(i, i2) && b->poset.leq(j, j2))
                            rel.emplace_back(i * nb + j, i2 * nb + j2);
        flat.poset = FinitePoset::from_covers(std::move(names), rel);
        return flat;
    }
    case SpaceKind::Sum: {
        auto a = flatten(s.first());
        auto b = flatten(s.second());
        if (!a || !b)
            return std::nullopt;
        FlatSpace flat;
        std::vector<std::string> names;
        std::vector<std::pair<ElemId, ElemId>> rel;
        const int na = a->poset.size(), nb = b->poset.size();
        for (ElemId i = 0; i < na; ++i) {
            names.push_back("L." + a->poset.name(i));
            flat.points.push_back(Point::left(a->points[static_cast<size_t>(i)]));
        }
        for (ElemId j = 0; j < nb; ++j) {
            names.push_back("R." + b->poset.name(j));
            flat.points.push_back(Point::right(b->points[static_cast<size_t>(j)]));
        }
        for (ElemId i = 0; i < na; ++i)
            for (ElemId i2 = 0; i2 < na; ++i2)
                if (a->poset.leq(i, i2))
                    rel.emplace_back(i, i2);
        for (ElemId j = 0; j < nb; ++j)
            for (ElemId j2 = 0; j2 < nb; ++j2)
                if (b->poset.leq(j, j2))
                    rel.emplace_back(na + j, na + j2);
        flat.poset = FinitePoset::from_covers(std::move(names), rel);
        return flat;
    }
    default:
        return std::nullopt;
    }
}

} // namespace srep::oracle
