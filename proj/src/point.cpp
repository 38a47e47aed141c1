#include "srep/point.hpp"

#include <algorithm>

#include "srep/core.hpp"
#include "srep/error.hpp"
#include "srep/omega.hpp"
#include "srep/words.hpp"

namespace srep {

Point Point::pair(Point first, Point second) {
    return Point{Pair{box<Point>(std::move(first)), box<Point>(std::move(second))}};
}
Point Point::left(Point inner) { return Point{Tag{false, box<Point>(std::move(inner))}}; }
Point Point::right(Point inner) { return Point{Tag{true, box<Point>(std::move(inner))}}; }
Point Point::word(std::vector<Point> letters) { return Point{Word{std::move(letters)}}; }
Point Point::set(std::vector<Point> members) { return Point{Set{std::move(members)}}; }
Point Point::up(UPWord w) { return Point{UP{box<UPWord>(std::move(w))}}; }

bool operator==(const UPWord& a, const UPWord& b) {
    return a.prefix == b.prefix && a.period == b.period;
}

bool operator==(const Point& a, const Point& b) {
    if (a.v.index() != b.v.index())
        return false;
    struct Eq {
        const Point& b;
        bool operator()(const Point::Elem& x) const { return x.id == std::get<Point::Elem>(b.v).id; }
        bool operator()(const Point::Pair& x) const {
            const auto& y = std::get<Point::Pair>(b.v);
            return *x.first == *y.first && *x.second == *y.second;
        }
        bool operator()(const Point::Tag& x) const {
            const auto& y = std::get<Point::Tag>(b.v);
            return x.right == y.right && *x.inner == *y.inner;
        }
        bool operator()(const Point::Word& x) const {
            return x.letters == std::get<Point::Word>(b.v).letters;
        }
        bool operator()(const Point::Set& x) const {
            return x.members == std::get<Point::Set>(b.v).members;
        }
        bool operator()(const Point::UP& x) const {
            return *x.word == *std::get<Point::UP>(b.v).word;
        }
    };
    return std::visit(Eq{b}, a.v);
}

namespace {

[[noreturn]] void point_error(const char* what) {
    throw usage_error(std::string("point does not match its space: ") + what);
}

} // namespace

void check_point(const Space& s, const Point& p) {
    switch (s.kind()) {
    case SpaceKind::Base: {
        auto* e = std::get_if<Point::Elem>(&p.v);
        if (!e)
            point_error("expected a base element");
        if (e->id < 0 || e->id >= s.poset().size())
            point_error("element id out of range");
        return;
    }
    case SpaceKind::Product: {
        auto* q = std::get_if<Point::Pair>(&p.v);
        if (!q)
            point_error("expected a pair");
        check_point(s.first(), *q->first);
        check_point(s.second(), *q->second);
        return;
    }
    case SpaceKind::Sum: {
        auto* t = std::get_if<Point::Tag>(&p.v);
        if (!t)
            point_error("expected a tagged point");
        check_point(t->right ? s.second() : s.first(), *t->inner);
        return;
    }
    case SpaceKind::Words: {
        auto* w = std::get_if<Point::Word>(&p.v);
        if (!w)
            point_error("expected a finite word");
        for (const Point& letter : w->letters)
            check_point(s.inner(), letter);
        return;
    }
    case SpaceKind::Pow: {
        auto* m = std::get_if<Point::Set>(&p.v);
        if (!m)
            point_error("expected a finite set");
        for (const Point& member : m->members)
            check_point(s.inner(), member);
        return;
    }
    case SpaceKind::FinInfWords:
    case SpaceKind::InfWords: {
        auto* u = std::get_if<Point::UP>(&p.v);
        if (!u)
            point_error("expected an ultimately periodic word");
        for (const Point& letter : u->word->prefix)
            check_point(s.inner(), letter);
        for (const Point& letter : u->word->period)
            check_point(s.inner(), letter);
        if (s.kind() == SpaceKind::InfWords && u->word->finite())
            point_error("a point of an infinite-words space needs a non-empty period");
        return;
    }
    }
    point_error("unknown space kind");
}

Code point_closure(const Space& s, const Point& p) {
    switch (s.kind()) {
    case SpaceKind::Base:
        return Code::elem(std::get<Point::Elem>(p.v).id);
    case SpaceKind::Product: {
        const auto& q = std::get<Point::Pair>(p.v);
        return Code::pair(point_closure(s.first(), *q.first), point_closure(s.second(), *q.second));
    }
    case SpaceKind::Sum: {
        const auto& t = std::get<Point::Tag>(p.v);
        Code inner = point_closure(t.right ? s.second() : s.first(), *t.inner);
        return t.right ? Code::right(std::move(inner)) : Code::left(std::move(inner));
    }
    case SpaceKind::Words:
        return Code::word(closure_fin_word(s.inner(), std::get<Point::Word>(p.v).letters));
    case SpaceKind::Pow: {
        std::vector<Code> closures;
        for (const Point& member : std::get<Point::Set>(p.v).members)
            closures.push_back(point_closure(s.inner(), member));
        return Code::fin(cs_reduce(s.inner(), closures));
    }
    case SpaceKind::FinInfWords:
    case SpaceKind::InfWords: {
        const UPWord& w = *std::get<Point::UP>(p.v).word;
        OmegaVariant variant = s.kind() == SpaceKind::InfWords ? OmegaVariant::InfOnly
                                                               : OmegaVariant::FinOrInf;
        OmegaCode c = up_closure(s.inner(), variant, w);
        return Code::omega(std::move(c.head), std::move(c.limit));
    }
    }
    point_error("unknown space kind");
}

bool point_member(const Space& s, const Point& p, const Code& c) {
    return code_leq(s, point_closure(s, p), c);
}

} // namespace srep
