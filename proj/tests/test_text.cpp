#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "srep/text.hpp"

using namespace srep;
using namespace fx;

TEST_SUITE_BEGIN("text");

TEST_CASE("printing codes") {
    CHECK(print_code(*a2(), e(0)) == "a");
    SpaceRef p = Space::product(a2(), c2());
    CHECK(print_code(*p, Code::pair(e(0), e(1))) == "(a, b)");
    SpaceRef s = Space::sum(a2(), c2());
    CHECK(print_code(*s, Code::left(e(1))) == "L.b");
    CHECK(print_code(*s, Code::right(e(1))) == "R.b");
    SpaceRef w = Space::words(a2());
    CHECK(print_code(*w, Code::word(wp({}))) == "eps");
    CHECK(print_code(*w, Code::word(wp({single(0), star({0, 1})}))) == "a? {a,b}*");
    SpaceRef h = Space::pow(a2());
    CHECK(print_code(*h, Code::fin(cs({0, 1}))) == "pow{a,b}");
    CHECK(print_code(*h, Code::fin({})) == "pow{}");
    SpaceRef o = Space::inf_words(c2());
    CHECK(print_code(*o, Code::omega(wp({single(1)}), cs({0}))) == "(b?, {a})");
    SpaceRef fo = Space::fin_inf_words(c2());
    CHECK(print_code(*fo, Code::omega(wp({}), {})) == "(eps, {})");
}

TEST_CASE("printing points") {
    SpaceRef w = Space::words(a2());
    CHECK(print_point(*w, Point::word(word({0, 1}))) == "ab");
    CHECK(print_point(*w, Point::word({})) == "eps");
    SpaceRef o = Space::inf_words(a2());
    CHECK(print_point(*o, Point::up(up({1}, {0}))) == "b.(a)^w");
    CHECK(print_point(*o, Point::up(up({}, {0}))) == "eps.(a)^w");
    SpaceRef fo = Space::fin_inf_words(a2());
    CHECK(print_point(*fo, Point::up(up({0, 1}, {}))) == "ab");
    SpaceRef h = Space::pow(a2());
    CHECK(print_point(*h, Point::set({Point::elem(0), Point::elem(1)})) == "{a, b}");
}

TEST_CASE("parsing codes") {
    SpaceRef w = Space::words(a2());
    Code c = parse_code(*w, "a? {a,b}* b?");
    CHECK(c == Code::word(wp({single(0), star({0, 1}), single(1)})));
    CHECK(parse_code(*w, "eps") == Code::word(wp({})));

    SpaceRef o = Space::inf_words(c2());
    CHECK(parse_code(*o, "(b?, {a})") == Code::omega(wp({single(1)}), cs({0})));
    CHECK(parse_code(*o, "( b? ,{a} )") == Code::omega(wp({single(1)}), cs({0})));

    SpaceRef h = Space::pow(a2());
    CHECK(parse_code(*h, "pow{a,b}") == Code::fin(cs({0, 1})));
    CHECK(parse_code(*h, "pow{}") == Code::fin({}));

    SpaceRef p = Space::product(a2(), c2());
    CHECK(parse_code(*p, "(a, b)") == Code::pair(e(0), e(1)));

    SpaceRef s = Space::sum(a2(), c2());
    CHECK(parse_code(*s, "L.a") == Code::left(e(0)));
}

TEST_CASE("parse errors carry positions and codes") {
    SpaceRef w = Space::words(a2());
    CHECK_THROWS_AS(parse_code(*w, "a? ?"), diag_error);
    CHECK_THROWS_AS(parse_code(*w, "z?"), diag_error);
    try {
        parse_code(*w, "z?");
        FAIL("expected a diagnostic");
    } catch (const diag_error& e) {
        CHECK(e.diag.code == DIAG_UNKNOWN);
        CHECK(e.diag.col == 1);
    }
    SpaceRef o = Space::inf_words(a2());
    try {
        parse_code(*o, "(eps, {})");
        FAIL("expected a diagnostic");
    } catch (const diag_error& e) {
        CHECK(e.diag.code == DIAG_EMPTY_LIMIT);
    }
}

TEST_CASE("parsing star sets reduces them") {
    SpaceRef w = Space::words(c2());
    // a below b, so {a,b}* stores as {b}*
    CHECK(parse_code(*w, "{a,b}*") == Code::word(wp({star({1})})));
}

TEST_CASE("word points parse compactly and bracketed") {
    SpaceRef w = Space::words(a2());
    CHECK(parse_point(*w, "ab") == Point::word(word({0, 1})));
    CHECK(parse_point(*w, "[a, b]") == Point::word(word({0, 1})));
    CHECK(parse_point(*w, "eps") == Point::word({}));
    SpaceRef o = Space::fin_inf_words(a2());
    CHECK(parse_point(*o, "ab.(ba)^w") == Point::up(up({0, 1}, {1, 0})));
    CHECK(parse_point(*o, "ab") == Point::up(up({0, 1}, {})));
    CHECK_THROWS_AS(parse_point(*Space::inf_words(a2()), "ab"), diag_error);
}

namespace {

// random code generator per space, for round-trip checks
Code random_code(std::mt19937& rng, const Space& s, int depth = 0);

ClosedSet random_set(std::mt19937& rng, const Space& s, int depth, int max_size) {
    std::vector<Code> codes;
    int k = static_cast<int>(rng() % static_cast<unsigned>(max_size + 1));
    for (int i = 0; i < k; ++i)
        codes.push_back(random_code(rng, s, depth));
    return cs_reduce(s, codes);
}

Code random_code(std::mt19937& rng, const Space& s, int depth) {
    switch (s.kind()) {
    case SpaceKind::Base:
        return Code::elem(static_cast<int>(rng() % static_cast<unsigned>(s.poset().size())));
    case SpaceKind::Product:
        return Code::pair(random_code(rng, s.first(), depth + 1),
                          random_code(rng, s.second(), depth + 1));
    case SpaceKind::Sum:
        return rng() % 2 ? Code::right(random_code(rng, s.second(), depth + 1))
                         : Code::left(random_code(rng, s.first(), depth + 1));
    case SpaceKind::Words: {
        std::vector<Atom> atoms;
        int len = static_cast<int>(rng() % 3);
        for (int i = 0; i < len; ++i) {
            if (rng() % 2)
                atoms.push_back(Atom::single(random_code(rng, s.inner(), depth + 1)));
            else {
                ClosedSet f = random_set(rng, s.inner(), depth + 1, 2);
                if (!f.empty())
                    atoms.push_back(Atom::star(std::move(f)));
            }
        }
        return Code::word(wp_of(std::move(atoms)));
    }
    case SpaceKind::Pow:
        return Code::fin(random_set(rng, s.inner(), depth + 1, 2));
    case SpaceKind::FinInfWords:
    case SpaceKind::InfWords: {
        WordProduct head;
        int len = static_cast<int>(rng() % 2);
        for (int i = 0; i < len; ++i)
            head.atoms.push_back(Atom::single(random_code(rng, s.inner(), depth + 1)));
        ClosedSet limit = random_set(rng, s.inner(), depth + 1, 2);
        while (s.kind() == SpaceKind::InfWords && limit.empty()) {
            limit = cs_reduce(s.inner(), {random_code(rng, s.inner(), depth + 1)});
        }
        return Code::omega(std::move(head), std::move(limit));
    }
    }
    return Code::elem(0);
}

} // namespace

TEST_CASE("round trip: parse after print is the identity") {
    std::mt19937 rng(97);
    std::vector<SpaceRef> spaces = {
        a2(),
        c2(),
        v3(),
        Space::product(a2(), c2()),
        Space::sum(c2(), v3()),
        Space::words(a2()),
        Space::words(Space::product(a2(), c2())),
        Space::words(Space::words(a2())),
        Space::pow(a2()),
        Space::pow(Space::words(a2())),
        Space::fin_inf_words(c2()),
        Space::inf_words(a2()),
        Space::inf_words(Space::sum(a2(), c2())),
        Space::inf_words(Space::words(a2())),
        Space::words(Space::inf_words(a2())),
        Space::pow(Space::inf_words(c2())),
    };
    for (const SpaceRef& s : spaces)
        for (int trial = 0; trial < 60; ++trial) {
            Code c = random_code(rng, *s);
            std::string text = print_code(*s, c);
            CAPTURE(text);
            Code back = parse_code(*s, text);
            CHECK(back == c);
        }
}

namespace {

Point random_point(std::mt19937& rng, const Space& s, int depth = 0) {
    switch (s.kind()) {
    case SpaceKind::Base:
        return Point::elem(static_cast<int>(rng() % static_cast<unsigned>(s.poset().size())));
    case SpaceKind::Product:
        return Point::pair(random_point(rng, s.first(), depth + 1),
                           random_point(rng, s.second(), depth + 1));
    case SpaceKind::Sum:
        return rng() % 2 ? Point::right(random_point(rng, s.second(), depth + 1))
                         : Point::left(random_point(rng, s.first(), depth + 1));
    case SpaceKind::Words: {
        std::vector<Point> letters;
        int len = static_cast<int>(rng() % 4);
        for (int i = 0; i < len; ++i)
            letters.push_back(random_point(rng, s.inner(), depth + 1));
        return Point::word(std::move(letters));
    }
    case SpaceKind::Pow: {
        std::vector<Point> members;
        int len = static_cast<int>(rng() % 3);
        for (int i = 0; i < len; ++i) {
            Point p = random_point(rng, s.inner(), depth + 1);
            bool fresh = true;
            for (const Point& seen : members)
                fresh &= !(seen == p);
            if (fresh)
                members.push_back(std::move(p));
        }
        return Point::set(std::move(members));
    }
    case SpaceKind::FinInfWords:
    case SpaceKind::InfWords: {
        UPWord w;
        int np = static_cast<int>(rng() % 3);
        for (int i = 0; i < np; ++i)
            w.prefix.push_back(random_point(rng, s.inner(), depth + 1));
        int nq = static_cast<int>(rng() % 3);
        if (s.kind() == SpaceKind::InfWords && nq == 0)
            nq = 1;
        for (int i = 0; i < nq; ++i)
            w.period.push_back(random_point(rng, s.inner(), depth + 1));
        return Point::up(std::move(w));
    }
    }
    return Point::elem(0);
}

} // namespace

TEST_CASE("point round trip: parse after print is the identity") {
    std::mt19937 rng(131);
    std::vector<SpaceRef> spaces = {
        a2(),
        Space::product(a2(), c2()),
        Space::sum(c2(), a2()),
        Space::words(a2()),
        Space::words(Space::product(a2(), c2())),
        Space::words(Space::words(a2())),
        Space::pow(a2()),
        Space::pow(Space::words(c2())),
        Space::fin_inf_words(a2()),
        Space::inf_words(c2()),
        Space::inf_words(Space::sum(a2(), c2())),
    };
    for (const SpaceRef& s : spaces)
        for (int trial = 0; trial < 60; ++trial) {
            Point p = random_point(rng, *s);
            std::string text = print_point(*s, p);
            CAPTURE(text);
            Point back = parse_point(*s, text);
            CHECK(back == p);
        }
}

TEST_SUITE_END();
