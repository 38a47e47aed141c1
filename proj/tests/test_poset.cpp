#include <doctest.h>

#include "srep/error.hpp"
#include "srep/poset.hpp"

using namespace srep;

TEST_SUITE_BEGIN("poset");

TEST_CASE("covers close transitively and reflexively") {
    // a < b < c, one cover each
    FinitePoset p = FinitePoset::from_covers({"a", "b", "c"}, {{0, 1}, {1, 2}});
    CHECK(p.leq(0, 0));
    CHECK(p.leq(0, 1));
    CHECK(p.leq(0, 2)); // via b
    CHECK(p.leq(1, 2));
    CHECK_FALSE(p.leq(2, 0));
    CHECK_FALSE(p.leq(1, 0));
}

TEST_CASE("cycles are rejected") {
    CHECK_THROWS_AS(FinitePoset::from_covers({"a", "b"}, {{0, 1}, {1, 0}}), usage_error);
}

TEST_CASE("maximal elements") {
    FinitePoset v = FinitePoset::from_covers({"a", "b", "c"}, {{0, 2}, {1, 2}});
    CHECK(v.maximal() == std::vector<ElemId>{2});
    CHECK(FinitePoset::antichain2().maximal() == std::vector<ElemId>{0, 1});
    CHECK(FinitePoset::chain2().maximal() == std::vector<ElemId>{1});
}

TEST_CASE("name lookup") {
    FinitePoset p = FinitePoset::antichain2();
    CHECK(p.find("a") == 0);
    CHECK(p.find("b") == 1);
    CHECK_FALSE(p.find("z").has_value());
}

TEST_SUITE_END();
