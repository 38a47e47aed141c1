#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "srep/error.hpp"
#include "srep/oracle.hpp"

using namespace srep;
using namespace fx;

TEST_SUITE_BEGIN("omega");

namespace {

OmegaCode oc(WordProduct head, ClosedSet limit) { return OmegaCode{std::move(head), std::move(limit)}; }

} // namespace

TEST_CASE("inf_leq examples") {
    SpaceRef x = a2();
    CHECK(inf_leq(*x, OmegaVariant::FinOrInf, oc(wp({}), cs({0})), oc(wp({}), cs({0, 1}))));
    CHECK_FALSE(inf_leq(*x, OmegaVariant::FinOrInf, oc(wp({}), cs({0, 1})), oc(wp({}), cs({0}))));
    // over C2, down(b) is the whole space
    CHECK(inf_leq(*c2(), OmegaVariant::InfOnly, oc(wp({single(1)}), cs({0})),
                  oc(wp({}), cs({1}))));
}

TEST_CASE("inf_meet examples") {
    SpaceRef x = a2();
    // fin-or-inf: a-words meet b-words = {eps}
    auto m = inf_meet(*x, OmegaVariant::FinOrInf, oc(wp({}), cs({0})), oc(wp({}), cs({1})));
    REQUIRE(m.size() == 1);
    CHECK(m.front().head == wp({}));
    CHECK(m.front().limit.empty());

    // omega variant: empty limit intersection kills everything
    auto m2 = inf_meet(*x, OmegaVariant::InfOnly, oc(wp({}), cs({0})), oc(wp({}), cs({1})));
    CHECK(m2.empty());

    // over C2: the right operand covers the space
    auto m3 = inf_meet(*c2(), OmegaVariant::InfOnly, oc(wp({single(1)}), cs({0})),
                       oc(wp({}), cs({1})));
    REQUIRE(m3.size() == 1);
    CHECK(m3.front().head == wp({single(1)}));
    CHECK(m3.front().limit == cs({0}));
}

TEST_CASE("inf_top") {
    CHECK(inf_top(*a2()).head == wp({}));
    CHECK(inf_top(*a2()).limit == cs({0, 1}));
    CHECK(inf_top(*c2()).limit == cs({1}));
    SpaceRef s = Space::sum(a2(), a2());
    CHECK(inf_top(*s).limit.size() == 4);
}

TEST_CASE("up_suf") {
    SpaceRef x = a2();
    CHECK(up_suf(*x, up({0, 1}, {})).empty());
    CHECK(up_suf(*x, up({0}, {1})) == cs({1}));
    // over C2 the two period letters reduce to the larger
    CHECK(up_suf(*c2(), up({}, {0, 1})) == cs({1}));
}

TEST_CASE("up_pref") {
    CHECK(up_pref(*a2(), up({0}, {1})) == wp({single(0), star({1})}));
    CHECK(up_pref(*a2(), up({0, 1}, {})) == wp({single(0), single(1)}));
    // over C2 the a? head is absorbed into {b}*
    CHECK(up_pref(*c2(), up({0}, {1})) == wp({star({1})}));
}

TEST_CASE("up_closure") {
    SpaceRef x = a2();
    OmegaCode c = up_closure(*x, OmegaVariant::InfOnly, up({}, {0, 1}));
    CHECK(c.head == wp({}));
    CHECK(c.limit == cs({0, 1}));

    c = up_closure(*x, OmegaVariant::InfOnly, up({}, {0}));
    CHECK(c.head == wp({}));
    CHECK(c.limit == cs({0}));

    c = up_closure(*c2(), OmegaVariant::InfOnly, up({1}, {0}));
    CHECK(c.head == wp({single(1)}));
    CHECK(c.limit == cs({0}));

    // redundant leading atoms below the limit are absorbed
    c = up_closure(*c2(), OmegaVariant::InfOnly, up({0}, {1}));
    CHECK(c.head == wp({}));
    CHECK(c.limit == cs({1}));

    CHECK_THROWS_AS(up_closure(*x, OmegaVariant::InfOnly, up({0}, {})), usage_error);
    // fin-or-inf closure of a finite word keeps an empty limit
    c = up_closure(*x, OmegaVariant::FinOrInf, up({0, 1}, {}));
    CHECK(c.head == wp({single(0), single(1)}));
    CHECK(c.limit.empty());
}

TEST_CASE("inf_member examples") {
    SpaceRef x = a2();
    CHECK(inf_member(*x, OmegaVariant::FinOrInf, up({}, {}), oc(wp({}), {})));
    CHECK(inf_member(*x, OmegaVariant::InfOnly, up({}, {0}), oc(wp({}), cs({0, 1}))));
    CHECK_FALSE(inf_member(*x, OmegaVariant::InfOnly, up({1}, {0}), oc(wp({}), cs({0}))));
    CHECK(inf_member(*c2(), OmegaVariant::InfOnly, up({1}, {0}), oc(wp({single(1)}), cs({0}))));
}

TEST_CASE("up_subword_leq examples") {
    SpaceRef x = a2();
    CHECK(up_subword_leq(*x, up({1}, {0}), up({1}, {0})));
    CHECK(up_subword_leq(*x, up({}, {0}), up({}, {0, 1})));
    CHECK_FALSE(up_subword_leq(*x, up({1}, {0}), up({}, {0})));
    CHECK_FALSE(up_subword_leq(*c2(), up({}, {1}), up({}, {0})));
    CHECK(up_subword_leq(*c2(), up({}, {0}), up({}, {1})));
}

TEST_CASE("inf_meet refuses to lose the trailing star") {
    // Nothing should throw on well-formed inputs; this exercises the check.
    SpaceRef x = v3();
    auto m = inf_meet(*x, OmegaVariant::FinOrInf, oc(wp({single(2)}), cs({0, 1})),
                      oc(wp({}), cs({2})));
    for (const OmegaCode& c : m)
        CHECK(cs_leq(*x, c.limit, cs({0, 1})));
}

namespace {

// Independent subword test on UP words: greedy embedding, unrolling the
// right word far enough that another period cannot help.
bool up_embed(const FinitePoset& poset, const oracle::FlatUPWord& w,
              const oracle::FlatUPWord& w2) {
    auto letter_at = [](const oracle::FlatUPWord& u, size_t i) -> ElemId {
        if (i < u.prefix.size())
            return u.prefix[i];
        return u.period[(i - u.prefix.size()) % u.period.size()];
    };
    if (!w.period.empty()) {
        for (ElemId x : w.period) {
            bool dominated = false;
            for (ElemId y : w2.period)
                dominated |= poset.leq(x, y);
            if (!dominated)
                return false;
        }
    }
    const std::vector<ElemId>& need = w.prefix;
    size_t limit = w2.prefix.size() + (w2.period.empty() ? 0 : w2.period.size() * (need.size() + 1));
    size_t j = 0;
    for (size_t i = 0; i < limit && j < need.size(); ++i)
        if (poset.leq(need[j], letter_at(w2, i)))
            ++j;
    if (w.period.empty()) {
        // also embed nothing more: the prefix is the whole word
        return j == need.size();
    }
    return j == need.size();
}

} // namespace

TEST_CASE("closure law against the greedy embedding oracle") {
    std::mt19937 rng(37);
    for (const SpaceRef& x : {a2(), c2()}) {
        auto flat = oracle::flatten(*x);
        REQUIRE(flat.has_value());
        auto ups = oracle::enum_upwords(flat->poset, 2, 2);
        for (int trial = 0; trial < 250; ++trial) {
            const auto& fw = ups[rng() % ups.size()];
            const auto& fw2 = ups[rng() % ups.size()];
            UPWord w{word(std::vector<int>(fw.prefix.begin(), fw.prefix.end())),
                     word(std::vector<int>(fw.period.begin(), fw.period.end()))};
            UPWord w2{word(std::vector<int>(fw2.prefix.begin(), fw2.prefix.end())),
                      word(std::vector<int>(fw2.period.begin(), fw2.period.end()))};
            CHECK(up_subword_leq(*x, w, w2) == up_embed(flat->poset, fw, fw2));
        }
    }
}

TEST_CASE("period unrolling does not change the closure") {
    std::mt19937 rng(41);
    for (const SpaceRef& x : {a2(), c2(), v3()}) {
        auto flat = oracle::flatten(*x);
        auto ups = oracle::enum_upwords(flat->poset, 2, 2);
        for (int trial = 0; trial < 200; ++trial) {
            const auto& fw = ups[rng() % ups.size()];
            if (fw.period.empty())
                continue;
            std::vector<int> period(fw.period.begin(), fw.period.end());
            std::vector<int> doubled = period;
            doubled.insert(doubled.end(), period.begin(), period.end());
            UPWord w{word(std::vector<int>(fw.prefix.begin(), fw.prefix.end())), word(period)};
            UPWord wd{word(std::vector<int>(fw.prefix.begin(), fw.prefix.end())), word(doubled)};
            OmegaCode c = up_closure(*x, OmegaVariant::InfOnly, w);
            OmegaCode cd = up_closure(*x, OmegaVariant::InfOnly, wd);
            CHECK(inf_leq(*x, OmegaVariant::InfOnly, c, cd));
            CHECK(inf_leq(*x, OmegaVariant::InfOnly, cd, c));
        }
    }
}

TEST_CASE("omega inclusion over a sum alphabet matches sampled flat containment") {
    SpaceRef x = Space::sum(a2(), c2());
    auto flat = oracle::flatten(*x);
    REQUIRE(flat.has_value());
    const int n = flat->poset.size();

    std::vector<Code> closures;
    for (int i = 0; i < n; ++i)
        closures.push_back(point_closure(*x, flat->points[static_cast<size_t>(i)]));
    std::vector<WordProduct> heads{wp({})};
    for (const Code& c : closures)
        heads.push_back(wp_of({Atom::single(c)}));
    std::vector<ClosedSet> limits;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<Code> gens;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                gens.push_back(closures[static_cast<size_t>(i)]);
        ClosedSet f = cs_reduce(*x, gens);
        bool fresh = true;
        for (const ClosedSet& seen : limits)
            fresh &= !(compare(seen, f) == 0);
        if (fresh)
            limits.push_back(f);
    }
    std::vector<OmegaCode> codes;
    for (const WordProduct& h : heads)
        for (const ClosedSet& l : limits)
            codes.push_back(OmegaCode{h, l});

    // a failed inclusion against a one-atom head always has a witness with
    // prefix length at most three and a one-letter period
    auto ups = oracle::enum_upwords(flat->poset, 3, 2);
    std::vector<std::vector<bool>> members(codes.size());
    for (size_t i = 0; i < codes.size(); ++i) {
        auto fc = flat->flat_omega(codes[i]);
        members[i].resize(ups.size());
        for (size_t k = 0; k < ups.size(); ++k)
            members[i][k] = oracle::sem_inf_member(flat->poset, ups[k], fc, false);
    }
    long disagreements = 0;
    for (size_t i = 0; i < codes.size(); ++i)
        for (size_t j = 0; j < codes.size(); ++j) {
            bool contained = true;
            for (size_t k = 0; k < ups.size(); ++k)
                if (members[i][k] && !members[j][k])
                    contained = false;
            if (inf_leq(*x, OmegaVariant::FinOrInf, codes[i], codes[j]) != contained)
                ++disagreements;
        }
    CHECK(disagreements == 0);
}

TEST_CASE("pref/suf membership agrees with the split-search oracle") {
    std::mt19937 rng(43);
    for (const SpaceRef& x : {a2(), c2()}) {
        auto flat = oracle::flatten(*x);
        auto ups = oracle::enum_upwords(flat->poset, 3, 2);
        auto products = std::vector<WordProduct>{
            wp({}), wp({single(0)}), wp({star({0})}), wp({single(1), star({0})})};
        std::vector<ClosedSet> limits = {{}, cs({0}), cs({1}), cs_reduce(*x, cs({0, 1}))};
        for (int trial = 0; trial < 400; ++trial) {
            const auto& fw = ups[rng() % ups.size()];
            const WordProduct& head = products[rng() % products.size()];
            const ClosedSet& limit = limits[rng() % limits.size()];
            UPWord w{word(std::vector<int>(fw.prefix.begin(), fw.prefix.end())),
                     word(std::vector<int>(fw.period.begin(), fw.period.end()))};
            bool got = inf_member(*x, OmegaVariant::FinOrInf, w, oc(head, limit));
            bool want = oracle::sem_inf_member(
                flat->poset, fw, oracle::FlatOmega{flat->flat_wp(head),
                                                   flat->elems_of_closed_set(limit)},
                false);
            CHECK(got == want);
        }
    }
}

TEST_SUITE_END();
