#include "srep/omega.hpp"

#include <algorithm>

#include "srep/core.hpp"
#include "srep/error.hpp"
#include "srep/words.hpp"

namespace srep {

namespace {

void check_variant(OmegaVariant variant, const OmegaCode& c) {
    if (variant == OmegaVariant::InfOnly && c.limit.empty())
        throw usage_error("infinite-words code needs a non-empty limit set");
}

} // namespace

bool inf_leq(const Space& x, OmegaVariant variant, const OmegaCode& c, const OmegaCode& d) {
    check_variant(variant, c);
    check_variant(variant, d);
    return wp_leq(x, wp_with_trailing_star(c.head, c.limit),
                  wp_with_trailing_star(d.head, d.limit)) &&
           cs_leq(x, c.limit, d.limit);
}

std::vector<OmegaCode> inf_meet(const Space& x, OmegaVariant variant, const OmegaCode& c,
                                const OmegaCode& d) {
    check_variant(variant, c);
    check_variant(variant, d);
    ClosedSet limit = cs_inter(x, c.limit, d.limit);
    if (limit.empty() && variant == OmegaVariant::InfOnly)
        return {}; // no infinite word has a suffix over an empty set of letters
    std::vector<WordProduct> raw = wp_meet(x, wp_with_trailing_star(c.head, c.limit),
                                           wp_with_trailing_star(d.head, d.limit));
    std::vector<OmegaCode> out;
    for (WordProduct& p : raw) {
        if (!limit.empty()) {
            // Every element of the meet of two star-tailed products must end
            // with the star of the intersected star sets; anything else means
            // the subsumption discipline in wp_meet was weakened.
            if (p.atoms.empty() || !p.atoms.back().is_star ||
                !cs_equiv(x, p.atoms.back().star_set(), limit))
                throw invariant_error("word-product meet lost its trailing star");
            p.atoms.pop_back();
        }
        out.push_back(OmegaCode{std::move(p), limit});
    }
    return inf_reduce(x, variant, out);
}

OmegaCode inf_top(const Space& x) {
    return OmegaCode{wp_epsilon(), space_top(x)};
}

std::vector<OmegaCode> inf_reduce(const Space& x, OmegaVariant variant,
                                  const std::vector<OmegaCode>& cs) {
    std::vector<OmegaCode> kept;
    for (const OmegaCode& c : cs) {
        bool dominated = false;
        for (const OmegaCode& k : kept)
            if (inf_leq(x, variant, c, k)) {
                dominated = true;
                break;
            }
        if (dominated)
            continue;
        std::erase_if(kept, [&](const OmegaCode& k) { return inf_leq(x, variant, k, c); });
        kept.push_back(c);
    }
    std::sort(kept.begin(), kept.end(), [](const OmegaCode& a, const OmegaCode& b) {
        if (int c = compare(a.head, b.head))
            return c < 0;
        return compare(a.limit, b.limit) < 0;
    });
    return kept;
}

ClosedSet up_suf(const Space& x, const UPWord& w) {
    std::vector<Code> closures;
    for (const Point& letter : w.period)
        closures.push_back(point_closure(x, letter));
    return cs_reduce(x, closures);
}

WordProduct up_pref(const Space& x, const UPWord& w) {
    WordProduct p = closure_fin_word(x, w.prefix);
    if (!w.finite())
        p.atoms.push_back(Atom::star(up_suf(x, w)));
    return wp_canon(x, std::move(p));
}

OmegaCode up_closure(const Space& x, OmegaVariant variant, const UPWord& w) {
    if (variant == OmegaVariant::InfOnly && w.finite())
        throw usage_error("a finite word has no closure among infinite words");
    ClosedSet suf = up_suf(x, w);
    if (suf.empty())
        return OmegaCode{closure_fin_word(x, w.prefix), {}};
    // Prefix atoms already below the limit set are redundant: canonicalize
    // the star-tailed product, then take the star back off.  The prefix part
    // contains no stars, so the trailing star can only absorb singles and
    // comes back out unchanged.
    WordProduct p = wp_canon(x, wp_with_trailing_star(closure_fin_word(x, w.prefix), suf));
    if (p.atoms.empty() || !p.atoms.back().is_star)
        throw invariant_error("canonicalization dropped the trailing star");
    p.atoms.pop_back();
    return OmegaCode{std::move(p), std::move(suf)};
}

bool inf_member(const Space& x, OmegaVariant variant, const UPWord& w, const OmegaCode& c) {
    check_variant(variant, c);
    if (variant == OmegaVariant::InfOnly && w.finite())
        throw usage_error("membership in an infinite-words code needs an infinite word");
    return wp_leq(x, up_pref(x, w), wp_with_trailing_star(c.head, c.limit)) &&
           cs_leq(x, up_suf(x, w), c.limit);
}

bool up_subword_leq(const Space& x, const UPWord& w, const UPWord& w2) {
    return inf_member(x, OmegaVariant::FinOrInf, w, up_closure(x, OmegaVariant::FinOrInf, w2));
}

} // namespace srep
