#include "srep/core.hpp"

#include <algorithm>

#include "srep/error.hpp"
#include "srep/omega.hpp"
#include "srep/powerset.hpp"
#include "srep/words.hpp"

namespace srep {

namespace {

[[noreturn]] void shape_error(const char* what) {
    throw usage_error(std::string("code does not match its space: ") + what);
}

const Code::Elem& as_elem(const Code& c) {
    if (auto* e = std::get_if<Code::Elem>(&c.v))
        return *e;
    shape_error("expected a base element code");
}

const Code::Pair& as_pair(const Code& c) {
    if (auto* p = std::get_if<Code::Pair>(&c.v))
        return *p;
    shape_error("expected a pair code");
}

const Code::Tag& as_tag(const Code& c) {
    if (auto* t = std::get_if<Code::Tag>(&c.v))
        return *t;
    shape_error("expected a tagged code");
}

const WordProduct& as_wp(const Code& c) {
    if (auto* w = std::get_if<WordProduct>(&c.v))
        return *w;
    shape_error("expected a word product code");
}

const Code::Fin& as_fin(const Code& c) {
    if (auto* f = std::get_if<Code::Fin>(&c.v))
        return *f;
    shape_error("expected a powerset code");
}

const Code::Omega& as_omega(const Code& c) {
    if (auto* o = std::get_if<Code::Omega>(&c.v))
        return *o;
    shape_error("expected an omega code");
}

OmegaVariant variant_of(const Space& s) {
    return s.kind() == SpaceKind::InfWords ? OmegaVariant::InfOnly : OmegaVariant::FinOrInf;
}

} // namespace

bool code_leq(const Space& s, const Code& a, const Code& b) {
    switch (s.kind()) {
    case SpaceKind::Base:
        return s.poset().leq(as_elem(a).id, as_elem(b).id);
    case SpaceKind::Product: {
        const auto& pa = as_pair(a);
        const auto& pb = as_pair(b);
        return code_leq(s.first(), *pa.first, *pb.first) &&
               code_leq(s.second(), *pa.second, *pb.second);
    }
    case SpaceKind::Sum: {
        const auto& ta = as_tag(a);
        const auto& tb = as_tag(b);
        return ta.right == tb.right &&
               code_leq(ta.right ? s.second() : s.first(), *ta.inner, *tb.inner);
    }
    case SpaceKind::Words:
        return wp_leq(s.inner(), as_wp(a), as_wp(b));
    case SpaceKind::Pow:
        return pow_leq(s.inner(), as_fin(a), as_fin(b));
    case SpaceKind::FinInfWords:
    case SpaceKind::InfWords:
        return inf_leq(s.inner(), variant_of(s), as_omega(a), as_omega(b));
    }
    shape_error("unknown space kind");
}

ClosedSet code_meet(const Space& s, const Code& a, const Code& b) {
    switch (s.kind()) {
    case SpaceKind::Base: {
        // Maximal elements of the intersection of the two principal ideals.
        const auto& poset = s.poset();
        ElemId x = as_elem(a).id, y = as_elem(b).id;
        std::vector<ElemId> below;
        for (ElemId z = 0; z < poset.size(); ++z)
            if (poset.leq(z, x) && poset.leq(z, y))
                below.push_back(z);
        ClosedSet out;
        for (ElemId z : below) {
            bool maximal = true;
            for (ElemId z2 : below)
                if (z != z2 && poset.leq(z, z2)) {
                    maximal = false;
                    break;
                }
            if (maximal)
                out.push_back(Code::elem(z));
        }
        std::sort(out.begin(), out.end(), CodeLess{});
        return out;
    }
    case SpaceKind::Product: {
        const auto& pa = as_pair(a);
        const auto& pb = as_pair(b);
        ClosedSet firsts = code_meet(s.first(), *pa.first, *pb.first);
        ClosedSet seconds = code_meet(s.second(), *pa.second, *pb.second);
        std::vector<Code> out;
        for (const Code& f : firsts)
            for (const Code& g : seconds)
                out.push_back(Code::pair(f, g));
        return cs_reduce(s, out);
    }
    case SpaceKind::Sum: {
        const auto& ta = as_tag(a);
        const auto& tb = as_tag(b);
        if (ta.right != tb.right)
            return {};
        ClosedSet inner = code_meet(ta.right ? s.second() : s.first(), *ta.inner, *tb.inner);
        ClosedSet out;
        for (const Code& c : inner)
            out.push_back(ta.right ? Code::right(c) : Code::left(c));
        std::sort(out.begin(), out.end(), CodeLess{});
        return out;
    }
    case SpaceKind::Words: {
        std::vector<WordProduct> ps = wp_meet(s.inner(), as_wp(a), as_wp(b));
        ClosedSet out;
        for (auto& p : ps)
            out.push_back(Code::word(std::move(p)));
        std::sort(out.begin(), out.end(), CodeLess{});
        return out;
    }
    case SpaceKind::Pow: {
        std::vector<Code::Fin> fs = pow_meet(s.inner(), as_fin(a), as_fin(b));
        ClosedSet out;
        for (auto& f : fs)
            out.push_back(Code::fin(std::move(f.body)));
        return out;
    }
    case SpaceKind::FinInfWords:
    case SpaceKind::InfWords: {
        std::vector<OmegaCode> cs = inf_meet(s.inner(), variant_of(s), as_omega(a), as_omega(b));
        ClosedSet out;
        for (auto& c : cs)
            out.push_back(Code::omega(std::move(c.head), std::move(c.limit)));
        std::sort(out.begin(), out.end(), CodeLess{});
        return out;
    }
    }
    shape_error("unknown space kind");
}

ClosedSet space_top(const Space& s) { return s.top(); }

ClosedSet detail::compute_space_top(const Space& s) {
    switch (s.kind()) {
    case SpaceKind::Base: {
        ClosedSet out;
        for (ElemId e : s.poset().maximal())
            out.push_back(Code::elem(e));
        std::sort(out.begin(), out.end(), CodeLess{});
        return out;
    }
    case SpaceKind::Product: {
        std::vector<Code> out;
        for (const Code& f : s.first().top())
            for (const Code& g : s.second().top())
                out.push_back(Code::pair(f, g));
        return cs_reduce(s, out);
    }
    case SpaceKind::Sum: {
        ClosedSet out;
        for (const Code& c : s.first().top())
            out.push_back(Code::left(c));
        for (const Code& c : s.second().top())
            out.push_back(Code::right(c));
        std::sort(out.begin(), out.end(), CodeLess{});
        return out;
    }
    case SpaceKind::Words:
        return {Code::word(wp_top(s.inner()))};
    case SpaceKind::Pow:
        return {Code::fin(s.inner().top())};
    case SpaceKind::FinInfWords:
    case SpaceKind::InfWords: {
        ClosedSet inner_top = s.inner().top();
        if (inner_top.empty() && s.kind() == SpaceKind::InfWords)
            return {}; // no infinite words over an empty alphabet
        return {Code::omega(wp_epsilon(), std::move(inner_top))};
    }
    }
    shape_error("unknown space kind");
}

bool cs_leq(const Space& s, const ClosedSet& c, const ClosedSet& d) {
    for (const Code& a : c) {
        bool covered = false;
        for (const Code& b : d)
            if (code_leq(s, a, b)) {
                covered = true;
                break;
            }
        if (!covered)
            return false;
    }
    return true;
}

ClosedSet cs_inter(const Space& s, const ClosedSet& c, const ClosedSet& d) {
    std::vector<Code> out;
    for (const Code& a : c)
        for (const Code& b : d)
            for (Code& m : code_meet(s, a, b))
                out.push_back(std::move(m));
    return cs_reduce(s, out);
}

ClosedSet cs_reduce(const Space& s, const std::vector<Code>& codes) {
    ClosedSet kept;
    for (const Code& c : codes) {
        bool dominated = false;
        for (const Code& k : kept)
            if (code_leq(s, c, k)) {
                dominated = true;
                break;
            }
        if (dominated)
            continue;
        std::erase_if(kept, [&](const Code& k) { return code_leq(s, k, c); });
        kept.push_back(c);
    }
    std::sort(kept.begin(), kept.end(), CodeLess{});
    return kept;
}

bool cs_equiv(const Space& s, const ClosedSet& c, const ClosedSet& d) {
    return cs_leq(s, c, d) && cs_leq(s, d, c);
}

void check_code(const Space& s, const Code& c) {
    switch (s.kind()) {
    case SpaceKind::Base: {
        const auto& e = as_elem(c);
        if (e.id < 0 || e.id >= s.poset().size())
            shape_error("element id out of range");
        return;
    }
    case SpaceKind::Product: {
        const auto& p = as_pair(c);
        check_code(s.first(), *p.first);
        check_code(s.second(), *p.second);
        return;
    }
    case SpaceKind::Sum: {
        const auto& t = as_tag(c);
        check_code(t.right ? s.second() : s.first(), *t.inner);
        return;
    }
    case SpaceKind::Words: {
        for (const Atom& a : as_wp(c).atoms) {
            if (!a.is_star && a.codes.size() != 1)
                shape_error("single atom must hold one code");
            for (const Code& inner : a.codes)
                check_code(s.inner(), inner);
        }
        return;
    }
    case SpaceKind::Pow: {
        for (const Code& inner : as_fin(c).body)
            check_code(s.inner(), inner);
        return;
    }
    case SpaceKind::FinInfWords:
    case SpaceKind::InfWords: {
        const auto& o = as_omega(c);
        for (const Atom& a : o.head.atoms) {
            if (!a.is_star && a.codes.size() != 1)
                shape_error("single atom must hold one code");
            for (const Code& inner : a.codes)
                check_code(s.inner(), inner);
        }
        for (const Code& inner : o.limit)
            check_code(s.inner(), inner);
        if (s.kind() == SpaceKind::InfWords && o.limit.empty())
            shape_error("infinite-words code needs a non-empty limit set");
        return;
    }
    }
    shape_error("unknown space kind");
}

} // namespace srep
