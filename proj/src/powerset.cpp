#include "srep/powerset.hpp"

#include "srep/core.hpp"

namespace srep {

bool pow_leq(const Space& x, const Code::Fin& u, const Code::Fin& v) {
    return cs_leq(x, u.body, v.body);
}

std::vector<Code::Fin> pow_meet(const Space& x, const Code::Fin& u, const Code::Fin& v) {
    // Meets in the Hoare powerspace are principal: down(F) /\ down(F') is
    // down(F /\ F').
    return {Code::Fin{cs_inter(x, u.body, v.body)}};
}

std::vector<Code::Fin> pow_top(const Space& x) {
    return {Code::Fin{space_top(x)}};
}

} // namespace srep
