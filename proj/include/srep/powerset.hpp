#pragma once

#include <vector>

#include "srep/code.hpp"
#include "srep/space.hpp"

namespace srep {

/// Codes of P(x) with the lower Vietoris topology: a finite antichain
/// {C1,...,Cn} of codes of x, denoting the subsets of the union of their
/// denotations.  The empty body denotes {{}}.

bool pow_leq(const Space& x, const Code::Fin& u, const Code::Fin& v);

/// Meets in P(x) are principal: always a single code.
std::vector<Code::Fin> pow_meet(const Space& x, const Code::Fin& u, const Code::Fin& v);

std::vector<Code::Fin> pow_top(const Space& x);

} // namespace srep
