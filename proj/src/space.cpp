#include "srep/space.hpp"

#include "srep/core.hpp"
#include "srep/error.hpp"

namespace srep {

Space::Space(SpaceKind kind, FinitePoset poset, SpaceRef first, SpaceRef second)
    : kind_(kind), poset_(std::move(poset)), first_(std::move(first)), second_(std::move(second)) {}

SpaceRef Space::finish(Space* raw) {
    raw->top_ = detail::compute_space_top(*raw);
    return SpaceRef(raw);
}

SpaceRef Space::base(FinitePoset poset) {
    return finish(new Space(SpaceKind::Base, std::move(poset), nullptr, nullptr));
}

SpaceRef Space::product(SpaceRef first, SpaceRef second) {
    return finish(new Space(SpaceKind::Product, {}, std::move(first), std::move(second)));
}

SpaceRef Space::sum(SpaceRef left, SpaceRef right) {
    return finish(new Space(SpaceKind::Sum, {}, std::move(left), std::move(right)));
}

SpaceRef Space::words(SpaceRef inner) {
    return finish(new Space(SpaceKind::Words, {}, std::move(inner), nullptr));
}

SpaceRef Space::pow(SpaceRef inner) {
    return finish(new Space(SpaceKind::Pow, {}, std::move(inner), nullptr));
}

SpaceRef Space::fin_inf_words(SpaceRef inner) {
    return finish(new Space(SpaceKind::FinInfWords, {}, std::move(inner), nullptr));
}

SpaceRef Space::inf_words(SpaceRef inner) {
    return finish(new Space(SpaceKind::InfWords, {}, std::move(inner), nullptr));
}

const FinitePoset& Space::poset() const {
    if (kind_ != SpaceKind::Base)
        throw usage_error("poset() on a non-base space");
    return poset_;
}

const Space& Space::first() const {
    if (kind_ != SpaceKind::Product && kind_ != SpaceKind::Sum)
        throw usage_error("first() on a non-product space");
    return *first_;
}

const Space& Space::second() const {
    if (kind_ != SpaceKind::Product && kind_ != SpaceKind::Sum)
        throw usage_error("second() on a non-product space");
    return *second_;
}

const Space& Space::inner() const {
    switch (kind_) {
    case SpaceKind::Words:
    case SpaceKind::Pow:
    case SpaceKind::FinInfWords:
    case SpaceKind::InfWords:
        return *first_;
    default:
        throw usage_error("inner() on a space without an inner space");
    }
}

} // namespace srep
