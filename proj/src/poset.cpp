#include "srep/poset.hpp"

#include "srep/error.hpp"

namespace srep {

FinitePoset FinitePoset::from_covers(std::vector<std::string> names,
                                     const std::vector<std::pair<ElemId, ElemId>>& covers) {
    FinitePoset p;
    const size_t n = names.size();
    p.names_ = std::move(names);
    p.leq_.assign(n * n, false);
    for (size_t i = 0; i < n; ++i)
        p.leq_[i * n + i] = true;
    for (auto [lo, hi] : covers) {
        if (lo < 0 || hi < 0 || static_cast<size_t>(lo) >= n || static_cast<size_t>(hi) >= n)
            throw usage_error("cover pair out of range");
        p.leq_[static_cast<size_t>(lo) * n + static_cast<size_t>(hi)] = true;
    }
    // Floyd-Warshall style transitive closure.
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            if (p.leq_[i * n + k])
                for (size_t j = 0; j < n; ++j)
                    if (p.leq_[k * n + j])
                        p.leq_[i * n + j] = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (p.leq_[i * n + j] && p.leq_[j * n + i])
                throw usage_error("relation is not antisymmetric: " + p.names_[i] + " and " +
                                  p.names_[j] + " are mutually related");
    return p;
}

std::optional<ElemId> FinitePoset::find(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return static_cast<ElemId>(i);
    return std::nullopt;
}

std::vector<ElemId> FinitePoset::maximal() const {
    std::vector<ElemId> out;
    for (ElemId a = 0; a < size(); ++a) {
        bool is_max = true;
        for (ElemId b = 0; b < size(); ++b)
            if (a != b && leq(a, b)) {
                is_max = false;
                break;
            }
        if (is_max)
            out.push_back(a);
    }
    return out;
}

} // namespace srep
