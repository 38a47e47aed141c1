#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace srep {

using ElemId = int;

/// A finite partial order: named elements plus a reflexive, transitive,
/// antisymmetric relation.  Built from a covering relation whose
/// reflexive-transitive closure is computed on construction; a cycle among
/// distinct elements is rejected.
class FinitePoset {
public:
    FinitePoset() = default;

    // `covers` lists pairs (lo, hi) with lo < hi; indices refer to `names`.
    static FinitePoset from_covers(std::vector<std::string> names,
                                   const std::vector<std::pair<ElemId, ElemId>>& covers);

    // Two-element antichain {a, b} and two-element chain a < b, used all
    // over the tests.
    static FinitePoset antichain2() { return from_covers({"a", "b"}, {}); }
    static FinitePoset chain2() { return from_covers({"a", "b"}, {{0, 1}}); }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(ElemId e) const { return names_[static_cast<size_t>(e)]; }
    std::optional<ElemId> find(std::string_view name) const;

    bool leq(ElemId a, ElemId b) const {
        return leq_[static_cast<size_t>(a) * names_.size() + static_cast<size_t>(b)];
    }

    std::vector<ElemId> maximal() const;

    bool operator==(const FinitePoset& other) const {
        return names_ == other.names_ && leq_ == other.leq_;
    }

private:
    std::vector<std::string> names_;
    std::vector<bool> leq_; // row-major |names| x |names|
};

} // namespace srep
