#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dcycle/chain.hpp"
#include "dcycle/cycles.hpp"
#include "dcycle/errors.hpp"

namespace dcycle {

/// The orientation a ridge inherits from an oriented cofacet.  `parity` is
/// the class bit relative to the ridge's sorted order: deleting a vertex in
/// an odd position (1-based) keeps the remaining ordering, an even position
/// costs one transposition.
struct InducedOrientationClass {
    Face ridge;
    Face cofacet;
    int parity = 0;

    bool operator==(const InducedOrientationClass&) const = default;
};

inline InducedOrientationClass induced_orientation(const OrientedFace& f, VertexId v) {
    const int idx = f.face.index_of(v);
    if (idx < 0)
        throw UnknownVertex("vertex is not contained in the oriented face");
    // 0-based index parity equals the 1-based position rule: position idx+1
    // odd <=> idx even <=> the remaining ordering is kept
    return InducedOrientationClass{f.face.without(v), f.face, (f.parity + idx) & 1};
}

/// Signs for every facet of a cycle, relative to the canonical sorted
/// orientation, under which every ridge sees its induced orientations split
/// exactly evenly between the two classes.
struct OrientationAssignment {
    std::map<Face, int> sign; // facet -> +1 / -1, facets in the cycle's base id space
};

namespace detail {

inline constexpr std::uint64_t kOrientabilityNodeBudget = 1'000'000;

// parity of the class the ridge inherits from the facet's canonical
// orientation
inline int base_induced_parity(const Face& ridge, const Face& facet) {
    if (facet.size() == 1) return 0; // empty ridge below a vertex
    for (std::size_t i = 0; i < facet.size(); ++i)
        if (!ridge.contains(facet.vertices[i]))
            return static_cast<int>(i) & 1;
    throw InternalCheckFailure("ridge is not a subface of its cofacet");
}

} // namespace detail

/// Decides orientability.  Ridges of incidence two force equalities or
/// inequalities between facet sign bits, which propagate over the dual
/// graph; ridges of incidence four or more are left to backtracking over the
/// resulting sign components, smallest incidence first, under a hard node
/// budget.  Pseudo-manifolds never reach the backtracking stage.
inline std::optional<OrientationAssignment> orientability(const CycleComplex& cycle) {
    const std::vector<Face>& facets = cycle.base.facets();
    const std::size_t n = facets.size();
    std::map<Face, std::size_t> facet_index;
    for (std::size_t i = 0; i < n; ++i) facet_index.emplace(facets[i], i);

    struct RidgeData {
        std::vector<std::size_t> members; // facet indices
        std::vector<int> base;            // induced parity from canonical orientation
    };
    std::vector<RidgeData> pair_ridges, big_ridges;
    for (const auto& [ridge, cofacets] : cycle.ridges.cofacets) {
        RidgeData data;
        for (const Face& f : cofacets) {
            data.members.push_back(facet_index.at(f));
            data.base.push_back(detail::base_induced_parity(ridge, f));
        }
        (cofacets.size() == 2 ? pair_ridges : big_ridges).push_back(std::move(data));
    }

    // propagate incidence-2 constraints: the two induced classes must differ
    std::vector<std::size_t> parent(n), rank_(n, 0);
    std::vector<int> rel(n, 0); // parity of s_i relative to parent
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) -> std::size_t {
        if (parent[x] == x) return x;
        const std::size_t root = find(parent[x]);
        rel[x] ^= rel[parent[x]];
        parent[x] = root;
        return root;
    };
    for (const RidgeData& r : pair_ridges) {
        const std::size_t a = r.members[0], b = r.members[1];
        const int need = r.base[0] ^ r.base[1] ^ 1; // s_a ^ s_b
        const std::size_t ra = find(a), rb = find(b);
        if (ra == rb) {
            if ((rel[a] ^ rel[b]) != need) return std::nullopt;
            continue;
        }
        // union by rank, keeping rel consistent
        if (rank_[ra] < rank_[rb]) {
            parent[ra] = rb;
            rel[ra] = need ^ rel[a] ^ rel[b];
        } else {
            parent[rb] = ra;
            rel[rb] = need ^ rel[a] ^ rel[b];
            if (rank_[ra] == rank_[rb]) ++rank_[ra];
        }
    }
    for (std::size_t i = 0; i < n; ++i) find(i);

    // group facets into sign components; component order by smallest facet
    std::map<std::size_t, std::size_t> component_of_root;
    std::vector<std::size_t> component(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find(i);
        auto [it, fresh] = component_of_root.emplace(root, component_of_root.size());
        component[i] = it->second;
    }
    const std::size_t m = component_of_root.size();

    // backtracking over component flip bits, big ridges ordered by incidence
    std::sort(big_ridges.begin(), big_ridges.end(),
              [](const RidgeData& a, const RidgeData& b) {
                  return a.members.size() < b.members.size();
              });
    std::vector<std::vector<std::size_t>> ridges_touching(m);
    for (std::size_t r = 0; r < big_ridges.size(); ++r)
        for (std::size_t idx : big_ridges[r].members)
            ridges_touching[component[idx]].push_back(r);

    std::vector<int> flip(m, -1);
    std::uint64_t nodes = 0;

    auto ridge_state = [&](const RidgeData& r) {
        // returns {ones, unassigned}
        std::pair<std::size_t, std::size_t> st{0, 0};
        for (std::size_t k = 0; k < r.members.size(); ++k) {
            const std::size_t c = component[r.members[k]];
            if (flip[c] < 0) ++st.second;
            else st.first += static_cast<std::size_t>(r.base[k] ^ rel[r.members[k]] ^ flip[c]);
        }
        return st;
    };
    auto feasible_around = [&](std::size_t comp) {
        for (std::size_t r : ridges_touching[comp]) {
            const auto [ones, open] = ridge_state(big_ridges[r]);
            const std::size_t half = big_ridges[r].members.size() / 2;
            if (ones > half || ones + open < half) return false;
        }
        return true;
    };
    std::function<bool(std::size_t)> assign = [&](std::size_t comp) -> bool {
        if (comp == m) return true;
        for (int bit = 0; bit <= 1; ++bit) {
            if (++nodes > detail::kOrientabilityNodeBudget)
                throw SearchBudgetExceeded("orientability backtracking exceeded " +
                                           std::to_string(detail::kOrientabilityNodeBudget) +
                                           " nodes");
            flip[comp] = bit;
            if (feasible_around(comp) && assign(comp + 1)) return true;
        }
        flip[comp] = -1;
        return false;
    };
    if (!assign(0)) return std::nullopt;

    OrientationAssignment out;
    for (std::size_t i = 0; i < n; ++i) {
        const int s = rel[i] ^ flip[component[i]];
        out.sign[facets[i]] = s ? -1 : +1;
    }
    // canonical form: lexicographically smallest facet carries +1
    if (out.sign.begin()->second < 0)
        for (auto& [f, s] : out.sign) s = -s;

    // balance re-check, literally as defined
    for (const auto& [ridge, cofacets] : cycle.ridges.cofacets) {
        std::size_t ones = 0;
        for (const Face& f : cofacets) {
            const int s = out.sign.at(f) < 0 ? 1 : 0;
            ones += static_cast<std::size_t>(detail::base_induced_parity(ridge, f) ^ s);
        }
        if (ones * 2 != cofacets.size())
            throw InternalCheckFailure("orientation assignment fails the balance check");
    }
    return out;
}

/// The signed facet sum of an oriented cycle.  Its boundary vanishes over
/// every field; that postcondition is re-checked here.
template <class F>
Chain<F> oriented_cycle_chain(const CycleComplex& cycle, const OrientationAssignment& assignment,
                              F field) {
    Chain<F> chain(field, cycle.d);
    for (const Face& f : cycle.base.facets()) {
        auto it = assignment.sign.find(f);
        if (it == assignment.sign.end())
            throw IncompleteAssignment("facet without a sign in the orientation assignment");
        chain.add_term(f, field.from_int(it->second));
    }
    if (!boundary(chain, cycle.base).empty())
        throw InternalCheckFailure("oriented facet sum is not a cycle");
    return chain;
}

} // namespace dcycle
