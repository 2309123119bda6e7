#pragma once

// Shared test machinery: a deterministic RNG facade (the std distributions
// are implementation-defined, so tests draw through explicit modulo
// reduction), random complex/chain/cycle generators, and the naive counting
// oracle used to cross-check the boundary map.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dcycle/chain.hpp"
#include "dcycle/complex.hpp"
#include "dcycle/cycles.hpp"
#include "dcycle/gf2.hpp"

namespace testsupport {

using namespace dcycle;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    std::size_t below(std::size_t n) { return n == 0 ? 0 : raw() % n; }

    int range(int lo, int hi) { // inclusive
        return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1)));
    }

    bool percent(int p) { return below(100) < static_cast<std::size_t>(p); }

private:
    std::mt19937_64 eng_;
};

inline std::string vertex_label(int i) { return "g" + std::to_string(i); }

inline std::vector<std::vector<std::string>> all_subsets_of_size(int n, int k) {
    std::vector<std::vector<std::string>> out;
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int from, int chosen) {
        if (chosen == k) {
            std::vector<std::string> labels;
            for (int idx : pick) labels.push_back(vertex_label(idx));
            out.push_back(std::move(labels));
            return;
        }
        for (int i = from; i < n; ++i) {
            pick[static_cast<std::size_t>(chosen)] = i;
            rec(i + 1, chosen + 1);
        }
    };
    rec(0, 0);
    return out;
}

/// Random pure d-complex on up to n vertices: every possible facet kept with
/// probability `keep_percent`, with at least one facet forced.
inline SimplicialComplex random_pure_complex(Rng& rng, int n, int d, int keep_percent,
                                             const std::string& name = "random") {
    const auto candidates = all_subsets_of_size(n, d + 1);
    std::vector<std::vector<std::string>> facets;
    for (const auto& c : candidates)
        if (rng.percent(keep_percent)) facets.push_back(c);
    if (facets.empty()) facets.push_back(candidates[rng.below(candidates.size())]);
    return SimplicialComplex::from_facets(name, facets);
}

/// Random complex with facets of mixed dimensions on up to n vertices.
inline SimplicialComplex random_mixed_complex(Rng& rng, int n, int max_facets,
                                              const std::string& name = "random") {
    const int count = rng.range(1, max_facets);
    std::vector<std::vector<std::string>> facets;
    for (int i = 0; i < count; ++i) {
        const int size = rng.range(2, std::min(5, n));
        std::set<int> used;
        while (static_cast<int>(used.size()) < size) used.insert(rng.range(0, n - 1));
        std::vector<std::string> labels;
        for (int v : used) labels.push_back(vertex_label(v));
        facets.push_back(std::move(labels));
    }
    return SimplicialComplex::from_facets(name, facets);
}

/// Random complex whose face counts stay within `max_per_level` at every
/// level, by rejection.
inline SimplicialComplex random_bounded_complex(Rng& rng, std::size_t max_per_level) {
    for (;;) {
        SimplicialComplex c = random_mixed_complex(rng, 6, 4, "bounded");
        bool ok = true;
        for (int k = 0; k <= c.dim() && ok; ++k)
            if (c.faces(k).size() > max_per_level) ok = false;
        if (ok) return c;
    }
}

template <class F>
Chain<F> random_chain(Rng& rng, const SimplicialComplex& complex, int d, F field) {
    Chain<F> chain(field, d);
    const std::vector<Face>& faces = complex.faces(d);
    for (const Face& f : faces) {
        if (!rng.percent(60)) continue;
        typename F::Value v = field.zero();
        for (int guard = 0; guard < 8 && field.is_zero(v); ++guard)
            v = field.from_int(rng.range(-6, 6));
        if (field.is_zero(v)) v = field.one();
        chain.add_term(f, v);
    }
    if (chain.empty() && !faces.empty())
        chain.add_term(faces[rng.below(faces.size())], field.one());
    return chain;
}

/// Erdos-Renyi style random graph as a pure 1-complex (plus isolated-vertex
/// trimming via the facet rule).
inline SimplicialComplex random_graph(Rng& rng, int n, int edge_percent,
                                      const std::string& name = "graph") {
    std::vector<std::vector<std::string>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.percent(edge_percent))
                edges.push_back({vertex_label(i), vertex_label(j)});
    if (edges.empty()) edges.push_back({vertex_label(0), vertex_label(1)});
    return SimplicialComplex::from_facets(name, edges);
}

/// Harvests cycle complexes from GF(2) kernels of random pure complexes:
/// random kernel combinations split into d-path components.
inline std::vector<CycleComplex> random_cycles(Rng& rng, std::size_t count) {
    std::vector<CycleComplex> out;
    int serial = 0;
    while (out.size() < count) {
        const int d = rng.range(1, 3);
        const int n = rng.range(d + 2, d == 1 ? 7 : 7);
        SimplicialComplex c = random_pure_complex(rng, n, d, rng.range(35, 85),
                                                  "seed" + std::to_string(serial++));
        gf2::Matrix mat = dcycle::detail::restricted_boundary_gf2(c.facets(), d);
        const auto basis = mat.kernel_basis();
        if (basis.empty()) continue;
        gf2::Vec v(c.facets().size());
        for (const auto& b : basis)
            if (rng.percent(60)) v ^= b;
        if (v.is_zero()) v = basis[rng.below(basis.size())];
        for (auto& part : dcycle::detail::facet_components(
                 dcycle::detail::select_by_vec(c.facets(), v), d)) {
            SimplicialComplex sub = SimplicialComplex::subcomplex(
                c, part, "cycle" + std::to_string(out.size()));
            auto cyc = is_d_dimensional_cycle(sub);
            if (cyc) out.push_back(std::move(*cyc));
            if (out.size() >= count) break;
        }
    }
    return out;
}

/// Counting oracle: the ridges covered an odd number of times by the given
/// faces.  Cross-checks the GF(2) boundary of a face sum.
inline std::set<Face> naive_odd_ridges(const std::vector<Face>& faces) {
    std::map<Face, std::size_t> count;
    for (const Face& f : faces)
        for (std::size_t i = 0; i < f.size(); ++i) ++count[f.without(f.vertices[i])];
    std::set<Face> odd;
    for (const auto& [r, c] : count)
        if (c % 2) odd.insert(r);
    return odd;
}

} // namespace testsupport
