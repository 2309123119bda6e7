#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dcycle/complex.hpp"
#include "dcycle/errors.hpp"
#include "dcycle/gf2.hpp"

namespace dcycle {

/// Ridge incidence of a pure d-complex: each (d-1)-face mapped to the sorted
/// list of d-faces containing it.  For d = 0 the single ridge is the empty
/// face, contained in every vertex.
struct RidgeIncidence {
    std::map<Face, std::vector<Face>> cofacets;

    std::size_t max_incidence() const {
        std::size_t m = 0;
        for (const auto& [r, cf] : cofacets) m = std::max(m, cf.size());
        return m;
    }
};

inline RidgeIncidence build_ridge_incidence(const std::vector<Face>& facets, int d) {
    RidgeIncidence out;
    if (d == 0) {
        out.cofacets.emplace(Face{}, facets);
        return out;
    }
    for (const Face& f : facets)
        for (std::size_t i = 0; i < f.size(); ++i)
            out.cofacets[f.without(f.vertices[i])].push_back(f);
    for (auto& [r, cf] : out.cofacets) std::sort(cf.begin(), cf.end());
    return out;
}

/// A validated d-dimensional cycle: pure, d-path-connected, every ridge of
/// even incidence.  Carries its ridge incidence for reuse.
struct CycleComplex {
    SimplicialComplex base;
    int d = 0;
    RidgeIncidence ridges;
};

/// Verdict of the cycle test, with diagnostics for the negative case.
struct CycleCheck {
    std::optional<CycleComplex> cycle;
    std::size_t components = 0;
    std::vector<Face> odd_ridges; // faces of the input complex
};

namespace detail {

// Partition of facet indices into d-path-connected classes (transitive
// closure of sharing a (d-1)-face).  Classes come out ordered by smallest
// facet, members ascending.
inline std::vector<std::vector<std::size_t>> facet_component_indices(
    const std::vector<Face>& facets, int d) {
    const std::size_t n = facets.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a); b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    if (d == 0) {
        for (std::size_t i = 1; i < n; ++i) unite(0, i);
    } else {
        std::map<Face, std::size_t> first_with_ridge;
        for (std::size_t i = 0; i < n; ++i) {
            const Face& f = facets[i];
            for (std::size_t k = 0; k < f.size(); ++k) {
                const Face ridge = f.without(f.vertices[k]);
                auto [it, fresh] = first_with_ridge.emplace(ridge, i);
                if (!fresh) unite(it->second, i);
            }
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    out.reserve(groups.size());
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

inline std::vector<std::vector<Face>> facet_components(const std::vector<Face>& facets, int d) {
    std::vector<std::vector<Face>> out;
    for (const auto& group : facet_component_indices(facets, d)) {
        std::vector<Face> fs;
        fs.reserve(group.size());
        for (std::size_t i : group) fs.push_back(facets[i]);
        out.push_back(std::move(fs));
    }
    return out;
}

// GF(2) boundary matrix restricted to the given facet columns; rows are the
// ridges these facets span.  Kernel vectors are exactly the face subsets
// whose ridge incidences are all even.
inline gf2::Matrix restricted_boundary_gf2(const std::vector<Face>& facets, int d) {
    std::map<Face, std::size_t> ridge_index;
    if (d == 0) {
        ridge_index.emplace(Face{}, 0);
    } else {
        for (const Face& f : facets)
            for (std::size_t i = 0; i < f.size(); ++i)
                ridge_index.emplace(f.without(f.vertices[i]), ridge_index.size());
    }
    // re-key in deterministic ridge order
    std::size_t next = 0;
    for (auto& [r, idx] : ridge_index) idx = next++;

    gf2::Matrix mat(ridge_index.size(), facets.size());
    for (std::size_t j = 0; j < facets.size(); ++j) {
        const Face& f = facets[j];
        if (d == 0) {
            mat.set(0, j);
        } else {
            for (std::size_t i = 0; i < f.size(); ++i)
                mat.set(ridge_index.at(f.without(f.vertices[i])), j);
        }
    }
    return mat;
}

inline std::vector<Face> select_by_vec(const std::vector<Face>& facets, const gf2::Vec& v) {
    std::vector<Face> out;
    for (std::size_t j : v.support()) out.push_back(facets[j]);
    return out;
}

inline bool even_ridge_incidences(const std::vector<Face>& facets, int d) {
    const RidgeIncidence inc = build_ridge_incidence(facets, d);
    for (const auto& [r, cf] : inc.cofacets)
        if (cf.size() % 2 != 0) return false;
    return true;
}

// Full enumeration bound for kernel-space searches.
inline constexpr std::size_t kKernelEnumerationBound = 20;

// A face-minimal subcycle of the cycle given by `facets`.  With kernel
// dimension at most kKernelEnumerationBound the entire GF(2) cycle space is
// enumerated and the smallest-support path component wins; beyond the bound
// a strictly decreasing split loop is used instead, which still lands on a
// face-minimal subcycle, just not necessarily the globally smallest one.
inline std::vector<Face> find_face_minimal_subcycle(std::vector<Face> facets, int d) {
    for (;;) {
        gf2::Matrix mat = restricted_boundary_gf2(facets, d);
        const std::vector<gf2::Vec> basis = mat.kernel_basis();
        if (basis.size() <= 1) return facets; // only cycle on this support is the whole

        if (basis.size() <= kKernelEnumerationBound) {
            std::optional<std::vector<Face>> best;
            for (std::size_t combo = 1; combo < (std::size_t(1) << basis.size()); ++combo) {
                gf2::Vec v(facets.size());
                for (std::size_t b = 0; b < basis.size(); ++b)
                    if (combo & (std::size_t(1) << b)) v ^= basis[b];
                if (v.is_zero()) continue;
                for (auto& part : facet_components(select_by_vec(facets, v), d))
                    if (!best || part.size() < best->size() ||
                        (part.size() == best->size() && part < *best))
                        best = std::move(part);
            }
            return *best; // components of kernel vectors are cycles; minimum is face-minimal
        }

        // beyond the enumeration bound: split against the full-support vector
        gf2::Vec whole(facets.size());
        for (std::size_t j = 0; j < facets.size(); ++j) whole.set(j);
        gf2::Vec pick(facets.size());
        for (const gf2::Vec& b : basis)
            if (!b.is_zero() && !(b == whole)) { pick = b; break; }
        gf2::Vec other = whole ^ pick;
        gf2::Vec smaller = gf2::Vec::support_less(pick, other) ? pick : other;
        auto parts = facet_components(select_by_vec(facets, smaller), d);
        facets = *std::min_element(parts.begin(), parts.end(),
                                   [](const auto& a, const auto& b) {
                                       return a.size() != b.size() ? a.size() < b.size() : a < b;
                                   });
    }
}

} // namespace detail

inline void require_pure(const SimplicialComplex& complex) {
    if (!complex.is_pure())
        throw NotPure("complex '" + complex.name() + "' is not pure");
}

/// Maximal d-path-connected pieces of a pure d-complex, ordered by smallest
/// facet.
inline std::vector<SimplicialComplex> d_path_components(const SimplicialComplex& complex) {
    require_pure(complex);
    std::vector<SimplicialComplex> out;
    if (complex.empty()) return out;
    const auto groups = detail::facet_components(complex.facets(), complex.dim());
    for (std::size_t i = 0; i < groups.size(); ++i)
        out.push_back(SimplicialComplex::subcomplex(
            complex, groups[i], complex.name() + "/component-" + std::to_string(i)));
    return out;
}

/// Tests the two defining conditions of a d-dimensional cycle and reports
/// diagnostics: the odd ridges found and the number of d-path components.
inline CycleCheck check_d_dimensional_cycle(const SimplicialComplex& complex) {
    require_pure(complex);
    CycleCheck out;
    if (complex.empty()) return out;
    const int d = complex.dim();
    RidgeIncidence inc = build_ridge_incidence(complex.facets(), d);
    for (const auto& [r, cf] : inc.cofacets)
        if (cf.size() % 2 != 0) out.odd_ridges.push_back(r);
    out.components = detail::facet_component_indices(complex.facets(), d).size();
    if (out.odd_ridges.empty() && out.components == 1)
        out.cycle = CycleComplex{complex, d, std::move(inc)};
    return out;
}

inline std::optional<CycleComplex> is_d_dimensional_cycle(const SimplicialComplex& complex) {
    return check_d_dimensional_cycle(complex).cycle;
}

/// Pure, d-path-connected, and every ridge in exactly two facets.
inline bool is_pseudo_manifold(const SimplicialComplex& complex) {
    require_pure(complex);
    if (complex.empty()) return false;
    const int d = complex.dim();
    const RidgeIncidence inc = build_ridge_incidence(complex.facets(), d);
    for (const auto& [r, cf] : inc.cofacets)
        if (cf.size() != 2) return false;
    return detail::facet_component_indices(complex.facets(), d).size() == 1;
}

/// True iff no strict nonempty facet subset is itself a d-dimensional cycle;
/// equivalent to the restricted GF(2) cycle space having dimension one.
inline bool is_face_minimal(const CycleComplex& cycle) {
    gf2::Matrix mat = detail::restricted_boundary_gf2(cycle.base.facets(), cycle.d);
    return mat.kernel_basis().size() == 1;
}

struct Decomposition {
    std::vector<CycleComplex> parts;
};

/// Partitions a d-dimensional cycle into face-minimal cycles with pairwise
/// disjoint facet sets: extract a face-minimal subcycle, split what remains
/// into d-path components (each one again a cycle), and recurse.
inline Decomposition face_minimal_decomposition(const CycleComplex& cycle) {
    const int d = cycle.d;
    std::vector<std::vector<Face>> pending = {cycle.base.facets()};
    std::vector<std::vector<Face>> parts;
    while (!pending.empty()) {
        std::vector<Face> current = std::move(pending.back());
        pending.pop_back();
        std::vector<Face> minimal = detail::find_face_minimal_subcycle(current, d);
        std::vector<Face> rest;
        std::set_difference(current.begin(), current.end(), minimal.begin(), minimal.end(),
                            std::back_inserter(rest));
        parts.push_back(std::move(minimal));
        for (auto& component : detail::facet_components(rest, d)) {
            if (!detail::even_ridge_incidences(component, d))
                throw InternalCheckFailure("decomposition remainder component is not a cycle");
            pending.push_back(std::move(component));
        }
    }
    std::sort(parts.begin(), parts.end());
    Decomposition out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        SimplicialComplex sub = SimplicialComplex::subcomplex(
            cycle.base, parts[i], cycle.base.name() + "/part-" + std::to_string(i));
        auto checked = is_d_dimensional_cycle(sub);
        if (!checked)
            throw InternalCheckFailure("decomposition part failed the cycle re-check");
        out.parts.push_back(std::move(*checked));
    }
    return out;
}

/// Strips `v` from the facets containing it and splits the result into
/// (d-1)-path components; each component is a (d-1)-dimensional cycle.
inline std::vector<CycleComplex> link_cycles(const CycleComplex& cycle,
                                             const std::string& vertex_label) {
    if (cycle.d < 1)
        throw DimensionRange("links of a 0-dimensional cycle have no dimension to live in");
    const VertexId v = cycle.base.require_vertex(vertex_label);
    std::vector<Face> stripped;
    for (const Face& f : cycle.base.facets())
        if (f.contains(v)) stripped.push_back(f.without(v));
    std::sort(stripped.begin(), stripped.end());

    std::vector<CycleComplex> out;
    const auto components = detail::facet_components(stripped, cycle.d - 1);
    for (std::size_t i = 0; i < components.size(); ++i) {
        SimplicialComplex sub = SimplicialComplex::subcomplex(
            cycle.base, components[i],
            cycle.base.name() + "/link-" + vertex_label + "-" + std::to_string(i));
        auto checked = is_d_dimensional_cycle(sub);
        if (!checked)
            throw InternalCheckFailure("link component failed the (d-1)-cycle re-check");
        out.push_back(std::move(*checked));
    }
    return out;
}

/// Cone construction: if some subset of the (d+1)-faces of the induced
/// subcomplex on V(cycle) has GF(2) boundary equal to the facet sum of the
/// cycle, coning the cycle's facets over a fresh vertex and adjoining a
/// subset-minimal such family yields a (d+1)-dimensional cycle.
inline std::optional<CycleComplex> cone_extend(const SimplicialComplex& ambient,
                                               const CycleComplex& cycle,
                                               const std::string& fresh_label) {
    if (cycle.base.find_vertex(fresh_label))
        throw VertexClash("vertex '" + fresh_label + "' already belongs to the cycle");
    const int d = cycle.d;

    // map the cycle into the ambient id space
    std::set<VertexId> w;
    std::vector<Face> omega;
    for (const Face& f : cycle.base.facets()) {
        Face g;
        try {
            g = ambient.face_from_labels(cycle.base.face_labels(f));
        } catch (const UnknownVertex&) {
            throw ForeignFace("cycle facet is not a face of '" + ambient.name() + "'");
        }
        if (!ambient.has_face(g))
            throw ForeignFace("cycle facet is not a face of '" + ambient.name() + "'");
        w.insert(g.vertices.begin(), g.vertices.end());
        omega.push_back(g);
    }
    std::sort(omega.begin(), omega.end());

    auto inside = [&](const Face& f) {
        for (VertexId u : f.vertices)
            if (!w.count(u)) return false;
        return true;
    };
    std::vector<Face> rows, cols;
    for (const Face& f : ambient.faces(d)) if (inside(f)) rows.push_back(f);
    for (const Face& f : ambient.faces(d + 1)) if (inside(f)) cols.push_back(f);

    std::map<Face, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
    gf2::Matrix mat(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i)
            mat.set(row_index.at(cols[j].without(cols[j].vertices[i])), j);

    gf2::Vec rhs(rows.size());
    for (const Face& f : omega) rhs.set(row_index.at(f));
    std::optional<gf2::Vec> x = mat.solve(rhs);
    if (!x) return std::nullopt;

    // shrink to subset-minimality: greedy kernel improvements first, then an
    // exhaustive containment sweep while the kernel stays enumerable
    const std::vector<gf2::Vec> basis = mat.kernel_basis();
    bool improved = true;
    while (improved) {
        improved = false;
        for (const gf2::Vec& b : basis) {
            gf2::Vec trial = *x ^ b;
            if (trial.popcount() < x->popcount()) { *x = trial; improved = true; }
        }
    }
    if (!basis.empty() && basis.size() <= detail::kKernelEnumerationBound) {
        bool reduced = true;
        while (reduced) {
            reduced = false;
            for (std::size_t combo = 1; combo < (std::size_t(1) << basis.size()) && !reduced;
                 ++combo) {
                gf2::Vec v(cols.size());
                for (std::size_t b = 0; b < basis.size(); ++b)
                    if (combo & (std::size_t(1) << b)) v ^= basis[b];
                if (!v.is_zero() && v.subset_of(*x)) { *x ^= v; reduced = true; }
            }
        }
    }

    // assemble the cone; if spare components made of fill faces alone remain,
    // drop them and retry (each drop strictly shrinks the fill set)
    std::vector<Face> fill = detail::select_by_vec(cols, *x);
    for (;;) {
        std::vector<std::vector<std::string>> facet_labels;
        for (const Face& f : omega) {
            auto labels = ambient.face_labels(f);
            labels.push_back(fresh_label);
            facet_labels.push_back(std::move(labels));
        }
        for (const Face& f : fill) facet_labels.push_back(ambient.face_labels(f));
        SimplicialComplex cone = SimplicialComplex::from_facets(
            cycle.base.name() + "|cone-" + fresh_label, facet_labels);

        CycleCheck check = check_d_dimensional_cycle(cone);
        if (check.cycle) return std::move(check.cycle);
        if (!check.odd_ridges.empty())
            throw InternalCheckFailure("cone construction produced an odd ridge");

        // keep the component containing the cone facets
        const auto groups = detail::facet_components(cone.facets(), d + 1);
        const VertexId apex = cone.require_vertex(fresh_label);
        std::set<std::vector<std::string>> keep;
        for (const auto& group : groups) {
            bool has_apex = false;
            for (const Face& f : group)
                if (f.contains(apex)) { has_apex = true; break; }
            if (has_apex)
                for (const Face& f : group) keep.insert(cone.face_labels_sorted(f));
        }
        std::vector<Face> pruned;
        for (const Face& f : fill) {
            auto labels = ambient.face_labels_sorted(f);
            if (keep.count(labels)) pruned.push_back(f);
        }
        if (pruned.size() == fill.size())
            throw InternalCheckFailure("cone pruning made no progress");
        fill = std::move(pruned);
    }
}

/// The d-dimensional d-complete complex on n vertices: every (d+1)-subset of
/// {v1..vn} is a facet.
inline SimplicialComplex lambda_complete(int n, int d) {
    if (n <= d)
        throw TooFewVertices("need at least " + std::to_string(d + 1) +
                             " vertices for dimension " + std::to_string(d));
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));

    std::vector<std::vector<std::string>> facets;
    std::vector<int> pick(static_cast<std::size_t>(d) + 1);
    std::function<void(int, int)> rec = [&](int from, int chosen) {
        if (chosen == d + 1) {
            std::vector<std::string> facet;
            for (int idx : pick) facet.push_back(labels[static_cast<std::size_t>(idx)]);
            facets.push_back(std::move(facet));
            return;
        }
        for (int i = from; i < n; ++i) {
            pick[static_cast<std::size_t>(chosen)] = i;
            rec(i + 1, chosen + 1);
        }
    };
    rec(0, 0);
    return SimplicialComplex::from_facets("lambda-" + std::to_string(n) + "-" + std::to_string(d),
                                          facets);
}

namespace detail {

inline std::vector<std::vector<VertexId>> adjacency(const SimplicialComplex& graph) {
    std::vector<std::vector<VertexId>> adj(graph.vertex_count());
    for (const Face& e : graph.facets()) {
        adj[static_cast<std::size_t>(e.vertices[0])].push_back(e.vertices[1]);
        adj[static_cast<std::size_t>(e.vertices[1])].push_back(e.vertices[0]);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

// rotate/reflect a vertex cycle to start at its smallest id, moving toward
// the smaller neighbor
inline std::vector<VertexId> canonical_rotation(std::vector<VertexId> cyc) {
    const std::size_t n = cyc.size();
    const std::size_t at = static_cast<std::size_t>(
        std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
    std::vector<VertexId> rotated(n);
    for (std::size_t i = 0; i < n; ++i) rotated[i] = cyc[(at + i) % n];
    if (rotated[n - 1] < rotated[1]) {
        std::reverse(rotated.begin() + 1, rotated.end());
    }
    return rotated;
}

} // namespace detail

/// Walks a pure 1-complex in which every vertex has degree at least two and
/// returns the first vertex repetition as a graph cycle.  Returns nothing as
/// soon as some vertex has degree below two, even if a cycle exists
/// elsewhere; use find_any_graph_cycle for the peeled search.
inline std::optional<std::vector<std::string>> find_graph_cycle(const SimplicialComplex& graph) {
    require_pure(graph);
    if (graph.dim() != 1)
        throw NotPure("graph cycle search requires a pure 1-dimensional complex");
    const auto adj = detail::adjacency(graph);
    for (const auto& nb : adj)
        if (nb.size() < 2) return std::nullopt;

    std::vector<int> pos(graph.vertex_count(), -1);
    std::vector<VertexId> path;
    VertexId cur = 0, prev = -1;
    for (;;) {
        pos[static_cast<std::size_t>(cur)] = static_cast<int>(path.size());
        path.push_back(cur);
        VertexId next = -1;
        for (VertexId nb : adj[static_cast<std::size_t>(cur)])
            if (nb != prev) { next = nb; break; }
        if (pos[static_cast<std::size_t>(next)] >= 0) {
            std::vector<VertexId> cyc(path.begin() + pos[static_cast<std::size_t>(next)],
                                      path.end());
            cyc = detail::canonical_rotation(std::move(cyc));
            // validate: distinct vertices, consecutive adjacency, closing edge
            std::set<VertexId> seen(cyc.begin(), cyc.end());
            if (seen.size() != cyc.size() || cyc.size() < 3)
                throw InternalCheckFailure("walk produced a degenerate cycle");
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                const VertexId a = cyc[i], b = cyc[(i + 1) % cyc.size()];
                if (!graph.has_face(make_face({a, b})))
                    throw InternalCheckFailure("walk produced a non-edge");
            }
            std::vector<std::string> labels;
            for (VertexId v : cyc) labels.push_back(graph.label(v));
            return labels;
        }
        prev = cur;
        cur = next;
    }
}

/// Leaf-peeling variant: removes degree <= 1 vertices until none remain, then
/// walks.  Finds a graph cycle exactly when one exists.
inline std::optional<std::vector<std::string>> find_any_graph_cycle(const SimplicialComplex& graph) {
    require_pure(graph);
    if (graph.dim() != 1)
        throw NotPure("graph cycle search requires a pure 1-dimensional complex");
    std::set<Face> edges(graph.facets().begin(), graph.facets().end());
    std::vector<std::size_t> degree(graph.vertex_count(), 0);
    for (const Face& e : edges)
        for (VertexId v : e.vertices) ++degree[static_cast<std::size_t>(v)];
    bool peeled = true;
    while (peeled) {
        peeled = false;
        for (auto it = edges.begin(); it != edges.end();) {
            const Face& e = *it;
            if (degree[static_cast<std::size_t>(e.vertices[0])] <= 1 ||
                degree[static_cast<std::size_t>(e.vertices[1])] <= 1) {
                --degree[static_cast<std::size_t>(e.vertices[0])];
                --degree[static_cast<std::size_t>(e.vertices[1])];
                it = edges.erase(it);
                peeled = true;
            } else {
                ++it;
            }
        }
    }
    if (edges.empty()) return std::nullopt;
    std::vector<Face> remaining(edges.begin(), edges.end());
    return find_graph_cycle(
        SimplicialComplex::subcomplex(graph, remaining, graph.name() + "|peeled"));
}

} // namespace dcycle
