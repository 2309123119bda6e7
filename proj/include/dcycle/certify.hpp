#pragma once

#include <atomic>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dcycle/chain.hpp"
#include "dcycle/complex.hpp"
#include "dcycle/cycles.hpp"
#include "dcycle/homology.hpp"
#include "dcycle/orientation.hpp"

namespace dcycle {

using CancelToken = std::atomic<bool>;

inline void check_cancel(const CancelToken* cancel) {
    if (cancel && cancel->load(std::memory_order_relaxed))
        throw OperationCancelled("certification search cancelled");
}

enum class CertificateKind { Char2Cycle, OrientableCycle, GraphCycle };

inline const char* to_string(CertificateKind k) {
    switch (k) {
        case CertificateKind::Char2Cycle: return "char2_cycle";
        case CertificateKind::OrientableCycle: return "orientable_cycle";
        case CertificateKind::GraphCycle: return "graph_cycle";
    }
    return "?";
}

/// A homology witness: a cycle structure whose (possibly signed) facet sum
/// is a homological cycle and provably not a boundary.  The nonbounding
/// evidence is the rank pair of the failed preimage solve.
struct HomologyCertificate {
    CertificateKind kind = CertificateKind::Char2Cycle;
    int dim = 0;
    std::string field_name;
    CycleComplex witness;
    std::optional<OrientationAssignment> signs;               // OrientableCycle only
    std::optional<std::vector<std::string>> vertex_sequence;  // GraphCycle only
    NonBoundingEvidence nonbounding;
    bool verified = false;
    bool sound_only = false; // a missing certificate does not imply zero homology
};

namespace detail {

inline Chain<GfP> gf2_chain_from_faces(const std::vector<Face>& faces, int d) {
    GfP f2(2);
    Chain<GfP> c(f2, d);
    for (const Face& face : faces) c.add_term(face, 1);
    return c;
}

// global kernel vector -> selected d-faces of the ambient complex
inline std::vector<Face> faces_of_vec(const std::vector<Face>& cols, const gf2::Vec& v) {
    std::vector<Face> out;
    for (std::size_t j : v.support()) out.push_back(cols[j]);
    return out;
}

} // namespace detail

/// Characteristic-2 certification: a certificate exists exactly when the
/// reduced GF(2) homology in dimension d is nonzero.  The witness is a
/// support-minimal non-bounding face set, which is automatically a
/// d-dimensional cycle; it is shrunk by cancelling against restricted kernel
/// vectors, each step strictly reducing the support.
inline std::optional<HomologyCertificate> certify_char2(const SimplicialComplex& complex, int d,
                                                        const CancelToken* cancel = nullptr) {
    if (d < 1) throw DimensionRange("certification needs dimension >= 1");
    if (d > complex.dim()) return std::nullopt;

    const Gf2Boundary bm = boundary_matrix_gf2(complex, d);
    const std::vector<gf2::Vec> kernel = bm.mat.kernel_basis();
    if (kernel.empty()) return std::nullopt;

    GfP f2(2);
    auto bounding = [&](const gf2::Vec& v) {
        Chain<GfP> c = detail::gf2_chain_from_faces(detail::faces_of_vec(bm.col_faces, v), d);
        return solve_boundary(c, complex);
    };

    std::optional<gf2::Vec> current;
    NonBoundingEvidence evidence;
    for (const gf2::Vec& k : kernel) {
        check_cancel(cancel);
        auto result = bounding(k);
        if (!result.witness) {
            current = k;
            evidence = result.evidence;
            break;
        }
    }
    if (!current) return std::nullopt; // the whole cycle space bounds

    std::map<Face, std::size_t> col_index;
    for (std::size_t j = 0; j < bm.col_faces.size(); ++j) col_index.emplace(bm.col_faces[j], j);

    for (;;) {
        check_cancel(cancel);
        const std::vector<Face> support = detail::faces_of_vec(bm.col_faces, *current);
        gf2::Matrix restricted = detail::restricted_boundary_gf2(support, d);
        const std::vector<gf2::Vec> rbasis = restricted.kernel_basis();
        if (rbasis.size() <= 1) break; // support-minimal: the only subcycle is the whole

        gf2::Vec whole(support.size());
        for (std::size_t j = 0; j < support.size(); ++j) whole.set(j);
        gf2::Vec picked(support.size());
        for (const gf2::Vec& b : rbasis)
            if (!b.is_zero() && !(b == whole)) { picked = b; break; }

        gf2::Vec half(bm.col_faces.size());
        for (std::size_t j : picked.support()) half.set(col_index.at(support[j]));
        gf2::Vec rest = *current ^ half;

        std::vector<gf2::Vec> candidates{half, rest};
        std::sort(candidates.begin(), candidates.end(), gf2::Vec::support_less);
        bool replaced = false;
        for (const gf2::Vec& cand : candidates) {
            auto result = bounding(cand);
            if (!result.witness) {
                *current = cand;
                evidence = result.evidence;
                replaced = true;
                break;
            }
        }
        if (!replaced)
            throw InternalCheckFailure("both halves of a non-bounding cycle bound");
    }

    SimplicialComplex sub = SimplicialComplex::subcomplex(
        complex, detail::faces_of_vec(bm.col_faces, *current), complex.name() + "|char2-witness");
    auto checked = is_d_dimensional_cycle(sub);
    if (!checked)
        throw InternalCheckFailure("support-minimal witness is not a d-dimensional cycle");

    HomologyCertificate cert;
    cert.kind = CertificateKind::Char2Cycle;
    cert.dim = d;
    cert.field_name = GfP(2).name();
    cert.witness = std::move(*checked);
    cert.nonbounding = evidence;
    {
        Chain<GfP> c = detail::gf2_chain_from_faces(detail::faces_of_vec(bm.col_faces, *current), d);
        cert.verified = is_cycle(c, complex) && !is_boundary(c, complex);
    }
    if (!cert.verified)
        throw InternalCheckFailure("char2 certificate failed re-verification");
    return cert;
}

/// Orientable-cycle certification over an arbitrary field.  Candidate cycles
/// are the d-path components of GF(2) kernel vectors; the first orientable
/// one whose signed facet sum has no preimage over the given field wins.
/// Sound but not complete: a nullopt does not imply vanishing homology.
template <class F>
std::optional<HomologyCertificate> certify_orientable(const SimplicialComplex& complex, int d,
                                                      F field,
                                                      const CancelToken* cancel = nullptr) {
    if (d < 1) throw DimensionRange("certification needs dimension >= 1");
    if (d > complex.dim()) return std::nullopt;

    const Gf2Boundary bm = boundary_matrix_gf2(complex, d);
    const std::vector<gf2::Vec> kernel = bm.mat.kernel_basis();
    if (kernel.empty()) return std::nullopt;
    if (kernel.size() > detail::kKernelEnumerationBound)
        throw SearchBudgetExceeded("cycle space dimension " + std::to_string(kernel.size()) +
                                   " exceeds the enumeration bound " +
                                   std::to_string(detail::kKernelEnumerationBound));

    std::set<std::vector<Face>> seen;
    for (std::size_t combo = 1; combo < (std::size_t(1) << kernel.size()); ++combo) {
        check_cancel(cancel);
        gf2::Vec v(bm.col_faces.size());
        for (std::size_t b = 0; b < kernel.size(); ++b)
            if (combo & (std::size_t(1) << b)) v ^= kernel[b];
        if (v.is_zero()) continue;
        for (auto& part : detail::facet_components(detail::faces_of_vec(bm.col_faces, v), d))
            seen.insert(std::move(part));
    }
    std::vector<std::vector<Face>> candidates(seen.begin(), seen.end());
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

    for (const auto& support : candidates) {
        check_cancel(cancel);
        SimplicialComplex sub = SimplicialComplex::subcomplex(
            complex, support, complex.name() + "|candidate");
        auto cycle = is_d_dimensional_cycle(sub);
        if (!cycle)
            throw InternalCheckFailure("kernel component is not a d-dimensional cycle");
        auto assignment = orientability(*cycle);
        if (!assignment) continue;

        // signed facet sum, expressed over the ambient complex
        Chain<F> chain(field, d);
        for (const Face& f : cycle->base.facets()) {
            const Face ambient_face = complex.face_from_labels(cycle->base.face_labels(f));
            chain.add_term(ambient_face, field.from_int(assignment->sign.at(f)));
        }
        auto result = solve_boundary(chain, complex);
        if (result.witness) continue; // bounds over this field

        HomologyCertificate cert;
        cert.kind = CertificateKind::OrientableCycle;
        cert.dim = d;
        cert.field_name = field.name();
        cert.witness = std::move(*cycle);
        cert.signs = std::move(*assignment);
        cert.nonbounding = result.evidence;
        cert.sound_only = true;
        cert.verified = is_cycle(chain, complex);
        if (!cert.verified)
            throw InternalCheckFailure("orientable certificate failed re-verification");
        return cert;
    }
    return std::nullopt;
}

namespace detail {

/// Builds the canonical +-1 chain of a vertex cycle, re-verifies that it is
/// a non-bounding cycle, and wraps everything into a certificate.
template <class F>
HomologyCertificate finish_graph_certificate(const SimplicialComplex& complex, F field,
                                             const std::vector<std::string>& sequence) {
    Chain<F> chain(field, 1);
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        const VertexId a = complex.require_vertex(sequence[i]);
        const VertexId b = complex.require_vertex(sequence[(i + 1) % sequence.size()]);
        chain.add_oriented({a, b}, field.one());
    }
    if (!is_cycle(chain, complex))
        throw InternalCheckFailure("vertex sequence chain is not a cycle");
    auto result = solve_boundary(chain, complex);
    if (result.witness)
        throw InternalCheckFailure("graph cycle witness bounds after renormalization");

    std::vector<Face> support;
    for (const auto& [f, v] : chain.terms()) support.push_back(f);
    SimplicialComplex sub = SimplicialComplex::subcomplex(complex, support,
                                                          complex.name() + "|graph-witness");
    auto cycle = is_d_dimensional_cycle(sub);
    if (!cycle)
        throw InternalCheckFailure("graph cycle support failed the 1-cycle check");

    HomologyCertificate cert;
    cert.kind = CertificateKind::GraphCycle;
    cert.dim = 1;
    cert.field_name = field.name();
    cert.witness = std::move(*cycle);
    cert.vertex_sequence = sequence;
    cert.nonbounding = result.evidence;
    cert.verified = true;
    return cert;
}

} // namespace detail

/// Dimension-1 certification: a non-bounding graph cycle exists over the
/// given field exactly when the reduced first homology is nonzero.  The
/// witness is rendered as a vertex sequence.
template <class F>
std::optional<HomologyCertificate> certify_graph_cycle(const SimplicialComplex& complex, F field,
                                                       const CancelToken* cancel = nullptr) {
    if (complex.dim() < 1) return std::nullopt;

    if (field.characteristic() == 2) {
        auto cert = certify_char2(complex, 1, cancel);
        if (!cert) return std::nullopt;
        auto sequence = find_graph_cycle(cert->witness.base);
        if (!sequence)
            throw InternalCheckFailure("face-minimal 1-cycle is not a graph cycle");
        cert->kind = CertificateKind::GraphCycle;
        cert->field_name = field.name();
        cert->vertex_sequence = std::move(*sequence);
        return cert;
    }

    const std::vector<Face>& edges = complex.faces(1);

    // no 2-faces: nothing bounds, so any graph cycle certifies
    if (complex.faces(2).empty()) {
        SimplicialComplex skeleton = SimplicialComplex::subcomplex(
            complex, edges, complex.name() + "|1-skeleton");
        auto sequence = find_any_graph_cycle(skeleton);
        if (!sequence) return std::nullopt; // forest: first homology vanishes
        return detail::finish_graph_certificate(complex, field, *sequence);
    }

    BoundaryMatrix<F> bm = boundary_matrix(complex, 1, field);
    std::vector<std::vector<typename F::Value>> kernel = bm.mat.kernel_basis();

    auto chain_of = [&](const std::vector<typename F::Value>& coeffs) {
        Chain<F> c(field, 1);
        for (std::size_t j = 0; j < edges.size(); ++j) c.add_term(bm.col_faces[j], coeffs[j]);
        return c;
    };

    std::optional<Chain<F>> current;
    for (const auto& k : kernel) {
        check_cancel(cancel);
        Chain<F> c = chain_of(k);
        if (!is_boundary(c, complex)) { current = std::move(c); break; }
    }
    if (!current) return std::nullopt;

    // greedy face elimination: look for a non-bounding cycle avoiding one
    // more edge of the current support; stop when no edge can be dropped
    bool improved = true;
    while (improved) {
        check_cancel(cancel);
        improved = false;
        std::vector<Face> support;
        for (const auto& [f, v] : current->terms()) support.push_back(f);
        for (const Face& dropped : support) {
            std::vector<Face> rest;
            for (const Face& f : support)
                if (!(f == dropped)) rest.push_back(f);
            if (rest.empty()) continue;

            // kernel of the boundary restricted to the remaining edges
            std::set<Face> vertex_set;
            for (const Face& e : rest)
                for (VertexId v : e.vertices) vertex_set.insert(Face({v}));
            std::map<Face, std::size_t> row_index;
            for (const Face& v : vertex_set) row_index.emplace(v, row_index.size());
            DenseMatrix<F> mat(field, row_index.size(), rest.size());
            for (std::size_t j = 0; j < rest.size(); ++j) {
                mat.at(row_index.at(Face({rest[j].vertices[0]})), j) = field.from_int(-1);
                mat.at(row_index.at(Face({rest[j].vertices[1]})), j) = field.from_int(1);
            }
            bool replaced = false;
            for (const auto& k : mat.kernel_basis()) {
                Chain<F> c(field, 1);
                for (std::size_t j = 0; j < rest.size(); ++j) c.add_term(rest[j], k[j]);
                if (c.empty()) continue;
                if (!is_boundary(c, complex)) {
                    current = std::move(c);
                    replaced = improved = true;
                    break;
                }
            }
            if (replaced) break;
        }
    }

    // the support of a support-minimal non-bounding 1-cycle is a graph cycle
    std::vector<Face> support;
    for (const auto& [f, v] : current->terms()) support.push_back(f);
    SimplicialComplex sub = SimplicialComplex::subcomplex(complex, support,
                                                          complex.name() + "|graph-witness");
    auto sequence = find_graph_cycle(sub);
    if (!sequence || sub.facets().size() != support.size() ||
        sequence->size() != support.size())
        throw InternalCheckFailure("minimal non-bounding 1-cycle is not a graph cycle");
    return detail::finish_graph_certificate(complex, field, *sequence);
}

/// Experiment hook: true when the complex carries nonzero rational homology
/// in dimension d although the exhaustive candidate search finds no
/// orientable cycle with a non-bounding sum.  Whether such complexes exist
/// is exactly what the sound-but-incomplete caveat of certify_orientable is
/// about; this predicate only reports what the engine derives, it claims
/// nothing beyond the instance at hand.
inline bool char0_sufficiency_gap(const SimplicialComplex& complex, int d,
                                  const CancelToken* cancel = nullptr) {
    if (reduced_betti(complex, d, Rationals{}) == 0) return false;
    return !certify_orientable(complex, d, Rationals{}, cancel).has_value();
}

} // namespace dcycle
