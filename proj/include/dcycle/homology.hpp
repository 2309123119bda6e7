#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dcycle/chain.hpp"
#include "dcycle/complex.hpp"
#include "dcycle/gf2.hpp"
#include "dcycle/linalg.hpp"

namespace dcycle {

/// Matrix of the boundary map from d-faces to (d-1)-faces.  Rows and columns
/// are in lexicographic face order; column j is the boundary of the j-th
/// d-face in its canonical (sorted) orientation, so reports and witnesses
/// are reproducible byte for byte.
template <class F>
struct BoundaryMatrix {
    int dim;
    F field;
    std::vector<Face> row_faces; // (d-1)-faces
    std::vector<Face> col_faces; // d-faces
    DenseMatrix<F> mat;
};

template <class F>
BoundaryMatrix<F> boundary_matrix(const SimplicialComplex& complex, int d, F field) {
    if (d < 0 || d > complex.dim())
        throw DimensionRange("boundary matrix dimension " + std::to_string(d) +
                             " out of range for '" + complex.name() + "'");
    const std::vector<Face>& rows = complex.faces(d - 1);
    const std::vector<Face>& cols = complex.faces(d);
    std::map<Face, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);

    BoundaryMatrix<F> bm{d, field, rows, cols, DenseMatrix<F>(field, rows.size(), cols.size())};
    if (d == 0) return bm; // no (-1)-row; the augmentation lives elsewhere
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Face& f = cols[j];
        for (std::size_t i = 0; i < f.size(); ++i) {
            const std::size_t r = row_index.at(f.without(f.vertices[i]));
            bm.mat.at(r, j) = field.from_int(i % 2 == 0 ? 1 : -1);
        }
    }
    return bm;
}

/// GF(2) boundary matrix on packed words; signs disappear mod 2.
struct Gf2Boundary {
    int dim;
    std::vector<Face> row_faces;
    std::vector<Face> col_faces;
    gf2::Matrix mat;
};

inline Gf2Boundary boundary_matrix_gf2(const SimplicialComplex& complex, int d) {
    if (d < 0 || d > complex.dim())
        throw DimensionRange("boundary matrix dimension " + std::to_string(d) +
                             " out of range for '" + complex.name() + "'");
    const std::vector<Face>& rows = complex.faces(d - 1);
    const std::vector<Face>& cols = complex.faces(d);
    std::map<Face, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);

    Gf2Boundary bm{d, rows, cols, gf2::Matrix(rows.size(), cols.size())};
    if (d == 0) return bm;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Face& f = cols[j];
        for (std::size_t i = 0; i < f.size(); ++i)
            bm.mat.set(row_index.at(f.without(f.vertices[i])), j);
    }
    return bm;
}

/// Number of connected components (vertices joined whenever they share a
/// face).  Drives the dimension-0 augmentation convention.
inline std::size_t connected_components(const SimplicialComplex& complex) {
    const std::size_t n = complex.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    for (const Face& f : complex.facets())
        for (std::size_t i = 1; i < f.size(); ++i) {
            const auto a = find(static_cast<std::size_t>(f.vertices[0]));
            const auto b = find(static_cast<std::size_t>(f.vertices[i]));
            if (a != b) parent[a] = b;
        }
    std::size_t count = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (find(v) == v) ++count;
    return count;
}

/// Reduced Betti number of dimension d over the given field, by exact rank:
/// betti[d] = nullity(bd_d) - rank(bd_{d+1}) for d >= 1, and components - 1
/// in dimension 0.
template <class F>
std::size_t reduced_betti(const SimplicialComplex& complex, int d, F field) {
    if (d < 0) throw DimensionRange("negative homology dimension");
    if (complex.empty()) return 0;
    if (d == 0) return connected_components(complex) - 1;
    if (d > complex.dim()) return 0;

    const std::size_t n_d = complex.faces(d).size();
    const std::size_t rank_d = boundary_matrix(complex, d, field).mat.rank();
    std::size_t rank_up = 0;
    if (d + 1 <= complex.dim())
        rank_up = boundary_matrix(complex, d + 1, field).mat.rank();
    return n_d - rank_d - rank_up;
}

template <class F>
bool is_cycle(const Chain<F>& c, const SimplicialComplex& ambient) {
    return boundary(c, ambient).empty();
}

/// Evidence that a solve failed: the augmented rank strictly exceeding the
/// matrix rank proves there is no preimage.
struct NonBoundingEvidence {
    std::size_t matrix_rank = 0;
    std::size_t augmented_rank = 0;
};

template <class F>
struct BoundarySolveResult {
    std::optional<Chain<F>> witness;
    NonBoundingEvidence evidence;
};

/// Solves bd_{d+1} y = c exactly.  On success the witness chain y is
/// re-verified by evaluating its boundary before being returned.
template <class F>
BoundarySolveResult<F> solve_boundary(const Chain<F>& c, const SimplicialComplex& ambient) {
    for (const auto& [f, v] : c.terms())
        if (!ambient.has_face(f))
            throw ForeignFace("chain face is not a face of '" + ambient.name() + "'");

    const int d = c.dim();
    BoundarySolveResult<F> out;
    if (d + 1 > ambient.dim() || d < 0) {
        // no (d+1)-faces at all: only the empty chain bounds
        out.evidence = {0, c.empty() ? std::size_t(0) : std::size_t(1)};
        if (c.empty()) out.witness = Chain<F>(c.field(), d + 1);
        return out;
    }
    BoundaryMatrix<F> bm = boundary_matrix(ambient, d + 1, c.field());
    std::vector<typename F::Value> rhs(bm.row_faces.size(), c.field().zero());
    for (std::size_t i = 0; i < bm.row_faces.size(); ++i)
        rhs[i] = c.coefficient(bm.row_faces[i]);
    SolveReport<F> report = bm.mat.solve_with_report(rhs);
    out.evidence = {report.rank, report.augmented_rank};
    if (!report.solution) return out;

    Chain<F> y(c.field(), d + 1);
    for (std::size_t j = 0; j < bm.col_faces.size(); ++j)
        y.add_term(bm.col_faces[j], (*report.solution)[j]);
    if (!(boundary(y, ambient) == c))
        throw InternalCheckFailure("boundary solve round-trip failed");
    out.witness = std::move(y);
    return out;
}

template <class F>
std::optional<Chain<F>> is_boundary(const Chain<F>& c, const SimplicialComplex& ambient) {
    return solve_boundary(c, ambient).witness;
}

/// Exhaustive GF(2) classification of every subset of d-faces (cycles) and
/// every boundary of a subset of (d+1)-faces.  This is the independent
/// oracle used to validate the rank engine; it never touches elimination.
struct OracleResult {
    int dim = 0;
    std::vector<Face> dfaces;              // column order for the masks
    std::vector<std::uint32_t> cycles;     // subset masks, ascending
    std::vector<std::uint32_t> boundaries; // subset masks, ascending
};

inline constexpr std::size_t kOracleMaxFaces = 20;

inline OracleResult brute_force_homology_oracle(const SimplicialComplex& complex, int d) {
    if (d < 1 || d > complex.dim())
        throw DimensionRange("oracle dimension " + std::to_string(d) +
                             " out of range for '" + complex.name() + "'");
    const std::vector<Face>& dfaces = complex.faces(d);
    const std::vector<Face>& upfaces = complex.faces(d + 1);
    if (dfaces.size() > kOracleMaxFaces || upfaces.size() > kOracleMaxFaces)
        throw OracleTooLarge("oracle bound exceeded: " + std::to_string(dfaces.size()) +
                             " faces of dimension " + std::to_string(d) + ", " +
                             std::to_string(upfaces.size()) + " of dimension " +
                             std::to_string(d + 1) + " (limit " +
                             std::to_string(kOracleMaxFaces) + " each)");

    const std::vector<Face>& ridges = complex.faces(d - 1);
    std::map<Face, std::size_t> ridge_index;
    for (std::size_t i = 0; i < ridges.size(); ++i) ridge_index.emplace(ridges[i], i);
    std::map<Face, std::size_t> dface_index;
    for (std::size_t i = 0; i < dfaces.size(); ++i) dface_index.emplace(dfaces[i], i);

    // per d-face: which ridges it covers, as a packed mask
    const std::size_t words = (ridges.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> ridge_mask(dfaces.size(),
                                                       std::vector<std::uint64_t>(words, 0));
    for (std::size_t j = 0; j < dfaces.size(); ++j) {
        const Face& f = dfaces[j];
        for (std::size_t i = 0; i < f.size(); ++i) {
            const std::size_t r = ridge_index.at(f.without(f.vertices[i]));
            ridge_mask[j][r >> 6] |= std::uint64_t(1) << (r & 63);
        }
    }

    OracleResult out;
    out.dim = d;
    out.dfaces = dfaces;

    std::vector<std::uint64_t> acc(words);
    for (std::uint32_t subset = 0; subset < (1u << dfaces.size()); ++subset) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t j = 0; j < dfaces.size(); ++j)
            if (subset & (1u << j))
                for (std::size_t w = 0; w < words; ++w) acc[w] ^= ridge_mask[j][w];
        bool zero = true;
        for (std::uint64_t w : acc)
            if (w) { zero = false; break; }
        if (zero) out.cycles.push_back(subset);
    }

    // boundaries: evaluate the boundary of every subset of (d+1)-faces
    std::vector<std::uint32_t> up_mask(upfaces.size(), 0);
    for (std::size_t j = 0; j < upfaces.size(); ++j) {
        const Face& g = upfaces[j];
        for (std::size_t i = 0; i < g.size(); ++i)
            up_mask[j] |= std::uint32_t(1) << dface_index.at(g.without(g.vertices[i]));
    }
    std::vector<bool> seen(std::size_t(1) << dfaces.size(), false);
    for (std::uint32_t subset = 0; subset < (1u << upfaces.size()); ++subset) {
        std::uint32_t image = 0;
        for (std::size_t j = 0; j < upfaces.size(); ++j)
            if (subset & (1u << j)) image ^= up_mask[j];
        if (!seen[image]) {
            seen[image] = true;
            out.boundaries.push_back(image);
        }
    }
    std::sort(out.boundaries.begin(), out.boundaries.end());
    return out;
}

inline std::size_t log2_exact(std::size_t n) {
    std::size_t k = 0;
    while ((std::size_t(1) << k) < n) ++k;
    return k;
}

/// Report of reduced Betti numbers, one complex and one field per report.
struct BettiReport {
    std::string name;
    std::string field_name;
    std::map<int, std::size_t> betti;
};

template <class F>
BettiReport betti_report(const SimplicialComplex& complex, F field,
                         std::optional<int> only_dim = std::nullopt) {
    BettiReport report{complex.name(), field.name(), {}};
    if (only_dim) {
        report.betti[*only_dim] = reduced_betti(complex, *only_dim, field);
        return report;
    }
    for (int d = 0; d <= complex.dim(); ++d)
        report.betti[d] = reduced_betti(complex, d, field);
    return report;
}

} // namespace dcycle
