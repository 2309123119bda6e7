#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dcycle/complex.hpp"
#include "dcycle/errors.hpp"
#include "dcycle/fields.hpp"

namespace dcycle {

/// Counts inversions of a vertex sequence against sorted order and rejects
/// repeats.  Returns (sorted face, parity of the sorting permutation).
inline std::pair<Face, int> canonicalize_orientation(const std::vector<VertexId>& seq) {
    int parity = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[i] == seq[j])
                throw InvalidFacet("oriented face repeats a vertex");
            if (seq[i] > seq[j]) parity ^= 1;
        }
    std::vector<VertexId> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    return {Face(std::move(sorted)), parity};
}

/// An oriented face: the canonical sorted face plus the parity of the chosen
/// vertex ordering relative to sorted order.  Two orderings are the same
/// oriented face exactly when they differ by an even permutation, so the
/// relation [v0,v1,...] = -[v1,v0,...] becomes a parity flip.
struct OrientedFace {
    Face face;
    int parity = 0; // 0: even wrt sorted order, 1: odd

    OrientedFace() = default;
    OrientedFace(Face f, int p) : face(std::move(f)), parity(p & 1) {}

    static OrientedFace from_sequence(const std::vector<VertexId>& seq) {
        auto [f, p] = canonicalize_orientation(seq);
        return OrientedFace(std::move(f), p);
    }

    OrientedFace flipped() const { return OrientedFace(face, parity ^ 1); }
    bool operator==(const OrientedFace&) const = default;
};

/// A formal field-weighted sum of oriented d-faces.  Terms are keyed by the
/// canonical sorted face; the coefficient absorbs orientation parity.  Zero
/// coefficients are never stored.
template <class F>
class Chain {
public:
    using Value = typename F::Value;

    Chain(F field, int dim) : field_(std::move(field)), dim_(dim) {}

    const F& field() const { return field_; }
    int dim() const { return dim_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Face, Value>& terms() const { return terms_; }

    /// Accumulates `value` on the canonical face `f` (must have dim()).
    void add_term(const Face& f, const Value& value) {
        if (f.dim() != dim_)
            throw ChainMismatch("face of dimension " + std::to_string(f.dim()) +
                                " added to a chain of dimension " + std::to_string(dim_));
        if (field_.is_zero(value)) return;
        auto it = terms_.find(f);
        if (it == terms_.end()) {
            terms_.emplace(f, value);
            return;
        }
        it->second = field_.add(it->second, value);
        if (field_.is_zero(it->second)) terms_.erase(it);
    }

    /// Adds `coeff` times the oriented face given by a vertex sequence; the
    /// parity of the sequence is folded into the coefficient.
    void add_oriented(const std::vector<VertexId>& seq, const Value& coeff) {
        auto [f, parity] = canonicalize_orientation(seq);
        add_term(f, parity ? field_.neg(coeff) : coeff);
    }

    Value coefficient(const Face& f) const {
        auto it = terms_.find(f);
        return it == terms_.end() ? field_.zero() : it->second;
    }

    bool operator==(const Chain& other) const {
        return dim_ == other.dim_ && field_ == other.field_ && terms_ == other.terms_;
    }

private:
    F field_;
    int dim_;
    std::map<Face, Value> terms_;
};

template <class F>
Chain<F> add(const Chain<F>& a, const Chain<F>& b) {
    if (a.dim() != b.dim() || !(a.field() == b.field()))
        throw ChainMismatch("cannot add chains of different dimension or field");
    Chain<F> out = a;
    for (const auto& [f, v] : b.terms()) out.add_term(f, v);
    return out;
}

template <class F>
Chain<F> scale(const Chain<F>& c, const typename F::Value& lambda) {
    Chain<F> out(c.field(), c.dim());
    for (const auto& [f, v] : c.terms()) out.add_term(f, c.field().mul(lambda, v));
    return out;
}

template <class F>
Chain<F> negate(const Chain<F>& c) {
    return scale(c, c.field().neg(c.field().one()));
}

template <class F>
using Value_t = typename F::Value;

/// The boundary homomorphism: d([v0..vd]) = sum_i (-1)^i [v0..^vi..vd],
/// extended linearly.  For 0-chains the result is the empty (-1)-chain; the
/// augmentation is handled by the homology engine, not here.
template <class F>
Chain<F> boundary(const Chain<F>& c, const SimplicialComplex& ambient) {
    for (const auto& [f, v] : c.terms())
        if (!ambient.has_face(f))
            throw ForeignFace("chain face is not a face of '" + ambient.name() + "'");
    Chain<F> out(c.field(), c.dim() - 1);
    if (c.dim() <= 0) return out;
    const F& field = c.field();
    for (const auto& [f, coeff] : c.terms()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            const Value_t<F> signed_coeff = (i % 2 == 0) ? coeff : field.neg(coeff);
            out.add_term(f.without(f.vertices[i]), signed_coeff);
        }
    }
    return out;
}

/// Complex whose facets are exactly the faces carrying a nonzero coefficient.
/// The ambient complex supplies the vertex labels.
template <class F>
SimplicialComplex support_complex(const Chain<F>& c, const SimplicialComplex& ambient,
                                  std::string name = {}) {
    if (c.empty())
        throw EmptySupport("support complex of the empty chain");
    std::vector<Face> facets;
    facets.reserve(c.size());
    for (const auto& [f, v] : c.terms()) facets.push_back(f);
    return SimplicialComplex::subcomplex(ambient, facets,
                                         name.empty() ? ambient.name() + "|support" : std::move(name));
}

} // namespace dcycle
