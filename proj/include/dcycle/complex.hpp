#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dcycle/errors.hpp"

namespace dcycle {

using VertexId = std::int32_t;

/// A face: a strictly increasing sequence of vertex ids within one complex.
/// The empty face (dimension -1) never occurs as a face of a complex; it only
/// shows up as the ridge of a pure 0-dimensional complex.
struct Face {
    std::vector<VertexId> vertices;

    Face() = default;
    explicit Face(std::vector<VertexId> vs) : vertices(std::move(vs)) {}

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    std::size_t size() const { return vertices.size(); }

    bool contains(VertexId v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }

    bool subset_of(const Face& other) const {
        return std::includes(other.vertices.begin(), other.vertices.end(),
                             vertices.begin(), vertices.end());
    }

    /// Position of `v` in the sorted vertex order, or -1.
    int index_of(VertexId v) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
        if (it == vertices.end() || *it != v) return -1;
        return static_cast<int>(it - vertices.begin());
    }

    Face without(VertexId v) const {
        Face f;
        f.vertices.reserve(vertices.size() - 1);
        for (VertexId u : vertices)
            if (u != v) f.vertices.push_back(u);
        return f;
    }

    Face with(VertexId v) const {
        Face f = *this;
        f.vertices.insert(std::lower_bound(f.vertices.begin(), f.vertices.end(), v), v);
        return f;
    }

    auto operator<=>(const Face&) const = default;
};

/// Builds a face from an arbitrary id list; sorts and rejects duplicates.
inline Face make_face(std::vector<VertexId> vs) {
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw InvalidFacet("face has a repeated vertex");
    return Face(std::move(vs));
}

/// An immutable finite abstract simplicial complex, presented by its facets.
///
/// Vertex labels are interned to dense ids 0..V-1 in first-appearance order;
/// all set machinery runs on sorted id sequences.  The facet family is kept
/// as an inclusion antichain: dominated or duplicate input facets are
/// silently dropped.  `faces(k)` is memoized per level behind a mutex, so a
/// fully constructed complex can be shared across threads.
class SimplicialComplex {
public:
    /// The empty complex: no vertices, no facets, dimension -1.
    SimplicialComplex() = default;

    /// `facet_lists` holds vertex labels, one list per facet.
    static SimplicialComplex from_facets(std::string name,
                                         const std::vector<std::vector<std::string>>& facet_lists) {
        if (facet_lists.empty())
            throw EmptyComplex("complex '" + name + "' has no facets");
        SimplicialComplex c;
        c.name_ = std::move(name);
        std::vector<Face> faces;
        faces.reserve(facet_lists.size());
        for (const auto& labels : facet_lists) {
            if (labels.empty())
                throw InvalidFacet("empty facet in complex '" + c.name_ + "'");
            std::vector<VertexId> ids;
            ids.reserve(labels.size());
            for (const auto& label : labels) ids.push_back(c.intern(label));
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            faces.emplace_back(std::move(ids));
        }
        c.assign_facets(std::move(faces));
        return c;
    }

    /// Standalone complex on a subset of `parent`'s faces.  Labels of the
    /// used vertices are re-interned in parent id order, which keeps derived
    /// complexes deterministic.
    static SimplicialComplex subcomplex(const SimplicialComplex& parent,
                                        const std::vector<Face>& facets,
                                        std::string name) {
        SimplicialComplex c;
        c.name_ = std::move(name);
        std::set<VertexId> used;
        for (const Face& f : facets) used.insert(f.vertices.begin(), f.vertices.end());
        std::map<VertexId, VertexId> remap;
        for (VertexId v : used) remap[v] = c.intern(parent.label(v));
        std::vector<Face> mapped;
        mapped.reserve(facets.size());
        for (const Face& f : facets) {
            std::vector<VertexId> ids;
            ids.reserve(f.size());
            for (VertexId v : f.vertices) ids.push_back(remap.at(v));
            std::sort(ids.begin(), ids.end());
            mapped.emplace_back(std::move(ids));
        }
        c.assign_facets(std::move(mapped));
        return c;
    }

    SimplicialComplex(const SimplicialComplex& other)
        : name_(other.name_), labels_(other.labels_), index_(other.index_),
          facets_(other.facets_), dim_(other.dim_), pure_(other.pure_) {
        std::lock_guard<std::mutex> lock(other.cache_mutex_);
        face_cache_ = other.face_cache_;
    }
    SimplicialComplex& operator=(const SimplicialComplex& other) {
        if (this != &other) { SimplicialComplex tmp(other); swap(tmp); }
        return *this;
    }
    SimplicialComplex(SimplicialComplex&& other) noexcept
        : name_(std::move(other.name_)), labels_(std::move(other.labels_)),
          index_(std::move(other.index_)), facets_(std::move(other.facets_)),
          dim_(other.dim_), pure_(other.pure_),
          face_cache_(std::move(other.face_cache_)) {}
    SimplicialComplex& operator=(SimplicialComplex&& other) noexcept {
        if (this != &other) { SimplicialComplex tmp(std::move(other)); swap(tmp); }
        return *this;
    }

    const std::string& name() const { return name_; }

    /// Dimension of the complex; -1 for the empty complex.
    int dim() const { return dim_; }
    bool empty() const { return facets_.empty(); }
    bool is_pure() const { return pure_; }

    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(VertexId v) const { return labels_.at(static_cast<std::size_t>(v)); }

    std::optional<VertexId> find_vertex(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    VertexId require_vertex(std::string_view label) const {
        auto v = find_vertex(label);
        if (!v) throw UnknownVertex("no vertex '" + std::string(label) + "' in '" + name_ + "'");
        return *v;
    }

    /// Facets in lexicographic id order.
    const std::vector<Face>& facets() const { return facets_; }

    /// All k-faces, i.e. the (k+1)-subsets of facets, deduplicated and
    /// sorted lexicographically.  Empty for k < 0 or k > dim().
    const std::vector<Face>& faces(int k) const {
        static const std::vector<Face> kNone;
        if (k < 0 || k > dim_) return kNone;
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = face_cache_.find(k);
        if (it != face_cache_.end()) return it->second;
        std::set<Face> out;
        std::vector<VertexId> pick(static_cast<std::size_t>(k) + 1);
        for (const Face& f : facets_)
            if (f.dim() >= k) enumerate_subsets(f, 0, 0, pick, out);
        auto [pos, _] = face_cache_.emplace(k, std::vector<Face>(out.begin(), out.end()));
        return pos->second;
    }

    bool has_face(const Face& f) const {
        for (const Face& g : facets_)
            if (f.subset_of(g)) return true;
        return false;
    }

    /// True iff every possible d-face on the vertex set is present.
    bool is_d_complete(int d) const {
        if (d < 0) return false;
        const std::size_t n = vertex_count();
        if (static_cast<std::size_t>(d) + 1 > n) return false;
        return faces(d).size() == binomial(n, static_cast<std::size_t>(d) + 1);
    }

    /// Subcomplex of the faces entirely contained in the vertex set `w`
    /// (given by labels), re-maximalized.  May be empty.
    SimplicialComplex induced_subcomplex(const std::vector<std::string>& w,
                                         std::string name = {}) const {
        std::set<VertexId> allowed;
        for (const auto& label : w) allowed.insert(require_vertex(label));
        std::vector<Face> kept;
        for (const Face& f : facets_) {
            std::vector<VertexId> in;
            for (VertexId v : f.vertices)
                if (allowed.count(v)) in.push_back(v);
            if (!in.empty()) kept.emplace_back(std::move(in));
        }
        SimplicialComplex c;
        c.name_ = name.empty() ? name_ + "|induced" : std::move(name);
        if (kept.empty()) return c;
        std::set<VertexId> used;
        for (const Face& f : kept) used.insert(f.vertices.begin(), f.vertices.end());
        std::map<VertexId, VertexId> remap;
        for (VertexId v : used) remap[v] = c.intern(label(v));
        for (Face& f : kept)
            for (VertexId& v : f.vertices) v = remap.at(v);
        c.assign_facets(std::move(kept));
        return c;
    }

    std::vector<std::string> face_labels(const Face& f) const {
        std::vector<std::string> out;
        out.reserve(f.size());
        for (VertexId v : f.vertices) out.push_back(label(v));
        return out;
    }

    /// Face labels sorted alphabetically; the canonical serialized form.
    std::vector<std::string> face_labels_sorted(const Face& f) const {
        auto out = face_labels(f);
        std::sort(out.begin(), out.end());
        return out;
    }

    Face face_from_labels(const std::vector<std::string>& labels) const {
        std::vector<VertexId> ids;
        ids.reserve(labels.size());
        for (const auto& l : labels) ids.push_back(require_vertex(l));
        return make_face(std::move(ids));
    }

    /// Facets as alphabetically sorted label lists, sorted lexicographically.
    /// This is the label-level identity of the complex.
    std::vector<std::vector<std::string>> facet_label_lists() const {
        std::vector<std::vector<std::string>> out;
        out.reserve(facets_.size());
        for (const Face& f : facets_) out.push_back(face_labels_sorted(f));
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Structural equality, label for label; names are not compared.
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.facet_label_lists() == b.facet_label_lists();
    }

    static std::uint64_t binomial(std::size_t n, std::size_t k) {
        if (k > n) return 0;
        k = std::min(k, n - k);
        std::uint64_t r = 1;
        for (std::size_t i = 1; i <= k; ++i)
            r = r * (n - k + i) / i;
        return r;
    }

private:
    VertexId intern(const std::string& label) {
        auto it = index_.find(label);
        if (it != index_.end()) return it->second;
        const VertexId id = static_cast<VertexId>(labels_.size());
        labels_.push_back(label);
        index_.emplace(label, id);
        return id;
    }

    void swap(SimplicialComplex& other) {
        std::swap(name_, other.name_);
        std::swap(labels_, other.labels_);
        std::swap(index_, other.index_);
        std::swap(facets_, other.facets_);
        std::swap(dim_, other.dim_);
        std::swap(pure_, other.pure_);
        std::swap(face_cache_, other.face_cache_);
    }

    // Deduplicates, removes dominated facets, sorts, derives dim/purity.
    void assign_facets(std::vector<Face> faces) {
        std::sort(faces.begin(), faces.end());
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        std::vector<Face> keep;
        keep.reserve(faces.size());
        for (std::size_t i = 0; i < faces.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < faces.size() && !dominated; ++j)
                if (i != j && faces[i].subset_of(faces[j]) && faces[i] != faces[j])
                    dominated = true;
            if (!dominated) keep.push_back(faces[i]);
        }
        facets_ = std::move(keep);
        dim_ = -1;
        pure_ = true;
        for (const Face& f : facets_) dim_ = std::max(dim_, f.dim());
        for (const Face& f : facets_)
            if (f.dim() != dim_) { pure_ = false; break; }
    }

    static void enumerate_subsets(const Face& f, std::size_t from, std::size_t chosen,
                                  std::vector<VertexId>& pick, std::set<Face>& out) {
        if (chosen == pick.size()) {
            out.insert(Face(pick));
            return;
        }
        const std::size_t need = pick.size() - chosen;
        for (std::size_t i = from; i + need <= f.size(); ++i) {
            pick[chosen] = f.vertices[i];
            enumerate_subsets(f, i + 1, chosen + 1, pick, out);
        }
    }

    std::string name_;
    std::vector<std::string> labels_;
    std::map<std::string, VertexId> index_;
    std::vector<Face> facets_;
    int dim_ = -1;
    bool pure_ = true;

    mutable std::mutex cache_mutex_;
    mutable std::map<int, std::vector<Face>> face_cache_;
};

} // namespace dcycle
