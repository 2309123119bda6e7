#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dcycle/complex.hpp"
#include "dcycle/errors.hpp"

// Canonical named complexes with frozen expected properties.  Every value in
// an `expected` map is re-derived by the engine at test time; the corpus
// holds no unchecked constants.  Where only the shape of a triangulation is
// pinned down (sphere, torus, pinched sphere, Moore space), one standard
// triangulation is fixed here and correctness rests on the invariant checks,
// not on any drawing.

namespace dcycle::corpus {

using nlohmann::json;

namespace detail {

inline SimplicialComplex build_six_cycle() {
    return SimplicialComplex::from_facets("six_cycle",
        {{"a","b"},{"b","c"},{"c","d"},{"d","e"},{"e","f"},{"f","a"}});
}

inline SimplicialComplex build_hollow_tetrahedron() {
    return SimplicialComplex::from_facets("hollow_tetrahedron",
        {{"a","b","c"},{"a","b","d"},{"a","c","d"},{"b","c","d"}});
}

inline SimplicialComplex build_octahedron() {
    return SimplicialComplex::from_facets("octahedron",
        {{"u","a","b"},{"u","b","c"},{"u","c","d"},{"u","d","a"},
         {"w","a","b"},{"w","b","c"},{"w","c","d"},{"w","d","a"}});
}

// icosahedron boundary: poles n/s, upper and lower pentagons offset by a
// half step
inline SimplicialComplex build_sphere() {
    std::vector<std::vector<std::string>> f;
    auto u = [](int i) { return "u" + std::to_string(((i % 5) + 5) % 5); };
    auto l = [](int i) { return "l" + std::to_string(((i % 5) + 5) % 5); };
    for (int i = 0; i < 5; ++i) {
        f.push_back({"n", u(i), u(i + 1)});
        f.push_back({"s", l(i), l(i + 1)});
        f.push_back({u(i), u(i + 1), l(i)});
        f.push_back({l(i), l(i + 1), u(i + 1)});
    }
    return SimplicialComplex::from_facets("sphere_triangulation", f);
}

// 7-vertex torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7
inline SimplicialComplex build_torus7() {
    std::vector<std::vector<std::string>> f;
    auto t = [](int i) { return "t" + std::to_string(((i % 7) + 7) % 7); };
    for (int i = 0; i < 7; ++i) {
        f.push_back({t(i), t(i + 1), t(i + 3)});
        f.push_back({t(i), t(i + 2), t(i + 3)});
    }
    return SimplicialComplex::from_facets("torus_7", f);
}

// minimal 6-vertex projective plane
inline SimplicialComplex build_rp2_6() {
    return SimplicialComplex::from_facets("rp2_6",
        {{"p1","p2","p3"},{"p1","p3","p4"},{"p1","p4","p5"},{"p1","p5","p6"},{"p1","p2","p6"},
         {"p2","p4","p5"},{"p3","p5","p6"},{"p2","p4","p6"},{"p2","p3","p5"},{"p3","p4","p6"}});
}

// two triangulated square pyramid surfaces sharing the edge {a,b}
inline SimplicialComplex build_glued_pyramids() {
    return SimplicialComplex::from_facets("glued_pyramids",
        {{"p","a","b"},{"p","b","c"},{"p","c","d"},{"p","d","a"},{"a","b","c"},{"a","c","d"},
         {"q","a","b"},{"q","b","e"},{"q","e","f"},{"q","f","a"},{"a","b","e"},{"a","e","f"}});
}

// icosahedron with two antipodal edges identified: n~s -> x, u0~l2 -> y.
// The edge {x,y} lies in four triangles; every other edge in exactly two.
inline SimplicialComplex build_pinched_sphere() {
    return SimplicialComplex::from_facets("pinched_sphere",
        {{"x","y","u1"},{"x","u1","u2"},{"x","u2","u3"},{"x","u3","u4"},{"x","u4","y"},
         {"x","l0","l1"},{"x","l1","y"},{"x","y","l3"},{"x","l3","l4"},{"x","l4","l0"},
         {"y","u1","l0"},{"u1","u2","l1"},{"u2","u3","y"},{"u3","u4","l3"},{"u4","y","l4"},
         {"l0","l1","u1"},{"l1","y","u2"},{"y","l3","u3"},{"l3","l4","u4"},{"l4","l0","y"}});
}

// two triangle graphs sharing the vertex c
inline SimplicialComplex build_one_dim_nonminimal() {
    return SimplicialComplex::from_facets("one_dim_nonminimal",
        {{"a","b"},{"b","c"},{"c","a"},{"c","d"},{"d","e"},{"e","c"}});
}

// disk whose boundary wraps three times around the triangle x,y,z: a
// 9-gon rim carrying the labels x,y,z,x,y,z,x,y,z, an inner 9-gon p1..p9,
// and a hub vertex h
inline std::vector<std::vector<std::string>> moore_faces() {
    const std::vector<std::string> rim = {"x","y","z","x","y","z","x","y","z"};
    auto p = [](int i) { return "p" + std::to_string(((i - 1) % 9 + 9) % 9 + 1); };
    std::vector<std::vector<std::string>> f;
    for (int i = 1; i <= 9; ++i) {
        f.push_back({rim[static_cast<std::size_t>(i - 1)], rim[static_cast<std::size_t>(i % 9)], p(i)});
        f.push_back({rim[static_cast<std::size_t>(i % 9)], p(i), p(i + 1)});
        f.push_back({"h", p(i), p(i + 1)});
    }
    return f;
}

inline SimplicialComplex build_moore_mod3() {
    return SimplicialComplex::from_facets("moore_mod3", moore_faces());
}

inline SimplicialComplex build_moore_mod3_plus_xyz() {
    auto f = moore_faces();
    f.push_back({"x","y","z"});
    return SimplicialComplex::from_facets("moore_mod3_plus_xyz", f);
}

inline json betti(std::initializer_list<std::size_t> values) {
    json out = json::object();
    int d = 0;
    for (std::size_t b : values) out[std::to_string(d++)] = b;
    return out;
}

} // namespace detail

struct CorpusEntry {
    std::string name;
    SimplicialComplex (*builder)();
    json expected;
};

inline const std::vector<CorpusEntry>& corpus_list() {
    using namespace detail;
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> e;
        const json all_fields_b1 = {{"gf2", betti({0, 1})}, {"gf3", betti({0, 1})},
                                    {"q", betti({0, 1})}};
        e.push_back({"six_cycle", &build_six_cycle,
                     {{"dim", 1}, {"pure", true}, {"vertices", 6}, {"facets", 6},
                      {"betti", all_fields_b1},
                      {"cycle", true}, {"pseudo_manifold", true},
                      {"face_minimal", true}, {"orientable", true}}});

        const json sphere_like = {{"gf2", betti({0, 0, 1})}, {"gf3", betti({0, 0, 1})},
                                  {"q", betti({0, 0, 1})}};
        e.push_back({"hollow_tetrahedron", &build_hollow_tetrahedron,
                     {{"dim", 2}, {"pure", true}, {"vertices", 4}, {"facets", 4},
                      {"betti", sphere_like},
                      {"cycle", true}, {"pseudo_manifold", true},
                      {"face_minimal", true}, {"orientable", true}}});
        e.push_back({"octahedron", &build_octahedron,
                     {{"dim", 2}, {"pure", true}, {"vertices", 6}, {"facets", 8},
                      {"betti", sphere_like},
                      {"cycle", true}, {"pseudo_manifold", true},
                      {"face_minimal", true}, {"orientable", true}}});
        e.push_back({"sphere_triangulation", &build_sphere,
                     {{"dim", 2}, {"pure", true}, {"vertices", 12}, {"facets", 20},
                      {"betti", sphere_like},
                      {"cycle", true}, {"pseudo_manifold", true},
                      {"face_minimal", true}, {"orientable", true}}});

        e.push_back({"torus_7", &build_torus7,
                     {{"dim", 2}, {"pure", true}, {"vertices", 7}, {"facets", 14},
                      {"betti", {{"gf2", betti({0, 2, 1})}, {"gf3", betti({0, 2, 1})},
                                 {"q", betti({0, 2, 1})}}},
                      {"cycle", true}, {"pseudo_manifold", true},
                      {"face_minimal", true}, {"orientable", true}}});

        e.push_back({"rp2_6", &build_rp2_6,
                     {{"dim", 2}, {"pure", true}, {"vertices", 6}, {"facets", 10},
                      {"betti", {{"gf2", betti({0, 1, 1})}, {"gf3", betti({0, 0, 0})},
                                 {"q", betti({0, 0, 0})}}},
                      {"cycle", true}, {"pseudo_manifold", true},
                      {"face_minimal", true}, {"orientable", false}}});

        e.push_back({"glued_pyramids", &build_glued_pyramids,
                     {{"dim", 2}, {"pure", true}, {"vertices", 8}, {"facets", 12},
                      {"betti", {{"gf2", betti({0, 0, 2})}, {"gf3", betti({0, 0, 2})},
                                 {"q", betti({0, 0, 2})}}},
                      {"cycle", true}, {"pseudo_manifold", false},
                      {"face_minimal", false}, {"orientable", true},
                      {"decomposition_parts", 2}}});

        e.push_back({"pinched_sphere", &build_pinched_sphere,
                     {{"dim", 2}, {"pure", true}, {"vertices", 10}, {"facets", 20},
                      {"betti", {{"gf2", betti({0, 1, 1})}, {"gf3", betti({0, 1, 1})},
                                 {"q", betti({0, 1, 1})}}},
                      {"cycle", true}, {"pseudo_manifold", false},
                      {"face_minimal", true}, {"orientable", true}}});

        e.push_back({"one_dim_nonminimal", &build_one_dim_nonminimal,
                     {{"dim", 1}, {"pure", true}, {"vertices", 5}, {"facets", 6},
                      {"betti", {{"gf2", betti({0, 2})}, {"gf3", betti({0, 2})},
                                 {"q", betti({0, 2})}}},
                      {"cycle", true}, {"pseudo_manifold", false},
                      {"face_minimal", false}, {"orientable", true},
                      {"decomposition_parts", 2}}});

        e.push_back({"moore_mod3", &build_moore_mod3,
                     {{"dim", 2}, {"pure", true}, {"vertices", 13}, {"facets", 27},
                      {"betti", {{"gf2", betti({0, 0, 0})}, {"gf3", betti({0, 1, 1})},
                                 {"q", betti({0, 0, 0})}}},
                      {"cycle", false}, {"pseudo_manifold", false},
                      {"face_minimal", nullptr}, {"orientable", nullptr},
                      {"odd_ridges", json::array({{"x","y"},{"x","z"},{"y","z"}})},
                      {"ridge_incidence_histogram", {{"2", 36}, {"3", 3}}}}});

        e.push_back({"moore_mod3_plus_xyz", &build_moore_mod3_plus_xyz,
                     {{"dim", 2}, {"pure", true}, {"vertices", 13}, {"facets", 28},
                      {"betti", {{"gf2", betti({0, 0, 1})}, {"gf3", betti({0, 0, 1})},
                                 {"q", betti({0, 0, 1})}}},
                      {"cycle", true}, {"pseudo_manifold", false},
                      {"face_minimal", true}, {"orientable", false}}});
        return e;
    }();
    return entries;
}

inline SimplicialComplex corpus_get(std::string_view name) {
    for (const CorpusEntry& entry : corpus_list())
        if (entry.name == name) return entry.builder();
    throw UnknownEntry("no corpus entry named '" + std::string(name) + "'");
}

inline const CorpusEntry& corpus_entry(std::string_view name) {
    for (const CorpusEntry& entry : corpus_list())
        if (entry.name == name) return entry;
    throw UnknownEntry("no corpus entry named '" + std::string(name) + "'");
}

} // namespace dcycle::corpus
