#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcycle/certify.hpp"
#include "dcycle/complex.hpp"
#include "dcycle/corpus.hpp"
#include "dcycle/cycles.hpp"
#include "dcycle/errors.hpp"
#include "dcycle/homology.hpp"
#include "dcycle/orientation.hpp"

// Complex file formats and report serialization.
//
// Two interchangeable input formats:
//   JSON:  {"name": "...", "facets": [["a","b","c"], ...]}
//   text:  one facet per line, whitespace-separated labels, '#' comments
//
// Emission is canonical: facet labels sorted alphabetically, facet lists
// sorted lexicographically, JSON keys sorted.  parse(emit(c)) == c holds
// label for label, and reports are byte-deterministic for a fixed input.
// Reports carry exact integers and exact fraction strings only; no floats.

namespace dcycle::io {

using nlohmann::json;

inline SimplicialComplex parse_json(const std::string& text, const std::string& fallback_name) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        int line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        throw ParseError(e.what(), line);
    }
    if (!doc.is_object() || !doc.contains("facets") || !doc["facets"].is_array())
        throw ParseError("expected an object with a 'facets' array");
    std::string name = fallback_name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ParseError("'name' must be a string");
        name = doc["name"].get<std::string>();
    }
    std::vector<std::vector<std::string>> facets;
    for (const json& facet : doc["facets"]) {
        if (!facet.is_array()) throw ParseError("each facet must be an array of labels");
        std::vector<std::string> labels;
        for (const json& v : facet) {
            if (!v.is_string()) throw ParseError("facet labels must be strings");
            labels.push_back(v.get<std::string>());
        }
        facets.push_back(std::move(labels));
    }
    return SimplicialComplex::from_facets(std::move(name), facets);
}

inline SimplicialComplex parse_text(const std::string& text, const std::string& name) {
    std::vector<std::vector<std::string>> facets;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::vector<std::string> labels;
        std::string label;
        while (fields >> label) labels.push_back(label);
        if (labels.empty()) continue;
        facets.push_back(std::move(labels));
    }
    if (facets.empty()) throw ParseError("no facets found", line_no);
    return SimplicialComplex::from_facets(name, facets);
}

/// Detects the format by the first non-space character.
inline SimplicialComplex parse(const std::string& text, const std::string& fallback_name) {
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        if (ch == '{') return parse_json(text, fallback_name);
        break;
    }
    return parse_text(text, fallback_name);
}

inline json facets_json(const SimplicialComplex& complex) {
    return json(complex.facet_label_lists());
}

inline std::string emit_json(const SimplicialComplex& complex) {
    json doc;
    doc["name"] = complex.name();
    doc["facets"] = facets_json(complex);
    return doc.dump(2) + "\n";
}

inline std::string emit_text(const SimplicialComplex& complex) {
    std::ostringstream out;
    out << "# " << complex.name() << "\n";
    for (const auto& facet : complex.facet_label_lists()) {
        for (std::size_t i = 0; i < facet.size(); ++i)
            out << (i ? " " : "") << facet[i];
        out << "\n";
    }
    return out.str();
}

/// Loads a complex from a path, or from the corpus via `corpus:<name>`.
inline SimplicialComplex load(const std::string& spec) {
    if (spec.rfind("corpus:", 0) == 0)
        return corpus::corpus_get(spec.substr(7));
    std::ifstream in(spec, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + spec + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string stem = spec;
    if (const auto slash = stem.find_last_of("/\\"); slash != std::string::npos)
        stem = stem.substr(slash + 1);
    if (const auto dot = stem.find_last_of('.'); dot != std::string::npos)
        stem = stem.substr(0, dot);
    return parse(buf.str(), stem);
}

// ---------------------------------------------------------------------------
// report serializers

inline json betti_report_json(const BettiReport& report) {
    json betti = json::object();
    for (const auto& [d, b] : report.betti) betti[std::to_string(d)] = b;
    return json{{"name", report.name}, {"field", report.field_name}, {"betti", betti}};
}

inline json cycle_report_json(const SimplicialComplex& complex, const CycleCheck& check) {
    json ridges = json::array();
    {
        RidgeIncidence inc = build_ridge_incidence(complex.facets(), complex.dim());
        for (const auto& [ridge, cofacets] : inc.cofacets)
            ridges.push_back({{"ridge", complex.face_labels_sorted(ridge)},
                              {"incidence", cofacets.size()}});
    }
    json odd = json::array();
    for (const Face& r : check.odd_ridges) odd.push_back(complex.face_labels_sorted(r));
    return json{{"name", complex.name()},
                {"dim", complex.dim()},
                {"cycle", check.cycle.has_value()},
                {"d_path_components", check.components},
                {"odd_ridges", odd},
                {"ridges", ridges}};
}

inline json decomposition_json(const SimplicialComplex& complex, const Decomposition& decomposition) {
    json parts = json::array();
    for (const CycleComplex& part : decomposition.parts)
        parts.push_back({{"facets", facets_json(part.base)},
                         {"pseudo_manifold", is_pseudo_manifold(part.base)}});
    return json{{"name", complex.name()},
                {"dim", complex.dim()},
                {"parts", parts}};
}

inline json assignment_json(const SimplicialComplex& base, const OrientationAssignment& assignment) {
    json out = json::object();
    for (const auto& [facet, sign] : assignment.sign) {
        const auto labels = base.face_labels_sorted(facet);
        std::string key;
        for (std::size_t i = 0; i < labels.size(); ++i)
            key += (i ? " " : "") + labels[i];
        out[key] = sign;
    }
    return out;
}

inline json certificate_json(const HomologyCertificate& cert) {
    json out{{"kind", to_string(cert.kind)},
             {"dim", cert.dim},
             {"field", cert.field_name},
             {"witness_facets", facets_json(cert.witness.base)},
             {"nonbounding",
              {{"matrix_rank", cert.nonbounding.matrix_rank},
               {"augmented_rank", cert.nonbounding.augmented_rank}}},
             {"verified", cert.verified}};
    if (cert.signs) out["signs"] = assignment_json(cert.witness.base, *cert.signs);
    if (cert.vertex_sequence) out["vertex_sequence"] = *cert.vertex_sequence;
    if (cert.sound_only) out["sound_not_complete"] = true;
    return out;
}

inline json classify_json(const SimplicialComplex& complex) {
    json out;
    out["name"] = complex.name();
    out["pure"] = complex.is_pure();
    out["dim"] = complex.dim();
    json dims = json::array();
    {
        std::set<int> seen;
        for (const Face& f : complex.facets()) seen.insert(f.dim());
        for (int d : seen) dims.push_back(d);
    }
    out["facet_dims"] = dims;
    if (!complex.is_pure()) {
        out["cycle"] = nullptr;
        out["face_minimal"] = nullptr;
        out["pseudo_manifold"] = nullptr;
        out["orientable"] = nullptr;
        return out;
    }
    const CycleCheck check = check_d_dimensional_cycle(complex);
    out["cycle"] = check.cycle.has_value();
    out["pseudo_manifold"] = is_pseudo_manifold(complex);
    if (check.cycle) {
        out["face_minimal"] = is_face_minimal(*check.cycle);
        out["orientable"] = orientability(*check.cycle).has_value();
    } else {
        out["face_minimal"] = nullptr;
        out["orientable"] = nullptr;
    }
    return out;
}

inline json oracle_json(const SimplicialComplex& complex, const OracleResult& oracle) {
    return json{{"name", complex.name()},
                {"dim", oracle.dim},
                {"d_faces", oracle.dfaces.size()},
                {"cycles", oracle.cycles.size()},
                {"boundaries", oracle.boundaries.size()},
                {"cycle_space_dim", log2_exact(oracle.cycles.size())},
                {"boundary_space_dim", log2_exact(oracle.boundaries.size())},
                {"betti", log2_exact(oracle.cycles.size()) - log2_exact(oracle.boundaries.size())}};
}

inline std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

} // namespace dcycle::io
