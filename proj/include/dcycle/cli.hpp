#pragma once

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dcycle/io.hpp"

// Command-line front end.  Exit codes: 0 success, 1 negative verdict where a
// witness was requested (certificate "none", non-orientable, not a cycle),
// 2 input or usage error.  Reports go to stdout as canonical JSON;
// diagnostics go to stderr.

namespace dcycle::cli {

using nlohmann::json;

namespace detail {

inline SimplicialComplex complex_at_dim(const SimplicialComplex& complex, int d) {
    if (d == complex.dim()) return complex;
    const std::vector<Face>& faces = complex.faces(d);
    if (faces.empty())
        throw DimensionRange("no faces of dimension " + std::to_string(d) + " in '" +
                             complex.name() + "'");
    return SimplicialComplex::subcomplex(complex, faces,
                                         complex.name() + "|skeleton-" + std::to_string(d));
}

struct CommandResult {
    json report;
    int exit_code = 0;
};

inline CommandResult run_homology(const SimplicialComplex& complex, const FieldSpec& field,
                                  std::optional<int> dim) {
    json report = with_field(field, [&](auto f) {
        return io::betti_report_json(betti_report(complex, f, dim));
    });
    return {report, 0};
}

inline CommandResult run_cycles(const SimplicialComplex& input, std::optional<int> dim) {
    const SimplicialComplex complex = dim ? complex_at_dim(input, *dim) : input;
    const CycleCheck check = check_d_dimensional_cycle(complex);
    return {io::cycle_report_json(complex, check), check.cycle ? 0 : 1};
}

inline CommandResult run_decompose(const SimplicialComplex& complex) {
    CycleCheck check = check_d_dimensional_cycle(complex);
    if (!check.cycle)
        throw NotACycle("'" + complex.name() + "' is not a cycle: " +
                        std::to_string(check.odd_ridges.size()) + " odd ridge(s), " +
                        std::to_string(check.components) + " component(s)");
    return {io::decomposition_json(complex, face_minimal_decomposition(*check.cycle)), 0};
}

inline CommandResult run_classify(const SimplicialComplex& complex) {
    return {io::classify_json(complex), 0};
}

inline CommandResult run_orient(const SimplicialComplex& complex) {
    CycleCheck check = check_d_dimensional_cycle(complex);
    if (!check.cycle)
        throw NotACycle("'" + complex.name() + "' is not a cycle; nothing to orient");
    auto assignment = orientability(*check.cycle);
    json report{{"name", complex.name()}, {"orientable", assignment.has_value()}};
    if (assignment)
        report["assignment"] = io::assignment_json(complex, *assignment);
    return {report, assignment ? 0 : 1};
}

inline CommandResult run_certify(const SimplicialComplex& complex, const FieldSpec& field,
                                 int dim) {
    std::optional<HomologyCertificate> cert = with_field(field, [&](auto f) {
        if (dim == 1) return certify_graph_cycle(complex, f);
        if (f.characteristic() == 2) return certify_char2(complex, dim);
        return certify_orientable(complex, dim, f);
    });
    if (!cert) {
        json report{{"name", complex.name()}, {"dim", dim}, {"field", field.name()},
                    {"certificate", nullptr}};
        return {report, 1};
    }
    json report = io::certificate_json(*cert);
    report["name"] = complex.name();
    return {report, 0};
}

inline CommandResult run_oracle(const SimplicialComplex& complex, int dim) {
    return {io::oracle_json(complex, brute_force_homology_oracle(complex, dim)), 0};
}

using Handler = std::function<CommandResult(const SimplicialComplex&)>;

inline std::vector<std::filesystem::path> directory_inputs(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const auto ext = entry.path().extension().string();
        if (ext == ".json" || ext == ".txt") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

/// Runs a handler on one file or on every complex file in a directory.
/// Directory reports are emitted as one array in sorted filename order;
/// `jobs` worker threads process files with fully independent state.
inline int run_on_input(const std::string& input, unsigned jobs, const Handler& handler,
                        std::ostream& out) {
    if (!std::filesystem::is_directory(input)) {
        const CommandResult result = handler(io::load(input));
        out << io::dump_report(result.report);
        return result.exit_code;
    }

    const auto files = directory_inputs(input);
    std::vector<json> reports(files.size());
    std::vector<int> codes(files.size(), 0);
    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < files.size(); i += step) {
            try {
                const CommandResult result = handler(io::load(files[i].string()));
                reports[i] = json{{"file", files[i].filename().string()},
                                  {"report", result.report}};
                codes[i] = result.exit_code;
            } catch (const Error& e) {
                reports[i] = json{{"file", files[i].filename().string()},
                                  {"error", std::string(e.code()) + ": " + e.what()}};
                codes[i] = 2;
            }
        }
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1 || files.size() <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
        for (auto& th : pool) th.join();
    }
    out << io::dump_report(json(reports));
    int exit_code = 0;
    for (int c : codes) exit_code = std::max(exit_code, c);
    return exit_code;
}

} // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact simplicial homology and cycle certification"};
    app.require_subcommand(1);

    std::string input, field_text = "gf2", corpus_action, corpus_name, format = "json";
    int dim = -1;
    unsigned jobs = 1;
    bool has_dim = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", input, "complex file, directory, or corpus:<name>")->required();
        cmd->add_option("--jobs", jobs, "worker threads for directory inputs");
    };

    CLI::App* homology = app.add_subcommand("homology", "reduced Betti numbers by exact rank");
    add_input(homology);
    homology->add_option("--field", field_text, "gf2 | gf3 | gf:<p> | q");
    homology->add_option("--dim", dim, "single dimension only")->each([&](const std::string&) {
        has_dim = true;
    });

    CLI::App* cycles = app.add_subcommand("cycles", "cycle verdict with ridge diagnostics");
    add_input(cycles);
    cycles->add_option("--dim", dim, "check the pure skeleton of this dimension")
        ->each([&](const std::string&) { has_dim = true; });

    CLI::App* decompose = app.add_subcommand("decompose", "partition into face-minimal cycles");
    add_input(decompose);

    CLI::App* classify = app.add_subcommand("classify", "purity, cycle, minimality, orientability");
    add_input(classify);

    CLI::App* orient = app.add_subcommand("orient", "orientation assignment or non-orientable");
    add_input(orient);

    CLI::App* certify = app.add_subcommand("certify", "homology certificate or none");
    add_input(certify);
    certify->add_option("--field", field_text, "gf2 | gf3 | gf:<p> | q");
    certify->add_option("--dim", dim, "homology dimension")->required();

    CLI::App* corpus_cmd = app.add_subcommand("corpus", "list or emit the built-in complexes");
    corpus_cmd->add_option("action", corpus_action, "list | emit")->required();
    corpus_cmd->add_option("name", corpus_name, "entry name for emit");
    corpus_cmd->add_option("--format", format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force GF(2) cycle/boundary counts");
    add_input(oracle);
    oracle->add_option("--dim", dim, "chain dimension")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("dcycle");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        const FieldSpec field = FieldSpec::parse(field_text);
        if (app.got_subcommand(homology))
            return detail::run_on_input(input, jobs, [&](const SimplicialComplex& c) {
                return detail::run_homology(c, field, has_dim ? std::optional<int>(dim) : std::nullopt);
            }, out);
        if (app.got_subcommand(cycles))
            return detail::run_on_input(input, jobs, [&](const SimplicialComplex& c) {
                return detail::run_cycles(c, has_dim ? std::optional<int>(dim) : std::nullopt);
            }, out);
        if (app.got_subcommand(decompose))
            return detail::run_on_input(input, jobs, [](const SimplicialComplex& c) {
                return detail::run_decompose(c);
            }, out);
        if (app.got_subcommand(classify))
            return detail::run_on_input(input, jobs, [](const SimplicialComplex& c) {
                return detail::run_classify(c);
            }, out);
        if (app.got_subcommand(orient))
            return detail::run_on_input(input, jobs, [](const SimplicialComplex& c) {
                return detail::run_orient(c);
            }, out);
        if (app.got_subcommand(certify))
            return detail::run_on_input(input, jobs, [&](const SimplicialComplex& c) {
                return detail::run_certify(c, field, dim);
            }, out);
        if (app.got_subcommand(oracle))
            return detail::run_on_input(input, jobs, [&](const SimplicialComplex& c) {
                return detail::run_oracle(c, dim);
            }, out);
        if (app.got_subcommand(corpus_cmd)) {
            if (corpus_action == "list") {
                for (const auto& entry : corpus::corpus_list()) out << entry.name << "\n";
                return 0;
            }
            if (corpus_action == "emit") {
                if (corpus_name.empty()) {
                    err << "corpus emit needs an entry name\n";
                    return 2;
                }
                const SimplicialComplex c = corpus::corpus_get(corpus_name);
                out << (format == "text" ? io::emit_text(c) : io::emit_json(c));
                return 0;
            }
            err << "unknown corpus action '" << corpus_action << "' (expected list or emit)\n";
            return 2;
        }
    } catch (const Error& e) {
        err << e.code() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace dcycle::cli
