// evolalg: build, analyze, and verify evolution algebras of simple graphs.
//
// Exit codes: 0 success; 1 not isomorphic (iso); 2 parse/input error;
// 3 validation error or kind mismatch; 4 non-regular algebra input;
// 5 algebra not in the image of the graph construction; 6 realization
// failed verification; 7 a search or closure cap was exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "evolalg/frucht.hpp"
#include "evolalg/io.hpp"
#include "evolalg/monomial.hpp"

using namespace evolalg;

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw ParseError("cannot read file: " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out.good()) throw ParseError("cannot write file: " + path);
    return out;
}

FileKind kind_of(const std::string& path) {
    std::ifstream in = open_input(path);
    return detect_kind(in);
}

int run_build(const std::string& graph_path, const std::string& field_text,
              const std::string& out_path) {
    std::ifstream in = open_input(graph_path);
    const SimpleGraph g = SimpleGraph::read(in);
    const EvolutionAlgebra x = build_algebra(g, Field::parse(field_text));
    std::ofstream out = open_output(out_path);
    x.write(out);
    return 0;
}

int run_aut(const std::string& path, bool brute_force) {
    const FileKind kind = kind_of(path);
    std::ifstream in = open_input(path);
    if (kind == FileKind::Graph) {
        const SimpleGraph g = SimpleGraph::read(in);
        const PermGroup aut =
            brute_force
                ? PermGroup::from_generators(g.vertex_count(), brute_force_graph_automorphisms(g))
                : graph_automorphisms(g);
        aut.write(std::cout);
        return 0;
    }
    if (kind == FileKind::Algebra) {
        const EvolutionAlgebra x = EvolutionAlgebra::read(in);
        const AlgebraAutomorphisms aut =
            brute_force ? algebra_automorphisms_brute_force(x) : algebra_automorphisms(x);
        aut.sigma_group.write(std::cout);
        std::cout << "aut order: " << aut.order << "\n";
        std::cout << "all scales = 1: " << (aut.all_scales_one ? "yes" : "no") << "\n";
        return 0;
    }
    throw ValidationError("aut expects a graph or algebra file");
}

int run_iso(const std::string& path_a, const std::string& path_b) {
    const FileKind ka = kind_of(path_a);
    const FileKind kb = kind_of(path_b);
    if (ka != kb) throw ValidationError("kind mismatch: cannot compare " + path_a + " with " + path_b);
    std::ifstream in_a = open_input(path_a);
    std::ifstream in_b = open_input(path_b);
    if (ka == FileKind::Graph) {
        const SimpleGraph a = SimpleGraph::read(in_a);
        const SimpleGraph b = SimpleGraph::read(in_b);
        const auto witness = graph_isomorphism(a, b);
        if (!witness) {
            std::cerr << "not isomorphic\n";
            return 1;
        }
        for (std::size_t i = 0; i < witness->size(); ++i) {
            if (i) std::cout << ' ';
            std::cout << (*witness)[i];
        }
        std::cout << "\n";
        return 0;
    }
    if (ka == FileKind::Algebra) {
        const EvolutionAlgebra a = EvolutionAlgebra::read(in_a);
        const EvolutionAlgebra b = EvolutionAlgebra::read(in_b);
        const auto witness = algebra_isomorphism(a, b);
        if (!witness) {
            std::cerr << "not isomorphic\n";
            return 1;
        }
        witness->write(std::cout);
        return 0;
    }
    throw ValidationError("iso expects two graph files or two algebra files");
}

int run_recover(const std::string& algebra_path, const std::string& out_path) {
    std::ifstream in = open_input(algebra_path);
    const EvolutionAlgebra x = EvolutionAlgebra::read(in);
    const RecoveredGraph r = recover_graph(x);
    std::ofstream out = open_output(out_path);
    r.graph.write(out);
    r.normalizer.write(std::cout);
    return 0;
}

int run_realize(const std::string& group_path, const std::string& field_text, unsigned variant,
                const std::string& out_path, const std::string& report_path) {
    std::ifstream in = open_input(group_path);
    const FiniteGroup g = FiniteGroup::read(in);

    const auto started = std::chrono::steady_clock::now();
    const EvolutionAlgebra x = realize_algebra(g, Field::parse(field_text), variant);
    const RecoveredGraph back = recover_graph(x);
    const VerificationReport report = verify_realization(g, x);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();

    std::ofstream out = open_output(out_path);
    x.write(out);

    const bool passed =
        report.isomorphic && report.aut_order == static_cast<std::uint64_t>(g.order());
    std::ostringstream body;
    body << "group order: " << g.order() << "\n";
    body << "graph vertices: " << back.graph.vertex_count() << "\n";
    body << "graph edges: " << back.graph.edge_count() << "\n";
    body << "algebra dim: " << x.dim() << "\n";
    body << "aut order: " << report.aut_order << "\n";
    body << "all scales one: " << (report.all_scales_one ? "yes" : "no") << "\n";
    body << "isomorphic: " << (report.isomorphic ? "yes" : "no") << "\n";
    std::cout << body.str();
    if (!report_path.empty()) {
        std::ofstream rep = open_output(report_path);
        rep << body.str() << "wall time ms: " << elapsed << "\n";
    }
    if (!passed) throw RealizationError("RealizationFailed: verification reported a mismatch");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"evolution algebras of finite simple graphs"};
    app.require_subcommand(1);

    std::string graph_path, algebra_path, group_path, path_a, path_b;
    std::string out_path, report_path;
    std::string field_text = "Q";
    unsigned variant = 0;
    bool brute_force = false;

    CLI::App* build = app.add_subcommand("build", "build the algebra of a graph");
    build->add_option("graph-file", graph_path)->required();
    build->add_option("--field", field_text, "Q or GF:p")->capture_default_str();
    build->add_option("--out", out_path, "output algebra file")->required();

    CLI::App* aut = app.add_subcommand("aut", "automorphism group of a graph or algebra");
    aut->add_option("file", path_a)->required();
    aut->add_flag("--brute-force", brute_force, "use the exhaustive oracle path");

    CLI::App* iso = app.add_subcommand("iso", "isomorphism test between two files of one kind");
    iso->add_option("file-a", path_a)->required();
    iso->add_option("file-b", path_b)->required();

    CLI::App* recover = app.add_subcommand("recover", "recover the graph behind an algebra");
    recover->add_option("algebra-file", algebra_path)->required();
    recover->add_option("--out", out_path, "output graph file")->required();

    CLI::App* realize = app.add_subcommand("realize", "realize a finite group as Aut of an algebra");
    realize->add_option("group-file", group_path)->required();
    realize->add_option("--field", field_text, "Q or GF:p")->capture_default_str();
    realize->add_option("--variant", variant, "family parameter t")->capture_default_str();
    realize->add_option("--out", out_path, "output algebra file")->required();
    realize->add_option("--report", report_path, "verification report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (build->parsed()) return run_build(graph_path, field_text, out_path);
        if (aut->parsed()) return run_aut(path_a, brute_force);
        if (iso->parsed()) return run_iso(path_a, path_b);
        if (recover->parsed()) return run_recover(algebra_path, out_path);
        if (realize->parsed())
            return run_realize(group_path, field_text, variant, out_path, report_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotRegularError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const NotInImageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const RealizationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 6;
    } catch (const CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 7;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
