// pathideal: classify path ideals of directed rooted trees and verify the
// verdicts with brute-force oracles.
//
// Exit codes: 0 success/agreement, 1 divergence between classify and an
// oracle, 2 usage or parse error, 3 enumeration guard breach.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pathideal/classify.hpp"
#include "pathideal/errors.hpp"
#include "pathideal/json_io.hpp"
#include "pathideal/oracles.hpp"
#include "pathideal/rooted_tree.hpp"

using namespace pathideal;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << content;
}

std::string report_text(const ClassificationReport& r) {
    std::ostringstream out;
    out << "n=" << r.n << " t=" << r.t << "\n";
    out << "generators:";
    if (r.generators.empty()) out << " (zero ideal)";
    for (const VertexSet& g : r.generators) out << " " << monomial_string(g);
    out << "\n";
    out << "clean removed: " << r.clean_removed.to_string() << "\n";
    out << "partitioned: " << (r.partitioned ? "yes" : "no")
        << ", fitting: " << (r.fitting ? "yes" : "no") << "\n";
    out << "unmixed=" << r.unmixed << " cohen_macaulay=" << r.cohen_macaulay
        << " serre_sr=" << r.serre_sr << " gorenstein=" << r.gorenstein
        << " complete_intersection=" << r.complete_intersection << " matroid=" << r.matroid
        << " all_powers_cm=" << r.all_powers_cm << "\n";
    out << "height=" << r.height << " krull_dim=" << r.krull_dim;
    if (r.depth) out << " depth=" << *r.depth;
    if (r.proj_dim) out << " proj_dim=" << *r.proj_dim;
    out << "\n";
    if (r.failure_witness) out << "witness: " << *r.failure_witness << "\n";
    return out.str();
}

int cmd_analyze(const std::string& input, int t, const std::string& format,
                const std::string& out_path) {
    RootedTree tree = load_tree(read_file(input));
    ClassificationReport report = classify(tree, t);
    write_output(out_path, format == "text" ? report_text(report) : report_to_json(report));
    return 0;
}

int cmd_oracle_check(const std::string& input, int t, const std::string& out_path) {
    RootedTree tree = load_tree(read_file(input));
    InstanceValidation instance = validate_instance(tree, t);
    write_output(out_path, instance_to_json(instance));
    if (!instance.guard_breaches.empty()) {
        for (const std::string& breach : instance.guard_breaches)
            std::cerr << "guard: " << breach << "\n";
        return 3;
    }
    if (!instance.agreed()) {
        for (const std::string& d : instance.disagreements)
            std::cerr << "divergence: " << d << "\n";
        return 1;
    }
    return 0;
}

int cmd_batch(int n_max, int count, std::uint64_t seed, const std::string& out_path) {
    std::ofstream detail_file;
    std::ostream* detail = &std::cout;
    if (!out_path.empty()) {
        detail_file.open(out_path, std::ios::binary);
        if (!detail_file) throw std::runtime_error("cannot open output file: " + out_path);
        detail = &detail_file;
    }

    int instances = 0, divergences = 0, breaches = 0, cm = 0, gorenstein = 0;
    for (const RootedTree& tree : seeded_corpus(n_max, count, seed)) {
        for (int t = 2; t <= tree.vertex_count(); ++t) {
            InstanceValidation inst = validate_instance(tree, t);
            *detail << instance_to_json(inst) << "\n";
            ++instances;
            if (!inst.agreed()) ++divergences;
            breaches += static_cast<int>(inst.guard_breaches.size());
            if (inst.report && inst.report->cohen_macaulay) ++cm;
            if (inst.report && inst.report->gorenstein) ++gorenstein;
        }
    }
    std::cout << "instances: " << instances << "\n"
              << "cohen-macaulay: " << cm << "\n"
              << "gorenstein: " << gorenstein << "\n"
              << "guard-breaches: " << breaches << "\n"
              << "divergences: " << divergences << "\n";
    return divergences == 0 ? 0 : 1;
}

int cmd_gen(int n_max, int count, std::uint64_t seed, const std::string& out_path) {
    std::ostringstream lines;
    for (const RootedTree& tree : seeded_corpus(n_max, count, seed))
        lines << tree_to_json(tree) << "\n";
    write_output(out_path, lines.str());
    return 0;
}

int cmd_export(const std::string& input, int t, const std::string& which,
               const std::string& out_path) {
    RootedTree tree = load_tree(read_file(input));
    std::string content;
    if (which == "facet") {
        content = complex_to_json(path_complex(tree, t));
    } else if (which == "stanley-reisner") {
        content = complex_to_json(path_ideal(tree, t).stanley_reisner_complex());
    } else if (which == "ideal") {
        content = ideal_to_json(path_ideal(tree, t));
    } else if (which == "dot") {
        content = tree_to_dot(tree, clean(tree, t).removed);
    }
    write_output(out_path, content);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"path ideal classification for directed rooted trees"};
    app.require_subcommand(1);

    std::string input, out_path, format = "json", which = "ideal";
    int t = 2, n_max = 10, count = 100;
    std::uint64_t seed = 0;

    CLI::App* analyze = app.add_subcommand("analyze", "classify one tree");
    analyze->add_option("--input", input, "tree file (text or JSON)")->required();
    analyze->add_option("--t", t, "path length (vertex count)")->required();
    analyze->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    analyze->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* oracle = app.add_subcommand("oracle-check", "cross-examine one tree");
    oracle->add_option("--input", input, "tree file")->required();
    oracle->add_option("--t", t, "path length")->required();
    oracle->add_option("--out", out_path, "output file");

    CLI::App* batch = app.add_subcommand("batch", "random corpus sweep with oracles");
    batch->add_option("--n-max", n_max, "max vertices per tree");
    batch->add_option("--count", count, "number of trees");
    batch->add_option("--seed", seed, "corpus seed");
    batch->add_option("--out", out_path, "JSON-lines detail file");

    CLI::App* gen = app.add_subcommand("gen", "emit a random tree corpus");
    gen->add_option("--n-max", n_max, "max vertices per tree");
    gen->add_option("--count", count, "number of trees");
    gen->add_option("--seed", seed, "corpus seed");
    gen->add_option("--out", out_path, "output file");

    CLI::App* exporter = app.add_subcommand("export", "serialize complexes and ideals");
    exporter->add_option("--input", input, "tree file")->required();
    exporter->add_option("--t", t, "path length")->required();
    exporter->add_option("--which", which, "facet, stanley-reisner, ideal or dot")
        ->check(CLI::IsMember({"facet", "stanley-reisner", "ideal", "dot"}));
    exporter->add_option("--out", out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(input, t, format, out_path);
        if (oracle->parsed()) return cmd_oracle_check(input, t, out_path);
        if (batch->parsed()) return cmd_batch(n_max, count, seed, out_path);
        if (gen->parsed()) return cmd_gen(n_max, count, seed, out_path);
        if (exporter->parsed()) return cmd_export(input, t, which, out_path);
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
