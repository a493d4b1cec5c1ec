#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "golden_trees.hpp"
#include "pathideal/json_io.hpp"
#include "pathideal/rooted_tree.hpp"

using namespace pathideal;
using nlohmann::json;

namespace {

const std::string kCli = PATHIDEAL_CLI_PATH;
const std::string kData = PATHIDEAL_DATA_DIR;

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    std::string command = kCli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, got);
    int status = pclose(pipe);
    int code = (status >= 256) ? status / 256 : status;  // WEXITSTATUS without <sys/wait.h>
    return RunResult{code, output};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("pathideal_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("analyze emits the classification report") {
    RunResult fig1 = run_cli("analyze --input " + kData + "/fig1.tree --t 4");
    CHECK(fig1.exit_code == 0);
    json report = json::parse(fig1.output);
    CHECK(report["cohen_macaulay"] == false);
    CHECK(report["height"] == 1);
    CHECK(report["clean_removed"] == json::array({5}));
    CHECK(report["generators"] ==
          json::array({"x1*x2*x4*x8", "x1*x2*x4*x9", "x1*x3*x6*x10", "x1*x3*x7*x11"}));

    RunResult g3 = run_cli("analyze --input " + kData + "/gamma3.tree --t 3");
    CHECK(g3.exit_code == 0);
    json g3_report = json::parse(g3.output);
    CHECK(g3_report["cohen_macaulay"] == true);
    CHECK(g3_report["proj_dim"] == 3);

    RunResult json_input = run_cli("analyze --input " + kData + "/fig1.json --t 4");
    CHECK(json::parse(json_input.output) == report);
}

TEST_CASE("analyze on the line L_6") {
    auto path = temp_file("l6.tree");
    std::ofstream(path) << to_tree_text(RootedTree::line(6));
    RunResult r = run_cli("analyze --input " + path.string() + " --t 3");
    CHECK(r.exit_code == 0);
    json report = json::parse(r.output);
    CHECK(report["cohen_macaulay"] == true);
    CHECK(report["gorenstein"] == false);

    RunResult text = run_cli("analyze --input " + path.string() + " --t 3 --format text");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("cohen_macaulay=1") != std::string::npos);
}

TEST_CASE("analyze error paths") {
    auto bad = temp_file("bad.tree");
    std::ofstream(bad) << "root 1\n1 2\n1 2\n";
    CHECK(run_cli("analyze --input " + bad.string() + " --t 2").exit_code == 2);

    CHECK(run_cli("analyze --input " + kData + "/fig1.tree --t 99").exit_code == 2);
    CHECK(run_cli("analyze --input /nonexistent.tree --t 2").exit_code == 2);
    CHECK(run_cli("analyze --t 2").exit_code == 2);  // missing --input
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("oracle-check exit codes") {
    CHECK(run_cli("oracle-check --input " + kData + "/gamma2.tree --t 3").exit_code == 0);
    CHECK(run_cli("oracle-check --input " + kData + "/gamma3.tree --t 3").exit_code == 0);

    auto l4 = temp_file("l4.tree");
    std::ofstream(l4) << to_tree_text(RootedTree::line(4));
    RunResult r = run_cli("oracle-check --input " + l4.string() + " --t 2");
    CHECK(r.exit_code == 0);
    json instance = json::parse(r.output);
    CHECK(instance["agreed"] == true);
    CHECK(instance["report"]["unmixed"] == true);
    CHECK(instance["report"]["gorenstein"] == false);

    auto big = temp_file("big.tree");
    std::ofstream(big) << to_tree_text(RootedTree::random(30, 3));
    CHECK(run_cli("oracle-check --input " + big.string() + " --t 4").exit_code == 3);
}

TEST_CASE("batch output is byte-identical across runs") {
    auto out1 = temp_file("batch1.jsonl");
    auto out2 = temp_file("batch2.jsonl");
    RunResult r1 =
        run_cli("batch --n-max 8 --count 20 --seed 7 --out " + out1.string());
    RunResult r2 =
        run_cli("batch --n-max 8 --count 20 --seed 7 --out " + out2.string());
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    CHECK(r1.output == r2.output);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(r1.output.find("divergences: 0") != std::string::npos);

    RunResult empty = run_cli("batch --n-max 8 --count 0 --seed 7");
    CHECK(empty.exit_code == 0);
    CHECK(empty.output.find("instances: 0") != std::string::npos);
}

TEST_CASE("gen emits parseable deterministic trees") {
    RunResult r1 = run_cli("gen --n-max 9 --count 5 --seed 11");
    RunResult r2 = run_cli("gen --n-max 9 --count 5 --seed 11");
    CHECK(r1.exit_code == 0);
    CHECK(r1.output == r2.output);

    std::istringstream lines(r1.output);
    std::string line;
    int parsed = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        RootedTree tree = tree_from_json(line);
        CHECK(tree.vertex_count() >= 2);
        CHECK(tree.vertex_count() <= 9);
        CHECK(tree_to_json(tree) == line);  // round trip
        ++parsed;
    }
    CHECK(parsed == 5);
}

TEST_CASE("export") {
    RunResult ideal = run_cli("export --input " + kData + "/fig1.tree --t 4 --which ideal");
    CHECK(ideal.exit_code == 0);
    json ideal_json = json::parse(ideal.output);
    CHECK(ideal_json["n"] == 11);
    CHECK(ideal_json["generators"] == json::parse("[[1,2,4,8],[1,2,4,9],[1,3,6,10],[1,3,7,11]]"));

    auto l3 = temp_file("l3.tree");
    std::ofstream(l3) << to_tree_text(RootedTree::line(3));
    RunResult sr = run_cli("export --input " + l3.string() + " --t 3 --which stanley-reisner");
    json sr_json = json::parse(sr.output);
    CHECK(sr_json["facets"] == json::parse("[[1,2],[1,3],[2,3]]"));

    RunResult facet = run_cli("export --input " + l3.string() + " --t 3 --which facet");
    CHECK(json::parse(facet.output)["facets"] == json::parse("[[1,2,3]]"));

    // exported complexes and ideals re-parse to equal values
    CHECK(complex_from_json(sr.output) ==
          path_ideal(RootedTree::line(3), 3).stanley_reisner_complex());
    CHECK(complex_from_json(facet.output) == path_complex(RootedTree::line(3), 3));
    CHECK(ideal_from_json(ideal.output) == path_ideal(figure1_tree(), 4));

    RunResult dot = run_cli("export --input " + kData + "/fig1.tree --t 4 --which dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.find("digraph") != std::string::npos);
    CHECK(dot.output.find("v5 [label=\"5\", style=dashed") != std::string::npos);
}
