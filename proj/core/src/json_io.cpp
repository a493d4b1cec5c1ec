#include "pathideal/json_io.hpp"

#include <sstream>

#include <json.hpp>

#include "pathideal/errors.hpp"

namespace pathideal {

using nlohmann::json;

namespace {

json set_to_json(const VertexSet& s) { return json(s.members()); }

VertexSet set_from_json(const json& j) {
    VertexSet s;
    for (const auto& v : j) s.add(v.get<int>());
    return s;
}

json parse_or_throw(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

json path_to_json(const DirectedPath& p) { return json(p); }

json certificate_to_json(const TPartitionCertificate& cert) {
    json facets = json::array();
    for (const DirectedPath& f : cert.facets) facets.push_back(path_to_json(f));
    json branches = json::array();
    for (const TBranch& b : cert.branches) {
        branches.push_back({{"path", path_to_json(b.path)},
                            {"attach_facet", b.attach_facet},
                            {"attach_vertex", b.attach_vertex},
                            {"initial", b.initial},
                            {"branch_level", b.branch_level}});
    }
    return {{"m", cert.m()},
            {"facets", facets},
            {"branches", branches},
            {"deg_per_facet", cert.deg_per_facet},
            {"deg_gamma", cert.deg_gamma}};
}

json report_to_json_object(const ClassificationReport& r) {
    json j;
    j["n"] = r.n;
    j["t"] = r.t;
    j["zero_ideal"] = r.zero_ideal;
    j["clean_removed"] = set_to_json(r.clean_removed);
    j["partitioned"] = r.partitioned;
    j["fitting"] = r.fitting;
    j["certificate"] = r.certificate ? certificate_to_json(*r.certificate) : json(nullptr);
    j["failure_witness"] = r.failure_witness ? json(*r.failure_witness) : json(nullptr);
    j["unmixed"] = r.unmixed;
    j["cohen_macaulay"] = r.cohen_macaulay;
    j["serre_sr"] = r.serre_sr;
    j["gorenstein"] = r.gorenstein;
    j["complete_intersection"] = r.complete_intersection;
    j["matroid"] = r.matroid;
    j["all_powers_cm"] = r.all_powers_cm;
    j["height"] = r.height;
    j["krull_dim"] = r.krull_dim;
    j["depth"] = r.depth ? json(*r.depth) : json(nullptr);
    j["proj_dim"] = r.proj_dim ? json(*r.proj_dim) : json(nullptr);
    json gens = json::array();
    json gens_pretty = json::array();
    for (const VertexSet& g : r.generators) {
        gens.push_back(set_to_json(g));
        gens_pretty.push_back(monomial_string(g));
    }
    j["generator_supports"] = gens;
    j["generators"] = gens_pretty;
    return j;
}

json verdict_to_json(const OracleVerdict& v) {
    json sets = json::array();
    for (const VertexSet& s : v.witness_sets) sets.push_back(set_to_json(s));
    return {{"oracle", v.oracle},
            {"verdict", v.verdict},
            {"detail", v.detail},
            {"witness_sets", sets}};
}

json tree_to_json_object(const RootedTree& tree) {
    json edges = json::array();
    for (const auto& [u, v] : tree.edges()) edges.push_back(json::array({u, v}));
    return {{"root", tree.root()}, {"edges", edges}};
}

}  // namespace

std::string tree_to_json(const RootedTree& tree) { return tree_to_json_object(tree).dump(); }

RootedTree tree_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("root") || !j.contains("edges"))
        throw ParseError("tree JSON needs {\"root\": k, \"edges\": [[u,v], ...]}");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge entries must be [u, v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return RootedTree(j["root"].get<int>(), edges);
}

RootedTree load_tree(const std::string& content) {
    for (char c : content) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return tree_from_json(content);
        break;
    }
    return parse_tree_text(content);
}

std::string complex_to_json(const SimplicialComplex& complex) {
    json facets = json::array();
    for (const VertexSet& f : complex.facets()) facets.push_back(set_to_json(f));
    json j = {{"vertices", set_to_json(complex.vertices())}, {"facets", facets}};
    return j.dump();
}

SimplicialComplex complex_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("facets"))
        throw ParseError("complex JSON needs {\"vertices\": [..], \"facets\": [[..], ..]}");
    std::vector<VertexSet> facets;
    for (const auto& f : j["facets"]) facets.push_back(set_from_json(f));
    return SimplicialComplex::from_facets(std::move(facets));
}

std::string ideal_to_json(const SquarefreeMonomialIdeal& ideal) {
    json gens = json::array();
    for (const VertexSet& g : ideal.generators()) gens.push_back(set_to_json(g));
    json j = {{"n", ideal.variable_count()}, {"generators", gens}};
    return j.dump();
}

SquarefreeMonomialIdeal ideal_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
        throw ParseError("ideal JSON needs {\"n\": n, \"generators\": [[..], ..]}");
    std::vector<VertexSet> gens;
    for (const auto& g : j["generators"]) gens.push_back(set_from_json(g));
    try {
        return SquarefreeMonomialIdeal(j["n"].get<int>(), std::move(gens));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string report_to_json(const ClassificationReport& report, bool pretty) {
    return report_to_json_object(report).dump(pretty ? 2 : -1);
}

std::string instance_to_json(const InstanceValidation& instance) {
    json verdicts = json::array();
    for (const OracleVerdict& v : instance.verdicts) verdicts.push_back(verdict_to_json(v));
    json j = {{"tree", tree_to_json_object(instance.tree)},
              {"t", instance.t},
              {"report", instance.report ? report_to_json_object(*instance.report) : json(nullptr)},
              {"oracles", verdicts},
              {"disagreements", instance.disagreements},
              {"guard_breaches", instance.guard_breaches},
              {"agreed", instance.agreed()}};
    return j.dump();
}

std::string tree_to_dot(const RootedTree& tree, const VertexSet& cleaned) {
    std::ostringstream out;
    out << "digraph tree {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=circle];\n";
    for (int v : tree.vertices()) {
        out << "  v" << v << " [label=\"" << v << "\"";
        if (cleaned.contains(v)) out << ", style=dashed, color=gray, fontcolor=gray";
        if (v == tree.root()) out << ", penwidth=2";
        out << "];\n";
    }
    for (const auto& [u, v] : tree.edges()) {
        out << "  v" << u << " -> v" << v;
        if (cleaned.contains(u) || cleaned.contains(v)) out << " [style=dashed, color=gray]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace pathideal
