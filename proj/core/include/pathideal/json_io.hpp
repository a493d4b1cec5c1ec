#ifndef PATHIDEAL_JSON_IO_HPP
#define PATHIDEAL_JSON_IO_HPP

#include <string>

#include "pathideal/classify.hpp"
#include "pathideal/oracles.hpp"
#include "pathideal/path_ideal.hpp"
#include "pathideal/rooted_tree.hpp"
#include "pathideal/simplicial_complex.hpp"

namespace pathideal {

// JSON schemas (keys are stable):
//   tree     {"root": k, "edges": [[u,v], ...]}
//   complex  {"vertices": [..], "facets": [[..], ..]}
//   ideal    {"n": n, "generators": [[..], ..]}
//   report   all ClassificationReport fields
//   instance one cross-validation record (tree, t, report, oracle verdicts)

std::string tree_to_json(const RootedTree& tree);
RootedTree tree_from_json(const std::string& text);

// Accepts both the text format and the JSON object form.
RootedTree load_tree(const std::string& content);

std::string complex_to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const std::string& text);

std::string ideal_to_json(const SquarefreeMonomialIdeal& ideal);
SquarefreeMonomialIdeal ideal_from_json(const std::string& text);

std::string report_to_json(const ClassificationReport& report, bool pretty = true);
std::string instance_to_json(const InstanceValidation& instance);

// Graphviz rendering of a tree; vertices cleaned away at the given t are
// drawn dashed and gray.
std::string tree_to_dot(const RootedTree& tree, const VertexSet& cleaned);

}  // namespace pathideal

#endif  // PATHIDEAL_JSON_IO_HPP
