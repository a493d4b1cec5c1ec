#ifndef PATHIDEAL_ORACLES_HPP
#define PATHIDEAL_ORACLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "pathideal/classify.hpp"
#include "pathideal/path_ideal.hpp"
#include "pathideal/rooted_tree.hpp"

namespace pathideal {

// Result of one brute-force check.  Negative verdicts carry a checkable
// counterexample in witness_sets whenever a finite one exists (two minimal
// covers of different sizes, a failed exchange pair, an overlapping
// generator pair, ...); detail spells it out.
struct OracleVerdict {
    std::string oracle;
    bool verdict = false;
    std::string detail;
    std::vector<VertexSet> witness_sets;
};

// Unmixedness from first principles: enumerate every minimal vertex cover of
// Δ_t(Γ) and compare cardinalities.
OracleVerdict unmixed_oracle(const RootedTree& tree, int t);

// The perfect-matching characterization: some König-type perfect matching
// E_1..E_g has a free vertex in every E_i and nests all facet intersections
// (for all facets E, E' and each E_i, E∩E_i and E'∩E_i are comparable).
// Valid for Δ_t of a tree because that complex is a totally balanced clutter
// with the König property.
OracleVerdict konig_unmixed_oracle(const RootedTree& tree, int t);

// Exchange axiom on the Stanley-Reisner complex: for every pair of faces
// F, G with |F| > |G| some x in F\G keeps G∪{x} a face.
OracleVerdict matroid_oracle(const SquarefreeMonomialIdeal& ideal);

// Gorenstein test on Δ_{n,t} with Λ = core(Δ_{n,t}): either Δ is {∅}, one
// vertex or two isolated vertices, or Δ is Cohen-Macaulay of dimension >= 1
// (CM supplied by the unmixedness oracle via the CM ⟺ unmixed equivalence
// for this class), every (d-3)-face of Λ has link a single cycle, an edge or
// a two-edge path, and χ̃(Λ) = (-1)^dim(Λ).
OracleVerdict stanley_gorenstein_oracle(const SquarefreeMonomialIdeal& ideal,
                                        const RootedTree& tree, int t);

// Pairwise disjoint generator supports.
OracleVerdict ci_oracle(const SquarefreeMonomialIdeal& ideal);

// One corpus instance cross-examined: classify vs all five oracles.  The
// report is absent when classify itself breached an enumeration guard.
struct InstanceValidation {
    RootedTree tree;
    int t;
    std::optional<ClassificationReport> report;
    std::vector<OracleVerdict> verdicts;
    std::vector<std::string> disagreements;  // empty when everything agrees
    std::vector<std::string> guard_breaches;

    bool agreed() const { return disagreements.empty(); }
};

struct CrossValidationSummary {
    std::vector<InstanceValidation> instances;
    int total = 0;
    int agreements = 0;
    int divergences = 0;
    int guard_breaches = 0;
    int cm_count = 0;
    int gorenstein_count = 0;

    bool all_agreed() const { return divergences == 0; }
};

InstanceValidation validate_instance(const RootedTree& tree, int t);
CrossValidationSummary cross_validate(const std::vector<std::pair<RootedTree, int>>& corpus);

}  // namespace pathideal

#endif  // PATHIDEAL_ORACLES_HPP
