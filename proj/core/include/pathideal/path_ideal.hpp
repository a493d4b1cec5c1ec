#ifndef PATHIDEAL_PATH_IDEAL_HPP
#define PATHIDEAL_PATH_IDEAL_HPP

#include <string>
#include <vector>

#include "pathideal/rooted_tree.hpp"
#include "pathideal/simplicial_complex.hpp"
#include "pathideal/vertex_set.hpp"

namespace pathideal {

// Squarefree monomial ideal, recorded as the supports of its minimal
// generators inside k[x_1..x_n].  No generators = the zero ideal.
class SquarefreeMonomialIdeal {
  public:
    SquarefreeMonomialIdeal(int n, std::vector<VertexSet> generators);

    int variable_count() const { return n_; }
    const std::vector<VertexSet>& generators() const { return generators_; }
    bool is_zero() const { return generators_.empty(); }

    // True iff f contains no generator support, i.e. f is a face of the
    // Stanley-Reisner complex of the ideal.
    bool is_stanley_reisner_face(const VertexSet& f) const;

    // Facet complex of the generator supports.
    SimplicialComplex facet_complex() const;

    // Maximal subsets of {1..n} containing no generator support, computed by
    // a direct sweep over all subsets (guard n <= 24).  The zero ideal gives
    // the full simplex.
    SimplicialComplex stanley_reisner_complex() const;

    // Covering number of the facet complex; 0 for the zero ideal.
    int height() const;

    // Pairwise disjoint generator supports; the zero ideal qualifies.
    bool is_complete_intersection() const;

    bool operator==(const SquarefreeMonomialIdeal& o) const {
        return n_ == o.n_ && generators_ == o.generators_;
    }

  private:
    int n_;
    std::vector<VertexSet> generators_;  // antichain, (size, lex) sorted
};

// I_t(tree): one generator per directed path with t vertices.  2 <= t is
// required; t beyond the tree just yields the zero ideal.  The ambient
// variable count is max(vertex ids) so labels survive as variable indices.
SquarefreeMonomialIdeal path_ideal(const RootedTree& tree, int t);

// Facet complex Δ_t(tree) of the same paths.
SimplicialComplex path_complex(const RootedTree& tree, int t);

// "x1*x2*x4*x8"
std::string monomial_string(const VertexSet& support);

}  // namespace pathideal

#endif  // PATHIDEAL_PATH_IDEAL_HPP
