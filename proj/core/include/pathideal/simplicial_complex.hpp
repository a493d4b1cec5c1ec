#ifndef PATHIDEAL_SIMPLICIAL_COMPLEX_HPP
#define PATHIDEAL_SIMPLICIAL_COMPLEX_HPP

#include <vector>

#include "pathideal/vertex_set.hpp"

namespace pathideal {

// f-vector (f_0, ..., f_{d-1}); f_{-1} = 1 is implicit for any complex that
// contains the empty face.
using FVector = std::vector<long long>;

// Simplicial complex in facet representation: an antichain of vertex sets,
// kept in (size, lex) order.  Two degenerate complexes are distinguished:
// the void complex (no faces at all, no facets) and the empty-face complex
// {∅} (a single empty facet).  Restricting a cone to its core produces the
// latter, so the distinction matters.
//
// The exhaustive operations carry hard guards (24 vertices for face/cover
// enumeration, 20 facets for subcomplex sweeps, 16x12 for cycle search) and
// throw GuardError beyond them.
class SimplicialComplex {
  public:
    static constexpr int kMaxEnumerationVertices = 24;
    static constexpr int kMaxSweepFacets = 20;
    static constexpr int kMaxCycleVertices = 16;
    static constexpr int kMaxCycleFacets = 12;

    // Drops candidates contained in other candidates, deduplicates, sorts.
    static SimplicialComplex from_facets(std::vector<VertexSet> candidates);
    static SimplicialComplex void_complex() { return SimplicialComplex(); }
    static SimplicialComplex empty_face_complex() { return from_facets({VertexSet()}); }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_face_complex() const { return facets_.size() == 1 && facets_[0].empty(); }

    const std::vector<VertexSet>& facets() const { return facets_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }
    const VertexSet& vertices() const { return vertices_; }
    int vertex_count() const { return vertices_.size(); }

    int dimension() const;  // max |F| - 1; -1 for void and {∅}
    bool is_pure() const;
    bool is_face(const VertexSet& f) const;

    // All faces (the empty face included for non-void complexes).
    std::vector<VertexSet> faces() const;
    FVector f_vector() const;
    long long reduced_euler_characteristic() const;

    SimplicialComplex link(const VertexSet& g) const;
    SimplicialComplex star(const VertexSet& g) const;

    // Faces contained in w.
    SimplicialComplex restriction(const VertexSet& w) const;

    // Vertices whose star is not the whole complex, and the restriction to
    // them.  core() of a cone with every vertex an apex is {∅}.
    VertexSet core_vertices() const;
    SimplicialComplex core() const;

    // Vertices lying in exactly one facet.
    VertexSet free_vertices() const;

    // Leaf test: F is the sole facet, or some facet G != F has
    // F∩F' ⊆ F∩G for every other facet F'.
    bool is_leaf_facet(const VertexSet& f) const;

    // Every nonempty subset of facets, viewed as a complex, has a leaf.
    // Exhaustive over all 2^q - 1 subcomplexes.
    bool is_simplicial_forest() const;

    // All inclusion-minimal transversals of the facet family, in (size, lex)
    // order.  The void complex has the empty cover; {∅} has none.
    std::vector<VertexSet> minimal_vertex_covers() const;
    int covering_number() const;
    bool is_unmixed_by_covers() const;

    int max_disjoint_facets() const;
    bool has_konig_property() const;

    // All families of pairwise disjoint facets whose union is the whole
    // vertex set and whose size equals the covering number.
    std::vector<std::vector<VertexSet>> perfect_matchings_konig_type() const;

    // Special-cycle search on the incidence matrix: distinct vertices
    // x_1..x_r and facets E_1..E_r (3 <= r <= r_max) with x_i, x_{i+1} in E_i
    // cyclically and no further incidences among the chosen rows/columns,
    // i.e. an r x r submatrix with exactly two 1's in each row and column
    // that forms one cycle.  r_max = 0 means min(vertices, facets); larger
    // submatrices cannot exist.
    bool has_clutter_cycle(int r_max = 0) const;

    bool is_connected() const;

    bool operator==(const SimplicialComplex& o) const { return facets_ == o.facets_; }

  private:
    SimplicialComplex() = default;

    void require_face_enumeration(const char* op) const;

    std::vector<VertexSet> facets_;
    VertexSet vertices_;
};

}  // namespace pathideal

#endif  // PATHIDEAL_SIMPLICIAL_COMPLEX_HPP
