#include "pathideal/path_ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "pathideal/errors.hpp"

namespace pathideal {

SquarefreeMonomialIdeal::SquarefreeMonomialIdeal(int n, std::vector<VertexSet> generators)
    : n_(n), generators_(std::move(generators)) {
    if (n_ < 0 || n_ > VertexSet::kMaxVertexId)
        throw std::invalid_argument("ambient variable count out of range");
    std::sort(generators_.begin(), generators_.end(), VertexSet::size_lex_less);
    VertexSet ambient = n_ == 0 ? VertexSet() : VertexSet::full(n_);
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i].empty())
            throw std::invalid_argument("generator support must be nonempty");
        if (!generators_[i].subset_of(ambient))
            throw std::invalid_argument("generator " + generators_[i].to_string() +
                                        " uses a variable beyond x" + std::to_string(n_));
        for (std::size_t j = 0; j < generators_.size(); ++j)
            if (i != j && generators_[i].subset_of(generators_[j]))
                throw std::invalid_argument("generators are not an antichain: " +
                                            generators_[i].to_string() + " divides " +
                                            generators_[j].to_string());
    }
}

bool SquarefreeMonomialIdeal::is_stanley_reisner_face(const VertexSet& f) const {
    for (const VertexSet& g : generators_)
        if (g.subset_of(f)) return false;
    return true;
}

SimplicialComplex SquarefreeMonomialIdeal::facet_complex() const {
    return SimplicialComplex::from_facets(generators_);
}

SimplicialComplex SquarefreeMonomialIdeal::stanley_reisner_complex() const {
    if (n_ > SimplicialComplex::kMaxEnumerationVertices)
        throw GuardError("stanley_reisner_complex: " + std::to_string(n_) +
                         " variables exceed the enumeration bound of " +
                         std::to_string(SimplicialComplex::kMaxEnumerationVertices));

    // Direct sweep: mark every subset of {1..n} that avoids all generator
    // supports, then keep the maximal ones.  Deliberately not implemented via
    // cover complements, so the Stanley-Reisner duality stays testable.
    std::uint64_t full = n_ == 0 ? 0 : VertexSet::full(n_).raw();
    std::size_t total = std::size_t{1} << n_;
    std::vector<bool> face(total, false);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        face[mask] = is_stanley_reisner_face(VertexSet::from_raw(mask));

    std::vector<VertexSet> maximal;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (!face[mask]) continue;
        bool is_maximal = true;
        std::uint64_t missing = full & ~mask;
        while (missing) {
            std::uint64_t bit = missing & (~missing + 1);
            if (face[mask | bit]) {
                is_maximal = false;
                break;
            }
            missing &= missing - 1;
        }
        if (is_maximal) maximal.push_back(VertexSet::from_raw(mask));
    }
    return SimplicialComplex::from_facets(std::move(maximal));
}

int SquarefreeMonomialIdeal::height() const {
    if (is_zero()) return 0;
    return facet_complex().covering_number();
}

bool SquarefreeMonomialIdeal::is_complete_intersection() const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = i + 1; j < generators_.size(); ++j)
            if (generators_[i].intersects(generators_[j])) return false;
    return true;
}

SquarefreeMonomialIdeal path_ideal(const RootedTree& tree, int t) {
    if (t < 2) throw std::invalid_argument("path ideals need t >= 2");
    std::vector<VertexSet> supports;
    for (const DirectedPath& path : tree.paths_with(t)) {
        VertexSet s;
        for (int v : path) s.add(v);
        supports.push_back(s);
    }
    int n = tree.vertices().empty() ? 0 : tree.vertices().back();
    return SquarefreeMonomialIdeal(n, std::move(supports));
}

SimplicialComplex path_complex(const RootedTree& tree, int t) {
    if (t < 2) throw std::invalid_argument("path complexes need t >= 2");
    std::vector<VertexSet> facets;
    for (const DirectedPath& path : tree.paths_with(t)) {
        VertexSet s;
        for (int v : path) s.add(v);
        facets.push_back(s);
    }
    // Distinct paths with t vertices are never nested, so no reduction occurs.
    return SimplicialComplex::from_facets(std::move(facets));
}

std::string monomial_string(const VertexSet& support) {
    if (support.empty()) return "1";
    std::string out;
    for (int v : support.members()) {
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(v);
    }
    return out;
}

}  // namespace pathideal
