#ifndef CFORGE_SIMPLICIAL_HPP
#define CFORGE_SIMPLICIAL_HPP

#include <map>
#include <optional>
#include <vector>

#include "cforge/matrix.hpp"

namespace cforge {

// Vertices are global indices 0..n-1 with their natural total order;
// a simplex is a strictly increasing vertex list.
using Simplex = std::vector<int>;

// Finite abstract simplicial complex, face-closed.  A subcomplex of a
// base complex shares the base's ambient vertex numbering, so inclusion
// is the identity vertex map and restriction is value lookup.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;
    SimplicialComplex(int n_vertices, const std::vector<Simplex>& maximal_simplices);

    int ambient_vertices() const { return n_vertices_; }
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }

    std::size_t count(int degree) const {
        if (degree < 0 || degree > dim()) return 0;
        return by_dim_[degree].size();
    }
    const std::vector<Simplex>& simplices(int degree) const;
    const Simplex& simplex(int degree, std::size_t idx) const { return simplices(degree)[idx]; }

    bool contains(const Simplex& s) const;
    std::optional<std::size_t> index_of(const Simplex& s) const;

    // Degree-k coboundary matrix: count(k+1) x count(k) over Z.
    const IntMatrix& coboundary_matrix(int degree) const;
    // Boundary matrix of degree k: count(k-1) x count(k); the transpose
    // of coboundary at k-1.  Used for homology and period pairings.
    IntMatrix boundary_matrix(int degree) const;

    bool is_subcomplex_of(const SimplicialComplex& other) const;
    SimplicialComplex intersect(const SimplicialComplex& other) const;
    SimplicialComplex closed_star(int vertex) const;

    std::vector<Simplex> maximal_simplices() const;

    // Vertices that actually occur in some simplex.
    std::vector<int> support() const;

    bool operator==(const SimplicialComplex& o) const {
        return n_vertices_ == o.n_vertices_ && by_dim_ == o.by_dim_;
    }

  private:
    int n_vertices_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::map<Simplex, std::size_t>> index_;
    mutable std::vector<IntMatrix> cob_;  // built eagerly in ctor

    void build_coboundaries();
};

// Simplicial map given by a total vertex assignment; every simplex
// image (after dedup) must be a simplex of the target.
class SimplicialMap {
  public:
    SimplicialMap() = default;
    SimplicialMap(const SimplicialComplex* source, const SimplicialComplex* target,
                  std::vector<int> vertex_map);

    const SimplicialComplex& source() const { return *source_; }
    const SimplicialComplex& target() const { return *target_; }
    int apply_vertex(int v) const { return vertex_map_.at(v); }
    const std::vector<int>& vertex_map() const { return vertex_map_; }

    // Image with multiplicity removed, sorted; sign of the sorting
    // permutation, or 0 when degenerate.
    std::pair<Simplex, int> image(const Simplex& s) const;

    static SimplicialMap identity(const SimplicialComplex* c);
    static SimplicialMap inclusion(const SimplicialComplex* sub, const SimplicialComplex* super);
    SimplicialMap compose_after(const SimplicialMap& first) const;  // this o first

    // Matrix of the degree-k cochain pullback: count_src(k) x count_tgt(k),
    // entries in {-1, 0, 1}.
    IntMatrix pullback_matrix(int degree) const;

  private:
    const SimplicialComplex* source_ = nullptr;
    const SimplicialComplex* target_ = nullptr;
    std::vector<int> vertex_map_;
};

}  // namespace cforge

#endif
