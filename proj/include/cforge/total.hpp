#ifndef CFORGE_TOTAL_HPP
#define CFORGE_TOTAL_HPP

#include "cforge/abelian.hpp"
#include "cforge/diffcochain.hpp"
#include "cforge/groupoid.hpp"

namespace cforge {

enum class CoeffKind { integer_cochains, differential_cochains };

// Total complex of the double complex A^p(Gamma_q) with differential
// delta = (-1)^q d (+) sum_i (-1)^i d_i^*.  Components of total degree
// n are laid out with q ascending, p = n - q.
class TotalComplex {
  public:
    TotalComplex(const SimplicialGroupoid* gpd, CoeffKind kind, int height, int n_max);

    const SimplicialGroupoid& groupoid() const { return *gpd_; }
    CoeffKind kind() const { return kind_; }
    int height() const { return height_; }
    int max_total_degree() const { return n_max_; }

    MixedModule component_module(int p, int q) const;
    MixedModule module(int n) const;
    const MixedMap& differential(int n) const;  // Tot^n -> Tot^{n+1}
    const MixedSolver& solver(int n) const;

    // Offsets of component (p, q) inside the degree-(p+q) vector.
    std::pair<std::size_t, std::size_t> component_offsets(int p, int q) const;

    // Vertical d at (p, q) without the sign twist, and the horizontal
    // alternating pullback sum A^p(Gamma_q) -> A^p(Gamma_{q+1}).
    MixedMap vertical(int p, int q) const;
    MixedMap horizontal(int p, int q) const;

    const CohomologyPresentation& integer_cohomology(int n) const;

    // DiffComplex of one nerve level (differential-cochain kind only).
    const DiffComplex& level_complex(int q) const;

  private:
    const SimplicialGroupoid* gpd_;
    CoeffKind kind_;
    int height_;
    int n_max_;
    mutable std::vector<std::unique_ptr<DiffComplex>> level_dc_;
    std::vector<MixedMap> delta_;
    mutable std::vector<std::unique_ptr<MixedSolver>> solvers_;
    mutable std::vector<std::unique_ptr<CohomologyPresentation>> cohom_;

    void build();
};

// Degree-n element of the total complex, components x_{p,q}.
struct TotalCochain {
    const TotalComplex* tc = nullptr;
    int n = 0;
    MixedVec v;

    static TotalCochain zero(const TotalComplex& tc, int n);
    bool is_cocycle() const;
    TotalCochain operator+(const TotalCochain& o) const;
    TotalCochain operator-(const TotalCochain& o) const;

    // Component access (differential-cochain kind).
    DiffCochain dc_component(int p, int q) const;
    void set_dc_component(int p, int q, const DiffCochain& x);
    // Component access (integer kind).
    IntCochain int_component(int p, int q) const;
    void set_int_component(int p, int q, const IntCochain& x);
};

// delta b = x - y, the isomorphism witness in the cocycle 2-category of
// the total complex.
std::optional<TotalCochain> same_total_class(const TotalCochain& x, const TotalCochain& y);

FgAbelianGroup equivariant_cohomology(const TotalComplex& integer_tot, int k);

// Class of the integer projection in H^n of the integer total complex.
ClassCoordinates equivariant_char_class(const TotalCochain& x, const TotalComplex& integer_tot);

// Triple presentation (A, E, [tau]) of an equivariant object, the
// cochain shadow of (object, 1-arrow, coherence 2-arrow).
struct EquivariantTriple {
    DiffCochain a;  // degree-3 cocycle on Gamma_0
    DiffCochain e;  // degree-2 on Gamma_1, de = d0*a - d1*a
    DiffCochain t;  // degree-1 on Gamma_2, dt = -(d0*e - d1*e + d2*e)
};

EquivariantTriple to_triple(const TotalCochain& x);
// Completion uses the unique degree-0 solution; needs H^0 = 0.
TotalCochain from_triple(const TotalComplex& tc, const EquivariantTriple& t);

}  // namespace cforge

#endif
