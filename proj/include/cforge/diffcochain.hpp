#ifndef CFORGE_DIFFCOCHAIN_HPP
#define CFORGE_DIFFCOCHAIN_HPP

#include <memory>
#include <optional>

#include "cforge/abelian.hpp"
#include "cforge/cochain.hpp"
#include "cforge/linsolve.hpp"

namespace cforge {

// Differential k-cochain of height s: an integer k-cochain c, a
// rational (k-1)-cochain (absent at k = 0), and a "form" part omega
// that is structurally absent below degree s.
struct DiffCochain {
    const SimplicialComplex* cx = nullptr;
    int s = 1;
    int k = 0;
    IntCochain c;
    std::optional<RatCochain> h;
    std::optional<RatCochain> omega;

    DiffCochain() = default;
    DiffCochain(const SimplicialComplex* complex, int height, int degree);

    static DiffCochain zero(const SimplicialComplex* complex, int height, int degree) {
        return DiffCochain(complex, height, degree);
    }

    bool has_h() const { return k >= 1; }
    bool has_omega() const { return k >= s; }

    bool is_zero() const;
    DiffCochain operator+(const DiffCochain& o) const;
    DiffCochain operator-(const DiffCochain& o) const;
    DiffCochain operator-() const;
    bool operator==(const DiffCochain& o) const;

    void check_shape(const DiffCochain& o) const;
};

// d(c, h, omega) = (dc, omega - c - dh, d omega).
DiffCochain dc_differential(const DiffCochain& x);
bool is_cocycle(const DiffCochain& x);

DiffCochain restrict_dc(const DiffCochain& x, const SimplicialComplex* sub);
DiffCochain pullback_dc(const SimplicialMap& f, const DiffCochain& x);

// (c, 0, c) for an integer cocycle c; rejects k < s, where no canonical
// lift exists.
DiffCochain lift_integral(const IntCochain& c, int height);

struct OneArrow {
    DiffCochain source, target;
    DiffCochain b;  // db = source - target
};

struct TwoArrowClass {
    OneArrow b1, b2;
    DiffCochain a;  // da = b2 - b1, a representative modulo im d
};

// The whole height-s differential complex of one simplicial complex:
// degree-wise mixed modules, differentials, cached solvers, and the
// integer cohomology presentations behind characteristic classes.
class DiffComplex {
  public:
    DiffComplex(const SimplicialComplex* cx, int height);

    const SimplicialComplex& complex() const { return *cx_; }
    int height() const { return s_; }
    int max_degree() const { return cx_->dim() + 1; }

    MixedModule module(int k) const;
    const MixedMap& differential(int k) const;
    const MixedSolver& solver(int k) const;
    const CohomologyPresentation& integer_cohomology(int k) const;

    MixedVec to_vec(const DiffCochain& x) const;
    DiffCochain from_vec(int k, const MixedVec& v) const;

    bool h0_trivial() const;

  private:
    const SimplicialComplex* cx_;
    int s_;
    std::vector<MixedMap> diff_;
    std::vector<std::unique_ptr<MixedSolver>> solvers_;
    mutable std::vector<std::unique_ptr<CohomologyPresentation>> cohom_;
};

// Good truncation of a DiffComplex at degree k: degrees below k-2 are
// zero, degree k-2 is the quotient by im d, presented through the Smith
// reduction sitting inside the solver of the incoming differential.
struct TruncatedDiffComplex {
    const DiffComplex* base = nullptr;
    int k = 0;

    MixedModule module(int degree) const {
        if (degree < k - 2) return MixedModule{};
        return base->module(degree);
    }
    // Invariant factors of the integer block of d_{k-3}: the Smith
    // presentation of the integer part of the quotient.
    std::vector<Int> quotient_presentation() const {
        if (k - 3 < 0) return {};
        return smith_normal_form(base->differential(k - 3).zz).invariant_factors();
    }
    // Vanishing in the quotient at degree k-2.
    bool quotient_zero(const DiffCochain& a) const;
};

TruncatedDiffComplex truncate(const DiffComplex& dc, int k);

// Decision procedures of the degree-k cocycle 2-category.  With
// `truncated`, degree k-2 is treated as the quotient by im d (the good
// truncation); by design the answers must not change.
class CocycleCategory {
  public:
    CocycleCategory(const DiffComplex* dc, int k, bool truncated = false);
    explicit CocycleCategory(const TruncatedDiffComplex& t)
        : CocycleCategory(t.base, t.k, true) {}

    bool is_object(const DiffCochain& x) const;
    std::optional<OneArrow> find_one_arrow(const DiffCochain& x1, const DiffCochain& x2) const;
    std::optional<TwoArrowClass> find_two_arrow(const OneArrow& b1, const OneArrow& b2) const;
    bool two_arrows_equivalent(const DiffCochain& a1, const DiffCochain& a2) const;

    ClassCoordinates char_class(const DiffCochain& x) const;

    const DiffComplex& complex() const { return *dc_; }
    int degree() const { return k_; }

  private:
    const DiffComplex* dc_;
    int k_;
    bool truncated_;
};

}  // namespace cforge

#endif
