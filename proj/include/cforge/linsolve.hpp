#ifndef CFORGE_LINSOLVE_HPP
#define CFORGE_LINSOLVE_HPP

#include <memory>
#include <optional>
#include <vector>

#include "cforge/matrix.hpp"
#include "cforge/smith.hpp"

namespace cforge {

// Reduced row echelon form of a rational matrix, with enough side data
// to answer solvability, produce canonical particular solutions (free
// variables zero) and bases of the right kernel and left null space.
class RatRref {
  public:
    explicit RatRref(const RatMatrix& a);

    std::size_t rank() const { return pivots_.size(); }

    // Canonical solution of A x = y, or absence.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& y) const;

    std::vector<std::vector<Rat>> kernel_basis() const;

    // Rows n with n * A = 0 spanning the left null space.
    const RatMatrix& left_null() const { return left_null_; }

    bool injective() const { return rank() == a_cols_; }

  private:
    std::size_t a_cols_;
    RatMatrix r_;          // rref of A
    RatMatrix ops_;        // row ops: ops_ * A = r_
    std::vector<std::size_t> pivots_;
    RatMatrix left_null_;
};

// Z^a (+) Q^b.  Carries the degree-wise shape of every mixed complex.
struct MixedModule {
    std::size_t int_rank = 0;
    std::size_t rat_dim = 0;
    bool operator==(const MixedModule& o) const {
        return int_rank == o.int_rank && rat_dim == o.rat_dim;
    }
};

struct MixedVec {
    std::vector<Int> zi;
    std::vector<Rat> qi;

    static MixedVec zero(const MixedModule& m) {
        MixedVec v;
        v.zi.assign(m.int_rank, Int(0));
        v.qi.assign(m.rat_dim, Rat(0));
        return v;
    }
    bool is_zero() const;
    MixedVec operator+(const MixedVec& o) const;
    MixedVec operator-(const MixedVec& o) const;
    bool operator==(const MixedVec& o) const { return zi == o.zi && qi == o.qi; }
};

// Homomorphism Z^a (+) Q^b -> Z^a' (+) Q^b'.  The Q -> Z block is
// forbidden: there is no nonzero homomorphism Q -> Z, so the integer
// output depends on the integer input only.
struct MixedMap {
    MixedModule domain, codomain;
    IntMatrix zz;   // a' x a
    RatMatrix zq;   // b' x a
    RatMatrix qq;   // b' x b

    static MixedMap zero(const MixedModule& dom, const MixedModule& cod);
    MixedVec apply(const MixedVec& x) const;
    MixedMap compose_after(const MixedMap& first) const;  // this o first
    bool is_zero() const { return zz.is_zero() && zq.is_zero() && qq.is_zero(); }
};

// Preprocessed solver for f(x) = y over a MixedMap f.  Phases:
//   1. the Z->Z block over Z (particular solution + kernel lattice),
//   2. elimination of the Q unknowns over Q,
//   3. the residual rational-affine conditions on the lattice
//      parameters, cleared of denominators and solved over Z.
// Absence at any phase is global absence.
class MixedSolver {
  public:
    explicit MixedSolver(MixedMap f);

    const MixedMap& map() const { return f_; }

    std::optional<MixedVec> solve(const MixedVec& y) const;

    // Whether f(x) = 0 has only the zero solution.
    bool kernel_trivial() const;

  private:
    MixedMap f_;
    SmithDecomposition zz_snf_;
    std::unique_ptr<RatRref> qq_rref_;
    RatMatrix w_;          // left_null(qq) * zq, maps lattice params to residuals
    IntMatrix lattice_;    // kernel basis of zz as columns
    IntMatrix residual_;   // denominator-cleared w_ * lattice_
    std::vector<Int> row_scale_;
    std::unique_ptr<SmithDecomposition> residual_snf_;
};

}  // namespace cforge

#endif
