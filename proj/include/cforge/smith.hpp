#ifndef CFORGE_SMITH_HPP
#define CFORGE_SMITH_HPP

#include <optional>
#include <vector>

#include "cforge/matrix.hpp"

namespace cforge {

// U * A * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ...
// The inverses are accumulated during elimination; recomposition
// A = U^-1 * S * V^-1 is then an exact identity check.
struct SmithDecomposition {
    IntMatrix u, v;
    IntMatrix u_inv, v_inv;
    IntMatrix s;
    std::size_t rank = 0;  // number of nonzero invariant factors

    std::vector<Int> invariant_factors() const {
        std::vector<Int> d;
        const std::size_t n = std::min(s.rows(), s.cols());
        for (std::size_t i = 0; i < n; ++i) d.push_back(s(i, i));
        return d;
    }
};

// Deterministic pivoting: smallest nonzero |entry|, ties by lowest
// (row, col).  Output is identical with and without OpenMP.
SmithDecomposition smith_normal_form(const IntMatrix& a);

namespace serial {
SmithDecomposition smith_normal_form(const IntMatrix& a);
}

// Solution of A x = y over Z: one particular solution plus a basis of
// the kernel lattice (columns of V beyond the rank).
struct IntSolution {
    std::vector<Int> particular;
    std::vector<std::vector<Int>> kernel_basis;
};

std::optional<IntSolution> solve_integer_system(const IntMatrix& a, const std::vector<Int>& y);
std::optional<IntSolution> solve_integer_system(const SmithDecomposition& snf,
                                                const std::vector<Int>& y);

std::vector<std::vector<Int>> integer_kernel_basis(const SmithDecomposition& snf);

}  // namespace cforge

#endif
