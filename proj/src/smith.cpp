#include "cforge/smith.hpp"

#include <algorithm>

namespace cforge {

namespace {

struct Snf {
    IntMatrix s, u, v, u_inv, v_inv;
    bool parallel;

    explicit Snf(const IntMatrix& a, bool par)
        : s(a),
          u(IntMatrix::identity(a.rows())),
          v(IntMatrix::identity(a.cols())),
          u_inv(IntMatrix::identity(a.rows())),
          v_inv(IntMatrix::identity(a.cols())),
          parallel(par) {}

    // row[i] -= q * row[p] on S and U; the inverse column op on U^-1.
    void row_axpy(std::size_t i, std::size_t p, const Int& q) {
        if (q == 0) return;
        const long nc = static_cast<long>(s.cols());
        const long mu = static_cast<long>(u.cols());
#pragma omp parallel for schedule(static) if (parallel && nc > 96)
        for (long j = 0; j < nc; ++j)
            if (s(p, j) != 0) s(i, j) -= q * s(p, j);
#pragma omp parallel for schedule(static) if (parallel && mu > 96)
        for (long j = 0; j < mu; ++j) {
            if (u(p, j) != 0) u(i, j) -= q * u(p, j);
            if (u_inv(j, i) != 0) u_inv(j, p) += q * u_inv(j, i);
        }
    }

    void col_axpy(std::size_t j, std::size_t p, const Int& q) {
        if (q == 0) return;
        const long nr = static_cast<long>(s.rows());
        const long nv = static_cast<long>(v.rows());
#pragma omp parallel for schedule(static) if (parallel && nr > 96)
        for (long i = 0; i < nr; ++i)
            if (s(i, p) != 0) s(i, j) -= q * s(i, p);
#pragma omp parallel for schedule(static) if (parallel && nv > 96)
        for (long i = 0; i < nv; ++i) {
            if (v(i, p) != 0) v(i, j) -= q * v(i, p);
            if (v_inv(j, i) != 0) v_inv(p, i) += q * v_inv(j, i);
        }
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < s.cols(); ++j) std::swap(s(a, j), s(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j) {
            std::swap(u(a, j), u(b, j));
            std::swap(u_inv(j, a), u_inv(j, b));
        }
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < s.rows(); ++i) std::swap(s(i, a), s(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i) {
            std::swap(v(i, a), v(i, b));
            std::swap(v_inv(a, i), v_inv(b, i));
        }
    }

    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < s.cols(); ++j) s(i, j) = -s(i, j);
        for (std::size_t j = 0; j < u.cols(); ++j) {
            u(i, j) = -u(i, j);
            u_inv(j, i) = -u_inv(j, i);
        }
    }

    bool find_pivot(std::size_t t, std::size_t rhi, std::size_t chi,
                    std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best;
        for (std::size_t i = t; i < rhi; ++i)
            for (std::size_t j = t; j < chi; ++j) {
                if (s(i, j) == 0) continue;
                Int a = abs(s(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    // Diagonalize the submatrix [lo, rhi) x [lo, chi).
    void reduce(std::size_t lo, std::size_t rhi, std::size_t chi) {
        for (std::size_t t = lo; t < std::min(rhi, chi); ++t) {
            std::size_t pi, pj;
            if (!find_pivot(t, rhi, chi, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            for (;;) {
                bool clean = true;
                for (std::size_t i = t + 1; i < rhi; ++i) {
                    if (s(i, t) == 0) continue;
                    row_axpy(i, t, int_ndiv(s(i, t), s(t, t)));
                    if (s(i, t) != 0) {
                        swap_rows(t, i);
                        clean = false;
                    }
                }
                for (std::size_t j = t + 1; j < chi; ++j) {
                    if (s(t, j) == 0) continue;
                    col_axpy(j, t, int_ndiv(s(t, j), s(t, t)));
                    if (s(t, j) != 0) {
                        swap_cols(t, j);
                        clean = false;
                    }
                }
                if (clean) break;
            }
            if (s(t, t) < 0) negate_row(t);
        }
    }

    void run() {
        reduce(0, s.rows(), s.cols());
        const std::size_t n = std::min(s.rows(), s.cols());
        // Repair the divisibility chain: fold a violating d_{i+1} into
        // column i and rediagonalize the 2x2 block, which replaces the
        // pair by (gcd, lcm).
        for (;;) {
            bool stable = true;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                const Int& a = s(i, i);
                const Int& b = s(i + 1, i + 1);
                if (a == 0) {
                    if (b != 0) {  // zero before nonzero: swap into place
                        swap_rows(i, i + 1);
                        swap_cols(i, i + 1);
                        stable = false;
                    }
                    continue;
                }
                if (b % a == 0) continue;
                stable = false;
                col_axpy(i, i + 1, Int(-1));
                reduce(i, i + 2, i + 2);
            }
            if (stable) break;
        }
    }
};

SmithDecomposition run_snf(const IntMatrix& a, bool parallel) {
    Snf impl(a, parallel);
    impl.run();
    SmithDecomposition d;
    d.s = std::move(impl.s);
    d.u = std::move(impl.u);
    d.v = std::move(impl.v);
    d.u_inv = std::move(impl.u_inv);
    d.v_inv = std::move(impl.v_inv);
    const std::size_t n = std::min(d.s.rows(), d.s.cols());
    d.rank = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (d.s(i, i) != 0) ++d.rank;
    return d;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) { return run_snf(a, true); }

namespace serial {
SmithDecomposition smith_normal_form(const IntMatrix& a) { return run_snf(a, false); }
}

std::vector<std::vector<Int>> integer_kernel_basis(const SmithDecomposition& snf) {
    std::vector<std::vector<Int>> basis;
    const std::size_t n = snf.v.rows();
    for (std::size_t j = snf.rank; j < n; ++j) {
        std::vector<Int> b(n);
        for (std::size_t i = 0; i < n; ++i) b[i] = snf.v(i, j);
        basis.push_back(std::move(b));
    }
    return basis;
}

std::optional<IntSolution> solve_integer_system(const SmithDecomposition& snf,
                                                const std::vector<Int>& y) {
    const std::size_t m = snf.s.rows(), n = snf.s.cols();
    if (y.size() != m) throw std::invalid_argument("rhs dimension mismatch");
    std::vector<Int> uy = snf.u.apply(y);
    std::vector<Int> z(n, Int(0));
    for (std::size_t i = 0; i < std::min(m, n); ++i) {
        if (snf.s(i, i) == 0) {
            if (uy[i] != 0) return std::nullopt;
        } else {
            if (uy[i] % snf.s(i, i) != 0) return std::nullopt;
            z[i] = uy[i] / snf.s(i, i);
        }
    }
    for (std::size_t i = n; i < m; ++i)
        if (uy[i] != 0) return std::nullopt;
    IntSolution sol;
    sol.particular = snf.v.apply(z);
    sol.kernel_basis = integer_kernel_basis(snf);
    return sol;
}

std::optional<IntSolution> solve_integer_system(const IntMatrix& a, const std::vector<Int>& y) {
    return solve_integer_system(smith_normal_form(a), y);
}

}  // namespace cforge
