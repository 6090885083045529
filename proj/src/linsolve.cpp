#include "cforge/linsolve.hpp"

namespace cforge {

RatRref::RatRref(const RatMatrix& a) : a_cols_(a.cols()) {
    const std::size_t m = a.rows(), n = a.cols();
    r_ = a;
    ops_ = RatMatrix::identity(m);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t p = row;
        while (p < m && r_(p, col) == 0) ++p;
        if (p == m) continue;
        if (p != row) {
            for (std::size_t j = 0; j < n; ++j) std::swap(r_(p, j), r_(row, j));
            for (std::size_t j = 0; j < m; ++j) std::swap(ops_(p, j), ops_(row, j));
        }
        Rat inv = 1 / r_(row, col);
        for (std::size_t j = 0; j < n; ++j) r_(row, j) *= inv;
        for (std::size_t j = 0; j < m; ++j) ops_(row, j) *= inv;
        const long mm = static_cast<long>(m);
#pragma omp parallel for schedule(static) if (mm > 128)
        for (long i = 0; i < mm; ++i) {
            if (static_cast<std::size_t>(i) == row || r_(i, col) == 0) continue;
            Rat f = r_(i, col);
            for (std::size_t j = 0; j < n; ++j)
                if (r_(row, j) != 0) r_(i, j) -= f * r_(row, j);
            for (std::size_t j = 0; j < m; ++j)
                if (ops_(row, j) != 0) ops_(i, j) -= f * ops_(row, j);
        }
        pivots_.push_back(col);
        ++row;
    }
    left_null_ = RatMatrix(m - pivots_.size(), m);
    for (std::size_t i = pivots_.size(); i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) left_null_(i - pivots_.size(), j) = ops_(i, j);
}

std::optional<std::vector<Rat>> RatRref::solve(const std::vector<Rat>& y) const {
    if (y.size() != ops_.cols()) throw std::invalid_argument("rhs dimension mismatch");
    std::vector<Rat> b = ops_.apply(y);
    for (std::size_t i = pivots_.size(); i < b.size(); ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rat> x(a_cols_, Rat(0));
    for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = b[i];
    // Pivot columns of an rref are unit vectors, so assigning the free
    // variables to zero makes this exact.
    return x;
}

std::vector<std::vector<Rat>> RatRref::kernel_basis() const {
    std::vector<bool> is_pivot(a_cols_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < a_cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> k(a_cols_, Rat(0));
        k[f] = 1;
        for (std::size_t i = 0; i < pivots_.size(); ++i) k[pivots_[i]] = -r_(i, f);
        basis.push_back(std::move(k));
    }
    return basis;
}

bool MixedVec::is_zero() const {
    for (const Int& x : zi)
        if (x != 0) return false;
    for (const Rat& x : qi)
        if (x != 0) return false;
    return true;
}

MixedVec MixedVec::operator+(const MixedVec& o) const {
    if (zi.size() != o.zi.size() || qi.size() != o.qi.size())
        throw std::invalid_argument("mixed vector shape mismatch");
    MixedVec r = *this;
    for (std::size_t i = 0; i < zi.size(); ++i) r.zi[i] += o.zi[i];
    for (std::size_t i = 0; i < qi.size(); ++i) r.qi[i] += o.qi[i];
    return r;
}

MixedVec MixedVec::operator-(const MixedVec& o) const {
    if (zi.size() != o.zi.size() || qi.size() != o.qi.size())
        throw std::invalid_argument("mixed vector shape mismatch");
    MixedVec r = *this;
    for (std::size_t i = 0; i < zi.size(); ++i) r.zi[i] -= o.zi[i];
    for (std::size_t i = 0; i < qi.size(); ++i) r.qi[i] -= o.qi[i];
    return r;
}

MixedMap MixedMap::zero(const MixedModule& dom, const MixedModule& cod) {
    MixedMap f;
    f.domain = dom;
    f.codomain = cod;
    f.zz = IntMatrix(cod.int_rank, dom.int_rank);
    f.zq = RatMatrix(cod.rat_dim, dom.int_rank);
    f.qq = RatMatrix(cod.rat_dim, dom.rat_dim);
    return f;
}

MixedVec MixedMap::apply(const MixedVec& x) const {
    if (x.zi.size() != domain.int_rank || x.qi.size() != domain.rat_dim)
        throw std::invalid_argument("mixed map argument shape mismatch");
    MixedVec y;
    y.zi = zz.apply(x.zi);
    std::vector<Rat> xr(x.zi.size());
    for (std::size_t i = 0; i < xr.size(); ++i) xr[i] = Rat(x.zi[i]);
    y.qi = zq.apply(xr);
    std::vector<Rat> qpart = qq.apply(x.qi);
    for (std::size_t i = 0; i < y.qi.size(); ++i) y.qi[i] += qpart[i];
    return y;
}

MixedMap MixedMap::compose_after(const MixedMap& first) const {
    if (!(first.codomain == domain)) throw std::invalid_argument("composition shape mismatch");
    MixedMap g;
    g.domain = first.domain;
    g.codomain = codomain;
    g.zz = multiply(zz, first.zz);
    g.zq = multiply(zq, to_rational(first.zz)) + multiply(qq, first.zq);
    g.qq = multiply(qq, first.qq);
    return g;
}

MixedSolver::MixedSolver(MixedMap f) : f_(std::move(f)) {
    zz_snf_ = smith_normal_form(f_.zz);
    qq_rref_ = std::make_unique<RatRref>(f_.qq);

    auto kb = integer_kernel_basis(zz_snf_);
    lattice_ = IntMatrix(f_.domain.int_rank, kb.size());
    for (std::size_t j = 0; j < kb.size(); ++j)
        for (std::size_t i = 0; i < kb[j].size(); ++i) lattice_(i, j) = kb[j][i];

    w_ = multiply(qq_rref_->left_null(), f_.zq);
    RatMatrix wl = multiply(w_, to_rational(lattice_));

    // Clear denominators row by row; the scales reappear on the rhs.
    residual_ = IntMatrix(wl.rows(), wl.cols());
    row_scale_.assign(wl.rows(), Int(1));
    for (std::size_t i = 0; i < wl.rows(); ++i) {
        Int l(1);
        for (std::size_t j = 0; j < wl.cols(); ++j) l = int_lcm(l, wl(i, j).get_den());
        row_scale_[i] = l;
        for (std::size_t j = 0; j < wl.cols(); ++j) {
            Rat e = wl(i, j) * Rat(l);
            residual_(i, j) = e.get_num();
        }
    }
    residual_snf_ = std::make_unique<SmithDecomposition>(smith_normal_form(residual_));
}

std::optional<MixedVec> MixedSolver::solve(const MixedVec& y) const {
    if (y.zi.size() != f_.codomain.int_rank || y.qi.size() != f_.codomain.rat_dim)
        throw std::invalid_argument("mixed rhs shape mismatch");

    auto int_sol = solve_integer_system(zz_snf_, y.zi);
    if (!int_sol) return std::nullopt;
    const std::vector<Int>& n0 = int_sol->particular;

    // w0 = y_q - zq * n0
    std::vector<Rat> n0r(n0.size());
    for (std::size_t i = 0; i < n0.size(); ++i) n0r[i] = Rat(n0[i]);
    std::vector<Rat> w0 = y.qi;
    std::vector<Rat> shift = f_.zq.apply(n0r);
    for (std::size_t i = 0; i < w0.size(); ++i) w0[i] -= shift[i];

    // Residual conditions: (left_null * zq * lattice) t = left_null * w0.
    std::vector<Rat> rhs = qq_rref_->left_null().apply(w0);
    std::vector<Int> rhs_int(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        Rat scaled = rhs[i] * Rat(row_scale_[i]);
        if (!rat_is_integer(scaled)) return std::nullopt;
        rhs_int[i] = scaled.get_num();
    }
    auto t_sol = solve_integer_system(*residual_snf_, rhs_int);
    if (!t_sol) return std::nullopt;

    MixedVec x;
    x.zi = n0;
    std::vector<Int> shift_n = lattice_.apply(t_sol->particular);
    for (std::size_t i = 0; i < x.zi.size(); ++i) x.zi[i] += shift_n[i];

    std::vector<Rat> xr(x.zi.size());
    for (std::size_t i = 0; i < xr.size(); ++i) xr[i] = Rat(x.zi[i]);
    std::vector<Rat> target = y.qi;
    std::vector<Rat> zshift = f_.zq.apply(xr);
    for (std::size_t i = 0; i < target.size(); ++i) target[i] -= zshift[i];
    auto q = qq_rref_->solve(target);
    if (!q) return std::nullopt;  // unreachable when the residual phase passed
    x.qi = *q;
    return x;
}

bool MixedSolver::kernel_trivial() const {
    if (!qq_rref_->injective()) return false;
    if (lattice_.cols() == 0) return true;
    // Nonzero lattice elements survive iff (left_null * zq * lattice) t = 0
    // has a nonzero solution.
    RatRref rr(to_rational(residual_));
    return rr.injective();
}

}  // namespace cforge
