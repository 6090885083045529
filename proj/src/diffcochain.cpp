#include "cforge/diffcochain.hpp"

#include <stdexcept>

namespace cforge {

DiffCochain::DiffCochain(const SimplicialComplex* complex, int height, int degree)
    : cx(complex), s(height), k(degree), c(complex, degree) {
    if (height < 1) throw std::invalid_argument("height must be >= 1");
    if (degree < 0) throw std::invalid_argument("negative degree");
    if (has_h()) h = RatCochain(complex, degree - 1);
    if (has_omega()) omega = RatCochain(complex, degree);
}

bool DiffCochain::is_zero() const {
    if (!c.is_zero()) return false;
    if (h && !h->is_zero()) return false;
    if (omega && !omega->is_zero()) return false;
    return true;
}

void DiffCochain::check_shape(const DiffCochain& o) const {
    if (cx != o.cx || s != o.s || k != o.k)
        throw std::invalid_argument("differential cochain shape mismatch");
}

DiffCochain DiffCochain::operator+(const DiffCochain& o) const {
    check_shape(o);
    DiffCochain r = *this;
    r.c = c + o.c;
    if (h) r.h = *h + *o.h;
    if (omega) r.omega = *omega + *o.omega;
    return r;
}

DiffCochain DiffCochain::operator-(const DiffCochain& o) const {
    check_shape(o);
    DiffCochain r = *this;
    r.c = c - o.c;
    if (h) r.h = *h - *o.h;
    if (omega) r.omega = *omega - *o.omega;
    return r;
}

DiffCochain DiffCochain::operator-() const {
    DiffCochain r = *this;
    r.c = -c;
    if (h) r.h = -*h;
    if (omega) r.omega = -*omega;
    return r;
}

bool DiffCochain::operator==(const DiffCochain& o) const {
    if (cx != o.cx || s != o.s || k != o.k) return false;
    return (*this - o).is_zero();
}

DiffCochain dc_differential(const DiffCochain& x) {
    DiffCochain out(x.cx, x.s, x.k + 1);
    out.c = coboundary(x.c);
    // middle component: omega - c - dh, a rational k-cochain
    RatCochain mid = x.omega ? *x.omega : RatCochain(x.cx, x.k);
    mid = mid - to_rational(x.c);
    if (x.h) mid = mid - coboundary(*x.h);
    out.h = mid;
    if (out.has_omega()) {
        out.omega = x.omega ? coboundary(*x.omega) : RatCochain(x.cx, x.k + 1);
    }
    return out;
}

bool is_cocycle(const DiffCochain& x) { return dc_differential(x).is_zero(); }

DiffCochain restrict_dc(const DiffCochain& x, const SimplicialComplex* sub) {
    DiffCochain out(sub, x.s, x.k);
    out.c = restrict_cochain(x.c, sub);
    if (x.h) out.h = restrict_cochain(*x.h, sub);
    if (x.omega) out.omega = restrict_cochain(*x.omega, sub);
    return out;
}

DiffCochain pullback_dc(const SimplicialMap& f, const DiffCochain& x) {
    DiffCochain out(&f.source(), x.s, x.k);
    out.c = pullback_cochain(f, x.c);
    if (x.h) out.h = pullback_cochain(f, *x.h);
    if (x.omega) out.omega = pullback_cochain(f, *x.omega);
    return out;
}

DiffCochain lift_integral(const IntCochain& c, int height) {
    const int k = c.degree;
    if (k < height)
        throw std::invalid_argument("no canonical lift below the height");
    if (!coboundary(c).is_zero())
        throw std::invalid_argument("lift_integral requires an integral cocycle");
    DiffCochain out(c.cx, height, k);
    out.c = c;
    out.omega = to_rational(c);
    return out;
}

DiffComplex::DiffComplex(const SimplicialComplex* cx, int height) : cx_(cx), s_(height) {
    if (height < 1) throw std::invalid_argument("height must be >= 1");
    const int kmax = max_degree();
    diff_.reserve(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
        MixedModule dom = module(k), cod = module(k + 1);
        MixedMap f = MixedMap::zero(dom, cod);
        const std::size_t nk = cx_->count(k);
        const std::size_t nk1 = cx_->count(k + 1);
        const IntMatrix& dk = cx_->coboundary_matrix(k);
        const IntMatrix& dk_1 = cx_->coboundary_matrix(k - 1);

        // c' = dc
        if (dk.rows() == nk1 && dk.cols() == nk) f.zz = dk;

        // h' = omega - c - dh lives on k-simplices: rows [0, nk)
        // omega' = d omega lives on (k+1)-simplices: rows [nk, nk+nk1) when present
        for (std::size_t i = 0; i < nk; ++i) f.zq(i, i) = Rat(-1);

        std::size_t col = 0;
        if (k >= 1) {  // h block of the domain
            for (std::size_t r = 0; r < nk; ++r)
                for (std::size_t ccol = 0; ccol < cx_->count(k - 1); ++ccol)
                    if (dk_1(r, ccol) != 0) f.qq(r, col + ccol) = -Rat(dk_1(r, ccol));
            col += cx_->count(k - 1);
        }
        if (k >= s_) {  // omega block of the domain
            for (std::size_t i = 0; i < nk; ++i) f.qq(i, col + i) = Rat(1);
            if (k + 1 >= s_) {
                for (std::size_t r = 0; r < nk1; ++r)
                    for (std::size_t ccol = 0; ccol < nk; ++ccol)
                        if (dk(r, ccol) != 0) f.qq(nk + r, col + ccol) = Rat(dk(r, ccol));
            }
        }
        diff_.push_back(std::move(f));
    }
    solvers_.resize(diff_.size());
    cohom_.resize(kmax + 2);
}

MixedModule DiffComplex::module(int k) const {
    MixedModule m;
    if (k < 0) return m;
    m.int_rank = cx_->count(k);
    m.rat_dim = (k >= 1 ? cx_->count(k - 1) : 0) + (k >= s_ ? cx_->count(k) : 0);
    return m;
}

const MixedMap& DiffComplex::differential(int k) const {
    if (k < 0 || k >= static_cast<int>(diff_.size()))
        throw std::out_of_range("differential degree out of range");
    return diff_[k];
}

const MixedSolver& DiffComplex::solver(int k) const {
    auto& slot = const_cast<DiffComplex*>(this)->solvers_[k];
    if (!slot) slot = std::make_unique<MixedSolver>(differential(k));
    return *slot;
}

const CohomologyPresentation& DiffComplex::integer_cohomology(int k) const {
    if (k < 0 || k >= static_cast<int>(cohom_.size()))
        throw std::out_of_range("cohomology degree out of range");
    if (!cohom_[k]) {
        IntMatrix d_in = (k >= 1) ? cx_->coboundary_matrix(k - 1)
                                  : IntMatrix(cx_->count(0), 0);
        IntMatrix d_out = (k <= cx_->dim()) ? cx_->coboundary_matrix(k)
                                            : IntMatrix(0, cx_->count(k));
        if (d_in.rows() != cx_->count(k)) d_in = IntMatrix(cx_->count(k), 0);
        cohom_[k] = std::make_unique<CohomologyPresentation>(d_in, d_out);
    }
    return *cohom_[k];
}

MixedVec DiffComplex::to_vec(const DiffCochain& x) const {
    if (x.cx != cx_ || x.s != s_) throw std::invalid_argument("cochain from another complex");
    MixedVec v;
    v.zi = x.c.values;
    if (x.h) v.qi.insert(v.qi.end(), x.h->values.begin(), x.h->values.end());
    if (x.omega) v.qi.insert(v.qi.end(), x.omega->values.begin(), x.omega->values.end());
    return v;
}

DiffCochain DiffComplex::from_vec(int k, const MixedVec& v) const {
    DiffCochain x(cx_, s_, k);
    MixedModule m = module(k);
    if (v.zi.size() != m.int_rank || v.qi.size() != m.rat_dim)
        throw std::invalid_argument("vector does not match degree module");
    x.c.values = v.zi;
    std::size_t off = 0;
    if (x.h) {
        for (auto& val : x.h->values) val = v.qi[off++];
    }
    if (x.omega) {
        for (auto& val : x.omega->values) val = v.qi[off++];
    }
    return x;
}

bool DiffComplex::h0_trivial() const { return solver(0).kernel_trivial(); }

bool TruncatedDiffComplex::quotient_zero(const DiffCochain& a) const {
    if (a.k != k - 2) throw std::invalid_argument("quotient degree mismatch");
    if (a.is_zero()) return true;
    if (k - 3 < 0) return false;
    return base->solver(k - 3).solve(base->to_vec(a)).has_value();
}

TruncatedDiffComplex truncate(const DiffComplex& dc, int k) {
    if (k < 0) throw std::invalid_argument("negative truncation degree");
    return TruncatedDiffComplex{&dc, k};
}

CocycleCategory::CocycleCategory(const DiffComplex* dc, int k, bool truncated)
    : dc_(dc), k_(k), truncated_(truncated) {
    if (k < 0) throw std::invalid_argument("negative degree");
}

bool CocycleCategory::is_object(const DiffCochain& x) const {
    return x.k == k_ && is_cocycle(x);
}

std::optional<OneArrow> CocycleCategory::find_one_arrow(const DiffCochain& x1,
                                                        const DiffCochain& x2) const {
    x1.check_shape(x2);
    if (x1.k != k_) throw std::invalid_argument("object degree mismatch");
    DiffCochain diff = x1 - x2;
    if (k_ == 0) {
        if (!diff.is_zero()) return std::nullopt;
        return OneArrow{x1, x2, DiffCochain::zero(dc_ ? &dc_->complex() : x1.cx, x1.s, 0)};
    }
    auto sol = dc_->solver(k_ - 1).solve(dc_->to_vec(diff));
    if (!sol) return std::nullopt;
    return OneArrow{x1, x2, dc_->from_vec(k_ - 1, *sol)};
}

std::optional<TwoArrowClass> CocycleCategory::find_two_arrow(const OneArrow& b1,
                                                             const OneArrow& b2) const {
    if (!(b1.source == b2.source) || !(b1.target == b2.target))
        throw std::invalid_argument("parallel arrows required");
    DiffCochain diff = b2.b - b1.b;
    if (k_ <= 1) {
        if (!diff.is_zero()) return std::nullopt;
        return TwoArrowClass{b1, b2, DiffCochain::zero(&dc_->complex(), diff.s, 0)};
    }
    auto sol = dc_->solver(k_ - 2).solve(dc_->to_vec(diff));
    if (!sol) return std::nullopt;
    return TwoArrowClass{b1, b2, dc_->from_vec(k_ - 2, *sol)};
}

bool CocycleCategory::two_arrows_equivalent(const DiffCochain& a1, const DiffCochain& a2) const {
    a1.check_shape(a2);
    DiffCochain diff = a2 - a1;
    if (diff.is_zero()) return true;
    if (k_ - 3 < 0) return false;
    if (truncated_) {
        // Vanishing in the degree k-2 quotient of the good truncation.
        return TruncatedDiffComplex{dc_, k_}.quotient_zero(diff);
    }
    return dc_->solver(k_ - 3).solve(dc_->to_vec(diff)).has_value();
}

ClassCoordinates CocycleCategory::char_class(const DiffCochain& x) const {
    if (!is_object(x)) throw std::invalid_argument("char_class requires a cocycle");
    return dc_->integer_cohomology(k_).class_coords(x.c.values);
}

}  // namespace cforge
