#include "cforge/total.hpp"

#include <stdexcept>

namespace cforge {

namespace {

// Copy a block MixedMap into a direct-sum MixedMap at given offsets.
void place_block(MixedMap& big, const MixedMap& block, int sign,
                 std::pair<std::size_t, std::size_t> dom_off,
                 std::pair<std::size_t, std::size_t> cod_off) {
    for (std::size_t i = 0; i < block.zz.rows(); ++i)
        for (std::size_t j = 0; j < block.zz.cols(); ++j)
            if (block.zz(i, j) != 0)
                big.zz(cod_off.first + i, dom_off.first + j) += sign * block.zz(i, j);
    for (std::size_t i = 0; i < block.zq.rows(); ++i)
        for (std::size_t j = 0; j < block.zq.cols(); ++j)
            if (block.zq(i, j) != 0)
                big.zq(cod_off.second + i, dom_off.first + j) += sign * block.zq(i, j);
    for (std::size_t i = 0; i < block.qq.rows(); ++i)
        for (std::size_t j = 0; j < block.qq.cols(); ++j)
            if (block.qq(i, j) != 0)
                big.qq(cod_off.second + i, dom_off.second + j) += sign * block.qq(i, j);
}

}  // namespace

TotalComplex::TotalComplex(const SimplicialGroupoid* gpd, CoeffKind kind, int height, int n_max)
    : gpd_(gpd), kind_(kind), height_(height), n_max_(n_max) {
    if (n_max < 0) throw std::invalid_argument("negative total degree bound");
    gpd_->ensure_levels(n_max + 1);
    level_dc_.resize(n_max_ + 2);
    build();
}

const DiffComplex& TotalComplex::level_complex(int q) const {
    if (kind_ != CoeffKind::differential_cochains)
        throw std::logic_error("level_complex only exists for differential coefficients");
    if (q < 0 || q >= static_cast<int>(level_dc_.size()))
        throw std::out_of_range("level out of range");
    if (!level_dc_[q])
        level_dc_[q] = std::make_unique<DiffComplex>(&gpd_->level(q), height_);
    return *level_dc_[q];
}

MixedModule TotalComplex::component_module(int p, int q) const {
    if (p < 0 || q < 0) return MixedModule{};
    const SimplicialComplex& cx = gpd_->level(q);
    if (kind_ == CoeffKind::integer_cochains) return MixedModule{cx.count(p), 0};
    return level_complex(q).module(p);
}

MixedModule TotalComplex::module(int n) const {
    MixedModule m;
    if (n < 0) return m;
    for (int q = 0; q <= n; ++q) {
        MixedModule c = component_module(n - q, q);
        m.int_rank += c.int_rank;
        m.rat_dim += c.rat_dim;
    }
    return m;
}

std::pair<std::size_t, std::size_t> TotalComplex::component_offsets(int p, int q) const {
    const int n = p + q;
    std::size_t zi = 0, qi = 0;
    for (int qq = 0; qq < q; ++qq) {
        MixedModule c = component_module(n - qq, qq);
        zi += c.int_rank;
        qi += c.rat_dim;
    }
    return {zi, qi};
}

MixedMap TotalComplex::vertical(int p, int q) const {
    const SimplicialComplex& cx = gpd_->level(q);
    if (kind_ == CoeffKind::integer_cochains) {
        MixedMap f = MixedMap::zero(component_module(p, q), component_module(p + 1, q));
        const IntMatrix& d = cx.coboundary_matrix(p);
        if (d.rows() == f.codomain.int_rank && d.cols() == f.domain.int_rank) f.zz = d;
        return f;
    }
    const DiffComplex& dc = level_complex(q);
    if (p <= dc.max_degree()) return dc.differential(p);
    return MixedMap::zero(component_module(p, q), component_module(p + 1, q));
}

MixedMap TotalComplex::horizontal(int p, int q) const {
    MixedMap sum = MixedMap::zero(component_module(p, q), component_module(p, q + 1));
    const auto& face_maps = gpd_->faces(q + 1);
    int sign = 1;
    for (const SimplicialMap& f : face_maps) {
        IntMatrix pb = f.pullback_matrix(p);
        MixedMap block = MixedMap::zero(sum.domain, sum.codomain);
        if (kind_ == CoeffKind::integer_cochains) {
            block.zz = pb;
        } else {
            block.zz = pb;
            // rational blocks: h part at degree p-1, omega at p
            std::size_t row = 0, col = 0;
            if (p >= 1) {
                IntMatrix pb_h = f.pullback_matrix(p - 1);
                for (std::size_t i = 0; i < pb_h.rows(); ++i)
                    for (std::size_t j = 0; j < pb_h.cols(); ++j)
                        if (pb_h(i, j) != 0) block.qq(i, j) = Rat(pb_h(i, j));
                row += pb_h.rows();
                col += pb_h.cols();
            }
            if (p >= height_) {
                for (std::size_t i = 0; i < pb.rows(); ++i)
                    for (std::size_t j = 0; j < pb.cols(); ++j)
                        if (pb(i, j) != 0) block.qq(row + i, col + j) = Rat(pb(i, j));
            }
        }
        place_block(sum, block, sign, {0, 0}, {0, 0});
        sign = -sign;
    }
    return sum;
}

void TotalComplex::build() {
    delta_.clear();
    for (int n = 0; n <= n_max_; ++n) {
        MixedMap big = MixedMap::zero(module(n), module(n + 1));
        for (int q = 0; q <= n; ++q) {
            const int p = n - q;
            auto dom = component_offsets(p, q);
            // vertical (-1)^q d : (p, q) -> (p+1, q)
            MixedMap vert = vertical(p, q);
            place_block(big, vert, (q % 2 == 0) ? 1 : -1, dom, component_offsets(p + 1, q));
            // horizontal: (p, q) -> (p, q+1)
            MixedMap horiz = horizontal(p, q);
            place_block(big, horiz, 1, dom, component_offsets(p, q + 1));
        }
        delta_.push_back(std::move(big));
    }
    solvers_.resize(delta_.size());
    cohom_.resize(delta_.size());
}

const MixedMap& TotalComplex::differential(int n) const {
    if (n < 0 || n >= static_cast<int>(delta_.size()))
        throw std::out_of_range("total degree out of range");
    return delta_[n];
}

const MixedSolver& TotalComplex::solver(int n) const {
    auto& slot = solvers_[n];
    if (!slot) slot = std::make_unique<MixedSolver>(differential(n));
    return *slot;
}

const CohomologyPresentation& TotalComplex::integer_cohomology(int n) const {
    if (kind_ != CoeffKind::integer_cochains)
        throw std::logic_error("integer cohomology lives on the integer total complex");
    if (n < 1 || n + 1 > static_cast<int>(delta_.size()))
        throw std::out_of_range("insufficient levels for requested degree");
    if (!cohom_[n])
        cohom_[n] = std::make_unique<CohomologyPresentation>(differential(n - 1).zz,
                                                             differential(n).zz);
    return *cohom_[n];
}

TotalCochain TotalCochain::zero(const TotalComplex& tc, int n) {
    TotalCochain x;
    x.tc = &tc;
    x.n = n;
    x.v = MixedVec::zero(tc.module(n));
    return x;
}

bool TotalCochain::is_cocycle() const { return tc->differential(n).apply(v).is_zero(); }

TotalCochain TotalCochain::operator+(const TotalCochain& o) const {
    TotalCochain r = *this;
    r.v = v + o.v;
    return r;
}

TotalCochain TotalCochain::operator-(const TotalCochain& o) const {
    TotalCochain r = *this;
    r.v = v - o.v;
    return r;
}

DiffCochain TotalCochain::dc_component(int p, int q) const {
    const DiffComplex& dc = tc->level_complex(q);
    MixedModule m = tc->component_module(p, q);
    auto off = tc->component_offsets(p, q);
    MixedVec comp;
    comp.zi.assign(v.zi.begin() + off.first, v.zi.begin() + off.first + m.int_rank);
    comp.qi.assign(v.qi.begin() + off.second, v.qi.begin() + off.second + m.rat_dim);
    return dc.from_vec(p, comp);
}

void TotalCochain::set_dc_component(int p, int q, const DiffCochain& x) {
    const DiffComplex& dc = tc->level_complex(q);
    MixedVec comp = dc.to_vec(x);
    auto off = tc->component_offsets(p, q);
    std::copy(comp.zi.begin(), comp.zi.end(), v.zi.begin() + off.first);
    std::copy(comp.qi.begin(), comp.qi.end(), v.qi.begin() + off.second);
}

IntCochain TotalCochain::int_component(int p, int q) const {
    IntCochain out(&tc->groupoid().level(q), p);
    auto off = tc->component_offsets(p, q);
    std::copy(v.zi.begin() + off.first, v.zi.begin() + off.first + out.values.size(),
              out.values.begin());
    return out;
}

void TotalCochain::set_int_component(int p, int q, const IntCochain& x) {
    auto off = tc->component_offsets(p, q);
    std::copy(x.values.begin(), x.values.end(), v.zi.begin() + off.first);
}

std::optional<TotalCochain> same_total_class(const TotalCochain& x, const TotalCochain& y) {
    if (x.tc != y.tc || x.n != y.n) throw std::invalid_argument("different total complexes");
    if (x.n == 0) {
        if ((x - y).v.is_zero()) return TotalCochain::zero(*x.tc, 0);
        return std::nullopt;
    }
    auto sol = x.tc->solver(x.n - 1).solve((x - y).v);
    if (!sol) return std::nullopt;
    TotalCochain b;
    b.tc = x.tc;
    b.n = x.n - 1;
    b.v = *sol;
    return b;
}

FgAbelianGroup equivariant_cohomology(const TotalComplex& integer_tot, int k) {
    return integer_tot.integer_cohomology(k).group();
}

ClassCoordinates equivariant_char_class(const TotalCochain& x, const TotalComplex& integer_tot) {
    if (!x.is_cocycle()) throw std::invalid_argument("char class of a non-cocycle");
    // The integer parts of the mixed vector are exactly the integer
    // total cochain, with matching component layout.
    return integer_tot.integer_cohomology(x.n).class_coords(x.v.zi);
}

EquivariantTriple to_triple(const TotalCochain& x) {
    if (x.n != 3) throw std::invalid_argument("triples live in total degree 3");
    return EquivariantTriple{x.dc_component(3, 0), x.dc_component(2, 1), x.dc_component(1, 2)};
}

TotalCochain from_triple(const TotalComplex& tc, const EquivariantTriple& t) {
    TotalCochain x = TotalCochain::zero(tc, 3);
    x.set_dc_component(3, 0, t.a);
    x.set_dc_component(2, 1, t.e);
    x.set_dc_component(1, 2, t.t);
    // The (0,3) component is forced: d z = horizontal(t) and d is
    // injective in degree 0 (H^0 = 0).
    MixedMap horiz = tc.horizontal(1, 2);
    MixedVec rhs = horiz.apply(tc.level_complex(2).to_vec(t.t));
    const DiffComplex& dc3 = tc.level_complex(3);
    auto z = dc3.solver(0).solve(rhs);
    if (!z) throw std::invalid_argument("triple violates the coherence condition");
    x.set_dc_component(0, 3, dc3.from_vec(0, *z));
    if (!x.is_cocycle()) throw std::invalid_argument("triple does not close to a total cocycle");
    return x;
}

}  // namespace cforge
