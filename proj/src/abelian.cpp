#include "cforge/abelian.hpp"

#include <stdexcept>

namespace cforge {

std::string FgAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::string out;
    if (free_rank == 1) out = "Z";
    else if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
    for (const Int& d : torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + d.get_str();
    }
    return out;
}

bool ClassCoordinates::is_zero() const {
    for (const Int& x : torsion)
        if (x != 0) return false;
    for (const Int& x : free_part)
        if (x != 0) return false;
    return true;
}

ClassCoordinates ClassCoordinates::negated(const FgAbelianGroup& g) const {
    ClassCoordinates n = *this;
    for (std::size_t i = 0; i < n.torsion.size(); ++i) {
        if (n.torsion[i] != 0) n.torsion[i] = g.torsion[i] - n.torsion[i];
    }
    for (Int& x : n.free_part) x = -x;
    return n;
}

CohomologyPresentation::CohomologyPresentation(const IntMatrix& d_in, const IntMatrix& d_out)
    : d_in_(d_in), d_out_(d_out) {
    if (d_in.rows() != d_out.cols())
        throw std::invalid_argument("cochain complex degree mismatch");
    if (!multiply(d_out, d_in).is_zero())
        throw std::invalid_argument("not a complex: d_out * d_in != 0");

    d_in_snf_ = smith_normal_form(d_in_);

    SmithDecomposition out_snf = smith_normal_form(d_out_);
    auto kb = integer_kernel_basis(out_snf);
    kernel_ = IntMatrix(d_out_.cols(), kb.size());
    for (std::size_t j = 0; j < kb.size(); ++j)
        for (std::size_t i = 0; i < kb[j].size(); ++i) kernel_(i, j) = kb[j][i];
    kernel_snf_ = smith_normal_form(kernel_);

    // Express each coboundary generator in kernel coordinates.  The
    // kernel lattice of an integer matrix is saturated, so these solves
    // cannot fail on a valid complex.
    IntMatrix rel(kb.size(), d_in_.cols());
    for (std::size_t j = 0; j < d_in_.cols(); ++j) {
        std::vector<Int> col(d_in_.rows());
        for (std::size_t i = 0; i < d_in_.rows(); ++i) col[i] = d_in_(i, j);
        auto w = solve_integer_system(kernel_snf_, col);
        if (!w) throw std::logic_error("coboundary outside kernel lattice");
        for (std::size_t i = 0; i < kb.size(); ++i) rel(i, j) = w->particular[i];
    }
    rel_snf_ = smith_normal_form(rel);

    const std::size_t k = kb.size();
    diag_.assign(k, Int(0));
    const std::size_t nmin = std::min(rel_snf_.s.rows(), rel_snf_.s.cols());
    for (std::size_t i = 0; i < nmin; ++i) diag_[i] = rel_snf_.s(i, i);

    for (std::size_t i = 0; i < k; ++i) {
        if (diag_[i] == 1) continue;
        if (diag_[i] == 0) free_idx_.push_back(i);
        else torsion_idx_.push_back(i);
    }
    for (std::size_t i : torsion_idx_) {
        group_.torsion.push_back(diag_[i]);
        gen_cols_.push_back(i);
    }
    group_.free_rank = free_idx_.size();
    for (std::size_t i : free_idx_) gen_cols_.push_back(i);
}

bool CohomologyPresentation::is_cocycle(const std::vector<Int>& z) const {
    for (const Int& v : d_out_.apply(z))
        if (v != 0) return false;
    return true;
}

ClassCoordinates CohomologyPresentation::class_coords(const std::vector<Int>& z) const {
    auto w = solve_integer_system(kernel_snf_, z);
    if (!w) throw std::invalid_argument("class_coords: not a cocycle");
    std::vector<Int> c = rel_snf_.u.apply(w->particular);
    ClassCoordinates cc;
    for (std::size_t i : torsion_idx_) {
        Int r = c[i] % diag_[i];
        if (r < 0) r += diag_[i];
        cc.torsion.push_back(r);
    }
    for (std::size_t i : free_idx_) cc.free_part.push_back(c[i]);
    return cc;
}

bool CohomologyPresentation::is_coboundary(const std::vector<Int>& z) const {
    return class_coords(z).is_zero();
}

std::optional<std::vector<Int>> CohomologyPresentation::coboundary_preimage(
    const std::vector<Int>& z) const {
    auto sol = solve_integer_system(d_in_snf_, z);
    if (!sol) return std::nullopt;
    return sol->particular;
}

std::vector<Int> CohomologyPresentation::generator(std::size_t i) const {
    if (i >= gen_cols_.size()) throw std::out_of_range("generator index");
    std::vector<Int> c(diag_.size(), Int(0));
    c[gen_cols_[i]] = 1;
    return kernel_.apply(rel_snf_.u_inv.apply(c));
}

}  // namespace cforge
