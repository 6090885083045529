#include "cforge/cover.hpp"

#include <stdexcept>

namespace cforge {

Cover::Cover(const SimplicialComplex* base, std::vector<SimplicialComplex> sets, ChoiceRule rule)
    : base_(base), sets_(std::move(sets)) {
    if (sets_.empty()) throw std::invalid_argument("empty cover");
    for (const auto& u : sets_)
        if (!u.is_subcomplex_of(*base_))
            throw std::invalid_argument("cover set is not a subcomplex of the base");
    lambda_.resize(base_->dim() + 1);
    for (int d = 0; d <= base_->dim(); ++d) {
        const auto& simps = base_->simplices(d);
        lambda_[d].resize(simps.size());
        for (std::size_t i = 0; i < simps.size(); ++i) {
            bool found = false;
            if (rule == ChoiceRule::lowest_index) {
                for (std::size_t a = 0; a < sets_.size() && !found; ++a)
                    if (sets_[a].contains(simps[i])) { lambda_[d][i] = a; found = true; }
            } else {
                for (std::size_t a = sets_.size(); a-- > 0 && !found;)
                    if (sets_[a].contains(simps[i])) { lambda_[d][i] = a; found = true; }
            }
            if (!found)
                throw std::invalid_argument("cover misses simplex at degree " + std::to_string(d) +
                                            " index " + std::to_string(i));
        }
    }
}

std::size_t Cover::choice(const Simplex& s) const {
    auto idx = base_->index_of(s);
    if (!idx) throw std::invalid_argument("choice of a simplex outside the base");
    return lambda_[s.size() - 1][*idx];
}

CechLevels::CechLevels(const Cover* cover, int q_max) : cover_(cover) {
    // Level q: strictly increasing (q+1)-tuples with nonempty
    // intersection, in lexicographic order.  Extend level by level so
    // empty intersections prune their supersets.
    std::vector<Piece> current;
    for (std::size_t a = 0; a < cover_->size(); ++a)
        current.push_back(Piece{{a}, cover_->set(a)});
    levels_.push_back(current);
    for (int q = 1; q <= q_max; ++q) {
        std::vector<Piece> next;
        for (const Piece& piece : levels_.back()) {
            for (std::size_t b = piece.tuple.back() + 1; b < cover_->size(); ++b) {
                SimplicialComplex inter = piece.cx.intersect(cover_->set(b));
                if (inter.dim() < 0) continue;  // empty
                std::vector<std::size_t> t = piece.tuple;
                t.push_back(b);
                next.push_back(Piece{std::move(t), std::move(inter)});
            }
        }
        if (next.empty()) break;
        levels_.push_back(std::move(next));
    }
}

const std::vector<CechLevels::Piece>& CechLevels::level(int q) const {
    static const std::vector<Piece> empty;
    if (q < 0 || q > max_level()) return empty;
    return levels_[q];
}

std::size_t CechLevels::piece_index(int q, const std::vector<std::size_t>& tuple) const {
    const auto& lv = level(q);
    // Lexicographic order allows binary search.
    std::size_t lo = 0, hi = lv.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (lv[mid].tuple < tuple) lo = mid + 1;
        else hi = mid;
    }
    if (lo == lv.size() || lv[lo].tuple != tuple)
        throw std::invalid_argument("empty or missing Cech piece");
    return lo;
}

}  // namespace cforge
