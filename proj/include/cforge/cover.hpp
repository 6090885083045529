#ifndef CFORGE_COVER_HPP
#define CFORGE_COVER_HPP

#include <vector>

#include "cforge/cochain.hpp"

namespace cforge {

// Cover of a base complex by subcomplexes, with a choice function
// assigning every base simplex a witness set containing it.  The
// choice function is the whole contraction: no acyclicity is needed.
class Cover {
  public:
    enum class ChoiceRule { lowest_index, highest_index };

    Cover(const SimplicialComplex* base, std::vector<SimplicialComplex> sets,
          ChoiceRule rule = ChoiceRule::lowest_index);

    const SimplicialComplex& base() const { return *base_; }
    std::size_t size() const { return sets_.size(); }
    const SimplicialComplex& set(std::size_t alpha) const { return sets_[alpha]; }

    // Witness index of the choice function.
    std::size_t choice(const Simplex& s) const;

  private:
    const SimplicialComplex* base_;
    std::vector<SimplicialComplex> sets_;
    std::vector<std::vector<std::size_t>> lambda_;  // per degree, per base simplex
};

// Strictly increasing index tuples with nonempty intersections, one
// level per Cech degree, with inclusion face maps.
class CechLevels {
  public:
    struct Piece {
        std::vector<std::size_t> tuple;  // strictly increasing set indices
        SimplicialComplex cx;
    };

    CechLevels(const Cover* cover, int q_max);

    const Cover& cover() const { return *cover_; }
    int max_level() const { return static_cast<int>(levels_.size()) - 1; }
    const std::vector<Piece>& level(int q) const;
    std::size_t piece_index(int q, const std::vector<std::size_t>& tuple) const;

  private:
    const Cover* cover_;
    std::vector<std::vector<Piece>> levels_;
};

// A Cech q-cochain of simplicial p-cochains: one value per level-q piece.
template <typename T>
using CechCochain = std::vector<Cochain<T>>;

template <typename T>
CechCochain<T> cech_zero(const CechLevels& lv, int q, int p) {
    CechCochain<T> out;
    for (const auto& piece : lv.level(q)) out.push_back(Cochain<T>(&piece.cx, p));
    return out;
}

// pi^*: restriction of a global cochain to every level-0 piece.
template <typename T>
CechCochain<T> cech_augment(const CechLevels& lv, const Cochain<T>& x) {
    CechCochain<T> out;
    for (const auto& piece : lv.level(0)) out.push_back(restrict_cochain(x, &piece.cx));
    return out;
}

// Cech differential: (dx)_T = sum_i (-1)^i x_{T minus i} restricted.
template <typename T>
CechCochain<T> cech_d(const CechLevels& lv, int q, const CechCochain<T>& x) {
    const int p = x.empty() ? 0 : x.front().degree;
    CechCochain<T> out = cech_zero<T>(lv, q + 1, p);
    const auto& pieces = lv.level(q + 1);
    for (std::size_t t = 0; t < pieces.size(); ++t) {
        const auto& tuple = pieces[t].tuple;
        int sign = 1;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            std::vector<std::size_t> face;
            for (std::size_t j = 0; j < tuple.size(); ++j)
                if (j != i) face.push_back(tuple[j]);
            const Cochain<T>& src = x[lv.piece_index(q, face)];
            Cochain<T> r = restrict_cochain(src, &pieces[t].cx);
            out[t] = (sign > 0) ? out[t] + r : out[t] - r;
            sign = -sign;
        }
    }
    return out;
}

// Contraction h(x)_B(s) = sign * x_{sort(choice(s), B)}(s); repeated
// indices vanish by the alternating extension.  Together with cech_d
// it satisfies dh + hd = id on every augmented row.
template <typename T>
CechCochain<T> cech_h(const CechLevels& lv, int q, const CechCochain<T>& x) {
    const int p = x.empty() ? 0 : x.front().degree;
    CechCochain<T> out = cech_zero<T>(lv, q - 1, p);
    const auto& pieces = lv.level(q - 1);
    for (std::size_t t = 0; t < pieces.size(); ++t) {
        const auto& tuple = pieces[t].tuple;
        const auto& simps = pieces[t].cx.simplices(p);
        for (std::size_t r = 0; r < simps.size(); ++r) {
            const Simplex& s = simps[r];
            std::size_t mu = lv.cover().choice(s);
            std::size_t pos = 0;
            bool repeated = false;
            std::vector<std::size_t> big;
            for (std::size_t b : tuple) {
                if (b == mu) repeated = true;
                if (b < mu) ++pos;
            }
            if (repeated) continue;
            big.reserve(tuple.size() + 1);
            for (std::size_t j = 0; j < tuple.size(); ++j) {
                if (j == pos) big.push_back(mu);
                big.push_back(tuple[j]);
            }
            if (pos == tuple.size()) big.push_back(mu);
            const Cochain<T>& src = x[lv.piece_index(q, big)];
            const T& v = src.values[*src.cx->index_of(s)];
            if (pos % 2 == 0) out[t].values[r] += v;
            else out[t].values[r] -= v;
        }
    }
    return out;
}

// The q = 0 case of the contraction: a global cochain on the base.
template <typename T>
Cochain<T> cech_h_to_global(const CechLevels& lv, const CechCochain<T>& x) {
    const int p = x.empty() ? 0 : x.front().degree;
    Cochain<T> out(&lv.cover().base(), p);
    const auto& simps = lv.cover().base().simplices(p);
    for (std::size_t r = 0; r < simps.size(); ++r) {
        std::size_t mu = lv.cover().choice(simps[r]);
        const Cochain<T>& src = x[lv.piece_index(0, {mu})];
        out.values[r] = src.values[*src.cx->index_of(simps[r])];
    }
    return out;
}

template <typename T>
bool cech_is_zero(const CechCochain<T>& x) {
    for (const auto& c : x)
        if (!c.is_zero()) return false;
    return true;
}

template <typename T>
CechCochain<T> cech_add(const CechCochain<T>& a, const CechCochain<T>& b) {
    CechCochain<T> out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + b[i];
    return out;
}

template <typename T>
CechCochain<T> cech_sub(const CechCochain<T>& a, const CechCochain<T>& b) {
    CechCochain<T> out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] - b[i];
    return out;
}

// Simplicial coboundary applied piecewise.
template <typename T>
CechCochain<T> cech_simplicial_d(const CechCochain<T>& x) {
    CechCochain<T> out;
    for (const auto& c : x) out.push_back(coboundary(c));
    return out;
}

}  // namespace cforge

#endif
