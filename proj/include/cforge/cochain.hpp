#ifndef CFORGE_COCHAIN_HPP
#define CFORGE_COCHAIN_HPP

#include <stdexcept>
#include <vector>

#include "cforge/simplicial.hpp"

namespace cforge {

// A degree-k cochain on a fixed complex, one value per k-simplex in the
// complex's canonical simplex order.  T is Int, Rat or QmodZ.
template <typename T>
struct Cochain {
    const SimplicialComplex* cx = nullptr;
    int degree = 0;
    std::vector<T> values;

    Cochain() = default;
    Cochain(const SimplicialComplex* c, int k)
        : cx(c), degree(k), values(c->count(k), T()) {}

    static Cochain zero(const SimplicialComplex* c, int k) { return Cochain(c, k); }

    T& at(const Simplex& s) {
        auto idx = cx->index_of(s);
        if (!idx || static_cast<int>(s.size()) - 1 != degree)
            throw std::invalid_argument("simplex not of cochain degree");
        return values[*idx];
    }
    const T& at(const Simplex& s) const {
        return const_cast<Cochain*>(this)->at(s);
    }

    bool is_zero() const {
        for (const T& v : values)
            if (!(v == T())) return false;
        return true;
    }

    Cochain operator+(const Cochain& o) const {
        check_parallel(o);
        Cochain r = *this;
        for (std::size_t i = 0; i < values.size(); ++i) r.values[i] = values[i] + o.values[i];
        return r;
    }
    Cochain operator-(const Cochain& o) const {
        check_parallel(o);
        Cochain r = *this;
        for (std::size_t i = 0; i < values.size(); ++i) r.values[i] = values[i] - o.values[i];
        return r;
    }
    Cochain operator-() const {
        Cochain r = *this;
        for (std::size_t i = 0; i < values.size(); ++i) r.values[i] = -values[i];
        return r;
    }
    bool operator==(const Cochain& o) const {
        return degree == o.degree && values == o.values;
    }

    void check_parallel(const Cochain& o) const {
        if (degree != o.degree || values.size() != o.values.size())
            throw std::invalid_argument("cochain shape mismatch");
    }
};

using IntCochain = Cochain<Int>;
using RatCochain = Cochain<Rat>;
using ModCochain = Cochain<QmodZ>;

// (dx)(s) = sum_i (-1)^i x(s minus i-th vertex).
template <typename T>
Cochain<T> coboundary(const Cochain<T>& x) {
    Cochain<T> out(x.cx, x.degree + 1);
    const auto& tops = x.cx->simplices(x.degree + 1);
    for (std::size_t r = 0; r < tops.size(); ++r) {
        const Simplex& s = tops[r];
        T acc{};
        int sign = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i) face.push_back(s[j]);
            const T& v = x.values[*x.cx->index_of(face)];
            if (sign > 0) acc += v;
            else acc -= v;
            sign = -sign;
        }
        out.values[r] = acc;
    }
    return out;
}

// (f^* x)(s) = sgn * x(f(s)) when the image is nondegenerate of the
// same dimension (sgn the sorting sign), else 0.  The sign is what
// makes pullback commute with d for non-monotone vertex maps.
template <typename T>
Cochain<T> pullback_cochain(const SimplicialMap& f, const Cochain<T>& x) {
    if (x.cx != &f.target())
        throw std::invalid_argument("cochain does not live on the map target");
    Cochain<T> out(&f.source(), x.degree);
    const auto& rows = f.source().simplices(x.degree);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto [img, sign] = f.image(rows[r]);
        if (sign == 0) continue;
        const T& v = x.values[*x.cx->index_of(img)];
        out.values[r] = (sign > 0) ? v : -v;
    }
    return out;
}

// Restriction to a subcomplex sharing the ambient vertex numbering.
template <typename T>
Cochain<T> restrict_cochain(const Cochain<T>& x, const SimplicialComplex* sub) {
    Cochain<T> out(sub, x.degree);
    const auto& rows = sub->simplices(x.degree);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto idx = x.cx->index_of(rows[r]);
        if (!idx) throw std::invalid_argument("restriction target is not a subcomplex");
        out.values[r] = x.values[*idx];
    }
    return out;
}

inline RatCochain to_rational(const IntCochain& x) {
    RatCochain r(x.cx, x.degree);
    for (std::size_t i = 0; i < x.values.size(); ++i) r.values[i] = Rat(x.values[i]);
    return r;
}

inline ModCochain mod_one(const RatCochain& x) {
    ModCochain r(x.cx, x.degree);
    for (std::size_t i = 0; i < x.values.size(); ++i) r.values[i] = QmodZ(x.values[i]);
    return r;
}

inline bool is_integral(const RatCochain& x) {
    for (const Rat& v : x.values)
        if (!rat_is_integer(v)) return false;
    return true;
}

inline IntCochain integral_part(const RatCochain& x) {
    IntCochain r(x.cx, x.degree);
    for (std::size_t i = 0; i < x.values.size(); ++i) {
        if (!rat_is_integer(x.values[i]))
            throw std::invalid_argument("cochain is not integer-valued");
        r.values[i] = x.values[i].get_num();
    }
    return r;
}

}  // namespace cforge

#endif
