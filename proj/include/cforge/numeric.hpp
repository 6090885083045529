#ifndef CFORGE_NUMERIC_HPP
#define CFORGE_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cforge {

// Exact arithmetic everywhere.  No floating point appears anywhere in
// this library; torsion computations are only correct over Z and Q.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Floor division quotient, defined for any nonzero divisor.
inline Int int_fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Nearest-quotient division: remainder has absolute value <= |b|/2.
// Keeps entry growth down during Smith elimination.
inline Int int_ndiv(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * r > abs(b)) q += (b > 0) ? 1 : -1;
    return q;
}

inline Int rat_floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

// Fractional part in [0, 1).
inline Rat rat_frac(const Rat& x) {
    Rat f = x - Rat(rat_floor(x));
    f.canonicalize();
    return f;
}

inline bool rat_is_integer(const Rat& x) { return x.get_den() == 1; }

// A rational reduced mod 1; the exact model of an S^1 = Q/Z value.
struct QmodZ {
    Rat v;  // representative in [0,1)

    QmodZ() : v(0) {}
    explicit QmodZ(const Rat& r) : v(rat_frac(r)) {}

    QmodZ operator+(const QmodZ& o) const { return QmodZ(v + o.v); }
    QmodZ operator-(const QmodZ& o) const { return QmodZ(v - o.v); }
    QmodZ operator-() const { return QmodZ(-v); }
    QmodZ& operator+=(const QmodZ& o) { v = rat_frac(v + o.v); return *this; }
    QmodZ& operator-=(const QmodZ& o) { v = rat_frac(v - o.v); return *this; }
    QmodZ operator*(const Int& n) const { return QmodZ(v * Rat(n)); }
    bool operator==(const QmodZ& o) const { return v == o.v; }
    bool operator!=(const QmodZ& o) const { return v != o.v; }
    bool is_zero() const { return v == 0; }
};

inline QmodZ operator*(const Int& n, const QmodZ& x) { return x * n; }

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Deterministic PRNG (split-mix style).  std::mt19937 would do, but the
// distributions on top of it are not reproducible across standard
// libraries, and seeds are part of the report contract.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

}  // namespace cforge

#endif
