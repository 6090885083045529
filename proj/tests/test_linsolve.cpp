#include "doctest.h"

#include <functional>

#include "cforge/linsolve.hpp"

using namespace cforge;

namespace {

MixedMap map_2n_q() {
    // f(n, q) = (2n, q)
    MixedMap f = MixedMap::zero({1, 1}, {1, 1});
    f.zz(0, 0) = 2;
    f.qq(0, 0) = 1;
    return f;
}

// Brute force over an integer box, eliminating the rational unknowns
// exactly per integer choice.  Independent of the solver's phases.
bool brute_solvable(const MixedMap& f, const MixedVec& y, long box) {
    const std::size_t a = f.domain.int_rank;
    std::vector<Int> n(a, Int(0));
    RatRref qq(f.qq);
    std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
        if (pos == a) {
            MixedVec x;
            x.zi = n;
            x.qi.assign(f.domain.rat_dim, Rat(0));
            MixedVec lhs = f.apply(x);
            for (std::size_t i = 0; i < y.zi.size(); ++i)
                if (lhs.zi[i] != y.zi[i]) return false;
            std::vector<Rat> target(y.qi.size());
            for (std::size_t i = 0; i < y.qi.size(); ++i) target[i] = y.qi[i] - lhs.qi[i];
            return qq.solve(target).has_value();
        }
        for (long v = -box; v <= box; ++v) {
            n[pos] = v;
            if (rec(pos + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

}  // namespace

TEST_CASE("rref: solve, kernel, left null space") {
    Rng rng(5);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t m = 1 + rng.next() % 5, n = 1 + rng.next() % 5;
        RatMatrix a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = Rat(rng.uniform(-5, 5), 1 + rng.next() % 3);
        RatRref rr(a);
        // left null rows annihilate a
        const RatMatrix& ln = rr.left_null();
        RatMatrix prod = multiply(ln, a);
        CHECK(prod.is_zero());
        CHECK(ln.rows() + rr.rank() == m);
        // kernel basis maps to zero
        for (const auto& k : rr.kernel_basis()) {
            for (const Rat& v : a.apply(k)) CHECK(v == 0);
        }
        // solvable rhs round-trips
        std::vector<Rat> x(n);
        for (auto& v : x) v = Rat(rng.uniform(-4, 4), 1 + rng.next() % 2);
        auto y = a.apply(x);
        auto sol = rr.solve(y);
        REQUIRE(sol.has_value());
        CHECK(a.apply(*sol) == y);
    }
}

TEST_CASE("mixed solve: spec examples") {
    MixedMap f = map_2n_q();
    MixedSolver solver(f);

    SUBCASE("f(n,q) = (2n, q), y = (4, 1/2)") {
        MixedVec y0;
        y0.zi = {Int(4)};
        y0.qi = {Rat(1, 2)};
        auto x = solver.solve(y0);
        REQUIRE(x.has_value());
        CHECK(x->zi[0] == 2);
        CHECK(x->qi[0] == Rat(1, 2));
    }
    SUBCASE("integer component unsolvable") {
        MixedVec y1;
        y1.zi = {Int(3)};
        y1.qi = {Rat(1)};
        CHECK_FALSE(solver.solve(y1).has_value());
    }
}

TEST_CASE("mixed solve by substitution: f(n,q) = (2n, n+q)") {
    MixedMap f = MixedMap::zero({1, 1}, {1, 1});
    f.zz(0, 0) = 2;
    f.zq(0, 0) = 1;
    f.qq(0, 0) = 1;
    MixedSolver solver(f);
    MixedVec y;
    y.zi = {Int(2)};
    y.qi = {Rat(0)};
    auto x = solver.solve(y);
    REQUIRE(x.has_value());
    CHECK(x->zi[0] == 1);
    CHECK(x->qi[0] == Rat(-1));
}

TEST_CASE("mixed solve agrees with bounded brute force") {
    Rng rng(1234);
    for (int iter = 0; iter < 100; ++iter) {
        // 3 equations, 3 unknowns split between Z and Q
        std::size_t a = 1 + rng.next() % 2;          // integer unknowns
        std::size_t b = 3 - a;                        // rational unknowns
        std::size_t ai = 1 + rng.next() % 2;          // integer equations
        std::size_t bi = 3 - ai;
        MixedMap f = MixedMap::zero({a, b}, {ai, bi});
        for (std::size_t i = 0; i < ai; ++i)
            for (std::size_t j = 0; j < a; ++j) f.zz(i, j) = rng.uniform(-3, 3);
        for (std::size_t i = 0; i < bi; ++i) {
            for (std::size_t j = 0; j < a; ++j) f.zq(i, j) = rng.uniform(-3, 3);
            for (std::size_t j = 0; j < b; ++j) f.qq(i, j) = rng.uniform(-3, 3);
        }
        MixedVec y;
        y.zi.resize(ai);
        y.qi.resize(bi);
        for (auto& v : y.zi) v = rng.uniform(-3, 3);
        for (auto& v : y.qi) v = rng.uniform(-3, 3);

        MixedSolver solver(f);
        auto x = solver.solve(y);
        if (x) {
            MixedVec lhs = f.apply(*x);
            CHECK(lhs.zi == y.zi);
            CHECK(lhs.qi == y.qi);
        } else {
            CHECK_FALSE(brute_solvable(f, y, 25));
        }
    }
}

TEST_CASE("kernel triviality") {
    // injective: (n, q) -> (n, q)
    MixedMap id = MixedMap::zero({1, 1}, {1, 1});
    id.zz(0, 0) = 1;
    id.qq(0, 0) = 1;
    CHECK(MixedSolver(id).kernel_trivial());

    // n -> 2n is injective even though not surjective
    MixedMap dbl = MixedMap::zero({1, 0}, {1, 0});
    dbl.zz(0, 0) = 2;
    CHECK(MixedSolver(dbl).kernel_trivial());

    // (n, q) -> n + q kills (1, -1)
    MixedMap sum = MixedMap::zero({1, 1}, {0, 1});
    sum.zq(0, 0) = 1;
    sum.qq(0, 0) = 1;
    CHECK_FALSE(MixedSolver(sum).kernel_trivial());
}
