#include "doctest.h"

#include <functional>

#include "cforge/smith.hpp"

using namespace cforge;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

// Determinant-divisor oracle: the product d_1 ... d_k equals the gcd of
// all k x k minors.  Entirely independent of the elimination code.
Int minor_gcd(const IntMatrix& a, std::size_t k) {
    std::vector<std::size_t> ri(k), ci(k);
    Int g = 0;

    // determinant by cofactor expansion (k <= 8 here)
    std::function<Int(std::vector<std::vector<Int>>&)> det =
        [&](std::vector<std::vector<Int>>& m) -> Int {
        const std::size_t n = m.size();
        if (n == 1) return m[0][0];
        Int acc = 0;
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (m[0][c] != 0) {
                std::vector<std::vector<Int>> sub(n - 1, std::vector<Int>(n - 1));
                for (std::size_t i = 1; i < n; ++i) {
                    std::size_t jj = 0;
                    for (std::size_t j = 0; j < n; ++j) {
                        if (j == c) continue;
                        sub[i - 1][jj++] = m[i][j];
                    }
                }
                Int d = det(sub);
                acc += sign * m[0][c] * d;
            }
            sign = -sign;
        }
        return acc;
    };

    std::function<void(std::size_t, std::size_t)> loop_cols = [&](std::size_t pos,
                                                                  std::size_t start) {
        if (pos == k) {
            std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub[i][j] = a(ri[i], ci[j]);
            g = int_gcd(g, det(sub));
            return;
        }
        for (std::size_t c = start; c < a.cols(); ++c) {
            ci[pos] = c;
            loop_cols(pos + 1, c + 1);
        }
    };
    std::function<void(std::size_t, std::size_t)> loop_rows = [&](std::size_t pos,
                                                                  std::size_t start) {
        if (pos == k) {
            loop_cols(0, 0);
            return;
        }
        for (std::size_t r = start; r < a.rows(); ++r) {
            ri[pos] = r;
            loop_rows(pos + 1, r + 1);
        }
    };
    loop_rows(0, 0);
    return g;
}

std::vector<Int> oracle_invariant_factors(const IntMatrix& a) {
    const std::size_t n = std::min(a.rows(), a.cols());
    std::vector<Int> d(n, Int(0));
    Int prev(1);
    for (std::size_t k = 1; k <= n; ++k) {
        Int dk = minor_gcd(a, k);
        if (dk == 0) break;  // all further divisors vanish
        d[k - 1] = dk / prev;
        prev = dk;
    }
    return d;
}

void check_decomposition(const IntMatrix& a, const SmithDecomposition& snf) {
    CHECK(multiply(multiply(snf.u, a), snf.v) == snf.s);
    CHECK(multiply(snf.u, snf.u_inv) == IntMatrix::identity(a.rows()));
    CHECK(multiply(snf.v, snf.v_inv) == IntMatrix::identity(a.cols()));
    // recomposition U^-1 S V^-1 = A, exactly
    CHECK(multiply(multiply(snf.u_inv, snf.s), snf.v_inv) == a);
    auto d = snf.invariant_factors();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        CHECK(d[i] >= 0);
        if (d[i + 1] != 0) {
            REQUIRE(d[i] != 0);
            CHECK(d[i + 1] % d[i] == 0);
        }
    }
    for (std::size_t i = 0; i < snf.s.rows(); ++i)
        for (std::size_t j = 0; j < snf.s.cols(); ++j)
            if (i != j) CHECK(snf.s(i, j) == 0);
}

}  // namespace

TEST_CASE("diag(2,3) has factors 1,6") {
    auto snf = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    check_decomposition(from_rows({{2, 0}, {0, 3}}), snf);
    CHECK(snf.s(0, 0) == 1);
    CHECK(snf.s(1, 1) == 6);
}

TEST_CASE("zero matrix stays zero") {
    auto snf = smith_normal_form(IntMatrix(2, 2));
    CHECK(snf.s.is_zero());
    CHECK(snf.rank == 0);
}

TEST_CASE("[[2,4],[6,8]] has factors 2,4") {
    IntMatrix a = from_rows({{2, 4}, {6, 8}});
    auto snf = smith_normal_form(a);
    check_decomposition(a, snf);
    CHECK(snf.s(0, 0) == 2);
    CHECK(snf.s(1, 1) == 4);
}

TEST_CASE("random matrices match the determinant-divisor oracle") {
    Rng rng(2024);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t m = 1 + rng.next() % 6;
        std::size_t n = 1 + rng.next() % 6;
        IntMatrix a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.uniform(-9, 9);
        auto snf = smith_normal_form(a);
        check_decomposition(a, snf);
        auto expect = oracle_invariant_factors(a);
        auto got = snf.invariant_factors();
        REQUIRE(expect.size() == got.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expect[i]);
    }
}

TEST_CASE("parallel and serial elimination agree entrywise") {
    Rng rng(7);
    for (int iter = 0; iter < 10; ++iter) {
        IntMatrix a(20, 17);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = rng.uniform(-20, 20);
        auto par = smith_normal_form(a);
        auto ser = serial::smith_normal_form(a);
        CHECK(par.s == ser.s);
        CHECK(par.u == ser.u);
        CHECK(par.v == ser.v);
    }
}

TEST_CASE("integer systems: solvable, obstructed, underdetermined") {
    // A = [2], y = [4]
    auto sol = solve_integer_system(from_rows({{2}}), {Int(4)});
    REQUIRE(sol.has_value());
    CHECK(sol->particular[0] == 2);
    CHECK(sol->kernel_basis.empty());

    // parity obstruction
    CHECK_FALSE(solve_integer_system(from_rows({{2}}), {Int(3)}).has_value());

    // A = [[1,2],[2,4]], y = (1,2)
    IntMatrix a = from_rows({{1, 2}, {2, 4}});
    auto s2 = solve_integer_system(a, {Int(1), Int(2)});
    REQUIRE(s2.has_value());
    auto check = a.apply(s2->particular);
    CHECK(check[0] == 1);
    CHECK(check[1] == 2);
    REQUIRE(s2->kernel_basis.size() == 1);
    auto kv = a.apply(s2->kernel_basis[0]);
    CHECK(kv[0] == 0);
    CHECK(kv[1] == 0);
    CHECK((s2->kernel_basis[0][0] != 0 || s2->kernel_basis[0][1] != 0));
}

TEST_CASE("kernel vectors map to zero and solutions substitute back") {
    Rng rng(99);
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t m = 1 + rng.next() % 5;
        std::size_t n = 1 + rng.next() % 5;
        IntMatrix a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.uniform(-4, 4);
        // build a solvable rhs
        std::vector<Int> x(n);
        for (auto& v : x) v = rng.uniform(-5, 5);
        std::vector<Int> y = a.apply(x);
        auto sol = solve_integer_system(a, y);
        REQUIRE(sol.has_value());
        CHECK(a.apply(sol->particular) == y);
        for (const auto& k : sol->kernel_basis) {
            std::vector<Int> z = a.apply(k);
            for (const Int& v : z) CHECK(v == 0);
        }
    }
}
