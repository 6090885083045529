#include "doctest.h"

#include "cforge/abelian.hpp"
#include "cforge/fixtures.hpp"

using namespace cforge;

namespace {

IntMatrix scalar(long v) {
    IntMatrix m(1, 1);
    m(0, 0) = v;
    return m;
}

FgAbelianGroup simplicial_h(const SimplicialComplex& x, int k) {
    IntMatrix d_in = (k >= 1) ? x.coboundary_matrix(k - 1) : IntMatrix(x.count(0), 0);
    IntMatrix d_out = (k <= x.dim()) ? x.coboundary_matrix(k) : IntMatrix(0, x.count(k));
    return CohomologyPresentation(d_in, d_out).group();
}

// Rank-based oracle for free parts: Betti_k = dim ker - rank(d_in),
// computed with a naive fraction-free row reduction written here.
std::size_t rat_rank(const IntMatrix& a) {
    RatMatrix m = to_rational(a);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t p = rank;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, col) == 0) continue;
            Rat f = m(i, col) / m(rank, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("degenerate pairs") {
    // d_in = 0, d_out = (x2) on Z: kernel of x2 is 0
    CohomologyPresentation h(IntMatrix(1, 0), scalar(2));
    CHECK(h.group().is_trivial());

    // d_in = (x2), d_out = 0 gives Z/2
    CohomologyPresentation h2(scalar(2), IntMatrix(0, 1));
    CHECK(h2.group().free_rank == 0);
    REQUIRE(h2.group().torsion.size() == 1);
    CHECK(h2.group().torsion[0] == 2);
    CHECK(h2.group().to_string() == "Z/2");
}

TEST_CASE("invalid complex rejected") {
    CHECK_THROWS(CohomologyPresentation(scalar(1), scalar(1)));
}

TEST_CASE("circle H^1 = Z via independent row-reduction oracle") {
    auto x = fixtures::circle3();
    auto g = simplicial_h(x, 1);
    // oracle: Betti_1 = 3 - rank(d0) - rank(d1); no torsion possible in top degree of a graph closure
    std::size_t r0 = rat_rank(x.coboundary_matrix(0));
    CHECK(g.free_rank == x.count(1) - r0 - rat_rank(x.coboundary_matrix(1)));
    CHECK(g == FgAbelianGroup{1, {}});
}

TEST_CASE("fixture cohomology matches known answers") {
    CHECK(simplicial_h(fixtures::point(), 0).to_string() == "Z");
    CHECK(simplicial_h(fixtures::sphere2(), 2).to_string() == "Z");
    CHECK(simplicial_h(fixtures::sphere2(), 1).to_string() == "0");
    CHECK(simplicial_h(fixtures::sphere3(), 3).to_string() == "Z");
    CHECK(simplicial_h(fixtures::sphere3(), 2).to_string() == "0");
    CHECK(simplicial_h(fixtures::rp2_6(), 1).to_string() == "0");
    CHECK(simplicial_h(fixtures::rp2_6(), 2).to_string() == "Z/2");
    CHECK(simplicial_h(fixtures::torus7(), 1).to_string() == "Z^2");
    CHECK(simplicial_h(fixtures::torus7(), 2).to_string() == "Z");
    CHECK(simplicial_h(fixtures::icosahedron(), 0).to_string() == "Z");
    CHECK(simplicial_h(fixtures::icosahedron(), 1).to_string() == "0");
    CHECK(simplicial_h(fixtures::icosahedron(), 2).to_string() == "Z");
}

TEST_CASE("class coordinates and generators") {
    auto x = fixtures::torus7();
    CohomologyPresentation h1(x.coboundary_matrix(0), x.coboundary_matrix(1));
    REQUIRE(h1.group().free_rank == 2);
    REQUIRE(h1.generator_count() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        auto gen = h1.generator(i);
        CHECK(h1.is_cocycle(gen));
        auto cc = h1.class_coords(gen);
        CHECK(cc.free_part[i] == 1);
        CHECK(cc.free_part[1 - i] == 0);
        CHECK_FALSE(h1.is_coboundary(gen));
    }
    // coboundaries map to zero coordinates and admit preimages
    IntCochain f(&x, 0);
    f.values[3] = 7;
    f.values[5] = -2;
    auto z = x.coboundary_matrix(0).apply(f.values);
    CHECK(h1.is_coboundary(z));
    auto pre = h1.coboundary_preimage(z);
    REQUIRE(pre.has_value());
    CHECK(x.coboundary_matrix(0).apply(*pre) == z);
}

TEST_CASE("torsion class arithmetic on rp2") {
    auto x = fixtures::rp2_6();
    CohomologyPresentation h2(x.coboundary_matrix(1), IntMatrix(0, x.count(2)));
    REQUIRE(h2.group().torsion.size() == 1);
    auto gen = h2.generator(0);
    auto cc = h2.class_coords(gen);
    CHECK(cc.torsion[0] == 1);
    // twice the generator is a coboundary
    std::vector<Int> twice(gen.size());
    for (std::size_t i = 0; i < gen.size(); ++i) twice[i] = 2 * gen[i];
    CHECK(h2.is_coboundary(twice));
}
