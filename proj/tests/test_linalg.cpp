#include "doctest.h"
#include "lq/linalg.hpp"
#include "naive_oracles.hpp"

using namespace lq;

TEST_CASE("determinant and inverse are exact") {
    Mat m = Mat::from_rows({{2, 1}, {7, 4}});
    CHECK(m.det() == Rat(1));
    Mat inv = m.inverse();
    CHECK(inv * m == Mat::identity(2));
    CHECK(m * inv == Mat::identity(2));

    Mat singular = Mat::from_rows({{1, 2}, {2, 4}});
    CHECK(singular.det() == Rat(0));
    CHECK_FALSE(singular.invertible());
    CHECK_THROWS_AS(singular.inverse(), std::domain_error);
}

TEST_CASE("random inverses round trip") {
    naive::RatGen gen(7);
    int done = 0;
    while (done < 10) {
        Mat m = gen.mat(4, 4);
        if (!m.invertible()) continue;
        CHECK(m * m.inverse() == Mat::identity(4));
        ++done;
    }
}

TEST_CASE("solve handles inconsistent and underdetermined systems") {
    Mat m = Mat::from_rows({{1, 2}, {2, 4}});
    CHECK_FALSE(m.solve({Rat(1), Rat(3)}).has_value());
    auto x = m.solve({Rat(1), Rat(2)});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == Vec{Rat(1), Rat(2)});
}

TEST_CASE("kernel basis spans the null space") {
    Mat m = Mat::from_rows({{1, 2, 3}, {2, 4, 6}});
    auto kernel = m.kernel_basis();
    CHECK(kernel.size() == 2);
    for (const Vec& v : kernel) CHECK(is_zero(m.apply(v)));
    CHECK(m.pivot_columns() == std::vector<int>{0});
}

TEST_CASE("form symmetry is computed, not declared") {
    CHECK(BilinearForm(Mat::from_rows({{0, 1}, {-1, 0}})).symmetry() == Symmetry::skew);
    CHECK(BilinearForm(Mat::from_rows({{2, 1}, {1, 0}})).symmetry() == Symmetry::symmetric);
    CHECK(BilinearForm(Mat::from_rows({{1, 1}, {0, 1}})).symmetry() == Symmetry::none);
    BilinearForm zero{Mat(2, 2)};
    CHECK(zero.is_symmetric());
    CHECK(zero.is_skew());
    CHECK_FALSE(zero.nondegenerate());
}

TEST_CASE("form evaluation matches the gram matrix") {
    BilinearForm B(Mat::from_rows({{0, 1}, {-1, 0}}));
    CHECK(B.eval({Rat(1), Rat(0)}, {Rat(0), Rat(1)}) == Rat(1));
    CHECK(B.eval({Rat(0), Rat(1)}, {Rat(1), Rat(0)}) == Rat(-1));
    CHECK(B.eval({Rat(2), Rat(3)}, {Rat(5), Rat(7)}) == Rat(2 * 7 - 3 * 5));
}
