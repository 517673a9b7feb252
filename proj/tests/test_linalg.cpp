#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "homcat/matrix.hpp"
#include "oracles.hpp"

using namespace homcat;
using testutil::Rng;

namespace {

Mat<Rat> qmat(std::initializer_list<std::initializer_list<long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    Mat<Rat> m(r, c, Rat());
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (long x : row) m.at(i, j++) = Rat(x);
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("rref identity and zero") {
    Mat<Rat> id = Mat<Rat>::identity(2, Rat());
    auto r = rref(id);
    CHECK(r.mat == id);
    CHECK(r.pivots == std::vector<int>{0, 1});

    Mat<Rat> z(2, 3, Rat());
    auto rz = rref(z);
    CHECK(rz.mat == z);
    CHECK(rz.pivots.empty());
}

TEST_CASE("rref matches hand row reduction") {
    // [[2,4],[1,2]] over Q reduces to [[1,2],[0,0]] with pivot column 0
    auto r = rref(qmat({{2, 4}, {1, 2}}));
    CHECK(r.mat == qmat({{1, 2}, {0, 0}}));
    CHECK(r.pivots == std::vector<int>{0});
}

TEST_CASE("kernel basis: injective, zero, and F_2 enumeration oracle") {
    CHECK(kernel_basis(Mat<Rat>::identity(3, Rat())).cols() == 0);

    Mat<Rat> z(1, 3, Rat());
    CHECK(kernel_basis(z).cols() == 3);

    // [[1,1]] over F_2: kernel = span{(1,1)}; oracle enumerates all 4 vectors
    Fp proto(0, 2);
    Mat<Fp> m(1, 2, proto);
    m.at(0, 0) = Fp(1, 2);
    m.at(0, 1) = Fp(1, 2);
    Mat<Fp> k = kernel_basis(m);
    CHECK(k.cols() == 1);
    auto all = oracles::kernel_by_enumeration(m, 2);
    CHECK(all.size() == 2);  // zero vector and (1,1)
    bool found = false;
    for (const auto& v : all) found = found || (v[0].is_one() && v[1].is_one());
    CHECK(found);
}

TEST_CASE("solve: identity, inconsistent, Cramer oracle") {
    Mat<Rat> b = qmat({{7}, {-3}});
    auto x = solve(Mat<Rat>::identity(2, Rat()), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    Mat<Rat> zero(2, 2, Rat());
    CHECK_FALSE(solve(zero, b).has_value());

    Mat<Rat> a = qmat({{1, 2}, {3, 4}});
    Mat<Rat> rhs = qmat({{5}, {6}});
    auto sol = solve(a, rhs);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == rhs);
    auto oracle = oracles::cramer_solve(a, rhs);
    REQUIRE(oracle.has_value());
    CHECK(*sol == *oracle);
    CHECK(solve(a, rhs).has_value());

    CHECK_THROWS_AS(solve(a, qmat({{1}})), Error);
}

TEST_CASE("rref idempotence and rank-nullity over Q and F_p") {
    Rng rng(12345);
    for (int trial = 0; trial < 25; ++trial) {
        int rows = static_cast<int>(rng.pick(1, 6));
        int cols = static_cast<int>(rng.pick(1, 6));
        Mat<Rat> m = testutil::random_matrix(rng, rows, cols, Rat());
        auto r = rref(m);
        auto r2 = rref(r.mat);
        CHECK(r2.mat == r.mat);
        CHECK(r2.pivots == r.pivots);
        CHECK(rank(m) + kernel_basis(m).cols() == cols);
        // pivots strictly increasing
        for (size_t i = 1; i < r.pivots.size(); ++i) CHECK(r.pivots[i - 1] < r.pivots[i]);
        // row space preserved
        CHECK(row_space(m).basis == row_space(r.mat).basis);
        // m * kernel = 0
        Mat<Rat> k = kernel_basis(m);
        CHECK((m * k).is_zero());
    }
    Fp proto(0, 5);
    for (int trial = 0; trial < 25; ++trial) {
        int rows = static_cast<int>(rng.pick(1, 6));
        int cols = static_cast<int>(rng.pick(1, 6));
        Mat<Fp> m = testutil::random_matrix(rng, rows, cols, proto);
        auto r = rref(m);
        CHECK(rref(r.mat).mat == r.mat);
        CHECK(rank(m) + kernel_basis(m).cols() == cols);
        CHECK((m * kernel_basis(m)).is_zero());
    }
}

TEST_CASE("solve reproduces rhs whenever it returns") {
    Rng rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        int n = static_cast<int>(rng.pick(1, 5));
        int c = static_cast<int>(rng.pick(1, 3));
        Mat<Rat> a = testutil::random_matrix(rng, n, n, Rat());
        Mat<Rat> b = testutil::random_matrix(rng, n, c, Rat());
        auto x = solve(a, b);
        if (x) CHECK(a * *x == b);
        auto oracle = oracles::cramer_solve(a, b);
        if (oracle) {
            REQUIRE(x.has_value());
            CHECK(a * *x == b);
        }
    }
}

TEST_CASE("canonical entries make equality exact") {
    // 2/4 and 1/2 must be the same stored value
    Rat a(2, 4), b(1, 2);
    CHECK(a == b);
    Fp x(12, 7), y(5, 7);
    CHECK(x == y);
    CHECK_THROWS_AS(Fp(1, 7) + Fp(1, 5), Error);
}

TEST_CASE("row space utilities") {
    Mat<Rat> m = qmat({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}});
    RowSpace<Rat> s = row_space(m);
    CHECK(s.dim() == 2);
    CHECK(contains_row(s, std::vector<Rat>{Rat(1), Rat(2), Rat(0)}));
    CHECK_FALSE(contains_row(s, std::vector<Rat>{Rat(0), Rat(1), Rat(0)}));
    std::vector<Rat> v{Rat(3), Rat(6), Rat(2)};
    auto coords = coords_in(s, v);
    // reconstruct
    std::vector<Rat> back(3, Rat());
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < 3; ++j) back[j] = back[j] + coords[i] * s.basis.at(i, j);
    CHECK(back == v);
}
