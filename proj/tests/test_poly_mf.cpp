#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homcat/mf.hpp"
#include "homcat/resolution.hpp"
#include "oracles.hpp"

using namespace homcat;

namespace {

Poly<Rat> qpoly(const std::string& s) { return parse_poly(s, Rat()); }

MatrixFactorization<Rat> mf1x1(const std::string& phi, const std::string& psi,
                               const std::string& f) {
    PolyMat<Rat> p(1, 1, Rat()), q(1, 1, Rat());
    p.at(0, 0) = qpoly(phi);
    q.at(0, 0) = qpoly(psi);
    return make_mf(qpoly(f), p, q);
}

}  // namespace

TEST_CASE("polynomial parsing grammar") {
    CHECK(qpoly("x^3 + 2*x + 1").str() == "x^3 + 2*x + 1");
    CHECK(qpoly("1/2*x^2 - 3").coeff(2) == Rat(1, 2));
    CHECK(qpoly("1/2*x^2 - 3").coeff(0) == Rat(-3));
    CHECK(qpoly("x").degree() == 1);
    CHECK(qpoly("-x + x").is_zero());
    CHECK(qpoly("7").degree() == 0);
    CHECK_THROWS_AS(qpoly("x^"), Error);
    CHECK_THROWS_AS(qpoly("2*"), Error);
    CHECK_THROWS_AS(qpoly("x + + x"), Error);
    CHECK_THROWS_AS(qpoly("1/0"), Error);

    Fp p5(0, 5);
    Poly<Fp> f = parse_poly("x^2 + 7", p5);
    CHECK(f.coeff(0) == Fp(2, 5));
}

TEST_CASE("polynomial division and gcd") {
    Poly<Rat> f = qpoly("x^3 - 1");
    Poly<Rat> g = qpoly("x - 1");
    auto [q, r] = f.divmod(g);
    CHECK(r.is_zero());
    CHECK(q == qpoly("x^2 + x + 1"));
    CHECK(poly_gcd(f, qpoly("x^2 - 1")) == qpoly("x - 1"));
    auto eg = poly_ext_gcd(qpoly("x^2"), qpoly("x + 1"));
    CHECK(eg.g.degree() == 0);
    CHECK(eg.s * qpoly("x^2") + eg.t * qpoly("x + 1") == eg.g);
}

TEST_CASE("mf_check examples") {
    PolyMat<Rat> x(1, 1, Rat()), x2(1, 1, Rat()), one(1, 1, Rat()), f31(1, 1, Rat());
    x.at(0, 0) = qpoly("x");
    x2.at(0, 0) = qpoly("x^2");
    one.at(0, 0) = qpoly("1");
    f31.at(0, 0) = qpoly("x^3 + 1");
    CHECK(mf_check(x, x, qpoly("x^2")));
    CHECK(mf_check(one, f31, qpoly("x^3 + 1")));
    CHECK_FALSE(mf_check(x, x, qpoly("x^3")));
    PolyMat<Rat> bad(1, 2, Rat());
    CHECK_THROWS_AS(mf_check(bad, x, qpoly("x^2")), Error);
}

TEST_CASE("mf_cokernel dimensions") {
    // (1, f): unit phi gives the zero module
    CHECK(mf_cokernel(mf1x1("1", "x^2", "x^2")).dim == 0);
    // (x, x) over x^2: the 1-dimensional module k
    CHECK(mf_cokernel(mf1x1("x", "x", "x^2")).dim == 1);
    // (x, x^2) over x^3: cokernel of multiplication by x on k[x]/(x^3) is k
    CHECK(mf_cokernel(mf1x1("x", "x^2", "x^3")).dim == 1);
    // (x^2, x) over x^3 has a 2-dimensional cokernel
    CHECK(mf_cokernel(mf1x1("x^2", "x", "x^3")).dim == 2);
}

TEST_CASE("swap involution is the identity on the nose") {
    auto mf = mf1x1("x", "x^2", "x^3");
    auto twice = mf_syzygy(mf_syzygy(mf));
    CHECK(twice.phi == mf.phi);
    CHECK(twice.psi == mf.psi);
    CHECK(mf_syzygy(mf1x1("1", "x^2", "x^2")).phi.at(0, 0) == qpoly("x^2"));
}

TEST_CASE("mf_syzygy matches the module-level syzygy (projective cover oracle)") {
    // oracle: coker(x, x^2) over k[x]/(x^3); its syzygy via the minimal cover
    // must agree with coker of the swapped factorization
    auto mf = mf1x1("x", "x^2", "x^3");
    AlgebraPtr<Rat> ring = ring_algebra(mf.f);
    FdModule<Rat> coker = mf_cokernel(mf, ring);
    FdModule<Rat> omega = syzygy(coker).mod;
    FdModule<Rat> swapped = mf_cokernel(mf_syzygy(mf), ring);
    CHECK(omega.dim == swapped.dim);
    CHECK(is_isomorphic(omega, swapped));

    // and the stable inverse direction: syzygy of the cosyzygy returns the class
    FdModule<Rat> back = mf_cokernel(mf_syzygy(mf_cosyzygy(mf)), ring);
    CHECK(stably_isomorphic(back, coker));
}

TEST_CASE("cosyzygy of (f,1) is (1,f): stably the zero object") {
    auto mf = mf1x1("x^2", "1", "x^2");
    auto co = mf_cosyzygy(mf);
    CHECK(co.phi.at(0, 0) == qpoly("1"));
    CHECK(mf_cokernel(co).dim == 0);
}

TEST_CASE("mf_indecomposables") {
    // x^2: exactly one indecomposable, cokernel k
    auto l2 = mf_indecomposables(qpoly("x^2"));
    REQUIRE(l2.size() == 1);
    CHECK(mf_cokernel(l2[0]).dim == 1);

    // x^3: two entries with cokernel dimensions {1, 2}
    auto l3 = mf_indecomposables(qpoly("x^3"));
    REQUIRE(l3.size() == 2);
    std::vector<int> dims;
    for (const auto& mf : l3) dims.push_back(mf_cokernel(mf).dim);
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<int>{1, 2});

    // x: regular ring, empty stable category
    CHECK(mf_indecomposables(qpoly("x")).empty());

    // shifted root: (x-1)^2 is supported
    auto shifted = mf_indecomposables(qpoly("x^2 - 2*x + 1"));
    CHECK(shifted.size() == 1);

    // not a power of a linear form
    CHECK_THROWS_AS(mf_indecomposables(qpoly("x^2 + 1")), Error);
    CHECK_THROWS_AS(mf_indecomposables(qpoly("x^2 - x")), Error);

    // over F_5 with p | n the shift detection needs the scan path
    Fp p5(0, 5);
    Poly<Fp> f5 = parse_poly("x^5 + 4", p5);  // equals (x - 1)^5 mod 5? check: (x+4)^5 = x^5 + 4^5 = x^5 + 4 mod 5
    auto l5 = mf_indecomposables(f5);
    CHECK(l5.size() == 4);
}

TEST_CASE("stable hom dimensions agree with the polynomial homotopy oracle") {
    // production route: fd-core stable homs on cokernels
    for (const char* ftext : {"x^2", "x^3", "x^4"}) {
        Poly<Rat> f = qpoly(ftext);
        AlgebraPtr<Rat> ring = ring_algebra(f);
        auto mfs = mf_indecomposables(f, ring);
        std::vector<FdModule<Rat>> cokers;
        for (const auto& mf : mfs) cokers.push_back(mf_cokernel(mf, ring));
        for (size_t i = 0; i < mfs.size(); ++i)
            for (size_t j = 0; j < mfs.size(); ++j) {
                int fd = stable_hom_dim(cokers[i], cokers[j]);
                int o2 = oracles::mf_stable_hom_dim_oracle(mfs[i], mfs[j], 2);
                int o3 = oracles::mf_stable_hom_dim_oracle(mfs[i], mfs[j], 3);
                CAPTURE(ftext);
                CAPTURE(i);
                CAPTURE(j);
                CHECK(fd == o2);
                CHECK(o2 == o3);
            }
    }
}

TEST_CASE("stable hom dimension is invariant under the syzygy shift") {
    Poly<Rat> f = qpoly("x^4");
    AlgebraPtr<Rat> ring = ring_algebra(f);
    auto mfs = mf_indecomposables(f, ring);
    for (size_t i = 0; i < mfs.size(); ++i)
        for (size_t j = 0; j < mfs.size(); ++j) {
            int before = stable_hom_dim(mf_cokernel(mfs[i], ring), mf_cokernel(mfs[j], ring));
            int after = stable_hom_dim(mf_cokernel(mf_syzygy(mfs[i]), ring),
                                       mf_cokernel(mf_syzygy(mfs[j]), ring));
            CHECK(before == after);
        }
}

TEST_CASE("expected stable hom table for x^n is min(i,j,n-i,n-j)") {
    // independent arithmetic check of the table feeding the endomorphism algebra
    for (int n : {2, 3, 4, 5}) {
        Poly<Rat> f = Poly<Rat>::monomial(n, Rat(1));
        AlgebraPtr<Rat> ring = ring_algebra(f);
        auto mfs = mf_indecomposables(f, ring);
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) {
                int expected = std::min(std::min(i, j), std::min(n - i, n - j));
                int got = stable_hom_dim(mf_cokernel(mfs[i - 1], ring), mf_cokernel(mfs[j - 1], ring));
                CAPTURE(n);
                CAPTURE(i);
                CAPTURE(j);
                CHECK(got == expected);
            }
    }
}
