#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homcat/catalog.hpp"
#include "homcat/homological.hpp"
#include "oracles.hpp"

using namespace homcat;

namespace {

// k<x,y>/(all paths of length 2): commutative local, radical square zero,
// socle of dimension 2 -- the standard non-Gorenstein artinian example.
AlgebraPtr<Rat> rad_square_zero_two_loops() {
    QuiverPresentation<Rat> q;
    q.proto = Rat();
    q.vertices = {"v"};
    q.arrows = {QuiverArrow{"x", 0, 0}, QuiverArrow{"y", 0, 0}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            q.relations.push_back({{QPath{0, 0, {i, j}}, Rat(1)}});
    q.cap = 6;
    return from_quiver(q);
}

}  // namespace

TEST_CASE("min_resolution: termination, length, periodicity") {
    auto kt2 = dual_numbers(Rat());
    auto arrow = arrow_algebra(Rat());

    // projective modules terminate at length 0
    Resolution<Rat> r0 = min_resolution(regular_module(kt2), 5);
    CHECK(r0.terminated);
    CHECK(r0.pd() == 0);

    // k over the dual numbers: nonterminating with periodicity (0, 1)
    FdModule<Rat> k = simple_modules(kt2)[0];
    Resolution<Rat> rk = min_resolution(k, 5, /*stop_on_periodicity=*/true);
    CHECK_FALSE(rk.terminated);
    REQUIRE(rk.periodicity.has_value());
    CHECK(rk.periodicity->i == 0);
    CHECK(rk.periodicity->j == 1);
    CHECK(verify_periodicity(*rk.periodicity));

    // S1 over the arrow algebra terminates at length 1
    Resolution<Rat> rs = min_resolution(simple_modules(arrow)[0], 5);
    CHECK(rs.terminated);
    CHECK(rs.pd() == 1);

    // differentials compose to zero and the complex is exact at interior spots
    Resolution<Rat> rk6 = min_resolution(k, 6);
    for (int i = 1; i + 1 < rk6.computed_length(); ++i) {
        Mat<Rat> d1 = rk6.differential(i + 1);
        Mat<Rat> d0 = rk6.differential(i);
        CHECK((d1 * d0).is_zero());
        CHECK(rank(d1) + rank(d0) == rk6.covers[i].proj.total_dim());
    }
}

TEST_CASE("ext_dim examples and the bar-resolution oracle") {
    auto kt2 = dual_numbers(Rat());
    auto arrow = arrow_algebra(Rat());
    FdModule<Rat> k = simple_modules(kt2)[0];
    FdModule<Rat> reg = regular_module(kt2);

    // Ext^i(P, N) = 0 for projective P and i > 0
    CHECK(ext_dim(reg, k, 1) == 0);
    CHECK(ext_dim(reg, k, 2) == 0);
    // Ext^0 agrees with Hom
    CHECK(ext_dim(k, k, 0) == 1);
    // Ext^1(k,k) = Ext^2(k,k) = 1 over the dual numbers
    CHECK(ext_dim(k, k, 1) == 1);
    CHECK(ext_dim(k, k, 2) == 1);
    // cap error
    CHECK_THROWS_AS(ext_dim(k, k, 8, 3), Error);

    // independent bar-resolution oracle on every pair of catalog modules
    std::vector<AlgebraPtr<Rat>> algebras = {kt2, arrow, product_kxk(Rat())};
    for (const auto& a : algebras) {
        std::vector<FdModule<Rat>> mods = simple_modules(a);
        mods.push_back(regular_module(a));
        for (const auto& m : mods)
            for (const auto& n : mods)
                for (int i = 0; i <= 4; ++i) {
                    CAPTURE(a->dim);
                    CAPTURE(m.dim);
                    CAPTURE(n.dim);
                    CAPTURE(i);
                    CHECK(ext_dim(m, n, i) == oracles::bar_ext_dim(m, n, i));
                }
    }
}

TEST_CASE("bar complex is a complex") {
    auto kt2 = dual_numbers(Rat());
    FdModule<Rat> k = simple_modules(kt2)[0];
    oracles::BarComplex<Rat> bar(k, k);
    for (int q = 0; q <= 2; ++q) CHECK((bar.delta(q) * bar.delta(q + 1)).is_zero());
}

TEST_CASE("global dimension") {
    CHECK(global_dimension(product_kxk(Rat()), 10).kind == DimKind::Finite);
    CHECK(global_dimension(product_kxk(Rat()), 10).value == 0);

    GDimReport<Rat> g = global_dimension(dual_numbers(Rat()), 10);
    CHECK(g.kind == DimKind::InfiniteCertified);
    REQUIRE(g.witness.has_value());
    CHECK(g.witness->i == 0);
    CHECK(g.witness->j == 1);
    CHECK(verify_periodicity(*g.witness));

    GDimReport<Rat> ga = global_dimension(arrow_algebra(Rat()), 10);
    CHECK(ga.kind == DimKind::Finite);
    CHECK(ga.value == 1);

    // non-Gorenstein rad-square-zero: no certificate either way at the cap
    GDimReport<Rat> gn = global_dimension(rad_square_zero_two_loops(), 6);
    CHECK(gn.kind == DimKind::AtLeastCap);
}

TEST_CASE("injective dimensions and Iwanaga-Gorenstein levels") {
    auto kt2 = dual_numbers(Rat());
    auto kxk = product_kxk(Rat());
    auto arrow = arrow_algebra(Rat());

    auto [l0, r0] = injective_dimension_regular(kxk, 10);
    CHECK(l0.value == 0);
    CHECK(r0.value == 0);
    CHECK(iwanaga_gorenstein(kxk, 10) == std::optional<int>(0));

    auto [l1, r1] = injective_dimension_regular(kt2, 10);
    CHECK(l1.value == 0);
    CHECK(r1.value == 0);
    CHECK(iwanaga_gorenstein(kt2, 10) == std::optional<int>(0));

    auto [l2, r2] = injective_dimension_regular(arrow, 10);
    CHECK(l2.finite());
    CHECK(l2.value == 1);
    CHECK(r2.finite());
    CHECK(r2.value == 1);
    CHECK(iwanaga_gorenstein(arrow, 10) == std::optional<int>(1));

    // the non-Gorenstein example stays uncertified
    CHECK_FALSE(iwanaga_gorenstein(rad_square_zero_two_loops(), 6).has_value());
}

TEST_CASE("self-injectivity") {
    CHECK(is_selfinjective(product_kxk(Rat())));
    CHECK(is_selfinjective(dual_numbers(Rat())));
    CHECK_FALSE(is_selfinjective(arrow_algebra(Rat())));
    CHECK_FALSE(is_selfinjective(rad_square_zero_two_loops()));
}

TEST_CASE("Ext-orthogonality of projectives over self-injective algebras") {
    for (auto a : {dual_numbers(Rat()), product_kxk(Rat())}) {
        REQUIRE(is_selfinjective(a));
        FdModule<Rat> reg = regular_module(a);
        for (const auto& s : simple_modules(a))
            for (int i = 1; i <= 5; ++i) CHECK(ext_dim(s, reg, i) == 0);
    }
}

TEST_CASE("Gorenstein projectivity") {
    auto kt2 = dual_numbers(Rat());
    auto arrow = arrow_algebra(Rat());

    // over a self-injective algebra every module is GP (vacuous Ext condition)
    FdModule<Rat> k = simple_modules(kt2)[0];
    GpReport<Rat> rk = is_gorenstein_projective(k, 10);
    CHECK(rk.is_gp);
    CHECK(rk.method == GpMethod::IGCriterion);
    CHECK(rk.level_or_cap == 0);
    REQUIRE(rk.witness.has_value());
    CHECK(rk.witness->verified);
    // the witness window is the 2-periodic complete resolution by Lambda
    for (const auto& t : rk.witness->terms) CHECK(t.dim == 2);

    // S1 over the arrow algebra is not GP: Ext^1(S1, Lambda) != 0
    FdModule<Rat> s1 = simple_modules(arrow)[0];
    GpReport<Rat> rs = is_gorenstein_projective(s1, 10);
    CHECK_FALSE(rs.is_gp);
    CHECK(rs.method == GpMethod::IGCriterion);
    REQUIRE(rs.ext_to_regular.size() == 1);
    CHECK(rs.ext_to_regular[0] == 1);

    // outside certified IG the answer is never "true"
    auto ng = rad_square_zero_two_loops();
    GpReport<Rat> rn = is_gorenstein_projective(simple_modules(ng)[0], 6);
    CHECK_FALSE(rn.is_gp);
    CHECK(rn.method == GpMethod::BoundedExtOnly);
}

TEST_CASE("Gorenstein projective dimension") {
    auto kt2 = dual_numbers(Rat());
    auto arrow = arrow_algebra(Rat());
    // GP module: dimension 0
    CHECK(gp_dimension(simple_modules(kt2)[0], 10) == 0);
    // S1 over the arrow algebra: Omega(S1) projective, so dimension 1
    CHECK(gp_dimension(simple_modules(arrow)[0], 10) == 1);
    // uncertified IG errors
    CHECK_THROWS_AS(gp_dimension(simple_modules(rad_square_zero_two_loops())[0], 6), Error);
}

TEST_CASE("Gorenstein dimension of the module category") {
    CHECK(gorenstein_dimension_category(dual_numbers(Rat()), 10) == 0);
    CHECK(gorenstein_dimension_category(product_kxk(Rat()), 10) == 0);
    CHECK(gorenstein_dimension_category(arrow_algebra(Rat()), 10) == 1);
}

TEST_CASE("IG shadow: Omega^n of every simple is Gorenstein projective") {
    for (auto a : {dual_numbers(Rat()), product_kxk(Rat()), arrow_algebra(Rat())}) {
        std::optional<int> ig = iwanaga_gorenstein(a, 10);
        REQUIRE(ig.has_value());
        for (const auto& s : simple_modules(a)) {
            FdModule<Rat> cur = s;
            for (int t = 0; t < *ig; ++t) cur = syzygy(cur).mod;
            if (cur.dim == 0) continue;
            GpReport<Rat> r = is_gorenstein_projective(cur, 10, false, &ig);
            CHECK(r.is_gp);
        }
    }
}

TEST_CASE("Nakayama detection and indecomposable census") {
    auto kt2 = dual_numbers(Rat());
    auto kxk = product_kxk(Rat());
    auto arrow = arrow_algebra(Rat());

    REQUIRE(is_nakayama(kt2));
    auto ind_kt2 = nakayama_indecomposables(kt2);
    REQUIRE(ind_kt2.size() == 2);  // k and Lambda
    CHECK(ind_kt2[0].mod.dim == 1);
    CHECK(ind_kt2[1].mod.dim == 2);

    auto ind_kxk = nakayama_indecomposables(kxk);
    CHECK(ind_kxk.size() == 2);  // the two simples

    auto ind_arrow = nakayama_indecomposables(arrow);
    CHECK(ind_arrow.size() == 3);  // S1, S2, P1

    // the rad-square-zero two-loop algebra is not serial
    CHECK_FALSE(is_nakayama(rad_square_zero_two_loops()));
    CHECK_THROWS_AS(nakayama_indecomposables(rad_square_zero_two_loops()), Error);
}

TEST_CASE("GP census") {
    CHECK(gp_census(product_kxk(Rat()), 10).empty());
    auto census_kt2 = gp_census(dual_numbers(Rat()), 10);
    REQUIRE(census_kt2.size() == 1);
    CHECK(census_kt2[0].mod.dim == 1);
    CHECK(gp_census(arrow_algebra(Rat()), 10).empty());
}

TEST_CASE("singularity triviality") {
    CHECK(singularity_trivial(field_algebra(Rat()), 10).status == DsgStatus::Trivial);
    CHECK(singularity_trivial(product_kxk(Rat()), 10).status == DsgStatus::Trivial);
    CHECK(singularity_trivial(arrow_algebra(Rat()), 10).status == DsgStatus::Trivial);

    DsgReport<Rat> d = singularity_trivial(dual_numbers(Rat()), 10);
    CHECK(d.status == DsgStatus::Nontrivial);
    REQUIRE(d.witness.has_value());
    CHECK(d.witness->dim == 1);

    CHECK(singularity_trivial(rad_square_zero_two_loops(), 6).status == DsgStatus::UnknownAtCap);
}

TEST_CASE("finite global dimension implies trivial singularity category") {
    for (auto a : {field_algebra(Rat()), product_kxk(Rat()), arrow_algebra(Rat())}) {
        GDimReport<Rat> g = global_dimension(a, 10);
        if (g.finite()) CHECK(singularity_trivial(a, 10).status == DsgStatus::Trivial);
    }
}

TEST_CASE("condition (G_n)") {
    auto kt2 = dual_numbers(Rat());
    auto arrow = arrow_algebra(Rat());

    // X = proj A, n = 0: always true
    std::vector<FdModule<Rat>> projs;
    for (size_t i = 0; i < arrow->idempotents.size(); ++i)
        projs.push_back(slot_module(arrow, static_cast<int>(i)).mod);
    CHECK(check_g_n(projs, arrow, 0, 10).holds);

    // generators {Lambda, k} over the dual numbers, n = 0: true
    std::vector<FdModule<Rat>> gens = {regular_module(kt2), simple_modules(kt2)[0]};
    CHECK(check_g_n(gens, kt2, 0, 10).holds);

    // missing projectives: NotQuasiResolving
    std::vector<FdModule<Rat>> bare = {simple_modules(arrow)[0]};
    try {
        check_g_n(bare, arrow, 0, 10);
        FAIL("expected NotQuasiResolving");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotQuasiResolving);
    }

    // with projectives but a non-GP generator at n=0 the condition fails
    std::vector<FdModule<Rat>> mixed = projs;
    mixed.push_back(simple_modules(arrow)[0]);
    // S1 is not syzygy-closed? Omega(S1) = S2 = projective: fine; but S1 not GP
    GnDiagnostics<Rat> diag = check_g_n(mixed, arrow, 0, 10);
    CHECK_FALSE(diag.holds);
    // ... and it holds at n = 1 (syzygies become projective)
    CHECK(check_g_n(mixed, arrow, 1, 10).holds);
}

TEST_CASE("nonzero Ext certificate replay") {
    // every InfiniteCertified report must carry a replayable witness
    GDimReport<Rat> g = global_dimension(dual_numbers(Rat()), 10);
    REQUIRE(g.witness.has_value());
    PeriodicityWitness<Rat> w = *g.witness;
    CHECK(verify_periodicity(w));
    // tampering with the iso must break the replay
    w.iso.at(0, 0) = Rat(0);
    CHECK_FALSE(verify_periodicity(w));
}
