#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homcat/catalog.hpp"
#include "homcat/module.hpp"
#include "homcat/resolution.hpp"

using namespace homcat;

namespace {

struct Fixtures {
    AlgebraPtr<Rat> kt2 = dual_numbers(Rat());
    AlgebraPtr<Rat> kxk = product_kxk(Rat());
    AlgebraPtr<Rat> arrow = arrow_algebra(Rat());
};

FdModule<Rat> simple_over(const AlgebraPtr<Rat>& a, int i) { return simple_modules(a)[i]; }

}  // namespace

TEST_CASE("hom_space basics") {
    Fixtures fx;
    FdModule<Rat> reg = regular_module(fx.kt2);
    FdModule<Rat> k = simple_over(fx.kt2, 0);
    // Hom(Lambda, M) has dimension dim M
    CHECK(hom_space(reg, k).size() == 1);
    CHECK(hom_space(reg, reg).size() == 2);
    // Hom between the two simples of k x k vanishes
    CHECK(hom_space(simple_over(fx.kxk, 0), simple_over(fx.kxk, 1)).empty());
    // Hom_{kt2}(k, Lambda) is the socle inclusion, dimension 1
    CHECK(hom_space(k, reg).size() == 1);
    // maps commute with the action
    for (const auto& f : hom_space(k, reg)) CHECK(is_module_map(k, reg, f));
}

TEST_CASE("stable homs") {
    Fixtures fx;
    FdModule<Rat> reg = regular_module(fx.kt2);
    FdModule<Rat> k = simple_over(fx.kt2, 0);
    // projective source: everything factors through a projective
    CHECK(stable_hom_dim(reg, k) == 0);
    CHECK(stable_hom_dim(reg, reg) == 0);
    // stable End of k over the dual numbers is 1-dimensional
    CHECK(stable_hom_dim(k, k) == 1);
    // ... and no map k -> k factors through Lambda
    StableHom<Rat> sh = stable_hom(k, k);
    CHECK(sh.proj_factoring.dim() == 0);
    CHECK(sh.hom_basis.size() == 1);
}

TEST_CASE("projective covers") {
    Fixtures fx;
    FdModule<Rat> reg = regular_module(fx.kt2);
    Cover<Rat> c = projective_cover(reg);
    CHECK(c.proj.total_dim() == reg.dim);
    CHECK(row_kernel(c.surj).rows() == 0);

    FdModule<Rat> k = simple_over(fx.kt2, 0);
    Cover<Rat> ck = projective_cover(k);
    CHECK(ck.proj.total_dim() == 2);  // P(k) = Lambda
    CHECK(ck.proj.slots.size() == 1);

    // simples over k x k are projective
    Cover<Rat> cs = projective_cover(simple_over(fx.kxk, 0));
    CHECK(cs.proj.total_dim() == 1);

    // minimality: kernel inside rad P (checked internally; exercise it here too)
    Mat<Rat> ker = row_kernel(ck.surj);
    CHECK(contains_rows(radical_rows(ck.proj.mod), ker));
}

TEST_CASE("syzygies") {
    Fixtures fx;
    // Omega(Lambda) = 0
    CHECK(syzygy(regular_module(fx.kt2)).mod.dim == 0);
    // Omega(k) = k over the dual numbers
    FdModule<Rat> k = simple_over(fx.kt2, 0);
    FdModule<Rat> om = syzygy(k).mod;
    CHECK(om.dim == 1);
    CHECK(is_isomorphic(om, k));
    // arrow algebra: Omega(S1) = S2 which is projective
    FdModule<Rat> s1 = simple_over(fx.arrow, 0);
    FdModule<Rat> oms1 = syzygy(s1).mod;
    CHECK(oms1.dim == 1);
    CHECK(is_isomorphic(oms1, simple_over(fx.arrow, 1)));
    CHECK(is_projective(oms1));
}

TEST_CASE("cosyzygies via the duality route") {
    Fixtures fx;
    // projective over a self-injective algebra has zero cosyzygy
    CHECK(cosyzygy(regular_module(fx.kt2)).dim == 0);
    // Omega^{-1}(k) = k over the dual numbers
    FdModule<Rat> k = simple_over(fx.kt2, 0);
    FdModule<Rat> co = cosyzygy(k);
    CHECK(co.dim == 1);
    CHECK(is_isomorphic(co, k));
    // arrow algebra: the duality route sends S2 to S1
    FdModule<Rat> s2 = simple_over(fx.arrow, 1);
    FdModule<Rat> cos2 = cosyzygy(s2);
    CHECK(cos2.dim == 1);
    CHECK(is_isomorphic(cos2, simple_over(fx.arrow, 0)));
}

TEST_CASE("cosyzygy inverts syzygy stably over self-injective algebras") {
    Fixtures fx;
    for (int i = 0; i < 1; ++i) {
        FdModule<Rat> k = simple_over(fx.kt2, i);
        FdModule<Rat> roundtrip = cosyzygy(syzygy(k).mod);
        CHECK(stably_isomorphic(roundtrip, k));
    }
}

TEST_CASE("duality") {
    Fixtures fx;
    FdModule<Rat> k = simple_over(fx.kt2, 0);
    // D(D(M)) is literally M again (double transpose)
    AlgebraPtr<Rat> op = opposite_ptr(fx.kt2);
    FdModule<Rat> dd = dual_module(dual_module(k, op), fx.kt2);
    CHECK(dd.action[0] == k.action[0]);
    CHECK(dd.action[1] == k.action[1]);
    // the regular module of the dual numbers is self-dual
    FdModule<Rat> reg = regular_module(fx.kt2);
    FdModule<Rat> dreg = dual_module(reg, op);
    FdModule<Rat> regop = regular_module(op);
    CHECK(is_isomorphic(dreg, regop));
    // zero module dualizes to zero
    CHECK(dual_module(zero_module(fx.kt2), op).dim == 0);
}

TEST_CASE("transpose") {
    Fixtures fx;
    // Tr(Lambda) = 0
    CHECK(transpose_module(regular_module(fx.kt2)).dim == 0);
    // Tr(k) = k over the opposite dual numbers (same commutative algebra)
    FdModule<Rat> k = simple_over(fx.kt2, 0);
    FdModule<Rat> tr = transpose_module(k);
    CHECK(tr.dim == 1);
    AlgebraPtr<Rat> op = opposite_ptr(fx.kt2);
    CHECK(is_isomorphic(tr, simple_modules(op)[0]));
    // arrow algebra: Tr of the nonprojective simple is the nonprojective
    // simple over the opposite algebra
    FdModule<Rat> s1 = simple_over(fx.arrow, 0);
    FdModule<Rat> trs1 = transpose_module(s1);
    CHECK(trs1.dim == 1);
    CHECK_FALSE(is_projective(trs1));
}

TEST_CASE("Tr Tr is the identity up to projective summands") {
    Fixtures fx;
    FdModule<Rat> k = simple_over(fx.kt2, 0);
    FdModule<Rat> trtr = transpose_module(transpose_module(k));
    CHECK(stably_isomorphic(trtr, k));
    FdModule<Rat> s1 = simple_over(fx.arrow, 0);
    CHECK(stably_isomorphic(transpose_module(transpose_module(s1)), s1));
}

TEST_CASE("decompose") {
    Fixtures fx;
    FdModule<Rat> k = simple_over(fx.kt2, 0);
    // m + m: one piece with multiplicity 2
    FdModule<Rat> twice = direct_sum(fx.kt2, {k, k}).mod;
    auto parts = decompose(twice);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].multiplicity == 2);
    CHECK(parts[0].piece.dim == 1);
    // the regular module of k x k splits into two nonisomorphic simples
    auto kk_parts = decompose(regular_module(fx.kxk));
    REQUIRE(kk_parts.size() == 2);
    CHECK(kk_parts[0].multiplicity == 1);
    CHECK(kk_parts[1].multiplicity == 1);
    CHECK_FALSE(is_isomorphic(kk_parts[0].piece, kk_parts[1].piece));
    // the regular module of a local algebra is indecomposable
    auto kt2_parts = decompose(regular_module(fx.kt2));
    REQUIRE(kt2_parts.size() == 1);
    CHECK(kt2_parts[0].multiplicity == 1);
    CHECK(kt2_parts[0].piece.dim == 2);
    // mixed sum over the arrow algebra
    FdModule<Rat> mix =
        direct_sum(fx.arrow, {simple_over(fx.arrow, 0), slot_module(fx.arrow, 0).mod,
                              simple_over(fx.arrow, 0)})
            .mod;
    auto mix_parts = decompose(mix);
    REQUIRE(mix_parts.size() == 2);
    int mult_total = 0;
    for (const auto& p : mix_parts) mult_total += p.multiplicity * p.piece.dim;
    CHECK(mult_total == mix.dim);
}

TEST_CASE("strip_projectives and stable isomorphism") {
    Fixtures fx;
    FdModule<Rat> k = simple_over(fx.kt2, 0);
    FdModule<Rat> padded = direct_sum(fx.kt2, {k, regular_module(fx.kt2)}).mod;
    CHECK(stably_isomorphic(padded, k));
    CHECK_FALSE(stably_isomorphic(padded, regular_module(fx.kt2)));
    auto stripped = strip_projectives(padded);
    REQUIRE(stripped.size() == 1);
    CHECK(stripped[0].piece.dim == 1);
}

TEST_CASE("splice: middle projective identifies Omega(C) with A") {
    Fixtures fx;
    // 0 -> k -> Lambda -> k -> 0 over the dual numbers
    FdModule<Rat> k = simple_over(fx.kt2, 0);
    FdModule<Rat> reg = regular_module(fx.kt2);
    // socle inclusion and top projection
    Mat<Rat> inj = hom_space(k, reg)[0];
    // normalize so that the composite with the quotient is zero and onto
    std::vector<Mat<Rat>> homs = hom_space(reg, k);
    REQUIRE(homs.size() == 1);
    Mat<Rat> surj = homs[0];
    ShortExact<Rat> ses{k, reg, k, inj, surj};
    validate_short_exact(ses);

    SpliceResult<Rat> sp = splice_syzygy_sequence(ses, 3);
    REQUIRE(sp.steps.size() == 3);
    // chain [..., Omega A, Omega B, Omega C, A, B, C]: with B = Lambda
    // projective the B-line contributes zero syzygies, every other term is k
    CHECK(sp.steps[0].syz.dim == 1);  // Omega(C) = k, identified with A
    CHECK(is_isomorphic(sp.steps[0].syz, k));
    CHECK(sp.steps[1].syz.dim == 0);  // Omega(B) = Omega(Lambda) = 0
    CHECK(sp.steps[2].syz.dim == 1);  // Omega(A) = k
    CHECK(is_isomorphic(sp.steps[2].syz, k));
    for (const auto& step : sp.steps) validate_short_exact(step.padded);
}

TEST_CASE("splice: split sequence has stably zero connecting maps") {
    Fixtures fx;
    FdModule<Rat> s1 = simple_over(fx.arrow, 0);
    FdModule<Rat> s2 = simple_over(fx.arrow, 1);
    DirectSum<Rat> mid = direct_sum(fx.arrow, {s2, s1});
    Mat<Rat> inj(1, 2, Rat());
    inj.at(0, 0) = Rat(1);
    Mat<Rat> surj(2, 1, Rat());
    surj.at(1, 0) = Rat(1);
    ShortExact<Rat> ses{s2, mid.mod, s1, inj, surj};
    validate_short_exact(ses);
    SpliceResult<Rat> sp = splice_syzygy_sequence(ses, 2);
    // each connecting map Omega(C) -> A must lie in the projective-factoring
    // subspace of Hom
    for (const auto& step : sp.steps) {
        if (step.syz.dim == 0) continue;
        // A of this step is the previous middle term; recover from the padded data
        const FdModule<Rat>& target_a = step.padded.b;  // A + P
        StableHom<Rat> sh = stable_hom(step.syz, target_a);
        (void)sh;
    }
    // the first connecting map lands in A = S2 directly
    if (sp.steps[0].syz.dim > 0) {
        StableHom<Rat> sh = stable_hom(sp.steps[0].syz, s2);
        std::vector<Rat> flat = flatten(sp.steps[0].connecting);
        CHECK(contains_row(sh.proj_factoring, flat));
    }
}

TEST_CASE("stable hom dimension is independent of the idempotent order") {
    // rebuild k x k with the idempotent family listed in the other order
    auto a = product_kxk(Rat());
    Algebra<Rat> raw = *a;
    std::vector<std::vector<Rat>> swapped = {raw.idempotents[1], raw.idempotents[0]};
    auto b = make_algebra(std::move(raw), swapped);
    FdModule<Rat> sa = simple_modules(a)[0];
    FdModule<Rat> sb = simple_modules(b)[1];  // same simple, found under the other slot
    CHECK(sa.dim == sb.dim);
    CHECK(stable_hom_dim(sa, sa) == stable_hom_dim(sb, sb));

    // and over the dual numbers nothing changes either
    auto kt2 = dual_numbers(Rat());
    FdModule<Rat> k = simple_modules(kt2)[0];
    CHECK(stable_hom_dim(k, k) == 1);
}

TEST_CASE("module validation catches broken actions") {
    auto kt2 = dual_numbers(Rat());
    FdModule<Rat> bad;
    bad.alg = kt2;
    bad.dim = 1;
    bad.action = {Mat<Rat>::identity(1, Rat()), Mat<Rat>::identity(1, Rat())};
    // t acts as identity: t^2 = 0 is violated
    CHECK_THROWS_AS(validate_module(bad), Error);
}
