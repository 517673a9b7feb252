#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homcat/catalog.hpp"
#include "homcat/quiver.hpp"

using namespace homcat;

namespace {

// k[t]/(t^2) by structure constants on the basis {1, t}
template <class K>
AlgebraPtr<K> dual_numbers_sc(const K& proto) {
    const K z = field_prototype(proto);
    const K o = z.one();
    std::vector<std::vector<std::vector<K>>> mult(2, std::vector<std::vector<K>>(2));
    mult[0][0] = {o, z};
    mult[0][1] = {z, o};
    mult[1][0] = {z, o};
    mult[1][1] = {z, z};
    return from_structure_constants(z, 2, mult, {o, z}, {"1", "t"});
}

}  // namespace

TEST_CASE("from_structure_constants: the field itself") {
    auto k = field_algebra(Rat());
    CHECK(k->dim == 1);
    CHECK(k->idempotents.size() == 1);
    CHECK(k->radical.dim() == 0);
}

TEST_CASE("from_structure_constants: k x k has two idempotents") {
    auto a = product_kxk(Rat());
    CHECK(a->dim == 2);
    CHECK(a->idempotents.size() == 2);
    CHECK(a->radical.dim() == 0);
    // computed primitive idempotents are the two projections
    for (const auto& e : a->idempotents) CHECK(a->product(e, e) == e);
}

TEST_CASE("from_structure_constants: dual numbers have radical span{t}") {
    auto a = dual_numbers_sc(Rat());
    CHECK(a->idempotents.size() == 1);
    REQUIRE(a->radical.dim() == 1);
    CHECK(a->radical.basis.at(0, 0).is_zero());
    CHECK(a->radical.basis.at(0, 1).is_one());
}

TEST_CASE("validation failures") {
    const Rat z, o(1);
    // associativity failure: b*b = b with a unit that is separate forces a check
    std::vector<std::vector<std::vector<Rat>>> mult(2, std::vector<std::vector<Rat>>(2));
    mult[0][0] = {o, z};
    mult[0][1] = {z, o};
    mult[1][0] = {z, o};
    mult[1][1] = {o, z};  // t^2 = 1 is fine; poison associativity instead
    // make t*(t*t) != (t*t)*t by a deliberately broken table
    mult[1][1] = {z, o};  // t*t = t
    // now (t*t)*t = t*t = t and t*(t*t) = t*t = t; still associative.
    // break the unit instead:
    CHECK_THROWS_AS(from_structure_constants(Rat(), 2, mult, {z, o}, {}), Error);

    // nonassociative table: b1*b1 = b0 with b0 acting as unit, b1*b0 = 0
    std::vector<std::vector<std::vector<Rat>>> bad(2, std::vector<std::vector<Rat>>(2));
    bad[0][0] = {o, z};
    bad[0][1] = {z, o};
    bad[1][0] = {z, z};  // t*1 = 0: unit failure
    bad[1][1] = {o, z};
    CHECK_THROWS_AS(from_structure_constants(Rat(), 2, bad, {o, z}, {}), Error);
}

TEST_CASE("radical of k x k is zero, of arrow algebra is the arrow span") {
    auto kk = product_kxk(Rat());
    CHECK(kk->radical.dim() == 0);
    auto arrow = arrow_algebra(Rat());
    CHECK(arrow->dim == 3);
    CHECK(arrow->radical.dim() == 1);
    // the radical basis vector squares to zero
    auto r = arrow->radical.basis.row(0);
    CHECK(arrow->is_zero_vec(arrow->product(r, r)));
}

TEST_CASE("from_quiver: loop with t^2 is the dual numbers") {
    auto a = dual_numbers(Rat());
    CHECK(a->dim == 2);
    CHECK(a->idempotents.size() == 1);
    CHECK(a->radical.dim() == 1);
    // isomorphic to the structure-constant presentation
    CHECK(algebra_isomorphic_small<Rat>(a, dual_numbers_sc(Rat())));
}

TEST_CASE("from_quiver: arrow algebra has dimension 3 with vertex idempotents") {
    auto a = arrow_algebra(Rat());
    CHECK(a->dim == 3);
    CHECK(a->idempotents.size() == 2);
    CHECK(a->labels[0] == "e_1");
    CHECK(a->labels[1] == "e_2");
    CHECK(a->labels[2] == "a");
}

TEST_CASE("from_quiver: free loop exceeds any cap") {
    QuiverPresentation<Rat> q;
    q.proto = Rat();
    q.vertices = {"v"};
    q.arrows = {QuiverArrow{"t", 0, 0}};
    q.cap = 10;
    try {
        from_quiver(q);
        FAIL("expected NotFiniteDimensionalWithinCap");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotFiniteDimensionalWithinCap);
    }
}

TEST_CASE("from_quiver: malformed relations are rejected") {
    QuiverPresentation<Rat> q;
    q.proto = Rat();
    q.vertices = {"1", "2"};
    q.arrows = {QuiverArrow{"a", 0, 1}, QuiverArrow{"b", 1, 0}};
    // a and b are not parallel
    q.relations = {{{QPath{0, 1, {0}}, Rat(1)}, {QPath{1, 0, {1}}, Rat(1)}}};
    q.cap = 6;
    CHECK_THROWS_AS(from_quiver(q), Error);
    // non-composable path
    QuiverPresentation<Rat> q2 = q;
    q2.relations = {{{QPath{0, 0, {0, 0}}, Rat(1)}}};
    CHECK_THROWS_AS(from_quiver(q2), Error);
}

TEST_CASE("from_quiver: commutativity relation on a square") {
    QuiverPresentation<Rat> q;
    q.proto = Rat();
    q.vertices = {"1", "2", "3", "4"};
    q.arrows = {QuiverArrow{"a", 0, 1}, QuiverArrow{"b", 1, 3}, QuiverArrow{"c", 0, 2},
                QuiverArrow{"d", 2, 3}};
    q.relations = {{{QPath{0, 3, {0, 1}}, Rat(1)}, {QPath{0, 3, {2, 3}}, Rat(-1)}}};
    q.cap = 8;
    auto a = from_quiver(q);
    // basis: 4 vertices + 4 arrows + one path of length 2 (ab = cd identified)
    CHECK(a->dim == 9);
}

TEST_CASE("opposite algebra") {
    auto arrow = arrow_algebra(Rat());
    auto op = opposite_algebra(*arrow);
    for (int i = 0; i < arrow->dim; ++i)
        for (int j = 0; j < arrow->dim; ++j) CHECK(op.mult[i][j] == arrow->mult[j][i]);
    CHECK(op.unit == arrow->unit);
}

TEST_CASE("corner algebras and primitivity certification") {
    auto arrow = arrow_algebra(Rat());
    CornerAlgebra<Rat> c = corner_algebra(*arrow, arrow->idempotents[0]);
    CHECK(c.alg.dim == 1);  // e_1 A e_1 = span{e_1}
    verify_primitive(*arrow, arrow->idempotents[0]);
    // the unit of k x k is not primitive
    auto kk = product_kxk(Rat());
    CHECK_THROWS_AS(verify_primitive(*kk, kk->unit), Error);
}

TEST_CASE("idempotent lifting recovers primitive decompositions mod radical") {
    // A = kt2 x k: unit splits as (1,0) + (0,1) after lifting through the radical
    const Rat z, o(1);
    // basis: e = (1,0) part {1, t}, f = (0,1): labels {u1, t, u2}; build as product
    std::vector<std::vector<std::vector<Rat>>> mult(3, std::vector<std::vector<Rat>>(3));
    auto row = [&](long a, long b, long c) { return std::vector<Rat>{Rat(a), Rat(b), Rat(c)}; };
    // u1*u1=u1, u1*t=t, t*t=0, u2*u2=u2, cross terms zero
    mult[0][0] = row(1, 0, 0);
    mult[0][1] = row(0, 1, 0);
    mult[0][2] = row(0, 0, 0);
    mult[1][0] = row(0, 1, 0);
    mult[1][1] = row(0, 0, 0);
    mult[1][2] = row(0, 0, 0);
    mult[2][0] = row(0, 0, 0);
    mult[2][1] = row(0, 0, 0);
    mult[2][2] = row(0, 0, 1);
    auto a = from_structure_constants(Rat(), 3, mult, {o, z, o}, {"u1", "t", "u2"});
    CHECK(a->idempotents.size() == 2);
    CHECK(a->radical.dim() == 1);
}

TEST_CASE("min_poly and eval_poly") {
    auto a = dual_numbers_sc(Rat());
    // t has minimal polynomial x^2
    Poly<Rat> mu = a->min_poly({Rat(0), Rat(1)});
    CHECK(mu == parse_poly("x^2", Rat()));
    // 1 + t has minimal polynomial (x-1)^2
    Poly<Rat> mu2 = a->min_poly({Rat(1), Rat(1)});
    CHECK(mu2 == parse_poly("x^2 - 2*x + 1", Rat()));
}

TEST_CASE("zero algebra is a first-class value") {
    Algebra<Rat> z;
    z.k0 = Rat();
    auto a = make_algebra(std::move(z));
    CHECK(a->dim == 0);
    CHECK(a->idempotents.empty());
}
