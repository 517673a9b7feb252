#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "homcat/errors.hpp"
#include "homcat/factor.hpp"
#include "homcat/field.hpp"
#include "homcat/matrix.hpp"
#include "homcat/poly.hpp"

namespace homcat {

// Finite-dimensional associative unital algebra over an exact field, given by
// structure constants. Elements are coefficient rows in the stored basis.
// Factories (make_algebra, from_quiver, ...) also attach the Jacobson radical
// and a complete orthogonal set of primitive idempotents; intermediate
// algebras built internally (quotients, corners, endomorphism algebras) may
// leave those empty until they in turn go through the factory steps.
template <class K>
class Algebra {
public:
    using Vec = std::vector<K>;

    K k0;                                  // field prototype (zero)
    int dim = 0;
    std::vector<std::string> labels;       // basis labels
    std::vector<std::vector<Vec>> mult;    // mult[i][j] = row of b_i * b_j
    Vec unit;
    std::vector<int> gens;                 // small generating set (basis indices)
    RowSpace<K> radical;                   // computed by factories
    std::vector<Vec> idempotents;          // complete orthogonal primitive family

    bool has_radical = false;
    bool has_idempotents = false;

    K zero() const { return k0; }
    K one() const { return k0.one(); }

    Vec zero_vec() const { return Vec(dim, k0); }
    Vec basis_vec(int i) const {
        Vec v = zero_vec();
        v[i] = one();
        return v;
    }

    Vec product(const Vec& a, const Vec& b) const {
        Vec r = zero_vec();
        for (int i = 0; i < dim; ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; j < dim; ++j) {
                if (b[j].is_zero()) continue;
                K f = a[i] * b[j];
                const Vec& c = mult[i][j];
                for (int l = 0; l < dim; ++l)
                    if (!c[l].is_zero()) r[l] = r[l] + f * c[l];
            }
        }
        return r;
    }

    // Matrix of v |-> v*x in the row convention (right regular action).
    Mat<K> right_mult(const Vec& x) const {
        Mat<K> m(dim, dim, k0);
        for (int i = 0; i < dim; ++i) {
            Vec r = product(basis_vec(i), x);
            m.set_row(i, r);
        }
        return m;
    }
    // Matrix of v |-> x*v in the row convention.
    Mat<K> left_mult(const Vec& x) const {
        Mat<K> m(dim, dim, k0);
        for (int i = 0; i < dim; ++i) m.set_row(i, product(x, basis_vec(i)));
        return m;
    }

    bool is_zero_vec(const Vec& v) const {
        for (const K& x : v)
            if (!x.is_zero()) return false;
        return true;
    }

    // Evaluate a polynomial at an element (constant term times the unit).
    Vec eval_poly(const Poly<K>& p, const Vec& c) const {
        Vec acc = zero_vec();
        for (int i = p.degree(); i >= 0; --i) {
            acc = product(acc, c);
            K coef = p.coeff(i);
            if (!coef.is_zero())
                for (int l = 0; l < dim; ++l) acc[l] = acc[l] + coef * unit[l];
        }
        return acc;
    }

    // Monic minimal polynomial of an element.
    Poly<K> min_poly(const Vec& c) const {
        Mat<K> pows(0, dim, k0);
        Vec cur = unit;
        for (int d = 0; d <= dim; ++d) {
            Mat<K> row(1, dim, k0);
            row.set_row(0, cur);
            auto coeffs = solve_left(pows, row);
            if (coeffs) {
                std::vector<K> pc(d + 1, k0);
                for (int i = 0; i < d; ++i) pc[i] = -coeffs->at(0, i);
                pc[d] = one();
                return Poly<K>(std::move(pc), k0);
            }
            pows = pows.vstack(row);
            cur = product(cur, c);
        }
        throw std::logic_error("minimal polynomial not found within dimension bound");
    }
};

template <class K>
using AlgebraPtr = std::shared_ptr<const Algebra<K>>;

// Structural equality of the underlying ring data (same basis, same table);
// distinct shared instances of the same algebra compare equal.
template <class K>
bool same_algebra(const AlgebraPtr<K>& a, const AlgebraPtr<K>& b) {
    if (a.get() == b.get()) return true;
    if (a->dim != b->dim || !(a->unit == b->unit)) return false;
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < a->dim; ++j)
            if (!(a->mult[i][j] == b->mult[i][j])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

template <class K>
void validate_structure(const Algebra<K>& a) {
    const int d = a.dim;
    if (static_cast<int>(a.mult.size()) != d || static_cast<int>(a.unit.size()) != d)
        throw Error(ErrorKind::Validation, "structure constant shapes inconsistent");
    for (const auto& row : a.mult) {
        if (static_cast<int>(row.size()) != d)
            throw Error(ErrorKind::Validation, "structure constant shapes inconsistent");
        for (const auto& v : row)
            if (static_cast<int>(v.size()) != d)
                throw Error(ErrorKind::Validation, "structure constant shapes inconsistent");
    }
    for (int i = 0; i < d; ++i) {
        if (!(a.product(a.unit, a.basis_vec(i)) == a.basis_vec(i)) ||
            !(a.product(a.basis_vec(i), a.unit) == a.basis_vec(i)))
            throw Error(ErrorKind::Validation, "unit does not act as identity on basis element " +
                                                   std::to_string(i));
    }
    // Associativity in matrix form: R_{b_j b_l} = R_j R_l on the regular
    // representation, which quantifies over the whole algebra at once.
    std::vector<Mat<K>> rm;
    rm.reserve(d);
    for (int i = 0; i < d; ++i) rm.push_back(a.right_mult(a.basis_vec(i)));
    for (int j = 0; j < d; ++j)
        for (int l = 0; l < d; ++l) {
            Mat<K> lhs(d, d, a.k0);
            for (int t = 0; t < d; ++t)
                if (!a.mult[j][l][t].is_zero()) lhs = lhs + rm[t].scaled(a.mult[j][l][t]);
            if (!(lhs == rm[j] * rm[l]))
                throw Error(ErrorKind::Validation, "associativity fails on basis pair (" +
                                                       std::to_string(j) + "," +
                                                       std::to_string(l) + ")");
        }
}

// Greedy small generating set; hom computations then only solve against the
// generators instead of the whole basis.
template <class K>
std::vector<int> generating_set(const Algebra<K>& a) {
    std::vector<int> gens;
    RowSpace<K> span;
    {
        Mat<K> u(1, a.dim, a.k0);
        u.set_row(0, a.unit);
        span = row_space(u);
    }
    auto close = [&](RowSpace<K> s, const std::vector<int>& g) {
        for (;;) {
            Mat<K> add(0, a.dim, a.k0);
            for (int i = 0; i < s.dim(); ++i)
                for (int gi : g) {
                    auto p = a.product(s.basis.row(i), a.basis_vec(gi));
                    if (!contains_row(s, p)) {
                        Mat<K> r(1, a.dim, a.k0);
                        r.set_row(0, p);
                        add = add.vstack(r);
                    }
                    auto q = a.product(a.basis_vec(gi), s.basis.row(i));
                    if (!contains_row(s, q)) {
                        Mat<K> r(1, a.dim, a.k0);
                        r.set_row(0, q);
                        add = add.vstack(r);
                    }
                }
            if (add.rows() == 0) return s;
            s = row_space(s.basis.vstack(add));
        }
    };
    while (span.dim() < a.dim) {
        int best = -1, best_dim = span.dim();
        RowSpace<K> best_span = span;
        for (int i = 0; i < a.dim; ++i) {
            if (contains_row(span, a.basis_vec(i))) continue;
            std::vector<int> g2 = gens;
            g2.push_back(i);
            Mat<K> bi(1, a.dim, a.k0);
            bi.set_row(0, a.basis_vec(i));
            RowSpace<K> s2 = close(row_space(span.basis.vstack(bi)), g2);
            if (s2.dim() > best_dim) {
                best = i;
                best_dim = s2.dim();
                best_span = s2;
                if (best_dim == a.dim) break;
            }
        }
        if (best < 0) throw std::logic_error("generating set search stalled");
        gens.push_back(best);
        span = best_span;
    }
    return gens;
}

// ---------------------------------------------------------------------------
// Radical via the trace form of the regular representation. In characteristic
// zero the kernel is the radical (Dickson); in characteristic p the kernel is
// verified nilpotent, with a bounded exhaustive fallback for tiny commutative
// algebras, and RadicalUncertain otherwise.
// ---------------------------------------------------------------------------

template <class K>
bool is_commutative(const Algebra<K>& a) {
    for (int i = 0; i < a.dim; ++i)
        for (int j = i + 1; j < a.dim; ++j)
            if (!(a.mult[i][j] == a.mult[j][i])) return false;
    return true;
}

template <class K>
bool subspace_nilpotent(const Algebra<K>& a, const RowSpace<K>& s) {
    RowSpace<K> cur = s;
    for (int step = 0; step <= a.dim + 1; ++step) {
        if (cur.dim() == 0) return true;
        Mat<K> prod(0, a.dim, a.k0);
        for (int i = 0; i < cur.dim(); ++i)
            for (int j = 0; j < s.dim(); ++j) {
                Mat<K> r(1, a.dim, a.k0);
                r.set_row(0, a.product(cur.basis.row(i), s.basis.row(j)));
                prod = prod.vstack(r);
            }
        RowSpace<K> next = row_space(prod);
        if (next.dim() >= cur.dim() && next == cur) return false;  // stabilized nonzero
        cur = next;
    }
    return cur.dim() == 0;
}

template <class K>
RowSpace<K> compute_radical(const Algebra<K>& a) {
    Mat<K> gram(a.dim, a.dim, a.k0);
    std::vector<Mat<K>> lm;
    lm.reserve(a.dim);
    for (int i = 0; i < a.dim; ++i) lm.push_back(a.left_mult(a.basis_vec(i)));
    for (int i = 0; i < a.dim; ++i)
        for (int j = i; j < a.dim; ++j) {
            K tr = a.k0;
            for (int r = 0; r < a.dim; ++r)
                for (int s = 0; s < a.dim; ++s) tr = tr + lm[i].at(r, s) * lm[j].at(s, r);
            gram.at(i, j) = tr;
            gram.at(j, i) = tr;
        }
    RowSpace<K> ker = row_space(row_kernel(gram));
    if (field_characteristic(a.k0) == 0) return ker;

    if (subspace_nilpotent(a, ker)) return ker;

    // Characteristic-p fallback: exhaustive nilpotent-element scan, sound for
    // commutative algebras of very small cardinality only.
    if (is_commutative(a)) {
        double card = 1;
        uint32_t p = field_characteristic(a.k0);
        for (int i = 0; i < a.dim; ++i) card *= p;
        if (a.dim <= 8 && card <= (1 << 18)) {
            Mat<K> nils(0, a.dim, a.k0);
            std::vector<uint32_t> digits(a.dim, 0);
            for (;;) {
                typename Algebra<K>::Vec v = a.zero_vec();
                for (int i = 0; i < a.dim; ++i) v[i] = scalar_from_int(digits[i], a.k0);
                typename Algebra<K>::Vec pw = v;
                for (int e = 1; e < a.dim && !a.is_zero_vec(pw); ++e) pw = a.product(pw, v);
                if (a.is_zero_vec(pw)) {
                    Mat<K> r(1, a.dim, a.k0);
                    r.set_row(0, v);
                    nils = nils.vstack(r);
                }
                int pos = 0;
                while (pos < a.dim && ++digits[pos] == p) digits[pos++] = 0;
                if (pos == a.dim) break;
            }
            RowSpace<K> cand = row_space(nils);
            if (subspace_nilpotent(a, cand)) return cand;
        }
    }
    throw Error(ErrorKind::RadicalUncertain,
                "trace form kernel is not nilpotent and no fallback applies (char " +
                    std::to_string(field_characteristic(a.k0)) + ", dim " +
                    std::to_string(a.dim) + ")");
}

// ---------------------------------------------------------------------------
// Quotient and corner algebras with coordinate maps back to the parent.
// ---------------------------------------------------------------------------

template <class K>
struct QuotientAlgebra {
    Algebra<K> alg;               // A / ideal, basis = complement coordinates
    RowSpace<K> ideal;
    std::vector<int> coords;      // ambient coordinate carried by each quotient basis vector

    std::vector<K> project(const std::vector<K>& ambient) const {
        std::vector<K> red = reduce_row(ideal, ambient);
        std::vector<K> out;
        out.reserve(coords.size());
        for (int c : coords) out.push_back(red[c]);
        return out;
    }
    std::vector<K> lift(const std::vector<K>& q) const {
        std::vector<K> out(ideal.ambient(), alg.k0);
        for (size_t i = 0; i < coords.size(); ++i) out[coords[i]] = q[i];
        return out;
    }
};

template <class K>
QuotientAlgebra<K> quotient_algebra(const Algebra<K>& a, const RowSpace<K>& ideal) {
    QuotientAlgebra<K> q;
    q.ideal = ideal;
    std::vector<bool> is_piv(a.dim, false);
    for (int c : ideal.pivots) is_piv[c] = true;
    for (int c = 0; c < a.dim; ++c)
        if (!is_piv[c]) q.coords.push_back(c);

    Algebra<K>& b = q.alg;
    b.k0 = a.k0;
    b.dim = static_cast<int>(q.coords.size());
    for (int c : q.coords) b.labels.push_back(a.labels.empty() ? "q" + std::to_string(c)
                                                               : a.labels[c]);
    b.mult.assign(b.dim, std::vector<typename Algebra<K>::Vec>(b.dim));
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
            auto p = a.product(a.basis_vec(q.coords[i]), a.basis_vec(q.coords[j]));
            b.mult[i][j] = q.project(p);
        }
    b.unit = q.project(a.unit);
    return q;
}

template <class K>
struct CornerAlgebra {
    Algebra<K> alg;        // e*A*e with unit e
    RowSpace<K> space;     // basis rows inside the parent

    std::vector<K> to_parent(const std::vector<K>& v) const {
        std::vector<K> out(space.ambient(), alg.k0);
        for (int i = 0; i < space.dim(); ++i)
            for (int j = 0; j < space.ambient(); ++j)
                out[j] = out[j] + v[i] * space.basis.at(i, j);
        return out;
    }
    std::vector<K> from_parent(const std::vector<K>& v) const { return coords_in(space, v); }
};

template <class K>
CornerAlgebra<K> corner_algebra(const Algebra<K>& a, const std::vector<K>& e) {
    Mat<K> img(0, a.dim, a.k0);
    for (int i = 0; i < a.dim; ++i) {
        Mat<K> r(1, a.dim, a.k0);
        r.set_row(0, a.product(e, a.product(a.basis_vec(i), e)));
        img = img.vstack(r);
    }
    CornerAlgebra<K> c;
    c.space = row_space(img);
    Algebra<K>& b = c.alg;
    b.k0 = a.k0;
    b.dim = c.space.dim();
    for (int i = 0; i < b.dim; ++i) b.labels.push_back("c" + std::to_string(i));
    b.mult.assign(b.dim, std::vector<typename Algebra<K>::Vec>(b.dim));
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j)
            b.mult[i][j] = coords_in(c.space, a.product(c.space.basis.row(i), c.space.basis.row(j)));
    b.unit = coords_in(c.space, e);
    return c;
}

template <class K>
Algebra<K> opposite_algebra(const Algebra<K>& a) {
    Algebra<K> b = a;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) b.mult[i][j] = a.mult[j][i];
    b.gens = a.gens;  // a generating set of A generates A^op as well
    return b;
}

// ---------------------------------------------------------------------------
// Primitive orthogonal idempotents of a semisimple algebra, by repeatedly
// splitting along coprime factorizations of minimal polynomials of elements.
// Complete over F_p (Wedderburn); over Q honest failure when the bounded
// factor searches cannot certify a division algebra.
// ---------------------------------------------------------------------------

template <class K>
std::vector<std::vector<K>> candidate_elements(const Algebra<K>& a) {
    std::vector<std::vector<K>> cands;
    for (int i = 0; i < a.dim; ++i) cands.push_back(a.basis_vec(i));
    for (int j = 1; j <= a.dim + 2; ++j) {
        typename Algebra<K>::Vec v = a.zero_vec();
        K x = a.k0.one();
        K jk = scalar_from_int(j, a.k0);
        for (int i = 0; i < a.dim; ++i) {
            v[i] = x;
            x = x * jk;
        }
        cands.push_back(v);
    }
    // a few deterministic pseudo-random combinations
    uint64_t state = 0x9e3779b97f4a7c15ull;
    for (int t = 0; t < 40; ++t) {
        typename Algebra<K>::Vec v = a.zero_vec();
        for (int i = 0; i < a.dim; ++i) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            v[i] = scalar_from_int(static_cast<long>((state >> 33) % 19) - 9, a.k0);
        }
        cands.push_back(v);
    }
    return cands;
}

// Try to produce a nontrivial idempotent of `a` (not assumed semisimple need
// not succeed; sound when it does).
template <class K>
std::optional<std::vector<K>> find_nontrivial_idempotent(const Algebra<K>& a,
                                                         bool& searches_complete) {
    for (const auto& c : candidate_elements(a)) {
        Poly<K> mu = a.min_poly(c);
        SearchStatus st;
        auto split = coprime_split(mu, st);
        searches_complete = searches_complete && st.complete;
        if (!split) continue;
        auto [g, h] = *split;
        PolyExtGcd<K> eg = poly_ext_gcd(g, h);
        if (eg.g.degree() != 0) continue;
        // (t*h)(c) is 1 mod g, 0 mod h, hence an idempotent of k[c].
        Poly<K> th = eg.t * h;
        typename Algebra<K>::Vec e = a.eval_poly(th.mod(mu), c);
        if (a.is_zero_vec(e)) continue;
        bool is_unit = true;
        for (int i = 0; i < a.dim; ++i) is_unit = is_unit && e[i] == a.unit[i];
        if (is_unit) continue;
        if (!(a.product(e, e) == e)) continue;  // defensive; should not happen
        return e;
    }
    return std::nullopt;
}

// Certify that a semisimple algebra is a division algebra (unit primitive).
// Returns nullopt when undecidable within bounds.
template <class K>
std::optional<bool> certify_division_algebra(const Algebra<K>& a) {
    if (a.dim == 1) return true;
    bool complete = true;
    if (find_nontrivial_idempotent(a, complete)) return false;
    if (is_commutative(a)) {
        for (const auto& c : candidate_elements(a)) {
            Poly<K> mu = a.min_poly(c);
            if (mu.degree() == a.dim) {
                auto irr = irreducible(mu);
                if (irr.has_value()) return irr;
                return std::nullopt;
            }
        }
        return std::nullopt;
    }
    // Noncommutative: over a finite field a semisimple division algebra is a
    // field (Wedderburn), so noncommutative means "not division".
    if (field_characteristic(a.k0) != 0) return false;
    return std::nullopt;
}

template <class K>
std::vector<std::vector<K>> primitive_idempotents_semisimple(const Algebra<K>& a) {
    if (a.dim == 0) return {};
    if (a.dim == 1) return {a.unit};
    bool complete = true;
    auto e = find_nontrivial_idempotent(a, complete);
    if (!e) {
        auto division = certify_division_algebra(a);
        if (division.has_value() && *division) return {a.unit};
        throw Error(ErrorKind::IdempotentSplitFailure,
                    "cannot split or certify corner of dimension " + std::to_string(a.dim) +
                        (complete ? " (division algebra not certified)"
                                  : " (bounded factor search exhausted)"));
    }
    std::vector<std::vector<K>> out;
    for (const auto& u : {*e, [&] {
             typename Algebra<K>::Vec c = a.unit;
             for (int i = 0; i < a.dim; ++i) c[i] = c[i] - (*e)[i];
             return c;
         }()}) {
        CornerAlgebra<K> corner = corner_algebra(a, u);
        for (const auto& sub : primitive_idempotents_semisimple(corner.alg))
            out.push_back(corner.to_parent(sub));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lifting idempotents along the nilpotent radical (e <- 3e^2 - 2e^3).
// ---------------------------------------------------------------------------

template <class K>
std::vector<K> lift_idempotent(const Algebra<K>& a, std::vector<K> x) {
    for (int iter = 0; iter < 64; ++iter) {
        auto x2 = a.product(x, x);
        if (x2 == x) return x;
        auto x3 = a.product(x2, x);
        typename Algebra<K>::Vec next = a.zero_vec();
        K three = scalar_from_int(3, a.k0), two = scalar_from_int(2, a.k0);
        for (int i = 0; i < a.dim; ++i) next[i] = three * x2[i] - two * x3[i];
        x = std::move(next);
    }
    throw std::logic_error("idempotent lifting did not converge");
}

// Lift a complete orthogonal primitive family from A/rad to A, one idempotent
// at a time inside shrinking complementary corners.
template <class K>
std::vector<std::vector<K>> lift_idempotent_family(const Algebra<K>& a,
                                                   const QuotientAlgebra<K>& semisimple,
                                                   const std::vector<std::vector<K>>& family) {
    std::vector<std::vector<K>> lifted;
    typename Algebra<K>::Vec used = a.zero_vec();  // sum of already-lifted idempotents
    for (size_t t = 0; t < family.size(); ++t) {
        typename Algebra<K>::Vec pre = semisimple.lift(family[t]);
        typename Algebra<K>::Vec comp = a.unit;
        for (int i = 0; i < a.dim; ++i) comp[i] = comp[i] - used[i];
        typename Algebra<K>::Vec x = a.product(comp, a.product(pre, comp));
        typename Algebra<K>::Vec e = lift_idempotent(a, x);
        for (int i = 0; i < a.dim; ++i) used[i] = used[i] + e[i];
        lifted.push_back(std::move(e));
    }
    if (!(used == a.unit))
        throw std::logic_error("lifted idempotent family does not sum to the unit");
    for (size_t i = 0; i < lifted.size(); ++i)
        for (size_t j = 0; j < lifted.size(); ++j) {
            if (i == j) continue;
            if (!a.is_zero_vec(a.product(lifted[i], lifted[j])))
                throw std::logic_error("lifted idempotents are not orthogonal");
        }
    return lifted;
}

template <class K>
void validate_idempotent_family(const Algebra<K>& a, const std::vector<std::vector<K>>& fam) {
    typename Algebra<K>::Vec sum = a.zero_vec();
    for (const auto& e : fam) {
        if (!(a.product(e, e) == e))
            throw Error(ErrorKind::Validation, "supplied element is not idempotent");
        for (int i = 0; i < a.dim; ++i) sum[i] = sum[i] + e[i];
    }
    for (size_t i = 0; i < fam.size(); ++i)
        for (size_t j = 0; j < fam.size(); ++j)
            if (i != j && !a.is_zero_vec(a.product(fam[i], fam[j])))
                throw Error(ErrorKind::Validation, "supplied idempotents are not orthogonal");
    if (!(sum == a.unit))
        throw Error(ErrorKind::Validation, "supplied idempotents do not sum to the unit");
}

// Primitivity check for a single idempotent: the corner modulo its radical
// must be a division algebra.
template <class K>
void verify_primitive(const Algebra<K>& a, const std::vector<K>& e) {
    CornerAlgebra<K> c = corner_algebra(a, e);
    RowSpace<K> rad = compute_radical(c.alg);
    QuotientAlgebra<K> q = quotient_algebra(c.alg, rad);
    auto division = certify_division_algebra(q.alg);
    if (!division.has_value())
        throw Error(ErrorKind::IdempotentSplitFailure,
                    "cannot certify primitivity of an idempotent (corner dim " +
                        std::to_string(c.alg.dim) + ")");
    if (!*division) throw Error(ErrorKind::Validation, "idempotent is not primitive");
}

// ---------------------------------------------------------------------------
// Public factory: validate, compute radical, compute or verify a complete set
// of primitive orthogonal idempotents.
// ---------------------------------------------------------------------------

template <class K>
AlgebraPtr<K> make_algebra(Algebra<K> a,
                           std::type_identity_t<std::optional<std::vector<std::vector<K>>>>
                               supplied_idempotents = std::nullopt,
                           bool verify_primitivity = true) {
    if (a.dim == 0) {
        a.has_radical = true;
        a.has_idempotents = true;
        a.radical = row_space(Mat<K>(0, 0, a.k0));
        return std::make_shared<Algebra<K>>(std::move(a));
    }
    validate_structure(a);
    a.gens = generating_set(a);
    a.radical = compute_radical(a);
    a.has_radical = true;
    if (supplied_idempotents) {
        validate_idempotent_family(a, *supplied_idempotents);
        if (verify_primitivity)
            for (const auto& e : *supplied_idempotents) verify_primitive(a, e);
        a.idempotents = std::move(*supplied_idempotents);
    } else {
        QuotientAlgebra<K> ss = quotient_algebra(a, a.radical);
        auto fam = primitive_idempotents_semisimple(ss.alg);
        a.idempotents = lift_idempotent_family(a, ss, fam);
    }
    a.has_idempotents = true;
    return std::make_shared<Algebra<K>>(std::move(a));
}

// Build from raw structure-constant data.
template <class K>
AlgebraPtr<K> from_structure_constants(const K& proto, int dim,
                                       const std::vector<std::vector<std::vector<K>>>& mult,
                                       const std::vector<K>& unit,
                                       std::vector<std::string> labels = {}) {
    Algebra<K> a;
    a.k0 = field_prototype(proto);
    a.dim = dim;
    a.mult = mult;
    a.unit = unit;
    if (labels.empty())
        for (int i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
    a.labels = std::move(labels);
    return make_algebra(std::move(a));
}

}  // namespace homcat
