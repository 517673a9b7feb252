#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homcat/algebra.hpp"
#include "homcat/errors.hpp"
#include "homcat/matrix.hpp"

namespace homcat {

// Finite-dimensional right module: one action matrix per algebra basis
// element, acting on row vectors (v, a) |-> v * action[a].
template <class K>
struct FdModule {
    AlgebraPtr<K> alg;
    int dim = 0;
    std::vector<Mat<K>> action;

    Mat<K> act(const std::vector<K>& x) const {
        Mat<K> m(dim, dim, alg->k0);
        for (int i = 0; i < alg->dim; ++i) {
            if (x[i].is_zero()) continue;
            m = m + action[i].scaled(x[i]);
        }
        return m;
    }
};

template <class K>
FdModule<K> zero_module(const AlgebraPtr<K>& a) {
    FdModule<K> m;
    m.alg = a;
    m.dim = 0;
    m.action.assign(a->dim, Mat<K>(0, 0, a->k0));
    return m;
}

template <class K>
FdModule<K> regular_module(const AlgebraPtr<K>& a) {
    FdModule<K> m;
    m.alg = a;
    m.dim = a->dim;
    for (int i = 0; i < a->dim; ++i) m.action.push_back(a->right_mult(a->basis_vec(i)));
    return m;
}

template <class K>
void validate_module(const FdModule<K>& m) {
    const Algebra<K>& a = *m.alg;
    if (static_cast<int>(m.action.size()) != a.dim)
        throw Error(ErrorKind::Validation, "module needs one action matrix per basis element");
    for (const auto& mat : m.action)
        if (mat.rows() != m.dim || mat.cols() != m.dim)
            throw Error(ErrorKind::Validation, "module action matrix has wrong shape");
    if (m.dim == 0) return;
    if (!(m.act(a.unit) == Mat<K>::identity(m.dim, a.k0)))
        throw Error(ErrorKind::Validation, "unit does not act as identity on module");
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Mat<K> lhs = m.action[i] * m.action[j];
            Mat<K> rhs = m.act(a.mult[i][j]);
            if (!(lhs == rhs))
                throw Error(ErrorKind::Validation,
                            "module action violates structure constants at pair (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
        }
}

// ---------------------------------------------------------------------------
// Sub/quotient modules and direct sums
// ---------------------------------------------------------------------------

// Restrict the action to an invariant row space; throws if not invariant.
template <class K>
FdModule<K> submodule(const FdModule<K>& m, const RowSpace<K>& u) {
    FdModule<K> s;
    s.alg = m.alg;
    s.dim = u.dim();
    for (int b = 0; b < m.alg->dim; ++b) {
        Mat<K> act(s.dim, s.dim, m.alg->k0);
        for (int t = 0; t < s.dim; ++t) {
            std::vector<K> img(m.dim, m.alg->k0);
            for (int j = 0; j < m.dim; ++j) {
                K acc = m.alg->k0;
                for (int c = 0; c < m.dim; ++c) acc = acc + u.basis.at(t, c) * m.action[b].at(c, j);
                img[j] = acc;
            }
            std::vector<K> red = reduce_row(u, img);
            for (const K& x : red)
                if (!x.is_zero())
                    throw Error(ErrorKind::Validation, "row space is not a submodule");
            act.set_row(t, coords_in(u, img));
        }
        s.action.push_back(std::move(act));
    }
    return s;
}

// Quotient by an invariant row space; the quotient basis is the coordinate
// complement of the pivot columns.
template <class K>
struct QuotientModule {
    FdModule<K> mod;
    Mat<K> proj;  // dim m x dim quotient, the canonical surjection
};

template <class K>
QuotientModule<K> quotient_module(const FdModule<K>& m, const RowSpace<K>& u) {
    std::vector<bool> is_piv(m.dim, false);
    for (int c : u.pivots) is_piv[c] = true;
    std::vector<int> comp;
    for (int c = 0; c < m.dim; ++c)
        if (!is_piv[c]) comp.push_back(c);

    QuotientModule<K> q;
    q.mod.alg = m.alg;
    q.mod.dim = static_cast<int>(comp.size());
    q.proj = Mat<K>(m.dim, q.mod.dim, m.alg->k0);
    for (int i = 0; i < m.dim; ++i) {
        std::vector<K> e(m.dim, m.alg->k0);
        e[i] = m.alg->one();
        std::vector<K> red = reduce_row(u, e);
        for (size_t j = 0; j < comp.size(); ++j) q.proj.at(i, static_cast<int>(j)) = red[comp[j]];
    }
    for (int b = 0; b < m.alg->dim; ++b) {
        Mat<K> act(q.mod.dim, q.mod.dim, m.alg->k0);
        for (size_t t = 0; t < comp.size(); ++t) {
            std::vector<K> img = m.action[b].row(comp[t]);
            std::vector<K> red = reduce_row(u, img);
            for (size_t j = 0; j < comp.size(); ++j) act.at(static_cast<int>(t), static_cast<int>(j)) = red[comp[j]];
        }
        q.mod.action.push_back(std::move(act));
    }
    return q;
}

template <class K>
struct DirectSum {
    FdModule<K> mod;
    std::vector<int> offsets;  // coordinate offset of each summand
};

template <class K>
DirectSum<K> direct_sum(const AlgebraPtr<K>& alg, const std::vector<FdModule<K>>& parts) {
    DirectSum<K> s;
    s.mod.alg = alg;
    int total = 0;
    for (const auto& p : parts) {
        s.offsets.push_back(total);
        total += p.dim;
    }
    s.mod.dim = total;
    for (int b = 0; b < alg->dim; ++b) {
        Mat<K> act(total, total, alg->k0);
        for (size_t t = 0; t < parts.size(); ++t)
            for (int i = 0; i < parts[t].dim; ++i)
                for (int j = 0; j < parts[t].dim; ++j)
                    act.at(s.offsets[t] + i, s.offsets[t] + j) = parts[t].action[b].at(i, j);
        s.mod.action.push_back(std::move(act));
    }
    return s;
}

// rad M = M * J as a row space of the coordinate space of M.
template <class K>
RowSpace<K> radical_rows(const FdModule<K>& m) {
    const Algebra<K>& a = *m.alg;
    if (!a.has_radical) throw std::logic_error("algebra radical not computed");
    Mat<K> rows(0, m.dim, a.k0);
    for (int r = 0; r < a.radical.dim(); ++r) rows = rows.vstack(m.act(a.radical.basis.row(r)));
    return row_space(rows);
}

// Invariant row space generated by seed rows on top of an already invariant
// base: worklist closure that only ever multiplies vectors that enlarged the
// span.
template <class K>
RowSpace<K> extend_submodule(const FdModule<K>& m, RowSpace<K> base, std::vector<std::vector<K>> work) {
    std::vector<int> gens = m.alg->gens;
    if (gens.empty())
        for (int g = 0; g < m.alg->dim; ++g) gens.push_back(g);
    while (!work.empty()) {
        std::vector<K> v = std::move(work.back());
        work.pop_back();
        if (contains_row(base, v)) continue;
        Mat<K> r(1, m.dim, m.alg->k0);
        r.set_row(0, v);
        base = row_space(base.basis.vstack(r));
        for (int g : gens) {
            std::vector<K> img(m.dim, m.alg->k0);
            for (int j = 0; j < m.dim; ++j) {
                K acc = m.alg->k0;
                for (int c = 0; c < m.dim; ++c) acc = acc + v[c] * m.action[g].at(c, j);
                img[j] = acc;
            }
            work.push_back(std::move(img));
        }
    }
    return base;
}

template <class K>
RowSpace<K> generated_submodule(const FdModule<K>& m, const Mat<K>& seed) {
    std::vector<std::vector<K>> work;
    for (int i = 0; i < seed.rows(); ++i) work.push_back(seed.row(i));
    return extend_submodule(m, row_space(Mat<K>(0, m.dim, m.alg->k0)), std::move(work));
}

// ---------------------------------------------------------------------------
// Hom spaces
// ---------------------------------------------------------------------------

// Basis of { F : rho_M(a) F = F rho_N(a) } using a generating set of the
// algebra; maps are (dim M x dim N) matrices in the row convention.
template <class K>
std::vector<Mat<K>> hom_space(const FdModule<K>& m, const FdModule<K>& n) {
    if (!same_algebra(m.alg, n.alg))
        throw Error(ErrorKind::Validation, "hom between modules over different algebras");
    if (m.dim == 0 || n.dim == 0) return {};
    std::vector<int> gens = m.alg->gens;
    if (gens.empty())
        for (int i = 0; i < m.alg->dim; ++i) gens.push_back(i);

    const int unknowns = m.dim * n.dim;
    Mat<K> sys(static_cast<int>(gens.size()) * m.dim * n.dim, unknowns, m.alg->k0);
    int row = 0;
    for (int g : gens) {
        const Mat<K>& am = m.action[g];
        const Mat<K>& an = n.action[g];
        for (int i = 0; i < m.dim; ++i)
            for (int j = 0; j < n.dim; ++j) {
                for (int k = 0; k < m.dim; ++k) {
                    const K& c = am.at(i, k);
                    if (!c.is_zero()) sys.at(row, k * n.dim + j) = sys.at(row, k * n.dim + j) + c;
                }
                for (int l = 0; l < n.dim; ++l) {
                    const K& c = an.at(l, j);
                    if (!c.is_zero()) sys.at(row, i * n.dim + l) = sys.at(row, i * n.dim + l) - c;
                }
                ++row;
            }
    }
    Mat<K> ker = kernel_basis(sys);
    std::vector<Mat<K>> basis;
    for (int c = 0; c < ker.cols(); ++c) {
        Mat<K> f(m.dim, n.dim, m.alg->k0);
        for (int i = 0; i < m.dim; ++i)
            for (int j = 0; j < n.dim; ++j) f.at(i, j) = ker.at(i * n.dim + j, c);
        basis.push_back(std::move(f));
    }
    return basis;
}

template <class K>
std::vector<K> flatten(const Mat<K>& f) {
    std::vector<K> v;
    v.reserve(static_cast<size_t>(f.rows()) * f.cols());
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) v.push_back(f.at(i, j));
    return v;
}

// ---------------------------------------------------------------------------
// Projective modules e_i A, projective covers, syzygies
// ---------------------------------------------------------------------------

template <class K>
struct SlotModule {
    int idem = 0;             // idempotent index
    RowSpace<K> space;        // basis of e_i A inside the algebra
    FdModule<K> mod;          // the module structure on that subspace
};

template <class K>
SlotModule<K> slot_module(const AlgebraPtr<K>& a, int idem_index) {
    const Algebra<K>& al = *a;
    Mat<K> rows(al.dim, al.dim, al.k0);
    for (int j = 0; j < al.dim; ++j)
        rows.set_row(j, al.product(al.idempotents[idem_index], al.basis_vec(j)));
    SlotModule<K> s;
    s.idem = idem_index;
    s.space = row_space(rows);
    FdModule<K> reg = regular_module(a);
    s.mod = submodule(reg, s.space);
    return s;
}

// A projective module presented as a direct sum of slot modules with its
// block structure retained (needed for transposes and Hom(P, -) bases).
template <class K>
struct ProjPresentation {
    FdModule<K> mod;
    std::vector<SlotModule<K>> slots;
    std::vector<int> offsets;

    int total_dim() const { return mod.dim; }
};

template <class K>
ProjPresentation<K> assemble_projective(const AlgebraPtr<K>& a, const std::vector<int>& idems) {
    ProjPresentation<K> p;
    std::vector<FdModule<K>> parts;
    for (int i : idems) {
        p.slots.push_back(slot_module(a, i));
        parts.push_back(p.slots.back().mod);
    }
    DirectSum<K> ds = direct_sum(a, parts);
    p.mod = std::move(ds.mod);
    p.offsets = std::move(ds.offsets);
    return p;
}

template <class K>
struct Cover {
    ProjPresentation<K> proj;
    Mat<K> surj;  // dim P x dim M
};

// Minimal projective cover by greedy top-filling: pick v in M*e_i outside the
// span of the current image plus rad M, attach a slot e_i A via u |-> v*u,
// repeat until the image covers the top, then Nakayama finishes the job.
template <class K>
Cover<K> projective_cover(const FdModule<K>& m) {
    const AlgebraPtr<K>& ap = m.alg;
    const Algebra<K>& a = *ap;
    Cover<K> cover;
    if (m.dim == 0) {
        cover.proj = assemble_projective(ap, {});
        cover.surj = Mat<K>(0, 0, a.k0);
        return cover;
    }
    RowSpace<K> radm = radical_rows(m);
    RowSpace<K> image = row_space(Mat<K>(0, m.dim, a.k0));
    std::vector<int> idems;
    std::vector<std::vector<K>> gens_v;

    for (;;) {
        RowSpace<K> t = sum_spaces(image, radm);
        if (t.dim() == m.dim) break;
        bool found = false;
        for (size_t e = 0; e < a.idempotents.size() && !found; ++e) {
            Mat<K> me = m.act(a.idempotents[e]);
            RowSpace<K> mei = row_space(me);
            for (int r = 0; r < mei.dim() && !found; ++r) {
                std::vector<K> v = mei.basis.row(r);
                if (contains_row(t, v)) continue;
                idems.push_back(static_cast<int>(e));
                gens_v.push_back(v);
                image = extend_submodule(m, image, {v});
                found = true;
            }
        }
        if (!found) throw std::logic_error("projective cover: top not reachable");
    }

    cover.proj = assemble_projective(ap, idems);
    cover.surj = Mat<K>(cover.proj.total_dim(), m.dim, a.k0);
    for (size_t t = 0; t < idems.size(); ++t) {
        const SlotModule<K>& slot = cover.proj.slots[t];
        for (int r = 0; r < slot.space.dim(); ++r) {
            // slot basis element u (a row in algebra coordinates) maps to v*u
            std::vector<K> u = slot.space.basis.row(r);
            std::vector<K> img(m.dim, a.k0);
            Mat<K> mu = m.act(u);
            for (int j = 0; j < m.dim; ++j) {
                K acc = a.k0;
                for (int c = 0; c < m.dim; ++c) acc = acc + gens_v[t][c] * mu.at(c, j);
                img[j] = acc;
            }
            cover.surj.set_row(cover.proj.offsets[t] + r, img);
        }
    }
    if (rank(cover.surj) != m.dim) throw std::logic_error("projective cover is not surjective");
    // minimality: kernel inside rad P
    Mat<K> ker = row_kernel(cover.surj);
    RowSpace<K> radp = radical_rows(cover.proj.mod);
    if (!contains_rows(radp, ker)) throw std::logic_error("projective cover is not minimal");
    return cover;
}

template <class K>
struct Syzygy {
    FdModule<K> mod;
    RowSpace<K> rows;       // inclusion into the cover's projective
    Cover<K> cover;
};

template <class K>
Syzygy<K> syzygy(const FdModule<K>& m) {
    Syzygy<K> s;
    s.cover = projective_cover(m);
    s.rows = row_space(row_kernel(s.cover.surj));
    s.mod = submodule(s.cover.proj.mod, s.rows);
    return s;
}

template <class K>
bool is_projective(const FdModule<K>& m) {
    if (m.dim == 0) return true;
    return syzygy(m).mod.dim == 0;
}

// ---------------------------------------------------------------------------
// Duality, cosyzygy, transpose
// ---------------------------------------------------------------------------

template <class K>
AlgebraPtr<K> opposite_ptr(const AlgebraPtr<K>& a) {
    return std::make_shared<Algebra<K>>(opposite_algebra(*a));
}

// D(M) = Hom_k(M, k) as a module over the opposite algebra: transposed action.
template <class K>
FdModule<K> dual_module(const FdModule<K>& m, const AlgebraPtr<K>& opposite) {
    FdModule<K> d;
    d.alg = opposite;
    d.dim = m.dim;
    for (int b = 0; b < m.alg->dim; ++b) d.action.push_back(m.action[b].transpose());
    return d;
}

template <class K>
FdModule<K> dual_module(const FdModule<K>& m) {
    return dual_module(m, opposite_ptr(m.alg));
}

// First cosyzygy computed through the duality: D(syzygy over the opposite
// algebra of D(M)). Over self-injective algebras this is the cokernel of the
// minimal left projective approximation.
template <class K>
FdModule<K> cosyzygy(const FdModule<K>& m) {
    AlgebraPtr<K> op = opposite_ptr(m.alg);
    FdModule<K> dm = dual_module(m, op);
    Syzygy<K> s = syzygy(dm);
    return dual_module(s.mod, m.alg);
}

// Auslander transpose from the minimal presentation P1 -> P0 -> M -> 0,
// as a module over the opposite algebra.
template <class K>
FdModule<K> transpose_module(const FdModule<K>& m) {
    const AlgebraPtr<K>& ap = m.alg;
    const Algebra<K>& a = *ap;
    AlgebraPtr<K> op = opposite_ptr(ap);

    Cover<K> c0 = projective_cover(m);
    RowSpace<K> krows = row_space(row_kernel(c0.surj));
    FdModule<K> k0mod = submodule(c0.proj.mod, krows);
    Cover<K> c1 = projective_cover(k0mod);
    // phi : P1 -> P0 in coordinates of the ambient projectives
    Mat<K> incl = krows.basis;                    // dim K x dim P0
    Mat<K> phi = c1.surj * incl;                  // dim P1 x dim P0

    // Extract the slot components x_{ba} in e_b A e_a from phi.
    const auto& slots1 = c1.proj.slots;
    const auto& slots0 = c0.proj.slots;
    std::vector<std::vector<std::vector<K>>> x(slots0.size(),
                                               std::vector<std::vector<K>>(slots1.size()));
    for (size_t sa = 0; sa < slots1.size(); ++sa) {
        // coordinates of the generator e_{i_a} inside slot sa
        std::vector<K> gen_coords = coords_in(slots1[sa].space, a.idempotents[slots1[sa].idem]);
        std::vector<K> row(c1.proj.total_dim(), a.k0);
        for (int t = 0; t < static_cast<int>(gen_coords.size()); ++t)
            row[c1.proj.offsets[sa] + t] = gen_coords[t];
        // image of the generator under phi, in P0 coordinates
        std::vector<K> img(c0.proj.total_dim(), a.k0);
        for (int j = 0; j < c0.proj.total_dim(); ++j) {
            K acc = a.k0;
            for (int i = 0; i < c1.proj.total_dim(); ++i) acc = acc + row[i] * phi.at(i, j);
            img[j] = acc;
        }
        for (size_t sb = 0; sb < slots0.size(); ++sb) {
            std::vector<K> comp(slots0[sb].space.dim(), a.k0);
            for (int t = 0; t < slots0[sb].space.dim(); ++t)
                comp[t] = img[c0.proj.offsets[sb] + t];
            // back to algebra coordinates
            std::vector<K> amb(a.dim, a.k0);
            for (int t = 0; t < slots0[sb].space.dim(); ++t)
                for (int j = 0; j < a.dim; ++j)
                    amb[j] = amb[j] + comp[t] * slots0[sb].space.basis.at(t, j);
            x[sb][sa] = std::move(amb);
        }
    }

    // Dual slots A e_i are the projective slots of the opposite algebra.
    std::vector<SlotModule<K>> dual0, dual1;
    for (const auto& s : slots0) dual0.push_back(slot_module(op, s.idem));
    for (const auto& s : slots1) dual1.push_back(slot_module(op, s.idem));
    std::vector<FdModule<K>> parts0, parts1;
    for (const auto& s : dual0) parts0.push_back(s.mod);
    for (const auto& s : dual1) parts1.push_back(s.mod);
    DirectSum<K> d0 = direct_sum(op, parts0);
    DirectSum<K> d1 = direct_sum(op, parts1);

    if (d1.mod.dim == 0) return zero_module(op);

    // Map (f_b)_b |-> (sum_b f_b * x_{ba})_a, with f_b in A e_{j_b}.
    Mat<K> dual_map(d0.mod.dim, d1.mod.dim, a.k0);
    for (size_t sb = 0; sb < dual0.size(); ++sb)
        for (int r = 0; r < dual0[sb].space.dim(); ++r) {
            std::vector<K> f = dual0[sb].space.basis.row(r);  // element of A e_{j_b}
            for (size_t sa = 0; sa < dual1.size(); ++sa) {
                std::vector<K> prod = a.product(f, x[sb][sa]);
                std::vector<K> coords = coords_in(dual1[sa].space, prod);
                for (int t = 0; t < static_cast<int>(coords.size()); ++t)
                    dual_map.at(d0.offsets[sb] + r, d1.offsets[sa] + t) = coords[t];
            }
        }

    RowSpace<K> image = row_space(dual_map);
    return quotient_module(d1.mod, image).mod;
}

// ---------------------------------------------------------------------------
// Stable homs
// ---------------------------------------------------------------------------

template <class K>
struct StableHom {
    int dim = 0;
    std::vector<Mat<K>> hom_basis;       // full Hom(M, N)
    RowSpace<K> proj_factoring;          // flattened span of maps through proj
    std::vector<Mat<K>> coset_reps;      // lifts of a basis of the quotient
};

template <class K>
StableHom<K> stable_hom(const FdModule<K>& m, const FdModule<K>& n) {
    StableHom<K> out;
    out.hom_basis = hom_space(m, n);
    if (m.dim == 0 || n.dim == 0) {
        out.proj_factoring = row_space(Mat<K>(0, m.dim * n.dim, m.alg->k0));
        return out;
    }
    Cover<K> cn = projective_cover(n);
    std::vector<Mat<K>> to_cover = hom_space(m, cn.proj.mod);
    Mat<K> span(0, m.dim * n.dim, m.alg->k0);
    for (const auto& g : to_cover) {
        Mat<K> composite = g * cn.surj;
        Mat<K> r(1, m.dim * n.dim, m.alg->k0);
        r.set_row(0, flatten(composite));
        span = span.vstack(r);
    }
    out.proj_factoring = row_space(span);

    RowSpace<K> acc = out.proj_factoring;
    for (const auto& h : out.hom_basis) {
        std::vector<K> f = flatten(h);
        if (!contains_row(acc, f)) {
            out.coset_reps.push_back(h);
            Mat<K> r(1, m.dim * n.dim, m.alg->k0);
            r.set_row(0, f);
            acc = row_space(acc.basis.vstack(r));
        }
    }
    out.dim = static_cast<int>(out.coset_reps.size());
    return out;
}

template <class K>
int stable_hom_dim(const FdModule<K>& m, const FdModule<K>& n) {
    return stable_hom(m, n).dim;
}

// ---------------------------------------------------------------------------
// Isomorphism testing and Krull-Schmidt decomposition
// ---------------------------------------------------------------------------

// Cheap isomorphism invariants: dimension, dimension vector by idempotent,
// radical series dimensions.
template <class K>
std::vector<int> module_fingerprint(const FdModule<K>& m) {
    std::vector<int> f;
    f.push_back(m.dim);
    for (const auto& e : m.alg->idempotents) f.push_back(rank(m.act(e)));
    RowSpace<K> layer = radical_rows(m);
    int guard = 0;
    while (layer.dim() > 0 && guard++ <= m.dim) {
        f.push_back(layer.dim());
        FdModule<K> sub = submodule(m, layer);
        RowSpace<K> next = radical_rows(sub);
        // lift back to ambient coordinates
        Mat<K> amb(next.dim(), m.dim, m.alg->k0);
        for (int i = 0; i < next.dim(); ++i)
            for (int j = 0; j < m.dim; ++j) {
                K acc = m.alg->k0;
                for (int c = 0; c < sub.dim; ++c)
                    acc = acc + next.basis.at(i, c) * layer.basis.at(c, j);
                amb.at(i, j) = acc;
            }
        layer = row_space(amb);
    }
    return f;
}

template <class K>
bool is_isomorphic(const FdModule<K>& m, const FdModule<K>& n) {
    if (m.dim != n.dim) return false;
    if (m.dim == 0) return true;
    if (module_fingerprint(m) != module_fingerprint(n)) return false;
    std::vector<Mat<K>> hom = hom_space(m, n);
    if (hom.empty()) return false;
    const int h = static_cast<int>(hom.size());

    for (const auto& f : hom)
        if (is_invertible(f)) return true;
    uint64_t state = 0xdeadbeefcafef00dull;
    for (int t = 0; t < 60; ++t) {
        Mat<K> f(m.dim, n.dim, m.alg->k0);
        for (const auto& b : hom) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            long c = static_cast<long>((state >> 33) % 23) - 11;
            if (c != 0) f = f + b.scaled(scalar_from_int(c, m.alg->k0));
        }
        if (is_invertible(f)) return true;
    }

    // Certified decision. Over F_p enumerate the whole hom space; over Q use
    // grid evaluation: det of a combination is a polynomial of total degree
    // <= dim, so vanishing on a (dim+1)^h grid forces it to vanish identically.
    double budget;
    if (field_characteristic(m.alg->k0) != 0) {
        budget = 1;
        for (int i = 0; i < h; ++i) budget *= field_characteristic(m.alg->k0);
    } else {
        budget = 1;
        for (int i = 0; i < h; ++i) budget *= m.dim + 1;
    }
    if (budget > 300000)
        throw Error(ErrorKind::IsomorphismUndecided,
                    "hom space too large for certified isomorphism search");
    const long radix = field_characteristic(m.alg->k0) != 0
                           ? static_cast<long>(field_characteristic(m.alg->k0))
                           : static_cast<long>(m.dim) + 1;
    std::vector<long> digits(h, 0);
    for (;;) {
        Mat<K> f(m.dim, n.dim, m.alg->k0);
        for (int i = 0; i < h; ++i)
            if (digits[i] != 0) f = f + hom[i].scaled(scalar_from_int(digits[i], m.alg->k0));
        if (is_invertible(f)) return true;
        int pos = 0;
        while (pos < h && ++digits[pos] == radix) digits[pos++] = 0;
        if (pos == h) break;
    }
    return false;
}

template <class K>
struct Summand {
    FdModule<K> piece;
    int multiplicity = 1;
};

// Build End(M) as an algebra (basis = hom basis, product = composition).
template <class K>
Algebra<K> endomorphism_algebra(const FdModule<K>& m, std::vector<Mat<K>>& hom_basis_out) {
    hom_basis_out = hom_space(m, m);
    const int h = static_cast<int>(hom_basis_out.size());
    Mat<K> flat(h, m.dim * m.dim, m.alg->k0);
    for (int i = 0; i < h; ++i) flat.set_row(i, flatten(hom_basis_out[i]));
    RowSpace<K> space = row_space(flat);

    auto express = [&](const Mat<K>& f) {
        std::vector<K> v = flatten(f);
        if (!contains_row(space, v)) throw std::logic_error("End algebra not closed");
        Mat<K> rhs(1, m.dim * m.dim, m.alg->k0);
        rhs.set_row(0, v);
        auto sol = solve_left(flat, rhs);
        if (!sol) throw std::logic_error("End algebra coordinate solve failed");
        return sol->row(0);
    };

    Algebra<K> e;
    e.k0 = m.alg->k0;
    e.dim = h;
    for (int i = 0; i < h; ++i) e.labels.push_back("f" + std::to_string(i));
    e.mult.assign(h, std::vector<typename Algebra<K>::Vec>(h));
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) e.mult[i][j] = express(hom_basis_out[i] * hom_basis_out[j]);
    e.unit = express(Mat<K>::identity(m.dim, m.alg->k0));
    return e;
}

// Krull-Schmidt decomposition by idempotent splitting in End(M).
template <class K>
std::vector<Summand<K>> decompose(const FdModule<K>& m) {
    if (m.dim == 0) return {};
    std::vector<Mat<K>> homs;
    Algebra<K> end_alg = endomorphism_algebra(m, homs);
    RowSpace<K> rad = compute_radical(end_alg);
    QuotientAlgebra<K> ss = quotient_algebra(end_alg, rad);
    auto family_bar = primitive_idempotents_semisimple(ss.alg);
    auto family = lift_idempotent_family(end_alg, ss, family_bar);

    std::vector<FdModule<K>> pieces;
    for (const auto& idem : family) {
        Mat<K> em(m.dim, m.dim, m.alg->k0);
        for (int i = 0; i < end_alg.dim; ++i)
            if (!idem[i].is_zero()) em = em + homs[i].scaled(idem[i]);
        RowSpace<K> img = row_space(em);
        pieces.push_back(submodule(m, img));
    }

    // Deterministic order: by fingerprint, then group isomorphic pieces.
    std::vector<std::pair<std::vector<int>, size_t>> keyed;
    for (size_t i = 0; i < pieces.size(); ++i) keyed.push_back({module_fingerprint(pieces[i]), i});
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Summand<K>> out;
    for (const auto& [key, idx] : keyed) {
        bool merged = false;
        for (auto& s : out)
            if (s.piece.dim == pieces[idx].dim && is_isomorphic(s.piece, pieces[idx])) {
                ++s.multiplicity;
                merged = true;
                break;
            }
        if (!merged) out.push_back(Summand<K>{pieces[idx], 1});
    }
    return out;
}

// Drop projective direct summands; the stable-category normalizer.
template <class K>
std::vector<Summand<K>> strip_projectives(const FdModule<K>& m) {
    std::vector<Summand<K>> parts = decompose(m);
    std::vector<Summand<K>> out;
    for (auto& p : parts)
        if (!is_projective(p.piece)) out.push_back(std::move(p));
    return out;
}

template <class K>
FdModule<K> sum_of(const AlgebraPtr<K>& alg, const std::vector<Summand<K>>& parts) {
    std::vector<FdModule<K>> mods;
    for (const auto& p : parts)
        for (int i = 0; i < p.multiplicity; ++i) mods.push_back(p.piece);
    return direct_sum(alg, mods).mod;
}

// Isomorphism of decompositions up to reordering.
template <class K>
bool same_summands(std::vector<Summand<K>> a, std::vector<Summand<K>> b) {
    if (a.size() != b.size()) return false;
    for (auto& x : a) {
        bool found = false;
        for (auto& y : b) {
            if (y.multiplicity == 0 || y.multiplicity != x.multiplicity) continue;
            if (y.piece.dim == x.piece.dim && is_isomorphic(x.piece, y.piece)) {
                y.multiplicity = 0;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    for (auto& y : b)
        if (y.multiplicity != 0) return false;
    return true;
}

template <class K>
bool stably_isomorphic(const FdModule<K>& m, const FdModule<K>& n) {
    return same_summands(strip_projectives(m), strip_projectives(n));
}

// ---------------------------------------------------------------------------
// Simple modules
// ---------------------------------------------------------------------------

template <class K>
std::vector<FdModule<K>> simple_modules(const AlgebraPtr<K>& a) {
    std::vector<FdModule<K>> out;
    for (size_t i = 0; i < a->idempotents.size(); ++i) {
        SlotModule<K> s = slot_module(a, static_cast<int>(i));
        RowSpace<K> rad = radical_rows(s.mod);
        out.push_back(quotient_module(s.mod, rad).mod);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Short exact sequences and the syzygy splice
// ---------------------------------------------------------------------------

template <class K>
struct ShortExact {
    FdModule<K> a, b, c;
    Mat<K> inj;   // dim A x dim B
    Mat<K> surj;  // dim B x dim C
};

template <class K>
bool is_module_map(const FdModule<K>& m, const FdModule<K>& n, const Mat<K>& f) {
    for (int g = 0; g < m.alg->dim; ++g)
        if (!(m.action[g] * f == f * n.action[g])) return false;
    return true;
}

template <class K>
void validate_short_exact(const ShortExact<K>& s) {
    if (s.b.dim != s.a.dim + s.c.dim)
        throw Error(ErrorKind::Validation, "middle dimension must be the sum of the ends");
    if (rank(s.inj) != s.a.dim) throw Error(ErrorKind::Validation, "injection not injective");
    if (rank(s.surj) != s.c.dim) throw Error(ErrorKind::Validation, "surjection not surjective");
    if (!(s.inj * s.surj).is_zero())
        throw Error(ErrorKind::Validation, "composite of the two maps is nonzero");
    if (!is_module_map(s.a, s.b, s.inj) || !is_module_map(s.b, s.c, s.surj))
        throw Error(ErrorKind::Validation, "maps are not module homomorphisms");
}

template <class K>
struct SpliceStep {
    ShortExact<K> padded;     // 0 -> Omega(C) -> A + P -> B -> 0
    FdModule<K> syz;          // Omega(C)
    Mat<K> connecting;        // Omega(C) -> A
};

template <class K>
struct SpliceResult {
    // chain ..., Omega^2 C, Omega A, Omega B, Omega C, A, B, C read from
    // steps: step t replaces (A,B,C) by (Omega C, A, B') in padded form
    std::vector<SpliceStep<K>> steps;
};

// One pullback step of the long-exact splice: from 0 -> A -> B -> C -> 0
// produce 0 -> Omega(C) -> A + P(C) -> B -> 0 with the connecting map
// Omega(C) -> A recorded.
template <class K>
SpliceStep<K> splice_step(const ShortExact<K>& s) {
    const AlgebraPtr<K>& ap = s.a.alg;
    const Algebra<K>& alg = *ap;
    Cover<K> cov = projective_cover(s.c);

    // Module-linear lift sigma : P -> B with sigma*surj = pi, built on slot
    // generators.
    Mat<K> sigma(cov.proj.total_dim(), s.b.dim, alg.k0);
    for (size_t t = 0; t < cov.proj.slots.size(); ++t) {
        const SlotModule<K>& slot = cov.proj.slots[t];
        std::vector<K> gen_coords = coords_in(slot.space, alg.idempotents[slot.idem]);
        std::vector<K> gen_row(cov.proj.total_dim(), alg.k0);
        for (int i = 0; i < static_cast<int>(gen_coords.size()); ++i)
            gen_row[cov.proj.offsets[t] + i] = gen_coords[i];
        // pi(generator)
        std::vector<K> pg(s.c.dim, alg.k0);
        for (int j = 0; j < s.c.dim; ++j) {
            K acc = alg.k0;
            for (int i = 0; i < cov.proj.total_dim(); ++i)
                acc = acc + gen_row[i] * cov.surj.at(i, j);
            pg[j] = acc;
        }
        Mat<K> rhs(1, s.c.dim, alg.k0);
        rhs.set_row(0, pg);
        auto w = solve_left(s.surj, rhs);
        if (!w) throw std::logic_error("lift through surjection failed");
        // force the preimage into B*e
        std::vector<K> be(s.b.dim, alg.k0);
        Mat<K> eact = s.b.act(alg.idempotents[slot.idem]);
        for (int j = 0; j < s.b.dim; ++j) {
            K acc = alg.k0;
            for (int cc = 0; cc < s.b.dim; ++cc) acc = acc + w->at(0, cc) * eact.at(cc, j);
            be[j] = acc;
        }
        // sigma on the slot: u |-> be * u
        for (int r = 0; r < slot.space.dim(); ++r) {
            std::vector<K> u = slot.space.basis.row(r);
            Mat<K> act = s.b.act(u);
            for (int j = 0; j < s.b.dim; ++j) {
                K acc = alg.k0;
                for (int cc = 0; cc < s.b.dim; ++cc) acc = acc + be[cc] * act.at(cc, j);
                sigma.at(cov.proj.offsets[t] + r, j) = acc;
            }
        }
    }

    // Omega(C) and the connecting map.
    RowSpace<K> krows = row_space(row_kernel(cov.surj));
    FdModule<K> omega = submodule(cov.proj.mod, krows);
    Mat<K> into_b = krows.basis * sigma;  // lands in the image of inj
    auto x = solve_left(s.inj, into_b);
    if (!x) throw std::logic_error("splice connecting map does not factor through A");
    Mat<K> connecting = x->scaled(-alg.k0.one());

    // padded sequence 0 -> Omega(C) -> A + P -> B -> 0
    DirectSum<K> mid = direct_sum(ap, {s.a, cov.proj.mod});
    Mat<K> first(omega.dim, mid.mod.dim, alg.k0);
    for (int i = 0; i < omega.dim; ++i) {
        for (int j = 0; j < s.a.dim; ++j) first.at(i, j) = connecting.at(i, j);
        for (int j = 0; j < cov.proj.total_dim(); ++j)
            first.at(i, s.a.dim + j) = krows.basis.at(i, j);
    }
    Mat<K> second(mid.mod.dim, s.b.dim, alg.k0);
    for (int i = 0; i < s.a.dim; ++i)
        for (int j = 0; j < s.b.dim; ++j) second.at(i, j) = s.inj.at(i, j);
    for (int i = 0; i < cov.proj.total_dim(); ++i)
        for (int j = 0; j < s.b.dim; ++j) second.at(s.a.dim + i, j) = sigma.at(i, j);

    SpliceStep<K> step;
    step.padded = ShortExact<K>{omega, mid.mod, s.b, first, second};
    validate_short_exact(step.padded);
    step.syz = omega;
    step.connecting = connecting;
    return step;
}

template <class K>
SpliceResult<K> splice_syzygy_sequence(const ShortExact<K>& s, int depth) {
    validate_short_exact(s);
    SpliceResult<K> out;
    ShortExact<K> cur = s;
    for (int t = 0; t < depth; ++t) {
        SpliceStep<K> step = splice_step(cur);
        cur = step.padded;
        out.steps.push_back(std::move(step));
    }
    return out;
}

}  // namespace homcat
