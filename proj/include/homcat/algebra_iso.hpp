#pragma once

#include <algorithm>
#include <vector>

#include "homcat/algebra.hpp"

namespace homcat {

namespace isodetail {

template <class K>
std::vector<int> radical_series_dims(const Algebra<K>& a, const RowSpace<K>& rad) {
    std::vector<int> dims;
    RowSpace<K> cur = rad;
    int guard = 0;
    while (cur.dim() > 0 && guard++ <= a.dim) {
        dims.push_back(cur.dim());
        Mat<K> prod(0, a.dim, a.k0);
        for (int i = 0; i < cur.dim(); ++i)
            for (int j = 0; j < rad.dim(); ++j) {
                Mat<K> r(1, a.dim, a.k0);
                r.set_row(0, a.product(cur.basis.row(i), rad.basis.row(j)));
                prod = prod.vstack(r);
            }
        cur = row_space(prod);
    }
    return dims;
}

template <class K>
int center_dim(const Algebra<K>& a) {
    // kernel of v |-> (v*b - b*v)_b over the basis, as one wide system
    Mat<K> wide(a.dim, a.dim * a.dim, a.k0);
    for (int b = 0; b < a.dim; ++b) {
        Mat<K> diff = a.right_mult(a.basis_vec(b)) - a.left_mult(a.basis_vec(b));
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) wide.at(i, b * a.dim + j) = diff.at(i, j);
    }
    return row_kernel(wide).rows();
}

// Invariant screen: mismatch certifies non-isomorphism.
template <class K>
std::vector<int> screen(const Algebra<K>& a) {
    std::vector<int> s;
    s.push_back(a.dim);
    s.push_back(is_commutative(a) ? 1 : 0);
    s.push_back(center_dim(a));
    RowSpace<K> rad = a.has_radical ? a.radical : compute_radical(a);
    std::vector<int> series = radical_series_dims(a, rad);
    s.push_back(static_cast<int>(series.size()));
    for (int d : series) s.push_back(d);
    s.push_back(static_cast<int>(a.idempotents.size()));
    std::vector<int> peirce;
    for (const auto& ei : a.idempotents)
        for (const auto& ej : a.idempotents) {
            Mat<K> img(a.dim, a.dim, a.k0);
            for (int t = 0; t < a.dim; ++t)
                img.set_row(t, a.product(ei, a.product(a.basis_vec(t), ej)));
            peirce.push_back(rank(img));
        }
    std::sort(peirce.begin(), peirce.end());
    for (int d : peirce) s.push_back(d);
    return s;
}

// Loewy vector of a commutative local block; empty when the block is not
// uniserial over a split residue field.
template <class K>
std::optional<std::vector<int>> serial_block_shape(const Algebra<K>& a, const std::vector<K>& e) {
    CornerAlgebra<K> c = corner_algebra(a, e);
    if (!is_commutative(c.alg)) return std::nullopt;
    RowSpace<K> rad = compute_radical(c.alg);
    if (c.alg.dim - rad.dim() != 1) return std::nullopt;  // residue field must be k itself
    std::vector<int> series = radical_series_dims(c.alg, rad);
    std::vector<int> layers;
    int prev = c.alg.dim;
    for (int d : series) {
        layers.push_back(prev - d);
        prev = d;
    }
    layers.push_back(prev);
    for (int l : layers)
        if (l != 1) return std::nullopt;
    return std::vector<int>{c.alg.dim};
}

}  // namespace isodetail

// Decide algebra isomorphism for the small algebras the claim checker needs:
// invariant screening (certified negative), followed by certified positive
// classification for split semisimple and commutative serial algebras.
// Honest IsomorphismUndecided outside the covered classes.
template <class K>
bool algebra_isomorphic_small(const AlgebraPtr<K>& a, const AlgebraPtr<K>& b) {
    if (a->dim > 6 || b->dim > 6)
        throw Error(ErrorKind::DimensionTooLarge, "exhaustive isomorphism check limited to dim <= 6");
    if (a->dim != b->dim) return false;
    if (a->dim == 0) return true;
    if (isodetail::screen(*a) != isodetail::screen(*b)) return false;
    if (a->dim == 1) return true;

    // Split semisimple: as many primitive idempotents as dimensions means k^n.
    RowSpace<K> rada = a->has_radical ? a->radical : compute_radical(*a);
    if (rada.dim() == 0 && static_cast<int>(a->idempotents.size()) == a->dim) return true;

    // Commutative algebras with all blocks uniserial over k: classified by the
    // multiset of block dimensions (each block is k[t]/(t^m)).
    if (is_commutative(*a) && is_commutative(*b)) {
        std::vector<int> sa, sb;
        bool ok = true;
        for (const auto& e : a->idempotents) {
            auto s = isodetail::serial_block_shape(*a, e);
            if (!s) {
                ok = false;
                break;
            }
            sa.push_back((*s)[0]);
        }
        for (const auto& e : b->idempotents) {
            auto s = isodetail::serial_block_shape(*b, e);
            if (!s) {
                ok = false;
                break;
            }
            sb.push_back((*s)[0]);
        }
        if (ok) {
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            return sa == sb;
        }
    }
    throw Error(ErrorKind::IsomorphismUndecided,
                "algebras pass every invariant screen but are outside the certified classes");
}

}  // namespace homcat
