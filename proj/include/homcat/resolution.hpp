#pragma once

#include <optional>
#include <vector>

#include "homcat/module.hpp"

namespace homcat {

template <class K>
struct PeriodicityWitness {
    int i = 0, j = 0;      // Omega^i M isomorphic to Omega^j M, i < j
    FdModule<K> from, to;  // the two syzygies
    Mat<K> iso;
};

template <class K>
bool verify_periodicity(const PeriodicityWitness<K>& w) {
    if (w.from.dim == 0 || w.from.dim != w.to.dim) return false;
    if (!is_invertible(w.iso)) return false;
    return is_module_map(w.from, w.to, w.iso);
}

// Minimal projective resolution with termination flag and the first detected
// syzygy repetition. Covers are computed up to `cap` steps regardless of
// periodicity so that Ext in low degrees is always available.
template <class K>
struct Resolution {
    FdModule<K> mod;
    std::vector<Cover<K>> covers;          // covers[i] covers Omega^i
    std::vector<FdModule<K>> syzygies;     // Omega^1, Omega^2, ...
    std::vector<RowSpace<K>> incl;         // rows of Omega^{i+1} inside P_i
    bool terminated = false;
    std::optional<PeriodicityWitness<K>> periodicity;

    int computed_length() const { return static_cast<int>(covers.size()); }
    // projective dimension; valid only when terminated
    int pd() const { return std::max(0, static_cast<int>(covers.size()) - 1); }

    const FdModule<K>& omega(int i) const { return i == 0 ? mod : syzygies[i - 1]; }

    // differential P_i -> P_{i-1} (i >= 1)
    Mat<K> differential(int i) const { return covers[i].surj * incl[i - 1].basis; }
};

template <class K>
std::optional<Mat<K>> find_isomorphism(const FdModule<K>& m, const FdModule<K>& n) {
    if (m.dim != n.dim || m.dim == 0) return std::nullopt;
    if (module_fingerprint(m) != module_fingerprint(n)) return std::nullopt;
    std::vector<Mat<K>> hom = hom_space(m, n);
    for (const auto& f : hom)
        if (is_invertible(f)) return f;
    uint64_t state = 0x5bd1e995u;
    for (int t = 0; t < 60; ++t) {
        Mat<K> f(m.dim, n.dim, m.alg->k0);
        for (const auto& b : hom) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            long c = static_cast<long>((state >> 33) % 23) - 11;
            if (c != 0) f = f + b.scaled(scalar_from_int(c, m.alg->k0));
        }
        if (is_invertible(f)) return f;
    }
    if (is_isomorphic(m, n)) {
        // certified isomorphic but random search missed it: enumerate
        const int h = static_cast<int>(hom.size());
        const long radix = field_characteristic(m.alg->k0) != 0
                               ? static_cast<long>(field_characteristic(m.alg->k0))
                               : static_cast<long>(m.dim) + 1;
        std::vector<long> digits(h, 0);
        for (;;) {
            Mat<K> f(m.dim, n.dim, m.alg->k0);
            for (int i = 0; i < h; ++i)
                if (digits[i] != 0) f = f + hom[i].scaled(scalar_from_int(digits[i], m.alg->k0));
            if (is_invertible(f)) return f;
            int pos = 0;
            while (pos < h && ++digits[pos] == radix) digits[pos++] = 0;
            if (pos == h) break;
        }
    }
    return std::nullopt;
}

template <class K>
Resolution<K> min_resolution(const FdModule<K>& m, int cap, bool stop_on_periodicity = false) {
    Resolution<K> res;
    res.mod = m;
    FdModule<K> cur = m;
    for (int step = 0; step < cap; ++step) {
        Cover<K> c = projective_cover(cur);
        RowSpace<K> krows = row_space(row_kernel(c.surj));
        FdModule<K> omega = submodule(c.proj.mod, krows);
        res.covers.push_back(std::move(c));
        res.incl.push_back(krows);
        if (omega.dim == 0) {
            res.terminated = true;
            res.syzygies.push_back(omega);
            return res;
        }
        if (!res.periodicity) {
            for (int prev = 0; prev <= static_cast<int>(res.syzygies.size()); ++prev) {
                const FdModule<K>& earlier = res.omega(prev);
                if (earlier.dim != omega.dim || earlier.dim == 0) continue;
                auto iso = find_isomorphism(earlier, omega);
                if (iso) {
                    res.periodicity = PeriodicityWitness<K>{
                        prev, static_cast<int>(res.syzygies.size()) + 1, earlier, omega, *iso};
                    break;
                }
            }
        }
        res.syzygies.push_back(omega);
        cur = res.syzygies.back();
        if (res.periodicity && stop_on_periodicity) break;
    }
    return res;
}

// Basis of Hom_A(P, N) for a slot-presented projective, via Hom(e_i A, N) =
// N e_i. Far cheaper than the generic commuting-map solve.
template <class K>
std::vector<Mat<K>> projective_hom_basis(const ProjPresentation<K>& p, const FdModule<K>& n) {
    std::vector<Mat<K>> out;
    const Algebra<K>& a = *n.alg;
    for (size_t t = 0; t < p.slots.size(); ++t) {
        const SlotModule<K>& slot = p.slots[t];
        RowSpace<K> ne = row_space(n.act(a.idempotents[slot.idem]));
        for (int w = 0; w < ne.dim(); ++w) {
            Mat<K> f(p.total_dim(), n.dim, a.k0);
            for (int r = 0; r < slot.space.dim(); ++r) {
                Mat<K> act = n.act(slot.space.basis.row(r));
                for (int j = 0; j < n.dim; ++j) {
                    K acc = a.k0;
                    for (int cc = 0; cc < n.dim; ++cc) acc = acc + ne.basis.at(w, cc) * act.at(cc, j);
                    f.at(p.offsets[t] + r, j) = acc;
                }
            }
            out.push_back(std::move(f));
        }
    }
    return out;
}

// dim_k Ext^i(M, N) for 0 <= i <= max_deg from one shared minimal resolution
// of M (covers up to max_deg + 1: the outgoing differential of C^deg lives on
// the next cover).
template <class K>
std::vector<int> ext_dims(const FdModule<K>& m, const FdModule<K>& n, int max_deg, int cap = 20) {
    std::vector<int> out(max_deg + 1, 0);
    if (m.dim == 0 || n.dim == 0) return out;
    if (max_deg > 0 && max_deg + 1 > cap)
        throw Error(ErrorKind::CapExceeded, "resolution cap " + std::to_string(cap) +
                                                " reached before degree " + std::to_string(max_deg));
    Resolution<K> res = min_resolution(m, max_deg + 2);
    auto hom_count = [&](int i) -> int {
        if (i >= res.computed_length()) return 0;
        int total = 0;
        for (const auto& slot : res.covers[i].proj.slots)
            total += rank(n.act(m.alg->idempotents[slot.idem]));
        return total;
    };
    std::vector<int> delta(max_deg + 2, 0);  // rank of Hom(P_{i-1}, N) -> Hom(P_i, N)
    for (int i = 1; i <= max_deg + 1; ++i) {
        if (i >= res.computed_length()) break;
        std::vector<Mat<K>> basis = projective_hom_basis(res.covers[i - 1].proj, n);
        if (basis.empty()) continue;
        Mat<K> d = res.differential(i);
        Mat<K> rows(static_cast<int>(basis.size()), res.covers[i].proj.total_dim() * n.dim,
                    m.alg->k0);
        for (size_t t = 0; t < basis.size(); ++t)
            rows.set_row(static_cast<int>(t), flatten(d * basis[t]));
        delta[i] = rank(rows);
    }
    for (int i = 0; i <= max_deg; ++i) {
        int outgoing = (i + 1 <= max_deg + 1) ? delta[i + 1] : 0;
        out[i] = hom_count(i) - outgoing - (i >= 1 ? delta[i] : 0);
    }
    return out;
}

template <class K>
int ext_dim(const FdModule<K>& m, const FdModule<K>& n, int deg, int cap = 20) {
    if (deg == 0) return static_cast<int>(hom_space(m, n).size());
    return ext_dims(m, n, deg, cap)[deg];
}

}  // namespace homcat
