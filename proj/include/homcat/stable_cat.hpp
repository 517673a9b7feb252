#pragma once

#include <string>
#include <vector>

#include "homcat/mf.hpp"
#include "homcat/module.hpp"

namespace homcat {

// The stable category of maximal Cohen-Macaulay modules over k[x]/(f),
// presented by its indecomposables, the table of stable hom-sets, and the
// stable endomorphism algebra of the additive generator.
template <class K>
struct StableCatPresentation {
    Poly<K> f;
    AlgebraPtr<K> ring;
    std::vector<MatrixFactorization<K>> mfs;
    std::vector<FdModule<K>> indecomposables;  // cokernels of the mfs
    std::vector<std::vector<StableHom<K>>> table;
    AlgebraPtr<K> lambda;

    struct BasisElem {
        int from = 0, to = 0, index = 0;  // stable class index in table[from][to]
    };
    std::vector<BasisElem> basis;

    int hom_dim(int i, int j) const { return table[i][j].dim; }
    int lambda_dim() const { return lambda->dim; }
};

namespace scdetail {

// Express a hom class in the coset-representative basis of a stable hom-set:
// solve against [reps | projective-factoring basis] and keep the rep part.
template <class K>
std::vector<K> stable_coords(const StableHom<K>& sh, const Mat<K>& h, const K& zero) {
    const int reps = static_cast<int>(sh.coset_reps.size());
    std::vector<K> out(reps, zero);
    if (h.rows() == 0 || h.cols() == 0) return out;
    const int amb = h.rows() * h.cols();
    Mat<K> basis(reps + sh.proj_factoring.dim(), amb, zero);
    for (int t = 0; t < reps; ++t) basis.set_row(t, flatten(sh.coset_reps[t]));
    for (int t = 0; t < sh.proj_factoring.dim(); ++t)
        basis.set_row(reps + t, sh.proj_factoring.basis.row(t));
    Mat<K> rhs(1, amb, zero);
    rhs.set_row(0, flatten(h));
    auto sol = solve_left(basis, rhs);
    if (!sol) throw std::logic_error("hom class outside the stable hom-set span");
    for (int t = 0; t < reps; ++t) out[t] = sol->at(0, t);
    return out;
}

}  // namespace scdetail

template <class K>
StableCatPresentation<K> build_stable_category(const Poly<K>& f) {
    StableCatPresentation<K> sc{f};
    sc.ring = ring_algebra(f);
    sc.mfs = mf_indecomposables(f, sc.ring);
    for (const auto& mf : sc.mfs) sc.indecomposables.push_back(mf_cokernel(mf, sc.ring));
    const K zero = field_prototype(f.zero_proto());
    const int r = static_cast<int>(sc.indecomposables.size());

    sc.table.assign(r, std::vector<StableHom<K>>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) sc.table[i][j] = stable_hom(sc.indecomposables[i], sc.indecomposables[j]);

    // flat basis of Lambda = End of the additive generator in the stable category
    std::vector<std::vector<int>> start(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            start[i][j] = static_cast<int>(sc.basis.size());
            for (int t = 0; t < sc.table[i][j].dim; ++t)
                sc.basis.push_back(typename StableCatPresentation<K>::BasisElem{i, j, t});
        }
    const int dim = static_cast<int>(sc.basis.size());
    if (dim == 0) {
        Algebra<K> zero_alg;
        zero_alg.k0 = zero;
        sc.lambda = make_algebra(std::move(zero_alg));
        return sc;
    }

    Algebra<K> alg;
    alg.k0 = zero;
    alg.dim = dim;
    for (const auto& be : sc.basis)
        alg.labels.push_back("h" + std::to_string(be.from) + std::to_string(be.to) + "_" +
                             std::to_string(be.index));
    alg.unit.assign(dim, zero);
    std::vector<std::vector<K>> idems;
    for (int i = 0; i < r; ++i) {
        Mat<K> id = Mat<K>::identity(sc.indecomposables[i].dim, zero);
        std::vector<K> coords = scdetail::stable_coords(sc.table[i][i], id, zero);
        std::vector<K> e(dim, zero);
        for (int t = 0; t < sc.table[i][i].dim; ++t) e[start[i][i] + t] = coords[t];
        for (int t = 0; t < dim; ++t) alg.unit[t] = alg.unit[t] + e[t];
        idems.push_back(std::move(e));
    }
    alg.mult.assign(dim, std::vector<typename Algebra<K>::Vec>(dim, std::vector<K>(dim, zero)));
    for (int s = 0; s < dim; ++s)
        for (int t = 0; t < dim; ++t) {
            const auto& bs = sc.basis[s];
            const auto& bt = sc.basis[t];
            if (bs.to != bt.from) continue;  // non-composable classes multiply to zero
            Mat<K> comp = sc.table[bs.from][bs.to].coset_reps[bs.index] *
                          sc.table[bt.from][bt.to].coset_reps[bt.index];
            std::vector<K> coords = scdetail::stable_coords(sc.table[bs.from][bt.to], comp, zero);
            for (int u = 0; u < sc.table[bs.from][bt.to].dim; ++u)
                alg.mult[s][t][start[bs.from][bt.to] + u] = coords[u];
        }
    sc.lambda = make_algebra(std::move(alg), idems);
    return sc;
}

// Direct computation of dim End(G) and of the projective-factoring subspace of
// End(G) for the additive generator G; the stable table must reproduce
// dim End(G) - dim P(G, G).
template <class K>
std::pair<int, int> generator_end_dims(const StableCatPresentation<K>& sc) {
    if (sc.indecomposables.empty()) return {0, 0};
    FdModule<K> g = direct_sum(sc.ring, sc.indecomposables).mod;
    StableHom<K> sh = stable_hom(g, g);
    return {static_cast<int>(sh.hom_basis.size()), sh.proj_factoring.dim()};
}

}  // namespace homcat
