#pragma once

#include <cstdint>

#include "homcat/matrix.hpp"

namespace testutil {

// Deterministic generator for property-style tests.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    }
    long pick(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1)); }
};

template <class K>
homcat::Mat<K> random_matrix(Rng& rng, int rows, int cols, const K& proto) {
    homcat::Mat<K> m(rows, cols, homcat::field_prototype(proto));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = homcat::scalar_from_int(rng.pick(-6, 6), proto);
    return m;
}

}  // namespace testutil
