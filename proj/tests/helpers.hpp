#pragma once

#include <random>

#include "mui/slice.hpp"

namespace mui::testutil {

// deterministic random homogeneous element of the given degree
inline Element random_homogeneous(KoszulCtx c, int degree, std::mt19937& rng) {
    DegreeSlice s = DegreeSlice::make(c, degree);
    std::uniform_int_distribution<uint32_t> coin(0, c.p - 1);
    std::vector<std::pair<Mono, uint32_t>> acc;
    for (size_t i = 0; i < s.dim(); ++i) {
        uint32_t v = coin(rng);
        if (v) acc.push_back({s.mono(i), v});
    }
    return Element::collect(c, std::move(acc));
}

} // namespace mui::testutil
