#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mui/koszul.hpp"

namespace mui {

enum class Family { SLn, Gn, GnPrime, Explicit };

std::string family_name(Family f);

// A finite matrix subgroup of GL_n(F_p), given by generators.
struct GroupSpec {
    Family family = Family::Explicit;
    int n = 0;
    uint32_t p = 3;
    std::vector<MatrixGL> generators;

    KoszulCtx ctx() const { return KoszulCtx(p, n); }
};

// Generator sets: SL_n = all elementary transvections E_ij(1); G_n = SL_{n-1}
// transvections in the lower-right block plus row-1 unipotents E_1j(1), j>=2;
// G_n' additionally diag(alpha,1,..,1) with alpha a generator of (F_p)^x.
// The block generators come first so that invariant computations can peel the
// rank-(n-1) subproblem off cheaply.
GroupSpec group_generators(Family family, int n, uint32_t p);

uint32_t primitive_root(uint32_t p);

// Order of the generated matrix group by closure enumeration (BFS).
// Aborts (nullopt) if the closure exceeds `limit` elements.
std::optional<uint64_t> closure_order(const std::vector<MatrixGL>& gens,
                                      uint64_t limit = 2'000'000);

// Expected orders from the standard formulas.
uint64_t expected_order(Family family, int n, uint32_t p);

} // namespace mui
