#pragma once

#include "mui/invariants.hpp"
#include "mui/report.hpp"

namespace mui {

// Closed-form product of module generators: Q_I u_n . Q_J u_n is zero
// unless I u J = {0..n-1}, in which case it is sign . e Q_K u_n with
// K = I n J and r = |I \ K|.  Same shape for the barred generators.
struct ProductLawResult {
    bool zero = true;
    int sign = 0;
    unsigned K = 0;
};
ProductLawResult product_law(unsigned maskI, unsigned maskJ, int n);

// Exhaustive comparison of product_law with the honest algebra product
// over all pairs of subsets of {0..n-1} (full subsets included).
std::vector<CheckRow> verify_product_law(FamilyModule& fm);

// weight of a basis monomial contribution e_k^b gen(I): n*b + |I|
int generator_weight(const FamilyModule& fm, unsigned mask, int ekpow);

// The split R + F_{inf,i} = N_0 + N_1 along the index ell: N_0 holds the
// unit and the generators with ell in I, N_1 those with ell not in I;
// each generator carries the minimal e_k power lifting its weight to >= i.
struct SplitSpec {
    int ell = 0, i = 0;
    int ek_index = 0; // k: n for SL_n, n-1 for G_n, G_n'
    std::vector<std::pair<unsigned, int>> n0_gens, n1_gens;
    unsigned z_mask = 0;
    Element z;
};

SplitSpec split(FamilyModule& fm, int ell, int i);

// weight-graded piece F_j of the invariant module, spanned in degree d
std::vector<Element> weight_span(FamilyModule& fm, int weight, int d);

std::vector<CheckRow> check_prop33(FamilyModule& fm, int i, int ell, int maxdeg,
                                   const Cache* cache = nullptr);
std::vector<CheckRow> check_prop34(FamilyModule& fm, int i, int ell, int maxdeg,
                                   const Cache* cache = nullptr);

} // namespace mui
