#pragma once

#include <map>
#include <utility>

#include "mui/cache.hpp"
#include "mui/groups.hpp"
#include "mui/series.hpp"
#include "mui/slice.hpp"
#include "mui/steenrod.hpp"

namespace mui {

// Exact division failed; `remainder` is a nonzero witness.
struct NotDivisible : std::runtime_error {
    Element remainder;
    NotDivisible(const std::string& msg, Element rem)
        : std::runtime_error(msg), remainder(std::move(rem)) {}
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dickson invariants of the subspace spanned by the listed variables
// (1-based, m = vars.size()), from the literal product prod_{x in V}(X - x):
//   prod (X - x) = sum_i (-1)^{m-i} c_{m,i} X^{p^i},  c_{m,m} = 1.
// dickson_all returns c_{m,0}, .., c_{m,m}; results are memoized.
const std::vector<Element>& dickson_all(KoszulCtx c, const std::vector<int>& vars);
Element dickson(KoszulCtx c, const std::vector<int>& vars, int i);

// u = dt_{i_1} .. dt_{i_m} for the listed variables.
Element top_form(KoszulCtx c, const std::vector<int>& vars);

// e_m = Q_0 Q_1 .. Q_{m-1} u on the listed variables; degree 2(p^m-1)/(p-1).
Element euler_class(KoszulCtx c, const std::vector<int>& vars);

// O_{n-1} = sum_{j=0}^{n-1} (-1)^{n-1-j} c_{n-1,j}(t_2..t_n) Q_j.
Element omega_apply(KoszulCtx c, const Element& x);

// f_n = O_{n-1}(dt_1) = sum_j (-1)^{n-1-j} c_{n-1,j} t_1^{p^j}; degree 2 p^{n-1}.
Element f_class(KoszulCtx c);

// Quotient x / divisor for a nonzero purely polynomial divisor; throws
// NotDivisible with the remainder when x is not an exact multiple.
Element exact_divide(const Element& x, const Element& divisor);

// Fundamental class of the family: u_n for SL_n and G_n, f_n^{p-2} u_n for G_n'.
Element ubar(const GroupSpec& H);

// Twisted Milnor operation: Q_i for i <= n-2 (and always for SL_n); for
// i = n-1, f_n^{-1} O_{n-1} on G_n and f_n^{-(p-1)} O_{n-1} on G_n'.
Element qbar_apply(const GroupSpec& H, int i, const Element& x);

// Basis (canonical RREF representatives) of the degree-d invariants of H
// acting on F_p[t_1..t_n] (x) Lambda(dt_1..dt_n).  Warns on slices larger
// than `budget` and refuses ones larger than 16 * budget.
std::vector<Element> invariant_basis(const GroupSpec& H, int d,
                                     const Cache* cache = nullptr,
                                     size_t budget = 20000);

// Invariant ring structure for the three families: the polynomial subring R
// and the module generators gen(I) = Qbar_I ubar, I a proper subset of
// {0..n-1} encoded as a bitmask.  The sentinel mask kUnitGen stands for 1.
class FamilyModule {
public:
    static constexpr unsigned kUnitGen = ~0u;

    struct RGen {
        std::string name;
        int deg;
        Element elem;
    };

    FamilyModule(Family fam, int n, uint32_t p);

    const GroupSpec& group() const { return spec_; }
    KoszulCtx ctx() const { return ctx_; }
    int n() const { return spec_.n; }
    uint32_t p() const { return ctx_.p; }
    unsigned full_mask() const { return (1u << n()) - 1; }

    // polynomial subring generators; the e-class is last
    const std::vector<RGen>& r_gens() const { return rgens_; }
    const Element& ek() const { return rgens_.back().elem; }
    int ek_deg() const { return rgens_.back().deg; }
    int ek_rank() const { return ek_rank_; } // n for SL_n, n-1 for G_n, G_n'

    const Element& gen(unsigned mask);
    int gen_deg(unsigned mask);
    std::string gen_name(unsigned mask) const;

    const Element& ek_pow(int a);

    // monomials in the r_gens of total degree d (optionally excluding e_k)
    const std::vector<Element>& r_monomials(int d, bool skip_ek = false);

    // spanning set in degree d of the R-span (R/(e_k)-span when mod_ek) of
    // the elements e_k^a gen(mask) for (mask, a) in `gens`
    std::vector<Element> span_in_degree(
        const std::vector<std::pair<unsigned, int>>& gens, int d,
        bool mod_ek = false);

    // Poincare series of the same free module
    Poly span_series(const std::vector<std::pair<unsigned, int>>& gens,
                     size_t trunc, bool mod_ek = false);

    // all module generators: kUnitGen plus every proper subset mask
    std::vector<unsigned> all_gen_masks() const;

private:
    GroupSpec spec_;
    KoszulCtx ctx_;
    int ek_rank_ = 0;
    std::vector<RGen> rgens_;
    std::map<unsigned, Element> gens_;
    std::vector<Element> ek_pows_;
    std::map<std::pair<int, bool>, std::vector<Element>> rmono_;
};

// Poincare series of the invariant ring predicted by the structure theorem.
Poly predicted_series(Family fam, int n, uint32_t p, size_t trunc);
int64_t predicted_dimension(Family fam, int n, uint32_t p, int d);

} // namespace mui
