#pragma once

#include "mui/serre.hpp"
#include "mui/weyl.hpp"

namespace mui {

// Verification suites shared by the command-line driver and the acceptance
// battery.  Each returns one CheckRow per statement instance; rows are
// emitted in a fixed order so reports are byte-reproducible.

// Milnor operation laws: squares, anticommutativity, closed vs recursive
// form on every slice basis element, and signed Leibniz / Cartan formulas
// on seeded random pairs.
std::vector<CheckRow> suite_steenrod(uint32_t p, int n, int maxdeg, int imax,
                                     int random_pairs);

// exact-division identities defining u_{n-1} and e_{n-1} inside rank n
std::vector<CheckRow> suite_division(uint32_t p, int n);

// closed product formula against the honest algebra product, all subset pairs
std::vector<CheckRow> suite_lemma31(Family fam, int n, uint32_t p);

// weight-filtration statements; (i, ell) chosen per rank: (0,1), (1,2), (2,2)
std::vector<CheckRow> suite_prop33(Family fam, int n, uint32_t p, int maxdeg,
                                   const Cache* cache = nullptr);
std::vector<CheckRow> suite_prop34(Family fam, int n, uint32_t p, int maxdeg,
                                   const Cache* cache = nullptr);

// brute-force invariant dimensions against the structure-theorem series
std::vector<CheckRow> suite_thm41(Family fam, int n, uint32_t p, int maxdeg,
                                  const Cache* cache = nullptr, int jobs = 1);

// image-module decomposition and its short exact sequences for one case
std::vector<CheckRow> suite_prop43(const std::string& case_name, int maxdeg,
                                   const Cache* cache = nullptr);

// Steenrod-plus-product closure of the listed generators for one case
std::vector<CheckRow> suite_closure(const std::string& case_name, int maxdeg);

// series replay of the spectral sequence for one case (or all when empty)
std::vector<CheckRow> suite_serre(const std::string& case_name, int D);

// Weyl-group invariants of the torus against the lower-bound series; heavy
// rank >= 6 runs stay gated unless run_gated is set; golden_dir, when
// nonempty, must contain the checked-in CSV tables
std::vector<CheckRow> suite_weyl(const std::string& case_name, int maxdeg,
                                 const std::string& golden_dir = "",
                                 bool run_gated = false, int jobs = 1);

std::pair<int, int> split_indices_for_rank(int n); // (i, ell)

} // namespace mui
