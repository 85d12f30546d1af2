#pragma once

#include <memory>

#include "mui/filtration.hpp"

namespace mui {

// The five base cases: compact group label, prime, fiber degree m, Euler
// index k, rank of the elementary abelian subgroup, the matrix family of
// its normalizer action, and the generator data of the free modules M_0
// and M_1 with their restriction images.
struct CaseSpec {
    std::string name;  // machine name: pu3, pu5, f4, e6, e7, e8
    std::string label; // display label: PU(3), F_4, ...
    uint32_t p = 3;
    int m = 2;     // degree of the fiber algebra generator x_m
    int k = 2;     // index of the Euler-type class e_k
    int rankA = 2; // n, rank of the elementary abelian subgroup
    int ell = 1;   // split index for the N_0/N_1 decomposition
    int i = 0;     // filtration stage of the decomposition
    Family family = Family::SLn;
    // restrict the invariant module to generators containing the top index
    // (only the e7 case, whose image sits inside the submodule on u_{n-1})
    bool restrict_top = false;

    struct Gen {
        std::string label;
        int deg = 0;
    };
    std::vector<int> r_degs; // polynomial subring generator degrees, e_k last
    std::vector<Gen> m0, m1;
    std::vector<std::string> closure_gens; // labels of the image generators
};

const std::vector<CaseSpec>& case_table();
const CaseSpec& case_by_name(const std::string& name);

enum class ModulePart { M0, M1, M0Even, M1Even, M0Odd, M0EvenModEk, M1EvenModEk };

// Free-module Poincare series of the named part over R (over R/(e_k) for
// the ModEk parts), from generator-degree data alone.
Poly series_M(const CaseSpec& cs, ModulePart part, size_t trunc);

// A case instantiated inside the brute-force invariant ring: the module
// generators of M_0 and M_1 realized as restriction images, built from the
// generator relations (y_8 = P^1 y_4 and so on) rather than transcribed
// from the displayed image lists.
class CaseModel {
public:
    explicit CaseModel(const CaseSpec& cs);

    const CaseSpec& spec() const { return cs_; }
    FamilyModule& fm() { return *fm_; }

    const std::vector<Element>& m0_images() const { return m0_; }
    const std::vector<Element>& m1_images() const { return m1_; }
    const Element& y_m1_image() const { return ym1_; } // image of y_{m+1}
    const std::vector<Element>& closure_generators() const { return closure_; }

    // every image is fixed by every group generator; checked on construction
    std::vector<CheckRow> invariance_report() const { return invariance_; }

    // degree-d spanning sets of the image modules over R
    std::vector<Element> image_span(ModulePart part, int d);

private:
    CaseSpec cs_;
    std::unique_ptr<FamilyModule> fm_;
    std::vector<Element> m0_, m1_, closure_;
    Element ym1_;
    std::vector<CheckRow> invariance_;
};

// Freeness, directness, match with the filtration decomposition, and the
// two short exact sequences (multiplication by the image of y_{m+1}, and
// Q_{k-1}), degree by degree up to maxdeg.
std::vector<CheckRow> check_prop_image(CaseModel& cm, int maxdeg,
                                       const Cache* cache = nullptr);

// Closure of the case's listed image generators under products, the
// Bockstein and the reduced powers equals the image module degreewise.
std::vector<CheckRow> steenrod_closure_check(CaseModel& cm, int maxdeg);

} // namespace mui
