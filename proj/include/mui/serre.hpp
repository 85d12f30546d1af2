#pragma once

#include <array>

#include "mui/bgmodel.hpp"

namespace mui {

// Dimension series carrying two formal unknowns besides the honest
// polynomial part: S(t) (the fiber coefficient ring, a free-module factor
// of H^*(G/T)) and K(t) (the kernel of the restriction to the elementary
// abelian subgroup).  Every stored series is (known part) + S-part * S +
// K-part * K + KS-part * K * S.
enum class Symbol { One = 0, S = 1, K = 2, KS = 3 };

struct SymSeries {
    std::array<Poly, 4> c;

    explicit SymSeries(size_t trunc = 0)
        : c{Poly(trunc), Poly(trunc), Poly(trunc), Poly(trunc)} {}

    Poly& operator[](Symbol s) { return c[size_t(s)]; }
    const Poly& operator[](Symbol s) const { return c[size_t(s)]; }

    SymSeries operator+(const SymSeries& o) const {
        SymSeries r;
        for (int i = 0; i < 4; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    SymSeries operator-(const SymSeries& o) const {
        SymSeries r;
        for (int i = 0; i < 4; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    bool operator==(const SymSeries& o) const {
        for (int i = 0; i < 4; ++i)
            if (!(c[i] == o.c[i])) return false;
        return true;
    }
    bool nonnegative() const {
        for (const Poly& q : c)
            if (!q.nonnegative()) return false;
        return true;
    }
};

// One tensor-product summand of a page: a base-module series (over the
// plain symbol or over K) times a fiber factor (a polynomial in t^m from
// powers of x_m) times the symbol S.
struct Piece {
    std::string label;
    bool over_kernel = false; // base module is K * (module series)
    Poly module;
    Poly fiber; // sum of t^{jm} over the surviving x_m powers

    SymSeries total(size_t trunc) const;
};

struct Page {
    int r = 2; // page index
    std::vector<Piece> pieces;
    SymSeries total(size_t trunc) const;
};

// Series replay of the spectral sequence of G/T -> BT -> BG: the E_2 page,
// the differential d_{m+1} (transgression of x_m against multiplication by
// y_{m+1}), the differential d_{n+1} with n = m(p-1) (against Q_{k-1}),
// and the collapse identities at E_infinity.
class SerreReplay {
public:
    SerreReplay(const CaseSpec& cs, size_t D);

    const CaseSpec& spec() const { return cs_; }
    size_t trunc() const { return D_; }

    Page build_E2() const;
    Page apply_first_differential() const;  // E_{m+2}
    Page apply_second_differential() const; // E_{n+2} = E_infinity

    // known part of the E_infinity bottom row: M_0^even/(e_k) + M_1^even/(e_k)
    Poly einfty_bottom_known() const;

    // full report: shift identities, conservation with exact pairwise
    // cancellation, nonnegativity, bottom-row identities, and the recorded
    // assumptions the replay consumes as axioms
    std::vector<CheckRow> run() const;

private:
    CaseSpec cs_;
    size_t D_;
    Poly m0_, m1_, q0_, q1_, m0even_, m0odd_;
    int nbig_ = 0, ekdeg_ = 0;
};

} // namespace mui
