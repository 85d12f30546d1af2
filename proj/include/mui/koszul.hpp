#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mui/fp.hpp"

namespace mui {

constexpr int kMaxRank = 8;

// Ambient algebra context: F_p[t_1..t_n] (x) Lambda(dt_1..dt_n).
// t_i has degree 2, dt_i has degree 1.  Immutable.
struct KoszulCtx {
    uint32_t p;
    int n;

    KoszulCtx(uint32_t prime, int rank) : p(prime), n(rank) {
        FieldCtx check(prime); // validates primality
        if (rank < 1 || rank > kMaxRank)
            throw std::invalid_argument("KoszulCtx: rank out of range");
    }

    bool operator==(const KoszulCtx& o) const { return p == o.p && n == o.n; }
    FieldCtx field() const { return FieldCtx(p); }
};

// Monomial: t_1^{e[0]} .. t_n^{e[n-1]} dt_{i1}..dt_{is} with ext a bitmask
// over variables (bit i set => dt_{i+1} present), factors stored increasing.
struct Mono {
    std::array<uint8_t, kMaxRank> e{};
    uint8_t ext = 0;

    int degree() const {
        int d = 0;
        for (int i = 0; i < kMaxRank; ++i) d += 2 * e[i];
        return d + __builtin_popcount(ext);
    }

    bool operator==(const Mono& o) const { return ext == o.ext && e == o.e; }

    // canonical order: ext bitset first, then exponent vector lexicographically
    bool operator<(const Mono& o) const {
        if (ext != o.ext) return ext < o.ext;
        return e < o.e;
    }

    uint64_t pack_lo() const {
        uint64_t v = 0;
        for (int i = 0; i < kMaxRank; ++i) v = (v << 8) | e[i];
        return v;
    }
};

struct MonoHash {
    size_t operator()(const Mono& m) const {
        uint64_t v = m.pack_lo() * 0x9e3779b97f4a7c15ULL;
        v ^= uint64_t(m.ext) << 29;
        v ^= v >> 31;
        return size_t(v * 0xbf58476d1ce4e5b9ULL);
    }
};

// Sign of the permutation sorting the concatenation (I, J) of two disjoint
// increasing index lists into increasing order; +1 if either is empty.
int sign_interleave(uint8_t maskI, uint8_t maskJ);
int sign_interleave(const std::vector<int>& I, const std::vector<int>& J);

// Element of the Koszul algebra: sorted term list, coefficients in [1, p).
class Element {
public:
    Element() = default;
    explicit Element(KoszulCtx c) : ctx_(c) {}

    static Element zero(KoszulCtx c) { return Element(c); }
    static Element one(KoszulCtx c) {
        Element x(c);
        x.terms_.push_back({Mono{}, 1});
        return x;
    }
    static Element variable(KoszulCtx c, int i); // t_i (1-based)
    static Element dvariable(KoszulCtx c, int i); // dt_i (1-based)
    static Element monomial(KoszulCtx c, const Mono& m, uint32_t coeff);

    const KoszulCtx& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::vector<std::pair<Mono, uint16_t>>& terms() const { return terms_; }

    // common degree of all terms; throws if mixed or zero queried with strict
    bool homogeneous(int* deg = nullptr) const;
    int degree() const; // throws on mixed; returns -1 for zero

    uint32_t coeff(const Mono& m) const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;
    Element scaled(uint32_t c) const;
    Element operator-() const { return scaled(ctx_.p - 1); }
    bool operator==(const Element& o) const {
        return ctx_ == o.ctx_ && terms_ == o.terms_;
    }

    Element pow(unsigned k) const;

    std::string str() const;

    // Build from unsorted accumulation; drops zero coefficients.
    static Element collect(KoszulCtx c, std::vector<std::pair<Mono, uint32_t>>&& acc);

private:
    KoszulCtx ctx_{3, 1};
    std::vector<std::pair<Mono, uint16_t>> terms_;
};

// Invertible n x n matrix over F_p.
struct MatrixGL {
    uint32_t p;
    int n;
    std::array<std::array<uint8_t, kMaxRank>, kMaxRank> a{};

    MatrixGL(uint32_t prime, int rank) : p(prime), n(rank) {}
    static MatrixGL identity(uint32_t p, int n);

    uint32_t at(int i, int j) const { return a[i][j]; }
    void set(int i, int j, uint32_t v) { a[i][j] = uint8_t(v % p); }

    uint32_t det() const;
    MatrixGL operator*(const MatrixGL& o) const;
    bool operator==(const MatrixGL& o) const;
    bool operator<(const MatrixGL& o) const;
    uint64_t key() const; // packed, for hashing/enumeration (n <= 4 fits)
};

// Algebra automorphism determined by t_i -> sum_j g[i][j] t_j and
// dt_i -> sum_j g[i][j] dt_j.  Throws if g is singular or sizes mismatch.
Element apply_matrix(const MatrixGL& g, const Element& x);

// Named elements.
Element top_form_vars(KoszulCtx c, const std::vector<int>& vars); // dt product

} // namespace mui
