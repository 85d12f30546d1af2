#pragma once

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mui {

// Arithmetic context for the prime field F_p, p an odd prime.
struct FieldCtx {
    uint32_t p;

    explicit FieldCtx(uint32_t prime) : p(prime) {
        if (p < 3 || !is_prime(p))
            throw std::invalid_argument("FieldCtx: modulus must be an odd prime >= 3");
    }

    static bool is_prime(uint32_t m) {
        if (m < 2) return false;
        for (uint32_t d = 2; d * d <= m; ++d)
            if (m % d == 0) return false;
        return true;
    }

    uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p; }
    uint32_t sub(uint32_t a, uint32_t b) const { return (a + p - b % p) % p; }
    uint32_t mul(uint32_t a, uint32_t b) const { return (uint64_t(a) * b) % p; }
    uint32_t neg(uint32_t a) const { return a % p ? p - a % p : 0; }

    uint32_t pow(uint32_t a, uint64_t e) const {
        uint64_t r = 1, b = a % p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return uint32_t(r);
    }

    uint32_t inv(uint32_t a) const {
        a %= p;
        if (a == 0) throw std::domain_error("FieldCtx::inv of zero");
        return pow(a, p - 2);
    }
};

// Dense matrix over F_p.  Entries are kept in uint16_t with lazy reduction:
// rows carry an upper bound on their entries and are reduced mod p only when
// an overflow could occur.  p is always 3 or 5 here, so a row survives
// thousands of axpy updates between reductions.
class GFMat {
public:
    GFMat() : p_(3), rows_(0), cols_(0) {}
    GFMat(uint32_t p, size_t rows, size_t cols)
        : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0), bound_(rows, 0) {}

    uint32_t p() const { return p_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint16_t* row(size_t i) { return a_.data() + i * cols_; }
    const uint16_t* row(size_t i) const { return a_.data() + i * cols_; }

    uint32_t at(size_t i, size_t j) const { return a_[i * cols_ + j] % p_; }
    void set(size_t i, size_t j, uint32_t v) {
        a_[i * cols_ + j] = uint16_t(v % p_);
        if (v % p_ > bound_[i]) bound_[i] = uint16_t(v % p_);
    }

    void reduce_row(size_t i) {
        uint16_t* r = row(i);
        for (size_t j = 0; j < cols_; ++j) r[j] %= p_;
        bound_[i] = uint16_t(p_ - 1);
    }

    // row(dst) += c * row(src); src must be reduced (entries < p).
    void axpy_row(size_t dst, size_t src, uint32_t c) {
        if (c == 0) return;
        uint32_t add = c * (p_ - 1);
        if (uint32_t(bound_[dst]) + add > 65000) reduce_row(dst);
        uint16_t* d = row(dst);
        const uint16_t* s = row(src);
        uint16_t cc = uint16_t(c);
        for (size_t j = 0; j < cols_; ++j) d[j] = uint16_t(d[j] + cc * s[j]);
        bound_[dst] = uint16_t(bound_[dst] + add);
    }

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        uint16_t* a = row(i);
        uint16_t* b = row(j);
        for (size_t k = 0; k < cols_; ++k) std::swap(a[k], b[k]);
        std::swap(bound_[i], bound_[j]);
    }

    void scale_row(size_t i, uint32_t c) {
        reduce_row(i);
        uint16_t* r = row(i);
        for (size_t j = 0; j < cols_; ++j) r[j] = uint16_t((uint32_t(r[j]) * c) % p_);
    }

    // In-place reduced row echelon form.  Returns the pivot columns.
    std::vector<size_t> rref();

    // Right kernel: rows of the result form the canonical (RREF w.r.t. free
    // columns) basis of {x : A x = 0}.
    GFMat kernel() const;

    size_t rank() const;

private:
    uint32_t p_;
    size_t rows_, cols_;
    std::vector<uint16_t> a_;
    std::vector<uint16_t> bound_;
};

} // namespace mui
