#include "mui/fp.hpp"

namespace mui {

std::vector<size_t> GFMat::rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t piv = rows_;
        for (size_t i = r; i < rows_; ++i) {
            if (a_[i * cols_ + c] % p_) { piv = i; break; }
        }
        if (piv == rows_) continue;
        swap_rows(r, piv);
        reduce_row(r);
        uint32_t lead = a_[r * cols_ + c];
        if (lead != 1) scale_row(r, FieldCtx(p_).inv(lead));
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            uint32_t v = a_[i * cols_ + c] % p_;
            if (v) axpy_row(i, r, p_ - v);
        }
        pivots.push_back(c);
        ++r;
    }
    for (size_t i = 0; i < rows_; ++i) reduce_row(i);
    return pivots;
}

GFMat GFMat::kernel() const {
    GFMat m = *this;
    std::vector<size_t> piv = m.rref();
    std::vector<int> pivot_of_col(cols_, -1);
    for (size_t k = 0; k < piv.size(); ++k) pivot_of_col[piv[k]] = int(k);
    size_t nfree = cols_ - piv.size();
    GFMat ker(p_, nfree, cols_);
    size_t kr = 0;
    for (size_t c = 0; c < cols_; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        ker.set(kr, c, 1);
        for (size_t k = 0; k < piv.size(); ++k) {
            uint32_t v = m.at(k, c);
            if (v) ker.set(kr, piv[k], p_ - v);
        }
        ++kr;
    }
    return ker;
}

size_t GFMat::rank() const {
    GFMat m = *this;
    return m.rref().size();
}

} // namespace mui
