#pragma once

#include <unordered_map>
#include <vector>

#include "mui/koszul.hpp"

namespace mui {

// Ordered monomial basis of one degree of the Koszul algebra (or of its
// polynomial part only, for torus cohomology).
class DegreeSlice {
public:
    DegreeSlice() = default;
    static DegreeSlice make(KoszulCtx c, int degree, bool poly_only = false);

    const KoszulCtx& ctx() const { return ctx_; }
    int degree() const { return degree_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<Mono>& basis() const { return basis_; }
    const Mono& mono(size_t i) const { return basis_[i]; }

    // position of a monomial, or npos
    static constexpr size_t npos = size_t(-1);
    size_t index(const Mono& m) const {
        auto it = index_.find(m);
        return it == index_.end() ? npos : it->second;
    }

    std::vector<uint16_t> to_vec(const Element& x) const;
    Element from_vec(const uint16_t* v) const;
    Element from_vec(const std::vector<uint16_t>& v) const { return from_vec(v.data()); }

private:
    KoszulCtx ctx_{3, 1};
    int degree_ = 0;
    std::vector<Mono> basis_;
    std::unordered_map<Mono, size_t, MonoHash> index_;
};

// Sparse linear map between degree slices, rows indexed by source basis:
// row j lists the target coordinates of the image of source monomial j.
struct SparseMap {
    size_t src_dim = 0, dst_dim = 0;
    std::vector<std::vector<std::pair<uint32_t, uint16_t>>> rows;

    static SparseMap build(const DegreeSlice& src, const DegreeSlice& dst,
                           const std::function<Element(const Element&)>& op);
};

// Basis rows of the simultaneous kernel of the given maps on `src`,
// echelonized against the slice coordinate order (canonical).
GFMat kernel_stacked(const std::vector<SparseMap>& maps, const DegreeSlice& src);

// Same, but starting from a given row-space (rows of `initial`) instead of
// the whole slice; maps are intersected one at a time.
GFMat kernel_iterative(const std::vector<SparseMap>& maps, size_t dim, uint32_t p,
                       GFMat initial);

// Convenience: rows of `m` as elements of the slice.
std::vector<Element> rows_as_elements(const GFMat& m, const DegreeSlice& s);

// Span matrix (RREF rows) of a list of homogeneous elements in a slice.
GFMat span_matrix(const std::vector<Element>& xs, const DegreeSlice& s);

// Residues of xs after reduction against the RREF rows of `rrefed`
// (which must already be in RREF).  Zero residue == membership.
bool in_span(const GFMat& rref_rows, const std::vector<uint16_t>& v, uint32_t p);

} // namespace mui
