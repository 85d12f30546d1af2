#include "mui/slice.hpp"

#include <algorithm>

namespace mui {

DegreeSlice DegreeSlice::make(KoszulCtx c, int degree, bool poly_only) {
    if (degree < 0) throw std::invalid_argument("DegreeSlice: negative degree");
    DegreeSlice s;
    s.ctx_ = c;
    s.degree_ = degree;
    for (uint32_t ext = 0; ext < (1u << c.n); ++ext) {
        if (poly_only && ext) continue;
        int popc = __builtin_popcount(ext);
        if (popc > degree || ((degree - popc) & 1)) continue;
        int polydeg = (degree - popc) / 2;
        // exponent vectors of total polydeg over n variables, lexicographic
        Mono m;
        m.ext = uint8_t(ext);
        std::function<void(int, int)> rec = [&](int var, int rem) {
            if (var == c.n - 1) {
                m.e[var] = uint8_t(rem);
                s.basis_.push_back(m);
                return;
            }
            for (int e = 0; e <= rem; ++e) {
                m.e[var] = uint8_t(e);
                rec(var + 1, rem - e);
            }
            m.e[var] = 0;
        };
        rec(0, polydeg);
        for (int i = 0; i < kMaxRank; ++i) m.e[i] = 0;
    }
    std::sort(s.basis_.begin(), s.basis_.end());
    s.index_.reserve(s.basis_.size() * 2);
    for (size_t i = 0; i < s.basis_.size(); ++i) s.index_[s.basis_[i]] = i;
    return s;
}

std::vector<uint16_t> DegreeSlice::to_vec(const Element& x) const {
    std::vector<uint16_t> v(basis_.size(), 0);
    for (const auto& [m, c] : x.terms()) {
        size_t i = index(m);
        if (i == npos) throw std::domain_error("DegreeSlice::to_vec: monomial outside slice");
        v[i] = c;
    }
    return v;
}

Element DegreeSlice::from_vec(const uint16_t* v) const {
    std::vector<std::pair<Mono, uint32_t>> acc;
    for (size_t i = 0; i < basis_.size(); ++i)
        if (v[i] % ctx_.p) acc.push_back({basis_[i], v[i] % ctx_.p});
    return Element::collect(ctx_, std::move(acc));
}

SparseMap SparseMap::build(const DegreeSlice& src, const DegreeSlice& dst,
                           const std::function<Element(const Element&)>& op) {
    SparseMap m;
    m.src_dim = src.dim();
    m.dst_dim = dst.dim();
    m.rows.resize(src.dim());
    for (size_t j = 0; j < src.dim(); ++j) {
        Element img = op(Element::monomial(src.ctx(), src.mono(j), 1));
        auto& row = m.rows[j];
        row.reserve(img.size());
        for (const auto& [mm, c] : img.terms()) {
            size_t t = dst.index(mm);
            if (t == DegreeSlice::npos)
                throw std::domain_error("SparseMap: image outside target slice");
            row.push_back({uint32_t(t), c});
        }
    }
    return m;
}

GFMat kernel_iterative(const std::vector<SparseMap>& maps, size_t dim, uint32_t p,
                       GFMat basis) {
    for (const auto& A : maps) {
        if (A.src_dim != dim) throw std::invalid_argument("kernel_iterative: dimension mismatch");
        size_t k = basis.rows();
        if (k == 0) break;
        // W[t][r] = coordinates of A * basis_row_r
        GFMat W(p, A.dst_dim, k);
        std::vector<uint32_t> col(A.dst_dim);
        for (size_t r = 0; r < k; ++r) {
            std::fill(col.begin(), col.end(), 0);
            const uint16_t* v = basis.row(r);
            for (size_t j = 0; j < dim; ++j) {
                uint32_t c = v[j] % p;
                if (!c) continue;
                for (const auto& [t, val] : A.rows[j]) col[t] += c * val;
            }
            for (size_t t = 0; t < A.dst_dim; ++t) {
                uint32_t cv = col[t] % p;
                if (cv) W.set(t, r, cv);
            }
        }
        GFMat ker = W.kernel(); // rows: coefficient vectors over current basis
        GFMat next(p, ker.rows(), dim);
        // next = ker * basis
        for (size_t r = 0; r < ker.rows(); ++r) {
            uint16_t* out = next.row(r);
            std::vector<uint32_t> accum(dim, 0);
            for (size_t c = 0; c < k; ++c) {
                uint32_t f = ker.at(r, c);
                if (!f) continue;
                const uint16_t* src = basis.row(c);
                for (size_t j = 0; j < dim; ++j) accum[j] += f * src[j];
            }
            for (size_t j = 0; j < dim; ++j) out[j] = uint16_t(accum[j] % p);
        }
        basis = std::move(next);
    }
    basis.rref();
    return basis;
}

GFMat kernel_stacked(const std::vector<SparseMap>& maps, const DegreeSlice& src) {
    uint32_t p = src.ctx().p;
    size_t dim = src.dim();
    GFMat id(p, dim, dim);
    for (size_t i = 0; i < dim; ++i) id.set(i, i, 1);
    return kernel_iterative(maps, dim, p, std::move(id));
}

std::vector<Element> rows_as_elements(const GFMat& m, const DegreeSlice& s) {
    std::vector<Element> out;
    out.reserve(m.rows());
    for (size_t r = 0; r < m.rows(); ++r) out.push_back(s.from_vec(m.row(r)));
    return out;
}

GFMat span_matrix(const std::vector<Element>& xs, const DegreeSlice& s) {
    GFMat m(s.ctx().p, xs.size(), s.dim());
    for (size_t r = 0; r < xs.size(); ++r) {
        auto v = s.to_vec(xs[r]);
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j]) m.set(r, j, v[j]);
    }
    m.rref();
    // drop zero rows
    size_t nz = 0;
    for (size_t r = 0; r < m.rows(); ++r) {
        bool any = false;
        for (size_t j = 0; j < m.cols(); ++j)
            if (m.at(r, j)) { any = true; break; }
        if (any) ++nz;
        else break; // RREF puts zero rows last
    }
    GFMat out(s.ctx().p, nz, s.dim());
    for (size_t r = 0; r < nz; ++r)
        for (size_t j = 0; j < m.cols(); ++j)
            if (m.at(r, j)) out.set(r, j, m.at(r, j));
    return out;
}

bool in_span(const GFMat& rref_rows, const std::vector<uint16_t>& v, uint32_t p) {
    FieldCtx f(p);
    std::vector<uint32_t> w(v.begin(), v.end());
    for (size_t r = 0; r < rref_rows.rows(); ++r) {
        size_t lc = size_t(-1);
        for (size_t j = 0; j < rref_rows.cols(); ++j)
            if (rref_rows.at(r, j)) { lc = j; break; }
        if (lc == size_t(-1)) continue;
        uint32_t c = w[lc] % p;
        if (!c) continue;
        for (size_t j = lc; j < rref_rows.cols(); ++j)
            w[j] = f.sub(w[j], f.mul(c, rref_rows.at(r, j)));
    }
    for (uint32_t x : w)
        if (x % p) return false;
    return true;
}

} // namespace mui
