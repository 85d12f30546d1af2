#include "mui/koszul.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace mui {

int sign_interleave(uint8_t maskI, uint8_t maskJ) {
    if (maskI & maskJ) throw std::invalid_argument("sign_interleave: overlapping subsets");
    // inversions between (I, J) concatenation: pairs i in I, j in J with i > j
    int inv = 0;
    for (int j = 0; j < kMaxRank; ++j) {
        if (!(maskJ & (1 << j))) continue;
        inv += __builtin_popcount(maskI & ~((1u << (j + 1)) - 1));
    }
    return (inv & 1) ? -1 : +1;
}

int sign_interleave(const std::vector<int>& I, const std::vector<int>& J) {
    uint8_t mi = 0, mj = 0;
    for (int i : I) mi |= uint8_t(1 << i);
    for (int j : J) mj |= uint8_t(1 << j);
    if (__builtin_popcount(mi) != int(I.size()) || __builtin_popcount(mj) != int(J.size()))
        throw std::invalid_argument("sign_interleave: repeated index");
    return sign_interleave(mi, mj);
}

Element Element::variable(KoszulCtx c, int i) {
    Mono m;
    m.e[i - 1] = 1;
    return monomial(c, m, 1);
}

Element Element::dvariable(KoszulCtx c, int i) {
    Mono m;
    m.ext = uint8_t(1 << (i - 1));
    return monomial(c, m, 1);
}

Element Element::monomial(KoszulCtx c, const Mono& m, uint32_t coeff) {
    Element x(c);
    coeff %= c.p;
    if (coeff) x.terms_.push_back({m, uint16_t(coeff)});
    return x;
}

bool Element::homogeneous(int* deg) const {
    if (terms_.empty()) {
        if (deg) *deg = -1;
        return true;
    }
    int d = terms_[0].first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    if (deg) *deg = d;
    return true;
}

int Element::degree() const {
    int d;
    if (!homogeneous(&d)) throw std::domain_error("Element::degree on mixed-degree element");
    return d;
}

uint32_t Element::coeff(const Mono& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const auto& t, const Mono& k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

Element Element::collect(KoszulCtx c, std::vector<std::pair<Mono, uint32_t>>&& acc) {
    std::sort(acc.begin(), acc.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Element x(c);
    x.terms_.reserve(acc.size());
    size_t i = 0;
    while (i < acc.size()) {
        Mono m = acc[i].first;
        uint64_t s = 0;
        while (i < acc.size() && acc[i].first == m) s += acc[i++].second;
        uint32_t v = uint32_t(s % c.p);
        if (v) x.terms_.push_back({m, uint16_t(v)});
    }
    return x;
}

Element Element::operator+(const Element& o) const {
    if (!(ctx_ == o.ctx_)) throw std::invalid_argument("Element: context mismatch");
    Element r(ctx_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            uint32_t v = (uint32_t(terms_[i].second) + o.terms_[j].second) % ctx_.p;
            if (v) r.terms_.push_back({terms_[i].first, uint16_t(v)});
            ++i;
            ++j;
        }
    }
    return r;
}

Element Element::operator-(const Element& o) const { return *this + o.scaled(ctx_.p - 1); }

Element Element::scaled(uint32_t c) const {
    c %= ctx_.p;
    Element r(ctx_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, v] : terms_)
        r.terms_.push_back({m, uint16_t((uint32_t(v) * c) % ctx_.p)});
    return r;
}

Element Element::operator*(const Element& o) const {
    if (!(ctx_ == o.ctx_)) throw std::invalid_argument("Element: context mismatch");
    std::vector<std::pair<Mono, uint32_t>> acc;
    acc.reserve(terms_.size() * o.terms_.size() / 2 + 4);
    const uint32_t p = ctx_.p;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            if (ma.ext & mb.ext) continue;
            Mono m;
            m.ext = ma.ext | mb.ext;
            bool overflow = false;
            for (int k = 0; k < kMaxRank; ++k) {
                unsigned s = unsigned(ma.e[k]) + mb.e[k];
                if (s > 255) { overflow = true; break; }
                m.e[k] = uint8_t(s);
            }
            if (overflow) throw std::overflow_error("Element: exponent overflow");
            uint32_t c = (uint32_t(ca) * cb) % p;
            if (sign_interleave(ma.ext, mb.ext) < 0) c = (p - c) % p;
            if (c) acc.push_back({m, c});
        }
    }
    return collect(ctx_, std::move(acc));
}

Element Element::pow(unsigned k) const {
    Element r = Element::one(ctx_);
    Element b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << unsigned(c);
        for (int i = 0; i < ctx_.n; ++i) {
            if (m.e[i] == 0) continue;
            os << "*t" << (i + 1);
            if (m.e[i] > 1) os << "^" << unsigned(m.e[i]);
        }
        for (int i = 0; i < ctx_.n; ++i)
            if (m.ext & (1 << i)) os << "*dt" << (i + 1);
    }
    return os.str();
}

MatrixGL MatrixGL::identity(uint32_t p, int n) {
    MatrixGL g(p, n);
    for (int i = 0; i < n; ++i) g.a[i][i] = 1;
    return g;
}

uint32_t MatrixGL::det() const {
    FieldCtx f(p);
    std::array<std::array<uint32_t, kMaxRank>, kMaxRank> m{};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
    uint32_t d = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] % p) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = f.neg(d);
        }
        d = f.mul(d, m[c][c]);
        uint32_t inv = f.inv(m[c][c]);
        for (int r = c + 1; r < n; ++r) {
            uint32_t fac = f.mul(m[r][c], inv);
            for (int j = c; j < n; ++j) m[r][j] = f.sub(m[r][j], f.mul(fac, m[c][j]));
        }
    }
    return d;
}

MatrixGL MatrixGL::operator*(const MatrixGL& o) const {
    MatrixGL r(p, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            uint32_t s = 0;
            for (int k = 0; k < n; ++k) s += uint32_t(a[i][k]) * o.a[k][j];
            r.a[i][j] = uint8_t(s % p);
        }
    return r;
}

bool MatrixGL::operator==(const MatrixGL& o) const {
    return p == o.p && n == o.n && a == o.a;
}

bool MatrixGL::operator<(const MatrixGL& o) const { return key() < o.key(); }

uint64_t MatrixGL::key() const {
    uint64_t v = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v = v * p + a[i][j];
    return v;
}

Element apply_matrix(const MatrixGL& g, const Element& x) {
    const KoszulCtx& c = x.ctx();
    if (g.n != c.n || g.p != c.p) throw std::invalid_argument("apply_matrix: dimension mismatch");
    if (g.det() == 0) throw std::invalid_argument("apply_matrix: singular matrix");
    const uint32_t p = c.p;
    FieldCtx f(p);

    // images of the variables and cached powers
    std::array<Element, kMaxRank> lin;
    for (int i = 0; i < c.n; ++i) {
        Element li(c);
        std::vector<std::pair<Mono, uint32_t>> acc;
        for (int j = 0; j < c.n; ++j) {
            if (g.a[i][j]) {
                Mono m;
                m.e[j] = 1;
                acc.push_back({m, g.a[i][j]});
            }
        }
        lin[i] = Element::collect(c, std::move(acc));
    }
    std::array<std::vector<Element>, kMaxRank> pows;
    for (int i = 0; i < c.n; ++i) pows[i].push_back(Element::one(c));

    auto power = [&](int i, int e) -> const Element& {
        auto& v = pows[i];
        while (int(v.size()) <= e) v.push_back(v.back() * lin[i]);
        return v[e];
    };

    // exterior images: dt_S -> sum_T det(g[S][T]) dt_T over |T| = |S|
    auto minor_det = [&](uint8_t S, uint8_t T) -> uint32_t {
        int rows[kMaxRank], colsArr[kMaxRank], k = 0, l = 0;
        for (int i = 0; i < c.n; ++i) {
            if (S & (1 << i)) rows[k++] = i;
            if (T & (1 << i)) colsArr[l++] = i;
        }
        // small determinant mod p
        uint32_t m[kMaxRank][kMaxRank];
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m[i][j] = g.a[rows[i]][colsArr[j]];
        uint32_t d = 1;
        for (int cc = 0; cc < k; ++cc) {
            int piv = -1;
            for (int r = cc; r < k; ++r)
                if (m[r][cc] % p) { piv = r; break; }
            if (piv < 0) return 0;
            if (piv != cc) {
                for (int j = 0; j < k; ++j) std::swap(m[piv][j], m[cc][j]);
                d = f.neg(d);
            }
            d = f.mul(d, m[cc][cc]);
            uint32_t inv = f.inv(m[cc][cc]);
            for (int r = cc + 1; r < k; ++r) {
                uint32_t fac = f.mul(m[r][cc], inv);
                for (int j = cc; j < k; ++j) m[r][j] = f.sub(m[r][j], f.mul(fac, m[cc][j]));
            }
        }
        return d;
    };

    std::vector<std::pair<Mono, uint32_t>> acc;
    for (const auto& [m, coef] : x.terms()) {
        Element polyimg = Element::monomial(c, Mono{}, coef);
        for (int i = 0; i < c.n; ++i)
            if (m.e[i]) polyimg = polyimg * power(i, m.e[i]);
        int s = __builtin_popcount(m.ext);
        if (s == 0) {
            for (const auto& [mm, cc] : polyimg.terms()) acc.push_back({mm, cc});
            continue;
        }
        for (uint8_t T = 0; T < (1 << c.n); ++T) {
            if (__builtin_popcount(T) != s) continue;
            uint32_t d = minor_det(m.ext, T);
            if (!d) continue;
            for (const auto& [mm, cc] : polyimg.terms()) {
                Mono out = mm;
                out.ext = T;
                acc.push_back({out, f.mul(cc, d)});
            }
        }
    }
    return Element::collect(c, std::move(acc));
}

Element top_form_vars(KoszulCtx c, const std::vector<int>& vars) {
    Mono m;
    for (int v : vars) m.ext |= uint8_t(1 << (v - 1));
    if (__builtin_popcount(m.ext) != int(vars.size()))
        throw std::invalid_argument("top_form_vars: repeated variable");
    return Element::monomial(c, m, 1);
}

} // namespace mui
