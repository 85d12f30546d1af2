#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mui {

// Truncated power series with integer coefficients; index = degree.
struct Poly {
    std::vector<int64_t> c;

    Poly() = default;
    explicit Poly(size_t trunc) : c(trunc + 1, 0) {}

    size_t trunc() const { return c.size() - 1; }
    int64_t at(size_t d) const { return d < c.size() ? c[d] : 0; }

    static Poly one(size_t trunc) {
        Poly p(trunc);
        p.c[0] = 1;
        return p;
    }
    static Poly t_pow(size_t d, size_t trunc) {
        Poly p(trunc);
        if (d <= trunc) p.c[d] = 1;
        return p;
    }

    Poly operator+(const Poly& o) const {
        Poly r(std::max(trunc(), o.trunc()));
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = at(i) + o.at(i);
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r(std::max(trunc(), o.trunc()));
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = at(i) - o.at(i);
        return r;
    }
    Poly operator*(const Poly& o) const {
        Poly r(std::max(trunc(), o.trunc()));
        for (size_t i = 0; i < c.size(); ++i) {
            if (!c[i]) continue;
            for (size_t j = 0; j + i < r.c.size() && j < o.c.size(); ++j)
                r.c[i + j] += c[i] * o.c[j];
        }
        return r;
    }
    Poly shifted(size_t d) const {
        Poly r(trunc());
        for (size_t i = 0; i + d < r.c.size(); ++i) r.c[i + d] = at(i);
        return r;
    }
    bool operator==(const Poly& o) const {
        size_t m = std::max(c.size(), o.c.size());
        for (size_t i = 0; i < m; ++i)
            if (at(i) != o.at(i)) return false;
        return true;
    }
    bool nonnegative() const {
        for (int64_t v : c)
            if (v < 0) return false;
        return true;
    }
};

// 1 / (1 - t^d), truncated.
inline Poly geometric(size_t d, size_t trunc) {
    if (d == 0) throw std::invalid_argument("geometric: zero degree");
    Poly p(trunc);
    for (size_t i = 0; i <= trunc; i += d) p.c[i] = 1;
    return p;
}

// Poincare series of a free module over F_p[x_1..] with ring generator
// degrees `ring_degs` and module generator degrees `gen_degs`.
inline Poly free_module_series(const std::vector<int>& ring_degs,
                               const std::vector<int>& gen_degs, size_t trunc) {
    Poly r(trunc);
    for (int d : gen_degs)
        if (size_t(d) <= trunc) r.c[d] += 1;
    for (int d : ring_degs) r = r * geometric(size_t(d), trunc);
    return r;
}

} // namespace mui
