#include "mui/steenrod.hpp"

namespace mui {

namespace {

// binomial coefficient mod p by Lucas' theorem
uint32_t binom_mod(uint32_t n, uint32_t k, uint32_t p) {
    if (k > n) return 0;
    uint32_t r = 1;
    FieldCtx f(p);
    while (n || k) {
        uint32_t nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        // small binomial nd choose kd, nd < p
        uint32_t b = 1;
        for (uint32_t i = 0; i < kd; ++i)
            b = f.mul(b, f.mul(nd - i, f.inv(i + 1)));
        r = f.mul(r, b);
        n /= p;
        k /= p;
    }
    return r;
}

// Odd derivation determined by dt_j -> t_j^pow (and zero on t_j).
Element ext_derivation(const Element& x, uint32_t pow) {
    const KoszulCtx& c = x.ctx();
    std::vector<std::pair<Mono, uint32_t>> acc;
    for (const auto& [m, coef] : x.terms()) {
        int pos = 0; // number of dt factors passed over
        for (int j = 0; j < c.n; ++j) {
            if (!(m.ext & (1 << j))) continue;
            Mono out = m;
            out.ext = uint8_t(m.ext & ~(1 << j));
            unsigned e = unsigned(out.e[j]) + pow;
            if (e > 255) throw std::overflow_error("ext_derivation: exponent overflow");
            out.e[j] = uint8_t(e);
            uint32_t cc = (pos & 1) ? (c.p - coef) % c.p : coef;
            if (cc) acc.push_back({out, cc});
            ++pos;
        }
    }
    return Element::collect(c, std::move(acc));
}

uint64_t ipow(uint64_t b, unsigned e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

Element bockstein(const Element& x) { return ext_derivation(x, 1); }

Element milnor_q(int i, const Element& x) {
    if (i < 0) throw std::invalid_argument("milnor_q: negative index");
    uint64_t pw = ipow(x.ctx().p, unsigned(i));
    if (pw > 255) throw std::overflow_error("milnor_q: p^i too large");
    return ext_derivation(x, uint32_t(pw));
}

Element reduced_power(int k, const Element& x) {
    if (k < 0) throw std::invalid_argument("reduced_power: negative index");
    const KoszulCtx& c = x.ctx();
    if (k == 0) return x;
    const uint32_t p = c.p;
    std::vector<std::pair<Mono, uint32_t>> acc;
    for (const auto& [m, coef] : x.terms()) {
        // choose a_i <= e_i with sum a_i = k; coefficient prod C(e_i, a_i)
        Mono out = m;
        std::function<void(int, int, uint32_t)> rec = [&](int var, int rem, uint32_t cc) {
            if (var == c.n) {
                if (rem == 0) acc.push_back({out, cc});
                return;
            }
            int maxa = std::min<int>(rem, m.e[var]);
            for (int a = 0; a <= maxa; ++a) {
                uint32_t b = binom_mod(m.e[var], a, p);
                if (b) {
                    unsigned e = unsigned(m.e[var]) + unsigned(a) * (p - 1);
                    if (e > 255) throw std::overflow_error("reduced_power: exponent overflow");
                    out.e[var] = uint8_t(e);
                    rec(var + 1, rem - a, (cc * b) % p);
                }
            }
            out.e[var] = m.e[var];
        };
        rec(0, k, coef);
    }
    return Element::collect(c, std::move(acc));
}

Element milnor_q_recursive(int i, const Element& x) {
    if (i < 0) throw std::invalid_argument("milnor_q_recursive: negative index");
    if (i == 0) return bockstein(x);
    uint64_t pw = ipow(x.ctx().p, unsigned(i - 1));
    int k = int(pw);
    return reduced_power(k, milnor_q_recursive(i - 1, x)) -
           milnor_q_recursive(i - 1, reduced_power(k, x));
}

Element q_composite(const std::vector<int>& I, const Element& x) {
    for (size_t k = 1; k < I.size(); ++k)
        if (I[k] <= I[k - 1])
            throw std::invalid_argument("q_composite: indices must be strictly increasing");
    Element r = x;
    for (auto it = I.rbegin(); it != I.rend(); ++it) r = milnor_q(*it, r);
    return r;
}

} // namespace mui
