#include "mui/invariants.hpp"

#include <iostream>
#include <mutex>
#include <tuple>

namespace mui {

namespace {

uint64_t ipow(uint64_t b, unsigned e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

void check_vars(KoszulCtx c, const std::vector<int>& vars) {
    if (vars.empty()) throw std::invalid_argument("empty variable list");
    for (size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] < 1 || vars[i] > c.n)
            throw std::invalid_argument("variable index out of range");
        for (size_t j = 0; j < i; ++j)
            if (vars[i] == vars[j]) throw std::invalid_argument("repeated variable");
    }
}

std::vector<Element> dickson_compute(KoszulCtx c, const std::vector<int>& vars) {
    check_vars(c, vars);
    const int m = int(vars.size());
    const uint64_t q = ipow(c.p, unsigned(m));
    if (q > 4096) throw std::invalid_argument("dickson: subspace too large");

    // coefficients of prod_{x in V} (X - x) by X-degree
    std::vector<Element> coefs(size_t(q) + 1, Element::zero(c));
    coefs[0] = Element::one(c);
    std::vector<uint32_t> v(m, 0);
    for (uint64_t step = 0; step < q; ++step) {
        Element lin = Element::zero(c);
        for (int i = 0; i < m; ++i)
            if (v[i]) lin = lin + Element::variable(c, vars[i]).scaled(v[i]);
        Element neg = -lin;
        for (uint64_t k = step + 1; k >= 1; --k)
            coefs[k] = coefs[k - 1] + neg * coefs[k];
        coefs[0] = neg * coefs[0];
        for (int i = 0; i < m; ++i) {
            if (++v[i] < c.p) break;
            v[i] = 0;
        }
    }

    std::vector<Element> out;
    for (int i = 0; i <= m; ++i) {
        Element ci = coefs[ipow(c.p, unsigned(i))];
        if ((m - i) & 1) ci = -ci;
        out.push_back(ci);
    }
    return out;
}

std::mutex g_dickson_mx;

} // namespace

const std::vector<Element>& dickson_all(KoszulCtx c, const std::vector<int>& vars) {
    static std::map<std::tuple<uint32_t, int, std::vector<int>>, std::vector<Element>> memo;
    std::lock_guard<std::mutex> lock(g_dickson_mx);
    auto key = std::make_tuple(c.p, c.n, vars);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, dickson_compute(c, vars)).first;
    return it->second;
}

Element dickson(KoszulCtx c, const std::vector<int>& vars, int i) {
    const auto& all = dickson_all(c, vars);
    if (i < 0 || size_t(i) >= all.size())
        throw std::invalid_argument("dickson: index out of range");
    return all[size_t(i)];
}

Element top_form(KoszulCtx c, const std::vector<int>& vars) {
    check_vars(c, vars);
    return top_form_vars(c, vars);
}

Element euler_class(KoszulCtx c, const std::vector<int>& vars) {
    std::vector<int> I(vars.size());
    for (size_t i = 0; i < I.size(); ++i) I[i] = int(i);
    return q_composite(I, top_form(c, vars));
}

Element omega_apply(KoszulCtx c, const Element& x) {
    if (c.n < 2) throw std::invalid_argument("omega_apply: rank must be >= 2");
    std::vector<int> vars2;
    for (int i = 2; i <= c.n; ++i) vars2.push_back(i);
    const auto& cs = dickson_all(c, vars2);
    Element r = Element::zero(c);
    for (int j = 0; j < c.n; ++j) {
        Element term = cs[size_t(j)] * milnor_q(j, x);
        if ((c.n - 1 - j) & 1) term = -term;
        r = r + term;
    }
    return r;
}

Element f_class(KoszulCtx c) { return omega_apply(c, Element::dvariable(c, 1)); }

Element exact_divide(const Element& x, const Element& divisor) {
    const KoszulCtx& c = x.ctx();
    if (!(c == divisor.ctx())) throw std::invalid_argument("exact_divide: context mismatch");
    if (divisor.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    for (const auto& [m, co] : divisor.terms())
        if (m.ext) throw std::invalid_argument("exact_divide: divisor must be polynomial");

    const auto& dterms = divisor.terms();
    size_t dl = 0;
    for (size_t i = 1; i < dterms.size(); ++i)
        if (dterms[dl].first.e < dterms[i].first.e) dl = i;
    const Mono dlead = dterms[dl].first;
    FieldCtx f(c.p);
    const uint32_t dcinv = f.inv(dterms[dl].second);

    Element r = x;
    std::vector<std::pair<Mono, uint32_t>> qacc;
    while (!r.is_zero()) {
        const auto* best = &r.terms()[0];
        for (const auto& t : r.terms()) {
            if (best->first.e < t.first.e ||
                (best->first.e == t.first.e && best->first.ext < t.first.ext))
                best = &t;
        }
        Mono qm;
        qm.ext = best->first.ext;
        bool ok = true;
        for (int i = 0; i < kMaxRank; ++i) {
            if (best->first.e[i] < dlead.e[i]) {
                ok = false;
                break;
            }
            qm.e[i] = uint8_t(best->first.e[i] - dlead.e[i]);
        }
        if (!ok) throw NotDivisible("exact_divide: not a multiple", r);
        uint32_t qc = f.mul(best->second, dcinv);
        qacc.push_back({qm, qc});
        r = r - Element::monomial(c, qm, qc) * divisor;
    }
    return Element::collect(c, std::move(qacc));
}

Element ubar(const GroupSpec& H) {
    KoszulCtx c = H.ctx();
    std::vector<int> all;
    for (int i = 1; i <= H.n; ++i) all.push_back(i);
    Element u = top_form(c, all);
    if (H.family == Family::GnPrime) u = f_class(c).pow(H.p - 2) * u;
    return u;
}

Element qbar_apply(const GroupSpec& H, int i, const Element& x) {
    if (i < 0 || i >= H.n) throw std::invalid_argument("qbar_apply: index out of range");
    if (H.family == Family::SLn || i < H.n - 1) return milnor_q(i, x);
    KoszulCtx c = H.ctx();
    Element num = omega_apply(c, x);
    if (H.family == Family::Gn) return exact_divide(num, f_class(c));
    if (H.family == Family::GnPrime) return exact_divide(num, f_class(c).pow(H.p - 1));
    throw std::invalid_argument("qbar_apply: unsupported family");
}

// ---------------------------------------------------------------------------
// invariant_basis

namespace {

std::vector<Element> canonical_rows(GFMat m, const DegreeSlice& s) {
    auto piv = m.rref();
    std::vector<Element> out;
    out.reserve(piv.size());
    for (size_t r = 0; r < piv.size(); ++r) {
        std::vector<uint16_t> v(s.dim());
        for (size_t j = 0; j < s.dim(); ++j) v[j] = uint16_t(m.at(r, j));
        out.push_back(s.from_vec(v));
    }
    return out;
}

SparseMap coinvariance_map(const MatrixGL& g, const DegreeSlice& s) {
    return SparseMap::build(s, s, [&](const Element& x) { return apply_matrix(g, x) - x; });
}

std::vector<Element> generic_invariants(const GroupSpec& H, const DegreeSlice& s) {
    std::vector<SparseMap> maps;
    maps.reserve(H.generators.size());
    for (const auto& g : H.generators) maps.push_back(coinvariance_map(g, s));

    // the slice splits under the action by exterior word length
    std::map<int, std::vector<size_t>> blocks;
    for (size_t i = 0; i < s.dim(); ++i)
        blocks[__builtin_popcount(s.mono(i).ext)].push_back(i);

    std::vector<GFMat> parts;
    size_t total = 0;
    for (const auto& [pc, idx] : blocks) {
        GFMat init(H.p, idx.size(), s.dim());
        for (size_t r = 0; r < idx.size(); ++r) init.set(r, idx[r], 1);
        GFMat ker = kernel_iterative(maps, s.dim(), H.p, std::move(init));
        total += ker.rows();
        parts.push_back(std::move(ker));
    }
    GFMat all(H.p, total, s.dim());
    size_t r = 0;
    for (const auto& part : parts)
        for (size_t i = 0; i < part.rows(); ++i, ++r)
            for (size_t j = 0; j < s.dim(); ++j) all.set(r, j, part.at(i, j));
    return canonical_rows(std::move(all), s);
}

// G_n / G_n': any invariant is in particular invariant under the SL_{n-1}
// block, and those invariants are spanned by t_1^a dt_1^eps times lifted
// rank-(n-1) invariants; only the row-1 unipotents (and the diagonal
// generator for G_n') remain to be imposed.
std::vector<Element> lifted_invariants(const GroupSpec& H, const DegreeSlice& s,
                                       const Cache* cache, size_t budget) {
    KoszulCtx c = H.ctx();
    const int n = H.n;
    const int d = s.degree();
    GroupSpec sub = group_generators(Family::SLn, n - 1, H.p);

    std::vector<std::vector<uint16_t>> rows;
    for (int eps = 0; eps <= 1; ++eps) {
        for (int a = 0; 2 * a + eps <= d; ++a) {
            auto base = invariant_basis(sub, d - 2 * a - eps, cache, budget);
            for (const auto& x : base) {
                std::vector<std::pair<Mono, uint32_t>> acc;
                for (const auto& [m, co] : x.terms()) {
                    Mono out{};
                    out.e[0] = uint8_t(a);
                    for (int j = 0; j + 1 < n; ++j) out.e[j + 1] = m.e[j];
                    out.ext = uint8_t((m.ext << 1) | eps);
                    acc.push_back({out, co});
                }
                rows.push_back(s.to_vec(Element::collect(c, std::move(acc))));
            }
        }
    }
    if (rows.empty()) return {};
    GFMat init(H.p, rows.size(), s.dim());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t j = 0; j < s.dim(); ++j) init.set(r, j, rows[r][j]);

    const size_t block_gens = size_t(n - 1) * size_t(n - 2);
    std::vector<SparseMap> maps;
    for (size_t gi = block_gens; gi < H.generators.size(); ++gi)
        maps.push_back(coinvariance_map(H.generators[gi], s));
    GFMat ker = kernel_iterative(maps, s.dim(), H.p, std::move(init));
    return canonical_rows(std::move(ker), s);
}

std::string basis_cache_key(const GroupSpec& H, int d) {
    std::string key = "inv|";
    key += kCodeVersion;
    key += "|" + family_name(H.family);
    key += "|n" + std::to_string(H.n);
    key += "|p" + std::to_string(H.p);
    key += "|d" + std::to_string(d);
    if (H.family == Family::Explicit)
        for (const auto& g : H.generators) key += "|" + std::to_string(g.key());
    return key;
}

std::mutex g_basis_mx;

} // namespace

std::vector<Element> invariant_basis(const GroupSpec& H, int d, const Cache* cache,
                                     size_t budget) {
    KoszulCtx c = H.ctx();
    if (d < 0) return {};

    // in-process memo for the canned families
    static std::map<std::tuple<int, int, uint32_t, int>, std::vector<Element>> memo;
    std::tuple<int, int, uint32_t, int> mkey{int(H.family), H.n, H.p, d};
    if (H.family != Family::Explicit) {
        std::lock_guard<std::mutex> lock(g_basis_mx);
        auto it = memo.find(mkey);
        if (it != memo.end()) return it->second;
    }

    std::string key;
    if (cache && cache->enabled()) {
        key = basis_cache_key(H, d);
        if (auto hit = cache->get(key)) {
            auto out = deserialize_basis(c, *hit);
            if (H.family != Family::Explicit) {
                std::lock_guard<std::mutex> lock(g_basis_mx);
                memo.emplace(mkey, out);
            }
            return out;
        }
    }

    DegreeSlice s = DegreeSlice::make(c, d);
    std::vector<Element> out;
    if (s.dim() > 0) {
        if (s.dim() > 16 * budget)
            throw BudgetExceeded("invariant_basis: slice dimension " +
                                 std::to_string(s.dim()) + " exceeds budget");
        if (s.dim() > budget)
            std::cerr << "warning: invariant slice dimension " << s.dim()
                      << " above budget " << budget << " (n=" << H.n << ", d=" << d
                      << ")\n";
        if ((H.family == Family::Gn || H.family == Family::GnPrime) && H.n >= 2)
            out = lifted_invariants(H, s, cache, budget);
        else
            out = generic_invariants(H, s);
    }

    if (cache && cache->enabled()) cache->put(key, serialize_basis(out));
    if (H.family != Family::Explicit) {
        std::lock_guard<std::mutex> lock(g_basis_mx);
        memo.emplace(mkey, out);
    }
    return out;
}

// ---------------------------------------------------------------------------
// FamilyModule

FamilyModule::FamilyModule(Family fam, int n, uint32_t p)
    : spec_(group_generators(fam, n, p)), ctx_(p, n) {
    std::vector<int> all, rest;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    for (int i = 2; i <= n; ++i) rest.push_back(i);
    switch (fam) {
        case Family::SLn: {
            const auto& cs = dickson_all(ctx_, all);
            for (int i = 1; i < n; ++i)
                rgens_.push_back({"c_{" + std::to_string(n) + "," + std::to_string(i) + "}",
                                  cs[size_t(i)].degree(), cs[size_t(i)]});
            Element e = euler_class(ctx_, all);
            rgens_.push_back({"e_" + std::to_string(n), e.degree(), e});
            ek_rank_ = n;
            break;
        }
        case Family::Gn:
        case Family::GnPrime: {
            if (n < 2) throw std::invalid_argument("FamilyModule: G_n needs n >= 2");
            const auto& cs = dickson_all(ctx_, rest);
            for (int i = 1; i < n - 1; ++i)
                rgens_.push_back({"c_{" + std::to_string(n - 1) + "," + std::to_string(i) + "}",
                                  cs[size_t(i)].degree(), cs[size_t(i)]});
            Element f = f_class(ctx_);
            if (fam == Family::GnPrime) {
                Element fp = f.pow(p - 1);
                rgens_.push_back({"f_" + std::to_string(n) + "^{p-1}", fp.degree(), fp});
            } else {
                rgens_.push_back({"f_" + std::to_string(n), f.degree(), f});
            }
            Element e = euler_class(ctx_, rest);
            rgens_.push_back({"e_" + std::to_string(n - 1), e.degree(), e});
            ek_rank_ = n - 1;
            break;
        }
        default:
            throw std::invalid_argument("FamilyModule: unsupported family");
    }
    ek_pows_.push_back(Element::one(ctx_));
}

const Element& FamilyModule::gen(unsigned mask) {
    auto it = gens_.find(mask);
    if (it != gens_.end()) return it->second;
    Element x(ctx_);
    if (mask == kUnitGen) {
        x = Element::one(ctx_);
    } else {
        // the full mask is legal here (it evaluates to e_k) but is not a
        // module generator; all_gen_masks() excludes it
        if (mask > full_mask())
            throw std::invalid_argument("FamilyModule::gen: mask out of range");
        x = ubar(spec_);
        for (int i = n() - 1; i >= 0; --i)
            if (mask & (1u << i)) x = qbar_apply(spec_, i, x);
    }
    return gens_.emplace(mask, std::move(x)).first->second;
}

int FamilyModule::gen_deg(unsigned mask) {
    if (mask == kUnitGen) return 0;
    return gen(mask).degree();
}

std::string FamilyModule::gen_name(unsigned mask) const {
    if (mask == kUnitGen) return "1";
    std::string idx;
    for (int i = 0; i < n(); ++i)
        if (mask & (1u << i)) idx += (idx.empty() ? "" : ",") + std::to_string(i);
    return "Qbar_{" + idx + "}ubar_" + std::to_string(n());
}

const Element& FamilyModule::ek_pow(int a) {
    if (a < 0) throw std::invalid_argument("ek_pow: negative exponent");
    while (int(ek_pows_.size()) <= a) ek_pows_.push_back(ek_pows_.back() * ek());
    return ek_pows_[size_t(a)];
}

const std::vector<Element>& FamilyModule::r_monomials(int d, bool skip_ek) {
    auto key = std::make_pair(d, skip_ek);
    auto it = rmono_.find(key);
    if (it != rmono_.end()) return it->second;
    std::vector<Element> out;
    if (d >= 0) {
        const size_t count = rgens_.size() - (skip_ek ? 1 : 0);
        std::function<void(size_t, int, const Element&)> rec =
            [&](size_t gi, int rem, const Element& cur) {
                if (gi == count) {
                    if (rem == 0) out.push_back(cur);
                    return;
                }
                Element pw = cur;
                for (int k = 0; k * rgens_[gi].deg <= rem; ++k) {
                    if (k) pw = pw * rgens_[gi].elem;
                    rec(gi + 1, rem - k * rgens_[gi].deg, pw);
                }
            };
        rec(0, d, Element::one(ctx_));
    }
    return rmono_.emplace(key, std::move(out)).first->second;
}

std::vector<Element> FamilyModule::span_in_degree(
    const std::vector<std::pair<unsigned, int>>& gens, int d, bool mod_ek) {
    std::vector<Element> out;
    for (const auto& [mask, a] : gens) {
        Element base = gen(mask) * ek_pow(a);
        if (base.is_zero()) continue;
        int rem = d - base.degree();
        if (rem < 0) continue;
        for (const auto& rm : r_monomials(rem, mod_ek)) out.push_back(rm * base);
    }
    return out;
}

Poly FamilyModule::span_series(const std::vector<std::pair<unsigned, int>>& gens,
                               size_t trunc, bool mod_ek) {
    std::vector<int> ring_degs;
    for (size_t i = 0; i + (mod_ek ? 1 : 0) < rgens_.size(); ++i)
        ring_degs.push_back(rgens_[i].deg);
    std::vector<int> gen_degs;
    for (const auto& [mask, a] : gens) gen_degs.push_back(gen_deg(mask) + a * ek_deg());
    return free_module_series(ring_degs, gen_degs, trunc);
}

std::vector<unsigned> FamilyModule::all_gen_masks() const {
    std::vector<unsigned> out{kUnitGen};
    for (unsigned m = 0; m < full_mask(); ++m) out.push_back(m);
    return out;
}

Poly predicted_series(Family fam, int n, uint32_t p, size_t trunc) {
    FamilyModule fm(fam, n, p);
    std::vector<std::pair<unsigned, int>> gens;
    for (unsigned m : fm.all_gen_masks()) gens.push_back({m, 0});
    return fm.span_series(gens, trunc);
}

int64_t predicted_dimension(Family fam, int n, uint32_t p, int d) {
    if (d < 0) return 0;
    return predicted_series(fam, n, p, size_t(d)).at(size_t(d));
}

} // namespace mui
