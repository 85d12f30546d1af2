#include "mui/groups.hpp"

#include <queue>
#include <unordered_set>

namespace mui {

std::string family_name(Family f) {
    switch (f) {
        case Family::SLn: return "sl";
        case Family::Gn: return "gn";
        case Family::GnPrime: return "gnp";
        default: return "explicit";
    }
}

uint32_t primitive_root(uint32_t p) {
    FieldCtx f(p);
    for (uint32_t a = 2; a < p; ++a) {
        uint32_t x = a;
        uint32_t ord = 1;
        while (x != 1) {
            x = f.mul(x, a);
            ++ord;
        }
        if (ord == p - 1) return a;
    }
    throw std::logic_error("primitive_root: none found");
}

namespace {

MatrixGL transvection(uint32_t p, int n, int i, int j) {
    MatrixGL g = MatrixGL::identity(p, n);
    g.set(i, j, 1);
    return g;
}

} // namespace

GroupSpec group_generators(Family family, int n, uint32_t p) {
    GroupSpec spec;
    spec.family = family;
    spec.n = n;
    spec.p = p;
    switch (family) {
        case Family::SLn:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j) spec.generators.push_back(transvection(p, n, i, j));
            break;
        case Family::GnPrime:
        case Family::Gn: {
            if (n < 2) throw std::invalid_argument("group_generators: G_n needs n >= 2");
            for (int i = 1; i < n; ++i)
                for (int j = 1; j < n; ++j)
                    if (i != j) spec.generators.push_back(transvection(p, n, i, j));
            for (int j = 1; j < n; ++j) spec.generators.push_back(transvection(p, n, 0, j));
            if (family == Family::GnPrime) {
                MatrixGL d = MatrixGL::identity(p, n);
                d.set(0, 0, primitive_root(p));
                spec.generators.push_back(d);
            }
            break;
        }
        default:
            throw std::invalid_argument("group_generators: explicit family has no canned set");
    }
    return spec;
}

std::optional<uint64_t> closure_order(const std::vector<MatrixGL>& gens, uint64_t limit) {
    if (gens.empty()) return 1;
    std::unordered_set<uint64_t> seen;
    std::queue<MatrixGL> work;
    MatrixGL id = MatrixGL::identity(gens[0].p, gens[0].n);
    seen.insert(id.key());
    work.push(id);
    while (!work.empty()) {
        MatrixGL m = work.front();
        work.pop();
        for (const auto& g : gens) {
            MatrixGL x = m * g;
            if (seen.insert(x.key()).second) {
                if (seen.size() > limit) return std::nullopt;
                work.push(x);
            }
        }
    }
    return seen.size();
}

uint64_t expected_order(Family family, int n, uint32_t p) {
    auto sl = [&](int m) {
        uint64_t o = 1;
        for (int k = 2; k <= m; ++k) {
            uint64_t pk = 1;
            for (int i = 0; i < k; ++i) pk *= p;
            o *= (pk - 1);
        }
        uint64_t pw = 1;
        for (int i = 0; i < m * (m - 1) / 2; ++i) pw *= p;
        return o * pw;
    };
    switch (family) {
        case Family::SLn: return sl(n);
        case Family::Gn: {
            uint64_t pw = 1;
            for (int i = 0; i < n - 1; ++i) pw *= p;
            return sl(n - 1) * pw;
        }
        case Family::GnPrime: {
            uint64_t pw = 1;
            for (int i = 0; i < n - 1; ++i) pw *= p;
            return sl(n - 1) * pw * (p - 1);
        }
        default: throw std::invalid_argument("expected_order: explicit family");
    }
}

} // namespace mui
