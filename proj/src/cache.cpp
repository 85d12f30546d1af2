#include "mui/cache.hpp"

#include <cstdio>
#include <fstream>
#include <random>

namespace mui {

uint64_t fnv1a64(const uint8_t* data, size_t len) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (size_t i = 0; i < len; ++i) {
        h ^= data[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

constexpr char kMagic[8] = {'M', 'U', 'I', 'C', 'A', 'C', 'H', '1'};

void put_u64(std::vector<uint8_t>& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(uint8_t(v >> (8 * i)));
}

uint64_t get_u64(const uint8_t* p) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= uint64_t(p[i]) << (8 * i);
    return v;
}

std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)v);
    return buf;
}

} // namespace

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::optional<std::vector<uint8_t>> Cache::get(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    uint64_t h = fnv1a64(reinterpret_cast<const uint8_t*>(key.data()), key.size());
    auto path = dir_ / (hex64(h) + ".bin");
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::vector<uint8_t> buf((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
    // magic | key_len u64 | key | payload_len u64 | checksum u64 | payload
    if (buf.size() < 8 + 8) return std::nullopt;
    if (!std::equal(kMagic, kMagic + 8, buf.begin())) return std::nullopt;
    size_t off = 8;
    uint64_t klen = get_u64(buf.data() + off);
    off += 8;
    if (buf.size() < off + klen + 16) return std::nullopt;
    if (std::string(buf.begin() + off, buf.begin() + off + klen) != key)
        return std::nullopt; // hash collision
    off += klen;
    uint64_t plen = get_u64(buf.data() + off);
    uint64_t sum = get_u64(buf.data() + off + 8);
    off += 16;
    if (buf.size() != off + plen) return std::nullopt;
    if (fnv1a64(buf.data() + off, plen) != sum) return std::nullopt;
    return std::vector<uint8_t>(buf.begin() + off, buf.end());
}

void Cache::put(const std::string& key, const std::vector<uint8_t>& payload) const {
    if (!enabled()) return;
    std::vector<uint8_t> buf(kMagic, kMagic + 8);
    put_u64(buf, key.size());
    buf.insert(buf.end(), key.begin(), key.end());
    put_u64(buf, payload.size());
    put_u64(buf, fnv1a64(payload.data(), payload.size()));
    buf.insert(buf.end(), payload.begin(), payload.end());

    uint64_t h = fnv1a64(reinterpret_cast<const uint8_t*>(key.data()), key.size());
    auto final_path = dir_ / (hex64(h) + ".bin");
    static std::mt19937_64 rng(std::random_device{}());
    auto tmp = dir_ / (hex64(h) + ".tmp" + hex64(rng()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return; // cache is best-effort
        out.write(reinterpret_cast<const char*>(buf.data()), std::streamsize(buf.size()));
        if (!out) {
            out.close();
            std::filesystem::remove(tmp);
            return;
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, final_path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

void serialize_element(const Element& x, std::vector<uint8_t>& out) {
    put_u64(out, x.terms().size());
    for (const auto& [m, c] : x.terms()) {
        out.insert(out.end(), m.e.begin(), m.e.end());
        out.push_back(m.ext);
        out.push_back(uint8_t(c));
    }
}

Element deserialize_element(KoszulCtx c, const uint8_t*& p, const uint8_t* end) {
    if (end - p < 8) throw std::runtime_error("cache: truncated element");
    uint64_t nt = get_u64(p);
    p += 8;
    std::vector<std::pair<Mono, uint32_t>> acc;
    acc.reserve(nt);
    for (uint64_t i = 0; i < nt; ++i) {
        if (size_t(end - p) < kMaxRank + 2) throw std::runtime_error("cache: truncated term");
        Mono m;
        std::copy(p, p + kMaxRank, m.e.begin());
        p += kMaxRank;
        m.ext = *p++;
        acc.push_back({m, *p++});
    }
    return Element::collect(c, std::move(acc));
}

std::vector<uint8_t> serialize_basis(const std::vector<Element>& xs) {
    std::vector<uint8_t> out;
    put_u64(out, xs.size());
    for (const auto& x : xs) serialize_element(x, out);
    return out;
}

std::vector<Element> deserialize_basis(KoszulCtx c, const std::vector<uint8_t>& buf) {
    const uint8_t* p = buf.data();
    const uint8_t* end = p + buf.size();
    if (end - p < 8) throw std::runtime_error("cache: truncated basis");
    uint64_t nx = get_u64(p);
    p += 8;
    std::vector<Element> xs;
    xs.reserve(nx);
    for (uint64_t i = 0; i < nx; ++i) xs.push_back(deserialize_element(c, p, end));
    if (p != end) throw std::runtime_error("cache: trailing bytes");
    return xs;
}

} // namespace mui
