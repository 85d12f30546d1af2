#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mui/koszul.hpp"

namespace mui {

// Bump when serialized results change meaning; part of every cache key.
inline constexpr const char* kCodeVersion = "v1";

uint64_t fnv1a64(const uint8_t* data, size_t len);

// Content-addressed on-disk cache.  Entries are stored one per file under
// the cache directory; writes go through a temp file + rename so concurrent
// readers never see partial entries.  Corrupted entries (checksum or key
// mismatch) are treated as misses.
class Cache {
public:
    Cache() = default; // disabled
    explicit Cache(std::filesystem::path dir);

    bool enabled() const { return !dir_.empty(); }
    const std::filesystem::path& dir() const { return dir_; }

    std::optional<std::vector<uint8_t>> get(const std::string& key) const;
    void put(const std::string& key, const std::vector<uint8_t>& payload) const;

private:
    std::filesystem::path dir_;
};

// Canonical element serialization: per term, kMaxRank exponent bytes,
// ext byte, coefficient byte, in the canonical monomial order.
void serialize_element(const Element& x, std::vector<uint8_t>& out);
Element deserialize_element(KoszulCtx c, const uint8_t*& p, const uint8_t* end);
std::vector<uint8_t> serialize_basis(const std::vector<Element>& xs);
std::vector<Element> deserialize_basis(KoszulCtx c, const std::vector<uint8_t>& buf);

} // namespace mui
