#include "strata/cache.hpp"

#include <fstream>

#include <json.hpp>

namespace strata {

std::uint64_t cache_digest(int n, int schema_version, std::span<const int> dims) {
    // FNV-1a over the canonical byte rendering of (n, version, dims)
    std::uint64_t h = 1469598103934665603ULL;
    const auto mix = [&h](int value) {
        for (int shift = 0; shift < 32; shift += 8) {
            h ^= static_cast<std::uint64_t>((static_cast<std::uint32_t>(value) >> shift) & 0xff);
            h *= 1099511628211ULL;
        }
    };
    mix(n);
    mix(schema_version);
    for (int d : dims) mix(d);
    return h;
}

std::filesystem::path cache_entry_path(const std::filesystem::path& dir, int n) {
    return dir / ("strat-n" + std::to_string(n) + "-v" + std::to_string(kCacheSchemaVersion) +
                  ".json");
}

void cache_store(const std::filesystem::path& dir, const Stratification& s) {
    std::filesystem::create_directories(dir);
    nlohmann::ordered_json doc;
    doc["n"] = s.n;
    doc["schema_version"] = kCacheSchemaVersion;
    doc["dims"] = s.dims;
    doc["digest"] = cache_digest(s.n, kCacheSchemaVersion, s.dims);
    std::ofstream out(cache_entry_path(dir, s.n), std::ios::trunc);
    if (!out)
        throw std::runtime_error("cache_store: cannot write " +
                                 cache_entry_path(dir, s.n).string());
    out << doc.dump(2) << '\n';
}

std::optional<std::vector<int>> cache_load(const std::filesystem::path& dir, int n,
                                           std::string* warning) {
    const std::filesystem::path path = cache_entry_path(dir, n);
    std::ifstream in(path);
    if (!in) return std::nullopt;  // plain absence, no warning
    try {
        const auto doc = nlohmann::json::parse(in);
        CacheEntry entry;
        entry.n = doc.at("n").get<int>();
        entry.schema_version = doc.at("schema_version").get<int>();
        entry.dims = doc.at("dims").get<std::vector<int>>();
        entry.digest = doc.at("digest").get<std::uint64_t>();
        if (entry.n != n || entry.schema_version != kCacheSchemaVersion) return std::nullopt;
        if (entry.digest != cache_digest(entry.n, entry.schema_version, entry.dims)) {
            if (warning) *warning = "cache entry " + path.string() + " failed its digest check";
            return std::nullopt;
        }
        return std::move(entry.dims);
    } catch (const std::exception& e) {
        if (warning) *warning = "cache entry " + path.string() + " is unreadable: " + e.what();
        return std::nullopt;
    }
}

}  // namespace strata
