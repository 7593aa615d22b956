#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strata/stratification.hpp"

namespace strata {

inline constexpr int kCacheSchemaVersion = 1;

/// One cached stratification: the dims vector per canonical vertex index,
/// protected by a content digest. Entries with a foreign schema version or a
/// digest mismatch are treated as absent.
struct CacheEntry {
    int n = 0;
    int schema_version = kCacheSchemaVersion;
    std::vector<int> dims;
    std::uint64_t digest = 0;
};

std::uint64_t cache_digest(int n, int schema_version, std::span<const int> dims);

std::filesystem::path cache_entry_path(const std::filesystem::path& dir, int n);

/// Writes the entry for s.n, creating the directory if needed.
void cache_store(const std::filesystem::path& dir, const Stratification& s);

/// Loads the dims for n. Returns nullopt when the entry is missing or
/// invalid; a corrupt (tampered / unparsable) entry also fills *warning.
std::optional<std::vector<int>> cache_load(const std::filesystem::path& dir, int n,
                                           std::string* warning = nullptr);

}  // namespace strata
