#ifndef MARKOFF_PERSIST_HPP
#define MARKOFF_PERSIST_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "markoff/coeffs.hpp"

namespace markoff {

// On-disk coefficient map, one JSON document per slope:
//   {"format": "markoff-coeff-map", "version": 1,
//    "slope": {"q": 3, "p": 2},
//    "entries": [[alpha, beta, "coefficient"], ...]}
// Coefficients are decimal strings; entries are in canonical point order.
inline constexpr int kCoeffFormatVersion = 1;

std::string serialize_coeff_map(const Slope& s, const CoeffMap& f);
// Throws std::runtime_error on a malformed document or unknown version.
std::pair<Slope, CoeffMap> parse_coeff_map(std::string_view text);

std::filesystem::path cache_file(const std::filesystem::path& dir, const Slope& s);

// Reads every cache file in `dir` into `cache`; returns the number loaded.
std::size_t load_cache(const std::filesystem::path& dir, CoeffCache& cache);
// Writes cache entries that have no file yet; returns the number written.
std::size_t save_cache(const std::filesystem::path& dir, const CoeffCache& cache);

// Environment variable naming the default cache directory.
inline constexpr const char* kCacheDirEnv = "MARKOFF_CACHE_DIR";
// `flag` if given, otherwise $MARKOFF_CACHE_DIR, otherwise none.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

}  // namespace markoff

#endif  // MARKOFF_PERSIST_HPP
