#include "markoff/persist.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace markoff {

using nlohmann::json;

std::string serialize_coeff_map(const Slope& s, const CoeffMap& f) {
  json entries = json::array();
  for (const auto& [pt, v] : f) entries.push_back(json::array({pt.alpha, pt.beta, decimal(v)}));
  json doc = {{"format", "markoff-coeff-map"},
              {"version", kCoeffFormatVersion},
              {"slope", {{"q", s.q()}, {"p", s.p()}}},
              {"entries", std::move(entries)}};
  return doc.dump() + "\n";
}

std::pair<Slope, CoeffMap> parse_coeff_map(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (doc.at("format").get<std::string>() != "markoff-coeff-map")
      throw std::runtime_error("not a coefficient map document");
    const int version = doc.at("version").get<int>();
    if (version != kCoeffFormatVersion)
      throw std::runtime_error("unsupported coefficient map version " + std::to_string(version));
    const Slope s = Slope::reduce(doc.at("slope").at("q").get<std::int64_t>(),
                                  doc.at("slope").at("p").get<std::int64_t>());
    std::vector<CoeffMap::Entry> raw;
    for (const auto& e : doc.at("entries")) {
      if (!e.is_array() || e.size() != 3) throw std::runtime_error("entry must be [alpha, beta, \"value\"]");
      raw.emplace_back(LatticePoint{e[0].get<std::int64_t>(), e[1].get<std::int64_t>()},
                       parse_bigint(e[2].get<std::string>()));
    }
    return {s, CoeffMap::from_entries(std::move(raw))};
  } catch (const json::exception& ex) {
    throw std::runtime_error(std::string("malformed coefficient map: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw std::runtime_error(std::string("malformed coefficient map: ") + ex.what());
  }
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const Slope& s) {
  return dir / ("F_" + std::to_string(s.q()) + "_" + std::to_string(s.p()) + ".json");
}

std::size_t load_cache(const std::filesystem::path& dir, CoeffCache& cache) {
  if (!std::filesystem::is_directory(dir)) return 0;
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto& path = entry.path();
    if (path.extension() != ".json" || path.filename().string().rfind("F_", 0) != 0) continue;
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      auto [s, f] = parse_coeff_map(buf.str());
      cache.insert(s, std::make_shared<const CoeffMap>(std::move(f)));
      ++count;
    } catch (const std::runtime_error& ex) {
      throw std::runtime_error(path.string() + ": " + ex.what());
    }
  }
  return count;
}

std::size_t save_cache(const std::filesystem::path& dir, const CoeffCache& cache) {
  std::filesystem::create_directories(dir);
  std::size_t count = 0;
  for (const auto& [s, f] : cache.snapshot()) {
    const auto path = cache_file(dir, s);
    if (std::filesystem::exists(path)) continue;
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << serialize_coeff_map(s, *f);
      if (!out) throw std::runtime_error("cannot write " + tmp);
    }
    std::filesystem::rename(tmp, path);
    ++count;
  }
  return count;
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

}  // namespace markoff
