// Disk cache for expensive enumeration results: one JSON file per entry,
// keyed by operation, symmetry class, size, and library version. A version
// mismatch or unreadable file is a miss, never an error.
#ifndef FPL_CACHE_HPP_
#define FPL_CACHE_HPP_

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include <fpl/version.hpp>

namespace fpl {

inline std::filesystem::path cache_dir() {
  if (const char* dir = std::getenv("FPLAB_CACHE_DIR"))
    return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
    return std::filesystem::path(xdg) / "fplab";
  if (const char* home = std::getenv("HOME"))
    return std::filesystem::path(home) / ".cache" / "fplab";
  return std::filesystem::temp_directory_path() / "fplab";
}

struct CacheKey {
  std::string op;
  std::string cls;
  int size = 0;

  std::string file_name() const {
    return op + "-" + cls + "-" + std::to_string(size) + ".json";
  }
};

inline std::optional<nlohmann::json> cache_load(const CacheKey& key) {
  std::ifstream in(cache_dir() / key.file_name());
  if (!in)
    return std::nullopt;
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    return std::nullopt;
  if (doc.value("version", "") != version_tag() || doc.value("op", "") != key.op ||
      doc.value("class", "") != key.cls || doc.value("size", -1) != key.size)
    return std::nullopt;
  if (!doc.contains("payload"))
    return std::nullopt;
  return doc["payload"];
}

inline void cache_store(const CacheKey& key, const nlohmann::json& payload) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::path dir = cache_dir();
  fs::create_directories(dir, ec);
  if (ec)
    return;
  nlohmann::json doc{{"version", version_tag()},
                     {"op", key.op},
                     {"class", key.cls},
                     {"size", key.size},
                     {"payload", payload}};
  fs::path tmp = dir / (key.file_name() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out)
      return;
    out << doc.dump(2) << '\n';
  }
  // rename is atomic within one filesystem, so readers see old or new, never half
  fs::rename(tmp, dir / key.file_name(), ec);
  if (ec)
    fs::remove(tmp, ec);
}

}  // namespace fpl

#endif
