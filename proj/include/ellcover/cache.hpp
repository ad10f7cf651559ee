#pragma once

// Append-only JSONL result store. One record per line:
//   {"kind":..., "d":..., "sigma":..., "version":..., "value":{...}}
// The latest record for a key wins. Records with another version are ignored.

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "ellcover/errors.hpp"

namespace ellcover {

struct CacheKey {
  std::string kind;  // "counts", "components", ...
  int d = 0;
  std::string sigma;  // normalized profile string
  auto operator<=>(const CacheKey&) const = default;
};

struct CacheStats {
  std::size_t records = 0;  // complete, well-formed lines
  std::size_t stale = 0;    // other version
  bool torn_tail = false;   // last line missing its newline
};

class ResultCache {
 public:
  static constexpr int kVersion = 1;
  static constexpr std::string_view kFileName = "results.jsonl";

  // Creates the directory if needed. Throws InvalidInput if it cannot be created.
  explicit ResultCache(std::filesystem::path dir, int version = kVersion);

  // Throws CacheCorruption on a malformed complete line.
  std::optional<nlohmann::ordered_json> get(const CacheKey& key) const;
  void put(const CacheKey& key, const nlohmann::ordered_json& value);

  // Rewrites the file keeping the latest current-version record per key: temp file, fsync, rename.
  // `on_stage` is called with "written" (temp file synced) and "renamed"; used for fault injection.
  void compact(const std::function<void(std::string_view)>& on_stage = {});

  CacheStats stats() const;
  const std::filesystem::path& file() const { return file_; }
  int version() const { return version_; }

 private:
  std::filesystem::path dir_, file_, lock_;
  int version_;
};

// Looks up `key`; on a miss computes, stores and returns the value.
nlohmann::ordered_json cached(ResultCache* cache, const CacheKey& key,
                              const std::function<nlohmann::ordered_json()>& compute);

}  // namespace ellcover
