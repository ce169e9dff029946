#pragma once

// Persistent content-addressed cache for decomposition results.
//
// Layout: <dir>/v1/<first two hex digits>/<16 hex digits>.entry, where the hex
// string is the FNV-1a 64 hash of the key.  Each entry file holds
//
//   bds-cache/1\n<key>\n<payload byte count>\n<payload>\nend\n
//
// so a hash collision or a truncated file reads as a miss.  Writes go to a
// unique temporary file in the same directory followed by rename().

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace bds::shell {

std::uint64_t fnv1a64(const std::string& s);

class DiskCache {
 public:
  /// Disabled cache.
  DiskCache() = default;
  explicit DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// BDS_NO_CACHE (any non-empty value other than "0") disables the cache;
  /// BDS_CACHE_DIR overrides the directory; otherwise $XDG_CACHE_HOME/bds or
  /// $HOME/.cache/bds.
  static DiskCache from_env();

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path entry_path(const std::string& key) const;

  std::optional<std::string> get(const std::string& key) const;
  /// Best effort; I/O errors are swallowed.
  void put(const std::string& key, const std::string& payload) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace bds::shell
