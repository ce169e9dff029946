#include "bds/shell/cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace bds::shell {

namespace fs = std::filesystem;

namespace {

constexpr const char* kMagic = "bds-cache/1";

std::string hex16(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const char* env(const char* name) {
  const char* v = std::getenv(name);
  return (v && *v) ? v : nullptr;
}

}  // namespace

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

DiskCache DiskCache::from_env() {
  if (const char* off = env("BDS_NO_CACHE"); off && std::string(off) != "0") return {};
  if (const char* dir = env("BDS_CACHE_DIR")) return DiskCache(dir);
  if (const char* xdg = env("XDG_CACHE_HOME")) return DiskCache(fs::path(xdg) / "bds");
  if (const char* home = env("HOME")) return DiskCache(fs::path(home) / ".cache" / "bds");
  return {};
}

fs::path DiskCache::entry_path(const std::string& key) const {
  const std::string h = hex16(fnv1a64(key));
  return dir_ / "v1" / h.substr(0, 2) / (h + ".entry");
}

std::optional<std::string> DiskCache::get(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(entry_path(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::string magic, stored_key, count;
  if (!std::getline(in, magic) || magic != kMagic) return std::nullopt;
  if (!std::getline(in, stored_key) || stored_key != key) return std::nullopt;
  if (!std::getline(in, count)) return std::nullopt;
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoull(count, &used);
    if (used != count.size()) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  std::string payload(n, '\0');
  if (!in.read(payload.data(), static_cast<std::streamsize>(n))) return std::nullopt;
  std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (rest != "\nend\n") return std::nullopt;
  return payload;
}

void DiskCache::put(const std::string& key, const std::string& payload) const {
  if (!enabled() || key.find('\n') != std::string::npos) return;
  static std::atomic<unsigned> counter{0};
  const fs::path target = entry_path(key);
  std::error_code ec;
  fs::create_directories(target.parent_path(), ec);
  if (ec) return;
  std::ostringstream tmpname;
  tmpname << target.filename().string() << ".tmp." << ::getpid() << "." << counter++;
  const fs::path tmp = target.parent_path() / tmpname.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << kMagic << '\n' << key << '\n' << payload.size() << '\n' << payload << "\nend\n";
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace bds::shell
