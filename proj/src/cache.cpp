#include "ellcover/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace ellcover {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void sys_fail(const std::string& what, const fs::path& p) {
  throw std::runtime_error(what + " " + p.string() + ": " + std::strerror(errno));
}

class FileLock {
 public:
  FileLock(const fs::path& p, int op) {
    fd_ = ::open(p.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) sys_fail("cannot open lock", p);
    while (::flock(fd_, op) != 0)
      if (errno != EINTR) sys_fail("cannot lock", p);
  }
  ~FileLock() { ::close(fd_); }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_;
};

void write_all(int fd, std::string_view data, const fs::path& p) {
  while (!data.empty()) {
    const ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      sys_fail("cannot write", p);
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return {};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Record {
  CacheKey key;
  int version;
  std::string line;
};

struct Parsed {
  std::vector<Record> records;
  CacheStats stats;
  std::size_t complete_bytes = 0;
};

Parsed parse(const std::string& text, const fs::path& p, int version) {
  Parsed out;
  std::size_t pos = 0, line_no = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      out.stats.torn_tail = true;
      break;
    }
    ++line_no;
    std::string line = text.substr(pos, nl - pos);
    pos = nl + 1;
    out.complete_bytes = pos;
    if (line.empty()) continue;
    Record r;
    try {
      const auto j = ordered_json::parse(line);
      r.key = {j.at("kind").get<std::string>(), j.at("d").get<int>(), j.at("sigma").get<std::string>()};
      r.version = j.at("version").get<int>();
      if (!j.contains("value")) throw std::runtime_error("missing value");
    } catch (const std::exception& e) {
      throw CacheCorruption(p.string() + " line " + std::to_string(line_no) + ": " + e.what());
    }
    ++out.stats.records;
    if (r.version != version) ++out.stats.stale;
    r.line = std::move(line);
    out.records.push_back(std::move(r));
  }
  return out;
}

std::string record_line(const CacheKey& key, int version, const ordered_json& value) {
  ordered_json j;
  j["kind"] = key.kind;
  j["d"] = key.d;
  j["sigma"] = key.sigma;
  j["version"] = version;
  j["value"] = value;
  return j.dump() + "\n";
}

void fsync_dir(const fs::path& dir) {
  const int fd = ::open(dir.c_str(), O_RDONLY | O_DIRECTORY | O_CLOEXEC);
  if (fd < 0) return;
  ::fsync(fd);
  ::close(fd);
}

}  // namespace

ResultCache::ResultCache(fs::path dir, int version)
    : dir_(std::move(dir)), file_(dir_ / kFileName), lock_(dir_ / "results.lock"), version_(version) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec || !fs::is_directory(dir_)) throw InvalidInput("cache directory " + dir_.string() + " is not usable");
}

std::optional<ordered_json> ResultCache::get(const CacheKey& key) const {
  FileLock lock(lock_, LOCK_SH);
  const auto parsed = parse(read_file(file_), file_, version_);
  for (auto it = parsed.records.rbegin(); it != parsed.records.rend(); ++it)
    if (it->version == version_ && it->key == key) return ordered_json::parse(it->line).at("value");
  return std::nullopt;
}

void ResultCache::put(const CacheKey& key, const ordered_json& value) {
  const std::string line = record_line(key, version_, value);
  FileLock lock(lock_, LOCK_EX);
  const int fd = ::open(file_.c_str(), O_RDWR | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (fd < 0) sys_fail("cannot open", file_);
  struct stat st {};
  if (::fstat(fd, &st) == 0 && st.st_size > 0) {
    // Drop a torn tail left by a crashed writer so the new record starts on its own line.
    char last = '\n';
    if (::pread(fd, &last, 1, st.st_size - 1) == 1 && last != '\n') {
      const std::string text = read_file(file_);
      const std::size_t nl = text.rfind('\n');
      if (::ftruncate(fd, nl == std::string::npos ? 0 : static_cast<off_t>(nl + 1)) != 0) {
        ::close(fd);
        sys_fail("cannot truncate", file_);
      }
    }
  }
  write_all(fd, line, file_);
  ::fsync(fd);
  ::close(fd);
}

void ResultCache::compact(const std::function<void(std::string_view)>& on_stage) {
  FileLock lock(lock_, LOCK_EX);
  const auto parsed = parse(read_file(file_), file_, version_);
  std::map<CacheKey, std::size_t> latest;
  for (std::size_t i = 0; i < parsed.records.size(); ++i)
    if (parsed.records[i].version == version_) latest[parsed.records[i].key] = i;
  std::vector<std::size_t> keep;
  for (const auto& [key, i] : latest) keep.push_back(i);
  std::sort(keep.begin(), keep.end());

  const fs::path tmp = dir_ / (std::string(kFileName) + ".tmp." + std::to_string(::getpid()));
  const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) sys_fail("cannot create", tmp);
  for (std::size_t i : keep) write_all(fd, parsed.records[i].line + "\n", tmp);
  if (::fsync(fd) != 0) {
    ::close(fd);
    sys_fail("cannot sync", tmp);
  }
  ::close(fd);
  if (on_stage) on_stage("written");
  if (::rename(tmp.c_str(), file_.c_str()) != 0) sys_fail("cannot replace", file_);
  fsync_dir(dir_);
  if (on_stage) on_stage("renamed");
}

CacheStats ResultCache::stats() const {
  FileLock lock(lock_, LOCK_SH);
  return parse(read_file(file_), file_, version_).stats;
}

ordered_json cached(ResultCache* cache, const CacheKey& key, const std::function<ordered_json()>& compute) {
  if (cache)
    if (auto hit = cache->get(key)) return *hit;
  auto value = compute();
  if (cache) cache->put(key, value);
  return value;
}

}  // namespace ellcover
