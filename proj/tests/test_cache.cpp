#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "ellcover/cache.hpp"
#include "ellcover/cover_enum.hpp"

using namespace ellcover;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("ellcover-cache-" + std::to_string(::getpid()) + "-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path path;
};

void append_raw(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::app);
  out << text;
}

std::size_t line_count(const fs::path& p) {
  std::ifstream in(p);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) ++n;
  return n;
}

nlohmann::ordered_json counts_json(int d) {
  return count_table(RamificationProfile::parse("3", d), CountMethod::Brute).to_json();
}

}  // namespace

TEST_CASE("cache: miss, then a byte-identical hit") {
  TempDir tmp;
  ResultCache cache(tmp.path);
  const CacheKey key{"counts", 5, "3,1,1"};
  CHECK_FALSE(cache.get(key));
  int computed = 0;
  auto compute = [&] {
    ++computed;
    return counts_json(5);
  };
  const auto cold = cached(&cache, key, compute);
  const auto warm = cached(&cache, key, compute);
  CHECK(computed == 1);
  CHECK(cold.dump() == warm.dump());
  CHECK(warm.dump() == counts_json(5).dump());
  CHECK(CountsTable::from_json(nlohmann::json::parse(warm.dump())).N == 27);
  CHECK_FALSE(cache.get({"counts", 5, "3"}));
  CHECK_FALSE(cache.get({"components", 5, "3,1,1"}));
}

TEST_CASE("cache: version bump invalidates") {
  TempDir tmp;
  ResultCache(tmp.path, 1).put({"counts", 3, "3"}, {{"N", 1}});
  ResultCache v2(tmp.path, 2);
  CHECK_FALSE(v2.get({"counts", 3, "3"}));
  CHECK(v2.stats().stale == 1);
  v2.put({"counts", 3, "3"}, {{"N", 2}});
  CHECK((*v2.get({"counts", 3, "3"}))["N"] == 2);
  CHECK((*ResultCache(tmp.path, 1).get({"counts", 3, "3"}))["N"] == 1);
  v2.compact();
  CHECK(line_count(v2.file()) == 1);
  CHECK_FALSE(ResultCache(tmp.path, 1).get({"counts", 3, "3"}));
}

TEST_CASE("cache: latest record wins and compaction keeps it") {
  TempDir tmp;
  ResultCache cache(tmp.path);
  for (int i = 0; i < 5; ++i) cache.put({"counts", 3, "3"}, {{"i", i}});
  cache.put({"counts", 4, "3,1"}, {{"i", 9}});
  CHECK((*cache.get({"counts", 3, "3"}))["i"] == 4);
  CHECK(line_count(cache.file()) == 6);
  cache.compact();
  CHECK(line_count(cache.file()) == 2);
  CHECK((*cache.get({"counts", 3, "3"}))["i"] == 4);
  CHECK((*cache.get({"counts", 4, "3,1"}))["i"] == 9);
}

TEST_CASE("cache: torn tail is ignored and repaired, a bad middle line is corruption") {
  TempDir tmp;
  ResultCache cache(tmp.path);
  cache.put({"counts", 3, "3"}, {{"N", 1}});
  append_raw(cache.file(), R"({"kind":"counts","d":4,"sig)");
  CHECK(cache.stats().torn_tail);
  CHECK((*cache.get({"counts", 3, "3"}))["N"] == 1);
  CHECK_FALSE(cache.get({"counts", 4, "3,1"}));
  cache.put({"counts", 4, "3,1"}, {{"N", 2}});
  CHECK_FALSE(cache.stats().torn_tail);
  CHECK(line_count(cache.file()) == 2);
  CHECK((*cache.get({"counts", 4, "3,1"}))["N"] == 2);

  append_raw(cache.file(), "not json\n");
  cache.put({"counts", 5, "3,1,1"}, {{"N", 3}});
  CHECK_THROWS_AS(cache.get({"counts", 3, "3"}), CacheCorruption);
  CHECK_THROWS_AS(cache.compact(), CacheCorruption);

  TempDir tmp2;
  ResultCache other(tmp2.path);
  append_raw(other.file(), "{\"kind\":\"counts\",\"d\":3}\n");
  CHECK_THROWS_AS(other.get({"counts", 3, "3"}), CacheCorruption);
}

TEST_CASE("cache: crash during compaction leaves the store intact") {
  TempDir tmp;
  ResultCache cache(tmp.path);
  for (int i = 0; i < 4; ++i) cache.put({"counts", 3, "3"}, {{"i", i}});
  const pid_t pid = ::fork();
  REQUIRE(pid >= 0);
  if (pid == 0) {
    ResultCache child(tmp.path);
    child.compact([](std::string_view stage) {
      if (stage == "written") ::_exit(0);  // dies before the rename
    });
    ::_exit(1);
  }
  int status = 0;
  ::waitpid(pid, &status, 0);
  CHECK(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(line_count(cache.file()) == 4);
  CHECK((*cache.get({"counts", 3, "3"}))["i"] == 3);
  // A later compaction succeeds; the orphaned temp file is not read.
  cache.compact();
  CHECK(line_count(cache.file()) == 1);
}

TEST_CASE("cache: crash mid-append leaves only a torn tail") {
  TempDir tmp;
  ResultCache cache(tmp.path);
  cache.put({"counts", 3, "3"}, {{"N", 1}});
  const pid_t pid = ::fork();
  REQUIRE(pid >= 0);
  if (pid == 0) {
    std::ofstream out(cache.file(), std::ios::binary | std::ios::app);
    out << R"({"kind":"counts","d":9,"sigma":"3,1,1,1,1,1,1","version":1,"val)";
    out.flush();
    ::_exit(0);
  }
  ::waitpid(pid, nullptr, 0);
  CHECK(cache.stats().torn_tail);
  CHECK(cache.stats().records == 1);
  CHECK_FALSE(cache.get({"counts", 9, "3,1,1,1,1,1,1"}));
}

TEST_CASE("cache: concurrent writers and compactors produce no torn records") {
  TempDir tmp;
  constexpr int kWriters = 4, kPuts = 25;
  std::vector<pid_t> kids;
  for (int w = 0; w < kWriters; ++w) {
    const pid_t pid = ::fork();
    REQUIRE(pid >= 0);
    if (pid == 0) {
      ResultCache c(tmp.path);
      for (int i = 0; i < kPuts; ++i) {
        c.put({"counts", w, "3"}, {{"writer", w}, {"i", i}, {"pad", std::string(200, 'x')}});
        if (i % 10 == 9) c.compact();
      }
      ::_exit(0);
    }
    kids.push_back(pid);
  }
  for (pid_t k : kids) {
    int status = 0;
    ::waitpid(k, &status, 0);
    CHECK(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
  }
  ResultCache cache(tmp.path);
  const auto st = cache.stats();
  CHECK_FALSE(st.torn_tail);
  for (int w = 0; w < kWriters; ++w) {
    const auto v = cache.get({"counts", w, "3"});
    REQUIRE(v);
    CHECK((*v)["i"] == kPuts - 1);
  }
  cache.compact();
  CHECK(line_count(cache.file()) == kWriters);
}
