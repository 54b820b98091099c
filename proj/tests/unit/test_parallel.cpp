#include <doctest.h>

#include <atomic>
#include <stdexcept>

#include "valueset/parallel.hpp"

using namespace valueset;

TEST_CASE("split_range covers [0, n) in order") {
  for (std::uint64_t n : {0ull, 1ull, 7ull, 100ull, 1000003ull}) {
    for (unsigned parts : {1u, 2u, 3u, 8u, 64u}) {
      auto ranges = split_range(n, parts);
      CHECK(ranges.size() == range_count(n, parts));
      CHECK(ranges.size() <= parts);
      std::uint64_t next = 0;
      for (auto r : ranges) {
        CHECK(r.begin == next);
        CHECK_FALSE(r.empty());
        next = r.end;
      }
      CHECK(next == n);
    }
  }
}

TEST_CASE("parallel_ranges visits every index once") {
  std::vector<std::atomic<int>> seen(10007);
  parallel_ranges(seen.size(), 4, [&](IndexRange r, std::size_t) {
    for (auto i = r.begin; i < r.end; ++i) ++seen[i];
  });
  for (auto& s : seen) CHECK(s.load() == 1);
}

TEST_CASE("worker exceptions reach the caller") {
  CHECK_THROWS_AS(parallel_ranges(100, 4,
                                  [](IndexRange r, std::size_t) {
                                    if (r.begin > 0) throw std::runtime_error("boom");
                                  }),
                  std::runtime_error);
}
