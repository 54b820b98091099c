#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace valueset {

struct IndexRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;

  std::uint64_t size() const { return end - begin; }
  bool empty() const { return begin >= end; }
};

// Splits [0, n) into at most `parts` contiguous, disjoint, non-empty ranges in
// increasing order. The split depends only on (n, parts).
std::vector<IndexRange> split_range(std::uint64_t n, unsigned parts);

unsigned default_workers();

// Runs body(range, slot) for every range of split_range(n, workers); slot is the
// range position, so callers can keep per-slot partial results and merge them in
// slot order. Exceptions thrown by any worker are rethrown on the calling thread.
void parallel_ranges(std::uint64_t n, unsigned workers,
                     const std::function<void(IndexRange, std::size_t)>& body);

// Number of ranges parallel_ranges will use for (n, workers).
std::size_t range_count(std::uint64_t n, unsigned workers);

}  // namespace valueset
