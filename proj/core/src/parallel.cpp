#include "valueset/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace valueset {

std::vector<IndexRange> split_range(std::uint64_t n, unsigned parts) {
  std::vector<IndexRange> out;
  if (n == 0) return out;
  const std::uint64_t k = std::clamp<std::uint64_t>(parts, 1, n);
  const std::uint64_t base = n / k;
  const std::uint64_t extra = n % k;
  std::uint64_t at = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::uint64_t len = base + (i < extra ? 1 : 0);
    out.push_back({at, at + len});
    at += len;
  }
  return out;
}

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::size_t range_count(std::uint64_t n, unsigned workers) { return split_range(n, workers).size(); }

void parallel_ranges(std::uint64_t n, unsigned workers,
                     const std::function<void(IndexRange, std::size_t)>& body) {
  const auto ranges = split_range(n, workers);
  if (ranges.size() <= 1) {
    for (std::size_t i = 0; i < ranges.size(); ++i) body(ranges[i], i);
    return;
  }
  std::vector<std::exception_ptr> errors(ranges.size());
  std::vector<std::thread> threads;
  threads.reserve(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    threads.emplace_back([&, i] {
      try {
        body(ranges[i], i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace valueset
