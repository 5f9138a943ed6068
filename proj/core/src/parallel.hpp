#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace dupdist::detail {

/// Splits [0, count) into at most `workers` contiguous ranges with even
/// boundaries (two nibbles of a byte never land in different ranges) and
/// runs body(begin, end) on each.
template <class Body>
void parallel_ranges(std::uint64_t count, unsigned workers, Body&& body) {
  constexpr std::uint64_t kMinPerWorker = 1 << 14;
  workers = std::max(1U, workers);
  if (workers == 1 || count < 2 * kMinPerWorker) {
    body(std::uint64_t{0}, count);
    return;
  }
  std::uint64_t per = (count + workers - 1) / workers;
  per += per & 1;
  std::vector<std::thread> pool;
  for (std::uint64_t begin = 0; begin < count; begin += per) {
    const std::uint64_t end = std::min(count, begin + per);
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace dupdist::detail
