#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace grover {

// Runs fn(chunk_index, begin, end) over fixed-size chunks of [0, total).
// Chunk boundaries depend only on (total, chunk_size), never on the
// worker count, so callers that accumulate per chunk and reduce in chunk
// order get results independent of scheduling.
inline void parallel_chunks(long total, long chunk_size, int workers,
                            const std::function<void(long, long, long)>& fn) {
  const long n_chunks = total <= 0 ? 0 : (total + chunk_size - 1) / chunk_size;
  if (n_chunks == 0) return;
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers == 1 || n_chunks == 1) {
    for (long c = 0; c < n_chunks; ++c)
      fn(c, c * chunk_size, std::min(total, (c + 1) * chunk_size));
    return;
  }
  std::atomic<long> next{0};
  auto body = [&] {
    for (;;) {
      const long c = next.fetch_add(1);
      if (c >= n_chunks) return;
      fn(c, c * chunk_size, std::min(total, (c + 1) * chunk_size));
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
}

inline constexpr long kTrajectoryChunk = 64;

}  // namespace grover
