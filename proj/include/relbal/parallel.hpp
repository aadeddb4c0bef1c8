#pragma once

#include <cstddef>
#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace relbal {

inline int thread_count() {
  if (const char* env = std::getenv("RELBAL_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw > 16 ? 16 : hw);
}

/// Splits [0, count) into fixed-size chunks, evaluates `fn(begin, end)` per
/// chunk (possibly concurrently), and folds the partial results in chunk
/// order. The summation order therefore does not depend on the thread count,
/// so results are bit-stable for a given configuration.
template <class Accum, class ChunkFn, class CombineFn>
Accum chunked_reduce(std::size_t count, Accum init, ChunkFn&& fn, CombineFn&& combine,
                     std::size_t chunk_size = 2048) {
  const int threads = thread_count();
  Accum total = std::move(init);
  if (threads <= 1 || count <= chunk_size) {
    for (std::size_t begin = 0; begin < count; begin += chunk_size) {
      const std::size_t end = begin + chunk_size < count ? begin + chunk_size : count;
      combine(total, fn(begin, end));
    }
    return total;
  }
  const std::size_t num_chunks = (count + chunk_size - 1) / chunk_size;
  std::vector<std::future<Accum>> futures(num_chunks);
  std::size_t next = 0;
  while (next < num_chunks) {
    const std::size_t batch = std::min<std::size_t>(threads, num_chunks - next);
    for (std::size_t k = 0; k < batch; ++k) {
      const std::size_t c = next + k;
      const std::size_t begin = c * chunk_size;
      const std::size_t end = std::min(begin + chunk_size, count);
      futures[c] = std::async(std::launch::async, [&fn, begin, end] { return fn(begin, end); });
    }
    for (std::size_t k = 0; k < batch; ++k) {
      combine(total, futures[next + k].get());
    }
    next += batch;
  }
  return total;
}

}  // namespace relbal
