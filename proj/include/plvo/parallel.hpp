#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace plvo {

// Serial paths are the reference implementations the tests compare against;
// parallel paths must produce bit-identical results. Work is split into
// chunks whose boundaries do not depend on the thread count, and any
// reduction is combined serially in chunk order.
enum class Execution { kSerial, kParallel };

constexpr std::size_t kParallelChunk = 256;

inline std::size_t chunk_count(std::size_t n) {
  return (n + kParallelChunk - 1) / kParallelChunk;
}

// fn(begin, end) over fixed-size chunks.
template <class F>
void for_each_chunk(std::size_t n, Execution exec, F&& fn) {
  const std::size_t chunks = chunk_count(n);
  if (exec == Execution::kParallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long long ci = 0; ci < static_cast<long long>(chunks); ++ci) {
      const std::size_t begin = static_cast<std::size_t>(ci) * kParallelChunk;
      fn(begin, std::min(begin + kParallelChunk, n));
    }
    return;
#endif
  }
  for (std::size_t ci = 0; ci < chunks; ++ci) {
    const std::size_t begin = ci * kParallelChunk;
    fn(begin, std::min(begin + kParallelChunk, n));
  }
}

// Deterministic sum reduction: per-chunk partial sums, combined in order.
template <class F>
double sum_over_chunks(std::size_t n, Execution exec, F&& per_index) {
  std::vector<double> partial(chunk_count(n), 0.0);
  for_each_chunk(n, exec, [&](std::size_t begin, std::size_t end) {
    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) acc += per_index(i);
    partial[begin / kParallelChunk] = acc;
  });
  return std::accumulate(partial.begin(), partial.end(), 0.0);
}

}  // namespace plvo
