#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

namespace cwsurgery {

/// OpenMP worker count, capped by CW_SURGERY_THREADS when it holds a
/// positive integer.
int worker_count();

/// Evaluates fn(0..count-1) on the OpenMP pool and returns the results in
/// index order, so the output never depends on scheduling. The first
/// exception thrown by any worker is rethrown on the calling thread.
template <class Fn>
auto parallel_map(std::size_t count, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using Result = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<Result> out(count);
  std::exception_ptr failure;
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
  for (long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(cwsurgery_parallel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

/// Serial counterpart of parallel_map; the reference the parallel kernels
/// are tested against.
template <class Fn>
auto serial_map(std::size_t count, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  std::vector<std::invoke_result_t<Fn&, std::size_t>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
  return out;
}

}  // namespace cwsurgery
