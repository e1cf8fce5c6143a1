#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#include <omp.h>

namespace nesto {

enum class Execution { serial, parallel };

/// Number of OpenMP workers used by Execution::parallel; 0 keeps the
/// runtime default.
inline void set_worker_count(int jobs) {
  if (jobs > 0) omp_set_num_threads(jobs);
}

/// Runs body(i) for i in [0, count). The serial branch is the reference the
/// parallel one is tested against. The first exception thrown by any
/// iteration is rethrown on the calling thread.
template <typename Body>
void for_each_index(std::size_t count, Execution exec, Body&& body) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace nesto
