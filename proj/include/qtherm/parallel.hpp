#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace qtherm {

/// Selects the OpenMP loop or the serial reference loop for kernels that
/// evaluate independent points. Both paths produce identical results.
enum class Execution { serial, parallel };

/// Threads used by Execution::parallel; n <= 0 keeps the OpenMP default.
void set_thread_count(int n);
int thread_count();

/// Calls body(i) for i in [0, n). Under Execution::parallel the iterations
/// are distributed by OpenMP; the first exception thrown by any iteration
/// is rethrown after the loop.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace qtherm
