#pragma once

// Exhaustive searches iterate over an indexed candidate list. Each kernel
// writes only to its own slot, so the merged output is in index order no
// matter how the OpenMP runtime schedules the work. The serial loop is the
// reference the parallel one is tested against.

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace isodist::kernels {

enum class Exec { Serial, Parallel };

void run_serial(std::size_t n, const std::function<void(std::size_t)>& body);
/// OpenMP dynamic schedule; the first exception thrown by any body is
/// rethrown on the calling thread after the loop.
void run_omp(std::size_t n, const std::function<void(std::size_t)>& body);

inline void run(std::size_t n, const std::function<void(std::size_t)>& body, Exec exec) {
  if (exec == Exec::Serial) {
    run_serial(n, body);
  } else {
    run_omp(n, body);
  }
}

/// Runs body(i, slot_i) for every i and concatenates the slots in order.
template <class T>
std::vector<T> collect(std::size_t n, const std::function<void(std::size_t, std::vector<T>&)>& body,
                       Exec exec) {
  std::vector<std::vector<T>> slots(n);
  run(n, [&](std::size_t i) { body(i, slots[i]); }, exec);
  std::vector<T> out;
  for (auto& s : slots) {
    for (auto& x : s) out.push_back(std::move(x));
  }
  return out;
}

int max_threads();

}  // namespace isodist::kernels
