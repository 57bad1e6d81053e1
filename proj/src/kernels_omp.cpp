#include "isodist/kernels.hpp"

#include <omp.h>

#include <exception>
#include <mutex>

namespace isodist::kernels {

void run_omp(std::size_t n, const std::function<void(std::size_t)>& body) {
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace isodist::kernels
