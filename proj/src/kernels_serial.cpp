#include "isodist/kernels.hpp"

namespace isodist::kernels {

void run_serial(std::size_t n, const std::function<void(std::size_t)>& body) {
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace isodist::kernels
