#pragma once

#include <cstddef>
#include <exception>
#include <limits>

namespace geokernel::detail {

/// Runs body(state, i) for i in [0, n) across OpenMP workers, with one
/// `make_state()` per worker. If iterations throw, the exception from the
/// lowest failing index is rethrown on the calling thread once the loop ends.
template <class MakeState, class Body>
void parallel_for(std::size_t n, MakeState&& make_state, Body&& body) {
  std::exception_ptr error;
  std::size_t error_index = std::numeric_limits<std::size_t>::max();
  const auto count = static_cast<long long>(n);
#pragma omp parallel
  {
    auto state = make_state();
#pragma omp for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) {
      try {
        body(state, static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(geokernel_parallel_for_error)
        {
          if (static_cast<std::size_t>(i) < error_index) {
            error_index = static_cast<std::size_t>(i);
            error = std::current_exception();
          }
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace geokernel::detail
