#include "geokernel/parallel.hpp"

#include <cstdlib>
#include <string>

#include "geokernel/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace geokernel::parallel {

void set_thread_count(int n) {
  if (n < 1) throw Error("thread count must be >= 1, got " + std::to_string(n));
#ifdef _OPENMP
  omp_set_num_threads(n);
#endif
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::optional<int> resolve_thread_count(std::optional<int> flag) {
  if (flag) return flag;
  const char* env = std::getenv("GEOKERNEL_THREADS");
  if (env == nullptr || *env == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const int n = std::stoi(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return n;
  } catch (const std::exception&) {
    throw Error(std::string("GEOKERNEL_THREADS is not an integer: '") + env + "'");
  }
}

}  // namespace geokernel::parallel
