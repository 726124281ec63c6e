#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geokernel {

/// Base error for every failure raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a geodesic query crosses connected components.
class DisconnectedMeshError : public Error {
 public:
  DisconnectedMeshError(const std::string& what, std::size_t unreachable_vertex)
      : Error(what), unreachable_vertex_(unreachable_vertex) {}

  /// A vertex that cannot be reached from the query source.
  std::size_t unreachable_vertex() const noexcept { return unreachable_vertex_; }

 private:
  std::size_t unreachable_vertex_;
};

}  // namespace geokernel
