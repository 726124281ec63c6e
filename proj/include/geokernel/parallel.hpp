#pragma once

#include <optional>

namespace geokernel::parallel {

/// Caps the OpenMP worker count for subsequent kernel calls (n >= 1).
void set_thread_count(int n);

/// Current worker cap (1 when built without OpenMP).
int thread_count();

/// Resolves a thread count from an explicit flag, falling back to the
/// GEOKERNEL_THREADS environment variable. Returns nullopt when neither is set.
std::optional<int> resolve_thread_count(std::optional<int> flag);

}  // namespace geokernel::parallel
