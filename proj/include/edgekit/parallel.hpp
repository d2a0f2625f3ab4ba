#pragma once

#include <cstddef>
#include <functional>

namespace edgekit {

/// Number of worker threads used by parallel loops.
/// Resolution order: set_thread_count() override, EDGEKIT_THREADS, hardware concurrency.
unsigned thread_count();

/// Override the worker count; 0 restores the environment/hardware default.
void set_thread_count(unsigned n);

/// Run body(i) for i in [0, n). Iterations must be independent; the first
/// exception thrown by any iteration is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace edgekit
