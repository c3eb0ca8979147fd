#pragma once

#include <cstddef>
#include <functional>

namespace plc {

/// PLCOMB_THREADS if set to a positive integer, else the hardware
/// concurrency (at least 1).
unsigned thread_count();

/// Calls body(i) for i in [0, n) on up to thread_count() threads. The first
/// exception thrown by any call is rethrown after all threads finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace plc
