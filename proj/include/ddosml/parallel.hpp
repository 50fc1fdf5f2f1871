#pragma once

#include <cstddef>
#include <functional>

namespace ddosml {

/// Process-wide cap on worker threads (CLI --threads). 0 = hardware default.
void set_max_threads(std::size_t n);
std::size_t max_threads();

/// Runs fn(i) for i in [0, n). Each index owns its output slot, so results
/// are identical to a serial run regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace ddosml
