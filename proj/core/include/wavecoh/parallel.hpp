#pragma once

#include <cstddef>
#include <functional>

namespace wavecoh {

unsigned default_threads();

// Runs fn(i) for i in [0, count). fn(i) must depend only on i so the result
// is independent of scheduling. threads == 0 uses the hardware default.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace wavecoh
