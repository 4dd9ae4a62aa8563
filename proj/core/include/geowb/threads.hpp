#pragma once

#include <cstddef>

namespace geowb {

// Worker count for parallel sections: min(GEOWB_THREADS, hardware
// concurrency), at least 1. GEOWB_THREADS=1 forces sequential execution.
std::size_t worker_count();

}  // namespace geowb
