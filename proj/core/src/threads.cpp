#include "geowb/threads.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace geowb {

std::size_t worker_count() {
  std::size_t hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const char* env = std::getenv("GEOWB_THREADS");
  if (env != nullptr && *env != '\0') {
    try {
      const long requested = std::stol(env);
      if (requested >= 1 && static_cast<std::size_t>(requested) < hw)
        return static_cast<std::size_t>(requested);
      if (requested >= 1) return hw;
    } catch (...) {
      // Malformed value: fall through to hardware default.
    }
  }
  return hw;
}

}  // namespace geowb
