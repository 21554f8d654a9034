#include "apollo/parallel.hpp"

#include <cstdlib>
#include <string>

namespace apollo {

unsigned resolve_thread_count(int requested) {
  if (requested > 0) return unsigned(requested);
  if (const char* env = std::getenv("STAIRCASE_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return unsigned(v);
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace apollo
