#include "orbitlimits/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace ol {

int thread_count() {
  int def = omp_get_max_threads();
  const char* env = std::getenv("ORBITLIMITS_THREADS");
  if (env == nullptr) return def;
  try {
    int v = std::stoi(env);
    if (v >= 1) return v < def ? v : def;
  } catch (...) {
  }
  return def;
}

}  // namespace ol
