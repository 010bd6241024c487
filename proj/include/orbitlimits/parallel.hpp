#pragma once

namespace ol {

// Serial paths are the reference implementations the parallel kernels are
// tested and benchmarked against.
enum class Exec { Serial, Parallel };

// ORBITLIMITS_THREADS caps the OpenMP team size; unset or invalid means the
// OpenMP default.
int thread_count();

}  // namespace ol
