#pragma once

#include <cstdint>
#include <random>

namespace ol {

// Seeded engine shared by every randomized verification step.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 20240601) : eng_(seed) {}
  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(eng_);
  }
  double uniform_real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ol
