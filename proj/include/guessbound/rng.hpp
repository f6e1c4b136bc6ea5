#pragma once

#include <cstdint>
#include <vector>

namespace guessbound {

// Fixed, fully specified generator stack so that identical seeds give
// identical streams on every platform and toolchain: xoshiro256** seeded via
// splitmix64, gamma variates by the Marsaglia-Tsang squeeze method,
// Dirichlet vectors as normalized gammas. The std:: distributions are
// implementation-defined and would break seed reproducibility across
// compilers, so they are not used here.
inline constexpr const char* kRngName = "xoshiro256** / splitmix64; Marsaglia-Tsang gamma";

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
};

class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(std::uint64_t seed);

  std::uint64_t next();
  // Uniform on [0,1) with 53 random bits.
  double uniform01();
  // Uniform on (0,1], safe as a log argument.
  double uniform01_open_low();
  double normal();
  // Shape alpha > 0, unit scale.
  double gamma(double alpha);
  // Symmetric Dirichlet over n cells.
  std::vector<double> dirichlet(int n, double concentration);
  // Uniform integer in [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t s_[4];
};

// Stable derivation of per-item seeds from a master seed, for deterministic
// fan-out across workers.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace guessbound
