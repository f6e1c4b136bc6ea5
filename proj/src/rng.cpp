#include "guessbound/rng.hpp"

#include <cmath>

#include "guessbound/errors.hpp"

namespace guessbound {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

Xoshiro256ss::Xoshiro256ss(std::uint64_t seed) {
  SplitMix64 sm(seed);
  for (auto& s : s_) s = sm.next();
}

std::uint64_t Xoshiro256ss::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256ss::uniform01() { return (next() >> 11) * 0x1.0p-53; }

double Xoshiro256ss::uniform01_open_low() { return ((next() >> 11) + 1) * 0x1.0p-53; }

double Xoshiro256ss::normal() {
  // Box-Muller; one variate per call keeps the stream position predictable.
  const double u1 = uniform01_open_low();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
}

double Xoshiro256ss::gamma(double alpha) {
  if (alpha <= 0.0) throw Error(Errc::validation_error, "gamma shape must be positive");
  if (alpha < 1.0) {
    // Boost to shape alpha+1, then scale back.
    const double g = gamma(alpha + 1.0);
    const double u = uniform01_open_low();
    return g * std::pow(u, 1.0 / alpha);
  }
  const double d = alpha - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform01_open_low();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

std::vector<double> Xoshiro256ss::dirichlet(int n, double concentration) {
  if (n < 1) throw Error(Errc::empty_alphabet, "dirichlet needs at least one cell");
  if (concentration <= 0.0)
    throw Error(Errc::validation_error, "dirichlet concentration must be positive");
  std::vector<double> v(n);
  double total = 0.0;
  do {
    total = 0.0;
    for (double& g : v) total += (g = gamma(concentration));
  } while (total <= 0.0);  // guards against underflow at tiny concentrations
  for (double& g : v) g /= total;
  return v;
}

std::uint64_t Xoshiro256ss::below(std::uint64_t bound) {
  const std::uint64_t threshold = -bound % bound;  // rejection for exact uniformity
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 sm(master ^ (0xA0761D6478BD642FULL + index * 0xE7037ED1A0B428DBULL));
  return sm.next();
}

}  // namespace guessbound
