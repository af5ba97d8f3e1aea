#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace iris {

using UserId = std::int32_t;
using ItemId = std::int32_t;

/// Bad input, violated precondition, or malformed configuration. Maps to CLI exit 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite intermediate, overflow, or other numeric failure. Maps to CLI exit 2.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Activation { ReLU, Softplus, Sigmoid, Identity };

const char* activation_name(Activation a);
Activation activation_from_name(const std::string& name);

inline bool is_smooth(Activation a) { return a != Activation::ReLU; }

double activate(Activation a, double x);
double activate_grad(Activation a, double x);

/// Numerically stable logistic function.
double logistic(double x);
/// Numerically stable ln(1 + e^x).
double softplus(double x);

/// Deterministic seeded RNG. Draw algorithms are pinned here (not delegated to
/// std::*_distribution, whose output is implementation-defined) so that sampled
/// splits, negatives, and initializations are reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Standard normal via Box-Muller (one value per pair of uniforms).
  double gaussian();

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Stateless seed mixer for deriving independent streams (e.g. per epoch).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace iris
