#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace posekit {

/// Deterministic random source used everywhere randomness is needed.
///
/// Built on std::mt19937_64 (whose output sequence is fixed by the standard)
/// with hand-rolled distributions, so a given seed produces the same draws on
/// every conforming implementation. std:: distributions are avoided because
/// their algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Unbiased uniform integer in [0, n) via rejection sampling.
  std::uint64_t uniform_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_below: n must be > 0");
    constexpr std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = max % n;
    std::uint64_t x = gen_();
    if (rem != n - 1) {
      // [0, max - rem) holds every residue equally often; reject the tail.
      while (x >= max - rem) x = gen_();
    }
    return x % n;
  }

  /// Standard normal via Box-Muller; the paired value is cached.
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

  double normal(double sigma) { return sigma * normal(); }

 private:
  std::mt19937_64 gen_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

/// SplitMix64 step; used to derive independent child seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Child seed for stream `stream` under `master`. Distinct streams give
/// statistically independent sequences.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t s = master ^ (0x5851f42d4c957f2dULL * (stream + 1));
  splitmix64(s);
  return splitmix64(s);
}

/// Indices of a uniform sample without replacement: n_out of [0, n_in).
/// Partial Fisher-Yates; output order is the shuffle order.
inline std::vector<std::size_t> sample_indices_without_replacement(
    std::size_t n_in, std::size_t n_out, Rng& rng) {
  if (n_out > n_in) {
    throw std::invalid_argument("sample_indices_without_replacement: n_out > n_in");
  }
  std::vector<std::size_t> idx(n_in);
  for (std::size_t i = 0; i < n_in; ++i) idx[i] = i;
  for (std::size_t i = 0; i < n_out; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.uniform_below(n_in - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(n_out);
  return idx;
}

}  // namespace posekit
