#ifndef EVENTFLOW_RNG_HPP
#define EVENTFLOW_RNG_HPP

#include <cstdint>
#include <string_view>

namespace evf {

/// Deterministic PRNG (xoshiro256++ seeded through splitmix64) with the
/// distribution transforms implemented in-repo so that streams are
/// bit-reproducible across platforms and standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [0, n).
  std::int64_t uniform_int(std::int64_t n);

  /// Standard normal via Box-Muller (one spare value cached).
  double normal();
  double normal(double mean, double stddev);

  /// Gamma(shape, 1) via Marsaglia-Tsang squeeze.
  double gamma(double shape);

  /// Derive an independent stream for a named sub-task of `seed`.
  static std::uint64_t substream(std::uint64_t seed, std::string_view tag);
  static std::uint64_t substream(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t state_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace evf

#endif  // EVENTFLOW_RNG_HPP
