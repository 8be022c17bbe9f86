#ifndef EVCSP_UTIL_HPP
#define EVCSP_UTIL_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace evcsp {

/// Raised on malformed documents and invalid arguments. Messages carry the
/// offending field path ("nodes[3].cost") or the 1-based node id.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic random source. All randomness in the kit flows through this
/// wrapper so that results are reproducible bit-for-bit across platforms:
/// mt19937_64 output is pinned by the standard, and the derived draws below
/// avoid the implementation-defined std::uniform_* distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  /// Uniform double in [0, 1).
  double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1].
  double u01_positive() { return 1.0 - u01(); }

  /// Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

/// Shortest round-trip decimal form of a double ("%.17g" trimmed), used by
/// every CSV writer so that parsed-back values compare bit-equal.
std::string format_double(double v);

}  // namespace evcsp

#endif  // EVCSP_UTIL_HPP
