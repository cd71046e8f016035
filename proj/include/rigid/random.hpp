#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace rigid {

/// Seeded pseudo-random stream used wherever the library needs a "generic"
/// choice. The engine is std::mt19937_64, whose output sequence is fixed by
/// the C++ standard; doubles are formed from the top 53 bits so the stream
/// is identical on every platform (std distributions are not).
class SeededRandomSource {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/top53";

  explicit SeededRandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace rigid
