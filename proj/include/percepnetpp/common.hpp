#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace percepnetpp {

// Canonical full-band configuration: 48 kHz, 20 ms windows, 10 ms hop.
inline constexpr int kSampleRate = 48000;
inline constexpr int kFrameSize = 960;
inline constexpr int kHopSize = 480;
inline constexpr int kFftBins = kFrameSize / 2 + 1;  // 481
inline constexpr int kNumBands = 34;
inline constexpr int kMinPitchPeriod = 96;   // 500 Hz
inline constexpr int kMaxPitchPeriod = 768;  // 62.5 Hz
inline constexpr int kLookaheadFrames = 3;

/// Deterministic PRNG used for every random decision in the project.
/// std::mt19937_64 raw output is mapped to floats by hand so streams are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {
    // Warm up so trivially related seeds diverge quickly.
    for (int i = 0; i < 8; ++i) next_u64();
  }

  std::uint64_t next_u64() {
    // splitmix64; small, fast, and fully portable.
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (one value per call, cached pair).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 <= 1e-300) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) {
    return n == 0 ? 0 : next_u64() % n;
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

enum class LogLevel { kDebug = 0, kInfo = 1, kWarn = 2, kError = 3 };

LogLevel log_threshold();
void set_log_threshold(LogLevel level);

/// printf-style logging to stderr; data outputs stay on stdout/files.
void log_line(LogLevel level, const char* fmt, ...);

#define PNPP_LOG_DEBUG(...) ::percepnetpp::log_line(::percepnetpp::LogLevel::kDebug, __VA_ARGS__)
#define PNPP_LOG_INFO(...) ::percepnetpp::log_line(::percepnetpp::LogLevel::kInfo, __VA_ARGS__)
#define PNPP_LOG_WARN(...) ::percepnetpp::log_line(::percepnetpp::LogLevel::kWarn, __VA_ARGS__)
#define PNPP_LOG_ERROR(...) ::percepnetpp::log_line(::percepnetpp::LogLevel::kError, __VA_ARGS__)

}  // namespace percepnetpp
