// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string_view>

#include "corb/common.hpp"

namespace corb {

// Counter-free splitting PRNG built on the splitmix64 finalizer. Everything
// here is integer arithmetic on fixed-width types, so derived seeds and the
// streams they open are identical on every platform.

inline constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer (mixes a 64-bit value; not a stream by itself).
inline constexpr uint64_t mix64(uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed derivation: fold one component into a running seed. The exact chain
//   s' = mix64(s ^ (v + kGolden + (s << 6) + (s >> 2)))
// is part of the manifest replay contract; changing it is a format break.
inline constexpr uint64_t seed_chain(uint64_t s, uint64_t v) {
  return mix64(s ^ (v + kGolden + (s << 6) + (s >> 2)));
}

inline constexpr uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline constexpr uint64_t seed_chain(uint64_t s, std::string_view label) {
  return seed_chain(s, fnv1a64(label));
}

template <typename... Parts>
inline constexpr uint64_t derive_seed(uint64_t master, Parts... parts) {
  uint64_t s = master;
  ((s = seed_chain(s, parts)), ...);
  return s;
}

// Sequential stream over splitmix64.
class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += kGolden;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Inclusive integer range, rejection-free modulo bias avoidance.
  int64_t randint(int64_t lo, int64_t hi) {
    require(hi >= lo, Error::Kind::kUsage, "randint: empty range");
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<int64_t>(next_u64());  // full 64-bit range
    uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return lo + static_cast<int64_t>(v % span);
  }

  template <typename T>
  T choice(std::span<const T> values) {
    require(!values.empty(), Error::Kind::kUsage, "choice: empty set");
    return values[static_cast<size_t>(randint(0, static_cast<int64_t>(values.size()) - 1))];
  }

  // Standard normal via Box-Muller, pairs cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  // Knuth's product method, chunked so exp(-lambda) never underflows.
  int64_t poisson(double lambda) {
    require(lambda >= 0.0 && std::isfinite(lambda), Error::Kind::kUsage,
            "poisson: lambda must be finite and non-negative");
    int64_t total = 0;
    while (lambda > 400.0) {
      total += poisson_knuth(400.0);
      lambda -= 400.0;
    }
    return total + poisson_knuth(lambda);
  }

  // Fisher-Yates permutation of [0, n).
  template <typename Index>
  void shuffle(std::span<Index> values) {
    for (size_t i = values.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(randint(0, static_cast<int64_t>(i) - 1));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  int64_t poisson_knuth(double lambda) {
    if (lambda <= 0.0) return 0;
    double limit = std::exp(-lambda);
    int64_t k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform();
    } while (p > limit);
    return k - 1;
  }

  uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace corb
