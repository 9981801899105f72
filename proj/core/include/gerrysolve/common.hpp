#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gerrysolve {

// Thrown when an input violates a model invariant. The message names the
// first violated invariant and, for parsed documents, its location.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an enumeration/table would exceed its size guard.
class GuardExceeded : public std::runtime_error {
 public:
  explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultGuard = 20'000'000;

// Default enumeration guard; GERRYSOLVE_GUARD overrides it.
inline std::uint64_t default_guard() {
  if (const char* env = std::getenv("GERRYSOLVE_GUARD")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
  }
  return kDefaultGuard;
}

// splitmix64: small deterministic generator, stable across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound), bound > 0
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// a*b with saturation at 2^63-1, for guard arithmetic.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  constexpr std::uint64_t cap = UINT64_C(0x7fffffffffffffff);
  if (a > cap / b) return cap;
  return a * b;
}

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  constexpr std::uint64_t cap = UINT64_C(0x7fffffffffffffff);
  if (a > cap - b) return cap;
  return a + b;
}

// a^e, saturating.
inline std::uint64_t sat_pow(std::uint64_t a, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r = sat_mul(r, a);
  return r;
}

}  // namespace gerrysolve
