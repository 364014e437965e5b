#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace sapp {

// FNV-1a, 64-bit. Stable across runs and platforms, unlike std::hash.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

// Seeded generator with modulo draws. std::uniform_int_distribution output
// is not specified across standard libraries; raw draws keep every seeded
// sequence reproducible byte for byte.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // uniform-ish in [0, n); n > 0
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }

  // uniform-ish in [lo, hi], inclusive
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // true with probability roughly percent/100
  bool percent(unsigned p) { return below(100) < p; }

private:
  std::mt19937_64 eng_;
};

} // namespace sapp
