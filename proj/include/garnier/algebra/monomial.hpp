#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>

namespace garnier {

inline constexpr std::size_t kMaxVars = 16;

// Exponent vector. Bytes beyond the ring's variable count stay zero, so the
// representation is position-independent of the ring size.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  bool is_one() const {
    for (auto e : exp)
      if (e) return false;
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return std::memcmp(a.exp.data(), b.exp.data(), kMaxVars) == 0;
  }
};

// Graded lexicographic order: total degree first, ties broken by the
// exponent of the first variable, then the second, ...
inline int grlex_compare(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  int c = std::memcmp(a.exp.data(), b.exp.data(), kMaxVars);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

inline bool grlex_greater(const Monomial& a, const Monomial& b) { return grlex_compare(a, b) > 0; }

// Throws std::overflow_error when an exponent exceeds 255.
Monomial mul(const Monomial& a, const Monomial& b);
bool divides(const Monomial& d, const Monomial& m);
Monomial quotient(const Monomial& m, const Monomial& d);
Monomial min_exponents(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t lo, hi;
    std::memcpy(&lo, m.exp.data(), 8);
    std::memcpy(&hi, m.exp.data() + 8, 8);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL;
    h ^= (hi + 0x632BE59BD9B4E019ULL) + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

}  // namespace garnier
