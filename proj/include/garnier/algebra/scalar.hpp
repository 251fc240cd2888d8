#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace garnier {

// Arbitrary-precision rational. GMP keeps every mpq_class canonical
// (gcd(num, den) = 1, den > 0, zero is 0/1) after each arithmetic operation.
using Scalar = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Scalar& q) { return q.get_str(); }

// Accepts "a", "-a", "a/b" and finite decimals such as "0.125".
Scalar parse_scalar(std::string_view text);

inline Scalar make_scalar(long num, long den = 1) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace garnier
