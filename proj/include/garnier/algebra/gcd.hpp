#pragma once

#include <cstddef>

#include "garnier/algebra/poly.hpp"

namespace garnier {

// Greatest common divisor over Q, normalized to leading coefficient 1
// (gcd(0, 0) = 0). Recursive primitive-PRS with content recursion; a modular
// image test short-circuits the common coprime case.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

// False only when divisor certainly does not divide dividend (checked on a
// random modular image); true means "possibly", to be confirmed exactly.
bool may_divide(const MultiPoly& divisor, const MultiPoly& dividend);

// True only when gcd(small, big) = 1 is certain: small is primitive in some
// variable x and the modular images in x are coprime with intact leading
// coefficients. False means "unknown".
bool certainly_coprime(const MultiPoly& small, const MultiPoly& big);

// Pseudo-remainder of a by b with respect to variable x.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t x);

// gcd of the coefficients of p viewed as a polynomial in x (monic).
MultiPoly content_in(const MultiPoly& p, std::size_t x);

// True when p cannot factor: degree one in some variable with a coefficient
// that shares no factor with the rest.
bool is_evidently_irreducible(const MultiPoly& p);

}  // namespace garnier
