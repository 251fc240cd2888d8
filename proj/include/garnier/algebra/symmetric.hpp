#pragma once

#include <array>
#include <string>

#include "garnier/algebra/ratfunc.hpp"

namespace garnier {

// Names of the permuted variables and of the elementary symmetric functions
// that replace them.
struct SymmetricNames {
  std::array<std::string, 3> q = {"q1", "q2", "q3"};
  std::array<std::string, 3> sigma = {"sigma1", "sigma2", "sigma3"};
};

// The ring of `src` with each q_j renamed to sigma_j (same positions).
VarSetPtr sigma_ring(const VarSetPtr& src, const SymmetricNames& names = {});

// Rewrites a polynomial symmetric in q1, q2, q3 in terms of
// sigma1 = q1+q2+q3, sigma2 = q1q2+q1q3+q2q3, sigma3 = q1q2q3 by reduction
// modulo the generic cubic (q3 -> sigma1-q1-q2, then q2 and q1 modulo their
// minimal relations). Throws DomainError when p is not symmetric.
MultiPoly symmetric_reduce(const MultiPoly& p, const VarSetPtr& target, const SymmetricNames& names = {});

// Same for a rational function: the denominator is completed to a symmetric
// one orbit by orbit, and each orbit product is reduced separately.
RatFunc symmetric_reduce(const RatFunc& r, const VarSetPtr& target, const SymmetricNames& names = {});

}  // namespace garnier
