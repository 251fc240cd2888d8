#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "garnier/algebra/relring.hpp"
#include "garnier/hamiltonian.hpp"
#include "garnier/numeric.hpp"

namespace garnier {

using STriple = std::array<Scalar, 3>;

// (s0, s1, s2).
const VarSetPtr& s_ring();
// (s0, s1, s2, t0, t1, t2).
const VarSetPtr& st_ring();
// (x, s0, s1, s2).
const VarSetPtr& xs_ring();
// Q(base) [t] / (t_i^2 - s_i^3) over s_ring().
const RelRingPtr& solution_relring();
// Phase ring with q_j renamed to sigma_j: (t0, t1, t2, sigma1, sigma2, sigma3, eta1, eta2, eta3).
const VarSetPtr& sigma_phase_ring();

// Q(x; s) = x^3 + (s0 - s1 - 3 s2)/(2 s2) x^2 + (-3 s0 - s1 + s2)/(2 s2) x + s0/s2 over xs_ring().
RatFunc cubic_family();
// Q(x; s) at exact s, in the one-variable ring (x). DomainError when s2 = 0.
MultiPoly cubic_at(const STriple& s);
// Discriminant of a univariate cubic.
Scalar cubic_discriminant(const MultiPoly& cubic);
// All rational roots of a univariate polynomial with rational coefficients,
// with multiplicity, in increasing order.
std::vector<Scalar> rational_roots(const MultiPoly& p);

struct SigmaPoint {
  RatFunc sigma1, sigma2, sigma3;  // over s_ring()
};
SigmaPoint sigma_from_s();
std::array<Scalar, 3> sigma_at(const STriple& s);

// eta_j(q) = 1/(3 q_j) + 1/(3 (q_j - 1)), j = 0, 1, 2, over phase_ring().
RatFunc section_eta(int j);
// K^(k)_{t_i} = sum_j (d sigma_k / d q_j) dH_i/deta_j for k = 1, 2, 3.
RatFunc build_K(int k, int i);
// Substitutes the section for eta and rewrites the symmetric result in
// (t, sigma) over sigma_phase_ring(). DomainError when not symmetric.
RatFunc pullback_by_section(const RatFunc& k_op);
// A rational function of (t, sigma) over sigma_phase_ring(), with sigma = sigma(s),
// moved into the relation ring.
RelRingElem on_solution(const RatFunc& t_sigma);

struct SigmaEquation {
  int i = 0, k = 0;  // d sigma_k / d t_i, k = 1..3
  bool zero = false;
  RelRingElem lhs, rhs;
};

struct SigmaSystemReport {
  std::vector<SigmaEquation> equations;
  bool all_zero = false;
  double seconds = 0.0;
};
SigmaSystemReport verify_sigma_system();

// Sign pattern for t_i = sign_i * s_i^(3/2) with the principal square root.
struct Branch {
  std::array<int, 3> sign{1, 1, 1};
  static Branch parse(const std::string& text);  // "+++", "+-+", ...
  std::string to_string() const;
};

struct LocusPoint {
  std::array<Complex, 3> s, t, q, eta;
};
// Numeric point of the algebraic solution at the current working precision.
// DomainError when s_i = 0, when roots collide or when a root is 0 or 1.
LocusPoint locus_point(const STriple& s, const Branch& branch = {});

struct EtaReport {
  STriple s;
  Branch branch;
  unsigned digits = 0;
  std::array<std::array<Real, 3>, 3> residual;  // [i][j], |lhs - rhs| / (1 + |rhs|)
  Real max_residual;
  Real threshold;  // 10^-(digits - 10)
  bool pass = false;
  double seconds = 0.0;
};
// d eta_j / d t_i by implicit differentiation of Q(q_j; s) = 0 against
// -dH_i/dq_j, for all i, j, at `digits` decimal digits.
EtaReport verify_eta_equations_numeric(const STriple& s, unsigned digits, const Branch& branch = {});

}  // namespace garnier
