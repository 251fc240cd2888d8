#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "garnier/solution.hpp"

namespace garnier {

// A0 ds0 + A1 ds1 + A2 ds2 with coefficients over s_ring().
struct OneFormS {
  std::array<RatFunc, 3> a;
};

// H_i(t, q(t), eta(t)) on the algebraic solution, in the relation ring over s_ring().
// Negative branch signs act by t_i -> -t_i.
std::array<RelRingElem, 3> restrict_hamiltonians(const Branch& branch = {});
// {H_i, H_j} restricted to the solution.
RelRingElem restricted_bracket(int i, int j, const Branch& branch = {});

// A_i = H_i(t) dt_i/ds_i with dt_i/ds_i = 3 s_i^2 / (2 t_i). DomainError when a
// coefficient keeps a t-component after reduction.
OneFormS build_varpi(const Branch& branch = {});
// The closed-form coefficients (1 + 36 a^3 - 216 (b + c) a^2 - 108 (b - c)^2 a) / (24 a).
OneFormS displayed_varpi();
bool check_closed(const OneFormS& w);

// r + sum_k c_k ln(u_k): rational part plus a formal combination of logarithms
// of polynomials, with d ln(u) = du/u as the only rule.
struct LogRatFunc {
  RatFunc rational;
  std::vector<std::pair<Scalar, MultiPoly>> logs;
  RatFunc diff(std::size_t var) const;
  std::string to_string() const;
};
// F = (s0^3 + s1^3 + s2^3)/2 + ln(s0 s1 s2)/24
//     - 9 ((s1 - s2)^2 s0 + (s0 - s2)^2 s1 + (s1 - s0)^2 s2)/2 - 18 s0 s1 s2.
LogRatFunc potential_F();

struct TauReport {
  Branch branch;
  OneFormS varpi;
  std::array<bool, 3> matches_display{};          // A_i equals the closed form
  std::array<bool, 3> matches_negated_display{};  // A_i equals minus the closed form
  bool closed = false;
  std::array<bool, 3> exact{};          // dF/ds_i = A_i
  std::array<bool, 3> exact_negated{};  // dF/ds_i = -A_i
  bool F_symmetric = false;
  std::array<bool, 3> bracket_zero{};  // pairs (0,1), (0,2), (1,2)
  double seconds = 0.0;
  bool pass() const;
  // Same checks with varpi replaced by -varpi.
  bool pass_negated() const;
};
TauReport verify_tau(const Branch& branch = {}, bool with_bracket = true);

// tau = c exp(F(s)) at exact s with s_i > 0, c kept symbolic: returns F(s).
Real tau_exponent(const STriple& s);

}  // namespace garnier
