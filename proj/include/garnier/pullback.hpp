#pragma once

#include <optional>
#include <string>

#include "garnier/connection.hpp"
#include "garnier/solution.hpp"

namespace garnier {

// y'' + P y' + Qc y = 0 in the variable at index 0 of the coefficients' ring.
using ScalarODE = ScalarForm;

// The base equation u'' + 2/(3z) u' - u/z = 0 with z the first variable of `vars`.
ScalarODE fixed_system(const VarSetPtr& vars);

// phi_s(x) = (s2 x (x-1) + s1 x + s0 (1-x))^3 / (x^2 (x-1)^2) over xs_ring().
RatFunc cover_phi();
RatFunc cover_phi(const STriple& s);  // DomainError when s2 = 0

// v(x) = u(phi(x)) for the fixed system: P = p(phi) phi' - phi''/phi', Qc = q(phi) phi'^2.
ScalarODE pullback_ode(const RatFunc& phi);
// I = Qc - P'/2 - P^2/4.
RatFunc ode_invariant(const ScalarODE& o);
// Equation satisfied by v = y / g.
ScalarODE gauge(const ScalarODE& o, const RatFunc& g);

// The pulled-back connection as displayed: c2 = 4 s2 (s2 x^2 - (s0-s1+s2) x + s0) Q^2/(x^2 (x-1)^2),
// d2 = -1/(3x) - 1/(3(x-1)) - Q'/Q, over xs_ring(). The literal c2 agrees with
// the family only where s2 = 1; Rescaled multiplies it by s2, which agrees for all s.
enum class DisplayReading { Literal, Rescaled };
ConnectionMatrix pulled_back_display(DisplayReading reading = DisplayReading::Literal);
ConnectionMatrix pulled_back_display(const STriple& s, DisplayReading reading = DisplayReading::Literal);

struct PullbackReport {
  std::string mode;  // "exact" or "symbolic"
  Branch branch;
  bool family_zero = false;            // I(pullback) - I(family at the locus) = 0
  bool display_literal_zero = false;   // I(pullback) - I(displayed connection) = 0
  bool display_rescaled_zero = false;  // same with c2 multiplied by s2
  std::optional<std::string> witness;  // nonzero family difference, serialized
  RatFunc gauge_log_derivative;        // (P_family - P_pullback) / 2
  double seconds = 0.0;
  bool pass() const { return family_zero; }
};
// Exact instance; DomainError unless the cubic has three rational roots and
// every t_i = sign_i s_i^(3/2) is rational.
PullbackReport verify_pullback_exact(const STriple& s, const Branch& branch = {});
// Generic s: the family invariant is rewritten in sigma, then sigma = sigma(s)
// and t^2 = s^3 in the relation ring over (x, s0, s1, s2).
PullbackReport verify_pullback_symbolic(const Branch& branch = {});

}  // namespace garnier
