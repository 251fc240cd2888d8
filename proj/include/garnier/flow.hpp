#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "garnier/numeric.hpp"
#include "garnier/solution.hpp"

namespace garnier {

struct PhasePoint {
  std::array<Complex, 3> t, q, eta;
};

PhasePoint phase_point(const LocusPoint& p);

struct FlowSample {
  Complex ti;  // value of the moving time
  PhasePoint point;
};

struct Trajectory {
  int direction = 0;
  std::vector<FlowSample> samples;
  std::size_t accepted = 0, rejected = 0;
  bool aborted = false;       // singularity guard or step underflow
  std::string abort_reason;   // empty unless aborted
};

struct FlowOptions {
  // Fixed number of steps instead of adaptive control (0 = adaptive).
  std::size_t fixed_steps = 0;
  // Distance below which a point counts as singular.
  double guard = 1e-8;
  // Upper bound on attempted steps.
  std::size_t max_steps = 1000000;
  // Keep every accepted step (otherwise only the endpoints).
  bool record_all = true;
};

// Integrates the Hamiltonian vector field of H_i along t_i -> t_i + tau delta,
// tau in [0, 1], with the Dormand-Prince 5(4) pair at the current working
// precision. Adaptive steps keep the scaled local error below `tol`.
Trajectory integrate(int i, const PhasePoint& start, const Complex& delta, const Real& tol, const FlowOptions& opt = {});

struct LocusResidual {
  std::array<Complex, 3> s;       // recovered from sigma(q) and t0
  std::array<Real, 3> cubic;      // |Q(q_j; s)|
  std::array<Real, 2> time;       // |t_i^2 - s_i^3| for i = 1, 2
  std::array<Real, 3> eta;        // |eta_j - 1/(3 q_j) - 1/(3 (q_j - 1))|
  Real max() const;
};
// s0 is the cube root of t0^2 nearest `s0_hint` (principal root when absent).
// DomainError when sigma3 = 0 (scale unrecoverable).
LocusResidual locus_residual(const PhasePoint& p, const std::optional<Complex>& s0_hint = std::nullopt);

struct FlowReport {
  int direction = 0;
  STriple s;
  Branch branch;
  Trajectory trajectory;
  Real initial_residual, max_residual, threshold;
  bool pass = false;
  double seconds = 0.0;
};
// Starts at the locus point of s, integrates direction i over delta and
// tracks the locus residual at every sample. The threshold defaults to 1e3 tol.
FlowReport flow_preserves_locus(int i, const STriple& s, const Branch& branch, const Complex& delta, const Real& tol,
                                const std::optional<Real>& threshold = std::nullopt, const FlowOptions& opt = {});

// H_i and dH_i/dt_i at a phase point.
Complex hamiltonian_value(int i, const PhasePoint& p);
Complex hamiltonian_time_derivative(int i, const PhasePoint& p);

}  // namespace garnier
