#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "garnier/algebra/pit.hpp"
#include "garnier/algebra/ratfunc.hpp"

namespace garnier {

// (t0, t1, t2, q1, q2, q3, eta1, eta2, eta3) in this order.
const VarSetPtr& phase_ring();

namespace phase {
inline constexpr std::size_t t(int i) { return std::size_t(i); }
inline constexpr std::size_t q(int j) { return std::size_t(3 + j); }    // j = 0, 1, 2 for q1, q2, q3
inline constexpr std::size_t eta(int j) { return std::size_t(6 + j); }  // j = 0, 1, 2 for eta1, eta2, eta3
RatFunc var(std::size_t index);
RatFunc constant(const Scalar& c);
// Q'(q_j) = prod_{k != j} (q_j - q_k).
RatFunc qprime(int j);
}  // namespace phase

struct Hamiltonian {
  int index = 0;
  RatFunc expr;
};

// Throws std::invalid_argument for i outside {0, 1, 2}.
Hamiltonian build_hamiltonian(int i);
// Cached shared instances (built once, thread-safe).
const RatFunc& hamiltonian(int i);

// {f, g} = sum_k (df/dq_k dg/deta_k - dg/dq_k df/deta_k).
RatFunc poisson(const RatFunc& f, const RatFunc& g);

enum class CheckMode { Pit, Full };

struct CompatibilityReport {
  int i = 0, j = 0;
  CheckMode mode = CheckMode::Pit;
  bool zero = false;
  std::optional<PitResult> pit;        // pit mode
  std::optional<RatFunc> residual;     // full mode, when nonzero
  double seconds = 0.0;
};

// dH_i/dt_j - dH_j/dt_i + {H_i, H_j}, unexpanded. This is the integrability
// condition of the flows dq/dt_i = dH_i/deta, deta/dt_i = -dH_i/dq with the
// bracket above; the opposite sign does not vanish.
Expr compatibility_expr(int i, int j);
// Throws std::invalid_argument when i == j or an index is out of range.
CompatibilityReport check_compatibility(int i, int j, CheckMode mode, const PitOptions& opt = {});

// (dH_i/deta_j, -dH_i/dq_j) for j = 1, 2, 3: dq1, dq2, dq3, deta1, deta2, deta3.
std::vector<RatFunc> vector_field(int i);

}  // namespace garnier
