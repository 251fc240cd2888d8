#pragma once

#include <array>
#include <optional>
#include <vector>

#include "garnier/algebra/laurent.hpp"
#include "garnier/algebra/pit.hpp"
#include "garnier/algebra/ratfunc.hpp"

namespace garnier {

// (x, t0, t1, t2, q1, q2, q3, p1, p2, p3).
const VarSetPtr& connection_ring();

namespace conn {
inline constexpr std::size_t x = 0;
inline constexpr std::size_t t(int i) { return std::size_t(1 + i); }
inline constexpr std::size_t q(int j) { return std::size_t(4 + j); }
inline constexpr std::size_t p(int j) { return std::size_t(7 + j); }
}  // namespace conn

// Parameter values as elements of connection_ring() free of x: either the
// variables themselves (symbolic) or constants (exact instance).
struct ConnectionParams {
  std::array<RatFunc, 3> t, q, p;
  static ConnectionParams symbolic();
  // DomainError when q_j collide or q_j is 0 or 1.
  static ConnectionParams exact(const std::array<Scalar, 3>& t, const std::array<Scalar, 3>& q, const std::array<Scalar, 3>& p);
};

struct ConnectionData {
  RatFunc C0, C1, Cinf, D0, D1, Dinf;
  std::array<RatFunc, 3> Ctilde;
  RatFunc c2, d2, f;
};

// Coefficients of the normal form; `ctilde_shift` is added to the apparent
// constants (zero for the family itself, used to break apparentness).
ConnectionData connection_data(const ConnectionParams& prm, const std::array<Scalar, 3>& ctilde_shift = {0, 0, 0});

enum class Chart { X, W };

// Rows (0, f) and (c2, d2) of the connection form d + A dx.
struct ConnectionMatrix {
  std::array<RatFunc, 4> a;  // row-major
  Chart chart = Chart::X;
  const RatFunc& operator()(int r, int c) const { return a[std::size_t(2 * r + c)]; }
};

ConnectionMatrix build_connection(const ConnectionParams& prm, const std::array<Scalar, 3>& ctilde_shift = {0, 0, 0});

// First-component scalar equation y'' + P y' + Qc y = 0 of Y' = -A Y.
struct ScalarForm {
  RatFunc P, Qc;
};
ScalarForm scalar_form(const ConnectionMatrix& c);

struct ApparentReport {
  int j = 0;
  bool indicial_ok = false;  // exponents {0, 2}
  bool log_free = false;     // the exponent-0 series exists
  RatFunc obstruction;       // vanishes iff log_free (given indicial_ok)
  bool apparent() const { return indicial_ok && log_free; }
};
// Local analysis of the scalar form at x = q_j (j = 0, 1, 2). DomainError when
// q_j is not a simple pole of P.
ApparentReport check_apparent(const ConnectionMatrix& c, const ConnectionParams& prm, int j);

enum class Point { Zero, One, Infinity };

struct FormalData {
  Point point = Point::Zero;
  int order = 0;                      // K
  std::array<RatFunc, 2> leading;     // diagonal of the x~^-2 term
  std::array<RatFunc, 2> residue;     // diagonal of the x~^-1 term
  RatFunc theta_plus, theta_minus;    // diagonal of the x~^0 term
  std::vector<std::array<RatFunc, 2>> diagonal;  // orders -2 .. K-2
};
// Gauge by the fixed framing, then solve order by order for the normalizing
// series id + sum Xi_k x~^k (zero diagonal). DomainError when t_point = 0.
FormalData formal_diagonalize(const ConnectionMatrix& c, const ConnectionParams& prm, Point point, int K = 3);

struct DerivedHamiltonian {
  int index = 0;
  RatFunc derived;  // 2 theta^- - 2 theta^+ in the phase ring
  bool exact_equal = false;
  std::optional<PitResult> pit;
};
// Derives H_{t_i} symbolically from the connection and compares it with
// hamiltonian(i), both exactly and by randomized identity testing.
DerivedHamiltonian derive_hamiltonian_from_connection(int i, const PitOptions& opt = {});
// p_j in terms of (q, eta): p_j = q_j^2 (q_j - 1)^2 (eta_j - 1/(3 q_j) - 1/(3 (q_j - 1))).
RatFunc p_of_eta(int j);

}  // namespace garnier
