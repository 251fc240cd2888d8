#include <doctest.h>

#include "garnier/algebra/errors.hpp"
#include "garnier/flow.hpp"

using namespace garnier;

namespace {

PhasePoint start_point() { return phase_point(locus_point({1, 1, 1})); }

Real distance(const PhasePoint& a, const PhasePoint& b) {
  Real m(0);
  for (int j = 0; j < 3; ++j) {
    m = std::max(m, abs(a.q[j] - b.q[j]));
    m = std::max(m, abs(a.eta[j] - b.eta[j]));
  }
  return m;
}

PhasePoint endpoint(int i, const PhasePoint& p, const Complex& delta, const Real& tol, const FlowOptions& opt = {}) {
  const Trajectory tr = integrate(i, p, delta, tol, opt);
  REQUIRE_FALSE(tr.aborted);
  return tr.samples.back().point;
}

}  // namespace

TEST_CASE("zero delta returns the start") {
  DigitsScope d(40);
  const Trajectory tr = integrate(0, start_point(), Complex(0), Real("1e-20"));
  CHECK(tr.samples.size() == 1);
  CHECK(tr.accepted == 0);
}

TEST_CASE("locus residual") {
  DigitsScope d(40);
  PhasePoint p = start_point();
  const LocusResidual r = locus_residual(p);
  CHECK(r.max() < Real("1e-35"));
  CHECK(abs(r.s[0] - Complex(1)) < Real("1e-35"));
  p.eta[0] += Complex(Real("1e-6"));
  const LocusResidual e = locus_residual(p);
  CHECK(abs(e.eta[0] - Real("1e-6")) < Real("1e-30"));
  // An unrelated point gives a large residual without throwing.
  const PhasePoint off{{Complex(2), Complex(3), Complex(5)}, {Complex(-3), Complex(4), Complex(7)}, {Complex(1), Complex(1), Complex(1)}};
  CHECK(locus_residual(off).max() > Real("1e-3"));
}

TEST_CASE("singular start is rejected") {
  DigitsScope d(30);
  PhasePoint p = start_point();
  p.q[1] = p.q[0];
  CHECK_THROWS_AS(integrate(0, p, Complex(Real("0.1")), Real("1e-12")), DomainError);
}

TEST_CASE("fixed-step convergence order") {
  DigitsScope d(40);
  const PhasePoint p = start_point();
  const Complex delta(Real("0.05"));
  FlowOptions r, a, b;
  r.fixed_steps = 256;
  const PhasePoint ref = endpoint(1, p, delta, Real(1), r);
  a.fixed_steps = 8;
  b.fixed_steps = 16;
  const Real ea = distance(endpoint(1, p, delta, Real(1), a), ref);
  const Real eb = distance(endpoint(1, p, delta, Real(1), b), ref);
  const Real order = boost::multiprecision::log2(ea / eb);
  // Fifth-order method: the observed order must be at least 4.
  CHECK(order > 4);
}

TEST_CASE("dH/dt along the own flow equals the explicit time derivative") {
  DigitsScope d(40);
  const PhasePoint p = start_point();
  const Real tol("1e-24");
  const Real delta("0.01");
  // Five-point Gauss-Legendre quadrature of dH/dt over [0, delta].
  const char* nodes[5] = {"0", "-0.5384693101056830910363144207002088049673",
                          "0.5384693101056830910363144207002088049673", "-0.9061798459386639927976268782993929651257",
                          "0.9061798459386639927976268782993929651257"};
  const char* weights[5] = {"0.5688888888888888888888888888888888888889", "0.4786286704993664680412915148356381929123",
                            "0.4786286704993664680412915148356381929123", "0.2369268850561890875142640407199173626433",
                            "0.2369268850561890875142640407199173626433"};
  for (int i : {0, 2}) {
    Complex integral(0);
    for (int k = 0; k < 5; ++k) {
      const Real tau = delta * (1 + Real(nodes[k])) / 2;
      const PhasePoint pk = endpoint(i, p, Complex(tau), tol);
      integral += Complex(Real(weights[k]) * delta / 2) * hamiltonian_time_derivative(i, pk);
    }
    const PhasePoint end = endpoint(i, p, Complex(delta), tol);
    const Complex dh = hamiltonian_value(i, end) - hamiltonian_value(i, p);
    CHECK(abs(dh - integral) < Real("1e-18"));
  }
}

TEST_CASE("relabelling two apparent points relabels the trajectory") {
  DigitsScope d(40);
  const PhasePoint p = start_point();
  PhasePoint swapped = p;
  std::swap(swapped.q[1], swapped.q[2]);
  std::swap(swapped.eta[1], swapped.eta[2]);
  const Complex delta(Real("0.03"));
  const Real tol("1e-25");
  PhasePoint a = endpoint(0, p, delta, tol);
  const PhasePoint b = endpoint(0, swapped, delta, tol);
  std::swap(a.q[1], a.q[2]);
  std::swap(a.eta[1], a.eta[2]);
  CHECK(distance(a, b) < Real("1e-20"));
}

TEST_CASE("flow stays on the locus and off-locus starts do not return") {
  DigitsScope d(40);
  const FlowReport r = flow_preserves_locus(2, {1, 1, 1}, Branch{}, Complex(Real("0.02")), Real("1e-18"));
  CHECK(r.pass);
  CHECK(r.max_residual < Real("1e-15"));

  PhasePoint off = start_point();
  off.eta[0] += Complex(Real("1e-3"));
  const Trajectory tr = integrate(2, off, Complex(Real("0.02")), Real("1e-18"));
  REQUIRE_FALSE(tr.aborted);
  const Real initial = locus_residual(off, Complex(1)).max();
  const Real final_res = locus_residual(tr.samples.back().point, Complex(1)).max();
  CHECK(final_res >= initial / 10);
}
