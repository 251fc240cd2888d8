#include <doctest.h>

#include "garnier/algebra/errors.hpp"
#include "garnier/solution.hpp"

using namespace garnier;

namespace {

RatFunc sp(std::size_t i) { return RatFunc::variable(sigma_phase_ring(), i); }
RatFunc sk(const Scalar& c) { return RatFunc::constant(sigma_phase_ring(), c); }

}  // namespace

TEST_CASE("cubic at s = (1,1,1) and its rational roots") {
  const STriple s{1, 1, 1};
  const MultiPoly c = cubic_at(s);
  const VarSetPtr& R = c.vars();
  const MultiPoly x = MultiPoly::variable(R, 0);
  auto k = [&](const Scalar& v) { return MultiPoly::constant(R, v); };
  CHECK(c == x.pow(3) - k(Scalar(3, 2)) * x.pow(2) - k(Scalar(3, 2)) * x + k(1));
  CHECK(rational_roots(c) == std::vector<Scalar>{Scalar(-1), Scalar(1, 2), Scalar(2)});
  CHECK(cubic_discriminant(c) != 0);
  CHECK_THROWS_AS(cubic_at({1, 1, 0}), DomainError);
}

TEST_CASE("sigma from s") {
  CHECK(sigma_at({1, 1, 1}) == std::array<Scalar, 3>{Scalar(3, 2), Scalar(-3, 2), Scalar(-1)});
  const SigmaPoint g = sigma_from_s();
  const RatFunc s0 = RatFunc::variable(s_ring(), std::size_t(0)), s2 = RatFunc::variable(s_ring(), std::size_t(2));
  CHECK(g.sigma3 == -(s0 / s2));
  const auto v = sigma_at({1, 1, 1});
  CHECK(v[0] + v[1] + v[2] == -1);
}

TEST_CASE("reduced operators match the closed forms") {
  // sigma_phase_ring: (t0, t1, t2, sigma1, sigma2, sigma3, eta1, eta2, eta3).
  CHECK(pullback_by_section(build_K(3, 0)) == sk(Scalar(2, 3)) * sp(5) / sp(0));
  CHECK(pullback_by_section(build_K(2, 1)) == -(sp(5) - sp(4) + sp(3) - sk(1)) / (sk(3) * sp(1)));
}

TEST_CASE("sigma system holds exactly on the solution") {
  const SigmaSystemReport rep = verify_sigma_system();
  CHECK(rep.equations.size() == 9);
  CHECK(rep.all_zero);
}

TEST_CASE("eta equations hold numerically") {
  const EtaReport a = verify_eta_equations_numeric({1, 1, 1}, 50);
  CHECK(a.pass);
  CHECK(a.max_residual < Real("1e-40"));
  const EtaReport b = verify_eta_equations_numeric({Scalar(2, 3), Scalar(-5, 7), Scalar(3)}, 50, Branch::parse("+-+"));
  CHECK(b.pass);
}

TEST_CASE("branch strings") {
  CHECK(Branch::parse("+-+").sign == std::array<int, 3>{1, -1, 1});
  CHECK(Branch::parse("---").to_string() == "---");
  CHECK_THROWS(Branch::parse("++"));
  CHECK_THROWS(Branch::parse("+x+"));
}

TEST_CASE("locus point at s = (1,1,1)") {
  DigitsScope d(40);
  const LocusPoint p = locus_point({1, 1, 1});
  CHECK(abs(p.q[0] - Complex(-1)) < Real("1e-35"));
  CHECK(abs(p.q[1] - Complex(Scalar(1, 2))) < Real("1e-35"));
  CHECK(abs(p.q[2] - Complex(2)) < Real("1e-35"));
  CHECK(abs(p.t[0] - Complex(1)) < Real("1e-35"));
  // eta_1 = 1/(3 q) + 1/(3 (q - 1)) at q = -1.
  CHECK(abs(p.eta[0] - Complex(Scalar(-1, 2))) < Real("1e-35"));
}
