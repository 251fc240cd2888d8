#include <doctest.h>

#include <chrono>
#include <vector>

#include "garnier/hamiltonian.hpp"

using namespace garnier;

namespace {

// t = (2, 3, 5), q = (-1, 2, 1/2), eta = (-1/2, 1/2, 7/3).
std::vector<Scalar> sample_point() {
  return {Scalar(2), Scalar(3), Scalar(5), Scalar(-1), Scalar(2), Scalar(1, 2), Scalar(-1, 2), Scalar(1, 2), Scalar(7, 3)};
}

}  // namespace

TEST_CASE("Hamiltonians match an independent evaluation") {
  const auto pt = sample_point();
  CHECK(hamiltonian(0).eval(pt) == Scalar(31081, 648));
  CHECK(hamiltonian(1).eval(pt) == Scalar(39013, 972));
  CHECK(hamiltonian(2).eval(pt) == Scalar(16291, 405));
}

TEST_CASE("H2 has the expected quadratic momentum coefficient and constant") {
  const RatFunc& h = hamiltonian(2);
  using namespace phase;
  RatFunc c = h.diff(eta(0)).diff(eta(0)) * constant(Scalar(1, 2));
  RatFunc expected = -var(q(0)).pow(2) * (var(q(0)) - constant(Scalar(1))).pow(2) / (var(t(2)) * qprime(0));
  CHECK(c == expected);
  // The momentum-free, q-free part carries -1/(36 t2).
  std::vector<Scalar> pt(9, Scalar(0));
  pt[t(2)] = Scalar(1);
  pt[q(0)] = Scalar(2);
  pt[q(1)] = Scalar(3);
  pt[q(2)] = Scalar(-2);
  RatFunc dt = h.diff(t(2));
  CHECK(dt.depends_on(t(2)));
}

TEST_CASE("canonical Poisson bracket") {
  using namespace phase;
  CHECK(poisson(var(q(0)), var(eta(0))) == constant(Scalar(1)));
  CHECK(poisson(var(q(0)), var(eta(1))).is_zero());
  CHECK(poisson(var(eta(2)), var(q(2))) == constant(Scalar(-1)));
  RatFunc f = var(q(1)) * var(eta(1)).pow(2);
  CHECK(poisson(f, f).is_zero());
}

TEST_CASE("invalid indices are rejected") {
  CHECK_THROWS_AS(build_hamiltonian(3), std::invalid_argument);
  CHECK_THROWS_AS(check_compatibility(1, 1, CheckMode::Pit), std::invalid_argument);
}

TEST_CASE("Hamiltonians are pairwise compatible (randomized)") {
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
    auto rep = check_compatibility(i, j, CheckMode::Pit);
    CHECK(rep.zero);
    REQUIRE(rep.pit);
    CHECK(rep.pit->log10_failure_bound < -20.0);
  }
}

TEST_CASE("a perturbed Hamiltonian is detected") {
  const RatFunc& h0 = hamiltonian(0);
  const RatFunc h1 = hamiltonian(1) + phase::var(phase::q(0)) * phase::var(phase::t(0));
  Expr e = Expr(h0.diff(phase::t(1))) - Expr(h1.diff(phase::t(0))) + Expr(poisson(h0, h1));
  CHECK_FALSE(pit_zero(e).zero);
}

TEST_CASE("the opposite bracket sign does not vanish") {
  const RatFunc& h0 = hamiltonian(0);
  const RatFunc& h1 = hamiltonian(1);
  Expr e = Expr(h0.diff(phase::t(1))) - Expr(h1.diff(phase::t(0))) - Expr(poisson(h0, h1));
  CHECK_FALSE(pit_zero(e).zero);
}

TEST_CASE("compatibility expression is antisymmetric") {
  const auto pt = sample_point();
  CHECK(compatibility_expr(1, 0).eval(pt) == -compatibility_expr(0, 1).eval(pt));
}

TEST_CASE("vector field of H2 has the expected shape") {
  auto v = vector_field(2);
  REQUIRE(v.size() == 6);
  CHECK(v[0] == hamiltonian(2).diff(phase::eta(0)));
  CHECK(v[3] == -hamiltonian(2).diff(phase::q(0)));
}
