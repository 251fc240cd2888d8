#include <doctest.h>

#include <random>

#include "garnier/algebra/errors.hpp"
#include "garnier/pullback.hpp"

using namespace garnier;

namespace {

const VarSetPtr& z_ring() {
  static const VarSetPtr r = VarSet::make({"z"});
  return r;
}

RatFunc zk(const Scalar& c) { return RatFunc::constant(z_ring(), c); }

RatFunc random_poly(std::mt19937& rng, const VarSetPtr& V, int degree) {
  std::uniform_int_distribution<int> coef(-5, 5);
  const RatFunc z = RatFunc::variable(V, std::size_t(0));
  RatFunc p = RatFunc::constant(V, Scalar(1 + std::abs(coef(rng))));
  for (int d = 1; d <= degree; ++d) p += z.pow(d) * Scalar(coef(rng));
  return p;
}

}  // namespace

TEST_CASE("invariant of the fixed system") {
  const RatFunc z = RatFunc::variable(z_ring(), std::size_t(0));
  const ScalarODE base = fixed_system(z_ring());
  CHECK(ode_invariant(base) == -z.inverse() + zk(Scalar(2, 9)) / z.pow(2));
  CHECK(ode_invariant(ScalarODE{RatFunc(z_ring()), z.pow(3)}) == z.pow(3));
}

TEST_CASE("identity cover returns the fixed system") {
  const RatFunc z = RatFunc::variable(z_ring(), std::size_t(0));
  const ScalarODE o = pullback_ode(z);
  const ScalarODE base = fixed_system(z_ring());
  CHECK(o.P == base.P);
  CHECK(o.Qc == base.Qc);
  CHECK_THROWS_AS(pullback_ode(zk(3)), DomainError);
}

TEST_CASE("shape of the cover") {
  const RatFunc phi = cover_phi();
  CHECK(phi.num().degree(0) == 6);
  CHECK(phi.den().degree(0) == 4);
  const RatFunc phi1 = cover_phi({1, 1, 1});
  // Inner factor at s = (1,1,1) is x^2 - x + 1, cubed.
  const RatFunc x = RatFunc::variable(xs_ring(), std::size_t(0)), one = RatFunc::constant(xs_ring(), Scalar(1));
  CHECK(phi1.num() == (x.pow(2) - x + one).pow(3).num());
  CHECK_THROWS_AS(cover_phi({1, 1, 0}), DomainError);
}

TEST_CASE("invariant is unchanged by random gauges") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const ScalarODE o{random_poly(rng, z_ring(), 2) / random_poly(rng, z_ring(), 2), random_poly(rng, z_ring(), 3) / random_poly(rng, z_ring(), 1)};
    const RatFunc g = random_poly(rng, z_ring(), 2) / random_poly(rng, z_ring(), 2);
    CHECK(ode_invariant(gauge(o, g)) == ode_invariant(o));
  }
}

TEST_CASE("pullback coincides with the family at exact points") {
  const PullbackReport a = verify_pullback_exact({1, 1, 1});
  CHECK(a.family_zero);
  CHECK(a.display_literal_zero);
  CHECK(a.gauge_log_derivative.is_zero());
  CHECK(verify_pullback_exact({1, 1, 1}, Branch::parse("-+-")).family_zero);
  const PullbackReport b = verify_pullback_exact({Scalar(1, 9), Scalar(4), Scalar(4)}, Branch::parse("+-+"));
  CHECK(b.family_zero);
  CHECK_FALSE(b.display_literal_zero);
  CHECK(b.display_rescaled_zero);
  CHECK_THROWS_AS(verify_pullback_exact({Scalar(4), Scalar(1), Scalar(1)}), DomainError);
}

TEST_CASE("pullback coincides with the family symbolically") {
  const PullbackReport r = verify_pullback_symbolic();
  CHECK(r.pass());
  CHECK_FALSE(r.display_literal_zero);
  CHECK(r.display_rescaled_zero);
}
