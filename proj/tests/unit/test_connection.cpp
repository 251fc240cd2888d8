#include <doctest.h>

#include "garnier/algebra/errors.hpp"
#include "garnier/connection.hpp"
#include "garnier/hamiltonian.hpp"

using namespace garnier;

namespace {

ConnectionParams sample() {
  return ConnectionParams::exact({Scalar(3, 2), Scalar(-2, 3), Scalar(5, 4)}, {Scalar(-1), Scalar(2), Scalar(1, 3)},
                                 {Scalar(1, 2), Scalar(-3, 5), Scalar(2, 7)});
}

RatFunc ck(const Scalar& c) { return RatFunc::constant(connection_ring(), c); }
RatFunc cx() { return RatFunc::variable(connection_ring(), conn::x); }

}  // namespace

TEST_CASE("coefficient polynomials") {
  const ConnectionParams prm = ConnectionParams::symbolic();
  const ConnectionData d = connection_data(prm);
  CHECK(d.C0 == ck(4) * prm.t[0].pow(2) * (ck(1) - ck(2) * cx()));
}

TEST_CASE("exact parameters are validated") {
  CHECK_THROWS_AS(ConnectionParams::exact({1, 1, 1}, {Scalar(2), Scalar(2), Scalar(3)}, {0, 0, 0}), DomainError);
  CHECK_THROWS_AS(ConnectionParams::exact({1, 1, 1}, {Scalar(0), Scalar(2), Scalar(3)}, {0, 0, 0}), DomainError);
  CHECK_THROWS_AS(ConnectionParams::exact({1, 1, 1}, {Scalar(1), Scalar(2), Scalar(3)}, {0, 0, 0}), DomainError);
}

TEST_CASE("apparent singularities at a sample point") {
  const ConnectionParams prm = sample();
  const ConnectionMatrix c = build_connection(prm);
  for (int j = 0; j < 3; ++j) {
    const ApparentReport r = check_apparent(c, prm, j);
    CHECK(r.indicial_ok);
    CHECK(r.apparent());
  }
  const ConnectionMatrix broken = build_connection(prm, {Scalar(1), Scalar(0), Scalar(0)});
  CHECK_FALSE(check_apparent(broken, prm, 0).apparent());
  CHECK(check_apparent(broken, prm, 1).apparent());
}

TEST_CASE("summing only two apparent poles in d2 breaks the third") {
  const ConnectionParams prm = sample();
  ConnectionMatrix c = build_connection(prm);
  c.a[3] += (cx() - prm.q[2]).inverse();
  // q3 drops out of P, so it is no longer a simple pole; the others lose the no-log tuning.
  CHECK_THROWS_AS(check_apparent(c, prm, 2), DomainError);
  CHECK_FALSE(check_apparent(c, prm, 0).apparent());
  CHECK_FALSE(check_apparent(c, prm, 1).apparent());
}

TEST_CASE("formal data at the irregular points") {
  const ConnectionParams prm = sample();
  const ConnectionMatrix c = build_connection(prm);
  const Scalar expected[3] = {Scalar(3), Scalar(-4, 3), Scalar(5, 2)};
  const Point pts[3] = {Point::Zero, Point::One, Point::Infinity};
  for (int k = 0; k < 3; ++k) {
    const FormalData f = formal_diagonalize(c, prm, pts[k]);
    CHECK(f.leading[0] == ck(expected[k]));
    CHECK(f.leading[1] == ck(-expected[k]));
    CHECK(f.residue[0] == ck(Scalar(-1, 6)));
    CHECK(f.residue[1] == ck(Scalar(-1, 6)));
  }
}

TEST_CASE("Hamiltonians re-derived from the connection") {
  for (int i = 0; i < 3; ++i) {
    const DerivedHamiltonian d = derive_hamiltonian_from_connection(i);
    CHECK(d.exact_equal);
    REQUIRE(d.pit);
    CHECK(d.pit->zero);
  }
}

TEST_CASE("p in terms of eta") {
  using namespace phase;
  const RatFunc q = var(phase::q(0)), e = var(phase::eta(0)), one = constant(Scalar(1)), three = constant(Scalar(3));
  CHECK(p_of_eta(0) == q.pow(2) * (q - one).pow(2) * (e - one / (three * q) - one / (three * (q - one))));
}
