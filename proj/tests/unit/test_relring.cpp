#include <doctest.h>

#include "garnier/algebra/errors.hpp"
#include "garnier/algebra/pit.hpp"
#include "garnier/algebra/relring.hpp"
#include "garnier/algebra/serialize.hpp"
#include "garnier/algebra/symmetric.hpp"

using namespace garnier;

namespace {

struct Rel {
  VarSetPtr base = VarSet::make({"s0", "s1", "s2"});
  RelRingPtr ring = RelRing::make(base);
  RelRingElem t(int i) const { return RelRingElem::t(ring, i); }
  RatFunc s(int i) const { return RatFunc::variable(base, std::size_t(i)); }
  RelRingElem k(long c) const { return RelRingElem(ring, RatFunc::constant(base, Scalar(c))); }
  RelRingElem lift(const RatFunc& r) const { return RelRingElem(ring, r); }
};

}  // namespace

TEST_CASE("t_i^2 reduces to s_i^3") {
  Rel R;
  CHECK(R.t(0) * R.t(0) == R.lift(R.s(0).pow(3)));
  CHECK(R.t(0).pow(3) == R.t(0) * R.s(0).pow(3));
  RelRingElem sq = (R.t(0) + R.t(1)).pow(2);
  CHECK(sq == R.lift(R.s(0).pow(3) + R.s(1).pow(3)) + R.k(2) * R.t(0) * R.t(1));
}

TEST_CASE("conjugate rationalization inverts") {
  Rel R;
  CHECK(rel_invert(R.t(0)) == R.t(0) * R.s(0).pow(-3));
  RelRingElem a = R.k(1) + R.t(0);
  RelRingElem expect = (R.k(1) - R.t(0)) * (RatFunc::constant(R.base, Scalar(1)) - R.s(0).pow(3)).inverse();
  CHECK(rel_invert(a) == expect);
  CHECK(rel_invert(R.lift(R.s(0))) == R.lift(R.s(0).inverse()));
  CHECK_THROWS_AS(rel_invert(RelRingElem(R.ring)), NotInvertible);
  RelRingElem b = R.t(0) * R.t(1) + R.lift(R.s(2)) * R.t(2) + R.k(3);
  CHECK(b * rel_invert(b) == R.k(1));
}

TEST_CASE("tau_i is an involutive automorphism") {
  Rel R;
  RelRingElem a = R.t(0) * R.s(1) + R.t(1) * R.t(2) + R.k(2);
  RelRingElem b = R.t(0) * R.t(2) - R.lift(R.s(0));
  for (int i = 0; i < 3; ++i) {
    CHECK((a * b).conj(i) == a.conj(i) * b.conj(i));
    CHECK(a.conj(i).conj(i) == a);
  }
}

TEST_CASE("rel_reduce and s-derivatives") {
  Rel R;
  auto src = VarSet::make({"t0", "t1", "t2", "s0", "s1", "s2"});
  RatFunc t0 = RatFunc::variable(src, "t0");
  RelRingElem r = rel_reduce(t0.pow(5) / (t0 * t0 + RatFunc::constant(src, Scalar(1))), R.ring);
  RelRingElem expect = R.t(0) * R.s(0).pow(6) * (R.s(0).pow(3) + RatFunc::constant(R.base, Scalar(1))).inverse();
  CHECK(r == expect);
  // d(t0^2)/ds0 = d(s0^3)/ds0
  CHECK((R.t(0) * R.t(0)).diff_s(0) == R.lift(R.s(0).pow(2) * Scalar(3)));
}

TEST_CASE("pit_zero") {
  auto vars = VarSet::make({"x"});
  RatFunc x = RatFunc::variable(vars, "x");
  PitResult z = pit_zero(x - x);
  CHECK(z.zero);
  PitResult nz = pit_zero(x - RatFunc::constant(vars, Scalar(1)));
  CHECK_FALSE(nz.zero);
  REQUIRE(nz.witness);
  CHECK((*nz.witness)[0] != 1);
  CHECK(pit_zero(RatFunc(vars)).zero);
  Expr e = Expr(x * x) - Expr(x) * Expr(x);
  PitResult pe = pit_zero(e);
  CHECK(pe.zero);
  CHECK(pe.num_degree == 2);
  CHECK(pe.failure_bound < 1e-100);
}

TEST_CASE("canonical text round trip") {
  auto vars = VarSet::make({"x", "y"});
  RatFunc x = RatFunc::variable(vars, "x"), y = RatFunc::variable(vars, "y");
  RatFunc r = (x * x * Scalar(3, 4) - y) / (x * y - RatFunc::constant(vars, Scalar(2)));
  std::string text = to_canonical_text(r);
  CHECK(text.rfind("vars: x y\nnum:\n", 0) == 0);
  CHECK(parse_canonical_ratfunc(text) == r);
  CHECK(to_canonical_text(parse_canonical_ratfunc(text)) == text);
  CHECK_THROWS_AS(parse_canonical_poly("vars: x\n[1,2]: 3\n"), std::invalid_argument);
}

TEST_CASE("symmetric reduction") {
  auto src = VarSet::make({"x", "q1", "q2", "q3"});
  auto q = [&](int i) { return RatFunc::variable(src, std::size_t(i)); };
  auto target = sigma_ring(src);
  auto s = [&](int i) { return RatFunc::variable(target, std::size_t(i)); };
  RatFunc x = q(0);
  RatFunc power_sum = q(1).pow(3) + q(2).pow(3) + q(3).pow(3);
  CHECK(symmetric_reduce(power_sum, target) ==
        s(1).pow(3) - Scalar(3) * s(1) * s(2) + Scalar(3) * s(3));
  RatFunc lag = RatFunc::constant(src, Scalar(0));
  for (int j = 1; j <= 3; ++j) lag += (x - q(j)).inverse() + q(j).inverse() * (q(j) - RatFunc::constant(src, Scalar(1))).inverse();
  RatFunc red = symmetric_reduce(lag, target);
  std::vector<Scalar> qs{Scalar(5), Scalar(-1), Scalar(2), Scalar(1, 2)};
  std::vector<Scalar> ss{Scalar(5), Scalar(3, 2), Scalar(-3, 2), Scalar(-1)};
  CHECK(red.eval(ss) == lag.eval(qs));
  RatFunc vand = (q(1) - q(2)).inverse();
  CHECK_THROWS_AS(symmetric_reduce(vand, target), DomainError);
}
