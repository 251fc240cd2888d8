#include <doctest.h>

#include "garnier/algebra/errors.hpp"
#include "garnier/algebra/gcd.hpp"
#include "garnier/algebra/poly.hpp"

using namespace garnier;

namespace {

struct Ring {
  VarSetPtr vars = VarSet::make({"x", "y", "z"});
  MultiPoly x = MultiPoly::variable(vars, "x");
  MultiPoly y = MultiPoly::variable(vars, "y");
  MultiPoly z = MultiPoly::variable(vars, "z");
  MultiPoly c(long v) const { return MultiPoly::constant(vars, Scalar(v)); }
};

}  // namespace

TEST_CASE("terms are sorted in graded lex order without zeros") {
  Ring r;
  MultiPoly p = r.x * r.y + r.z.pow(3) - r.c(2) + r.x * r.y;
  REQUIRE(p.size() == 3);
  CHECK(p.leading_term().mono.degree() == 3);
  CHECK(p.to_string() == "z^3 + 2*x*y - 2");
  CHECK((p - p).is_zero());
}

TEST_CASE("product, power and derivative") {
  Ring r;
  MultiPoly a = r.x + r.y;
  CHECK(a.pow(2) == r.x * r.x + r.c(2) * r.x * r.y + r.y * r.y);
  CHECK(a.pow(3).derivative(0) == r.c(3) * a.pow(2));
  CHECK((r.x * r.x).derivative(0) == r.c(2) * r.x);
  CHECK(r.x.derivative(1).is_zero());
}

TEST_CASE("exact division and remainders") {
  Ring r;
  MultiPoly a = (r.x - r.y) * (r.x * r.z + r.c(3));
  auto q = a.divide_exact(r.x - r.y);
  REQUIRE(q);
  CHECK(*q == r.x * r.z + r.c(3));
  CHECK_FALSE(a.divide_exact(r.x + r.y).has_value());
  MultiPoly m = r.x.pow(3) - r.y;  // x^3 = y
  CHECK(r.x.pow(7).rem_monic(m, 0) == r.y.pow(2) * r.x);
}

TEST_CASE("gcd of multivariate polynomials") {
  Ring r;
  MultiPoly g = r.x * r.y - r.z + r.c(1);
  MultiPoly a = g * (r.x + r.c(2)) * (r.y - r.z);
  MultiPoly b = g * (r.x - r.c(2)) * r.z;
  CHECK(gcd(a, b) == g.monic());
  CHECK(gcd(r.x + r.c(1), r.x - r.c(1)) == r.c(1));
  CHECK(gcd(r.x.pow(3) * r.y, r.x * r.y.pow(2)) == r.x * r.y);
  CHECK(gcd(MultiPoly(r.vars), MultiPoly(r.vars)).is_zero());
  CHECK(gcd((r.x - r.y).pow(2) * (r.x + r.z), (r.x - r.y) * (r.x + r.z).pow(2)) == ((r.x - r.y) * (r.x + r.z)).monic());
}

TEST_CASE("modular divisibility and coprimality certificates") {
  Ring r;
  MultiPoly a = (r.x - r.y) * (r.x * r.z + r.c(3));
  CHECK(may_divide(r.x - r.y, a));
  CHECK_FALSE(may_divide(r.x + r.y, a));
  CHECK(certainly_coprime(r.x * r.x - r.c(1), r.y * r.z + r.c(1)));
  CHECK_FALSE(certainly_coprime(r.x * r.x - r.c(1), (r.x - r.c(1)) * r.z));
}

TEST_CASE("evaluation, substitution and rebasing") {
  Ring r;
  MultiPoly p = r.x * r.x * r.y - r.z;
  std::vector<Scalar> pt{Scalar(2), Scalar(3), Scalar(1, 2)};
  CHECK(p.eval(pt) == Scalar(23, 2));
  CHECK(p.substitute(0, r.y + r.c(1)).eval(pt) == Scalar(16 * 3) - Scalar(1, 2));
  auto other = VarSet::make({"z", "y", "x", "w"});
  CHECK(p.rebase(other).rebase(r.vars) == p);
  CHECK_THROWS_AS(MultiPoly::variable(r.vars, "w"), UnknownVariable);
}

TEST_CASE("scalar parsing") {
  CHECK(parse_scalar("-3/6") == Scalar(-1, 2));
  CHECK(parse_scalar("0.125") == Scalar(1, 8));
  CHECK(parse_scalar("-2.5") == Scalar(-5, 2));
  CHECK(parse_scalar("7") == Scalar(7));
}
