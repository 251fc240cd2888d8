#include <doctest.h>

#include "garnier/algebra/errors.hpp"
#include "garnier/algebra/ratfunc.hpp"

using namespace garnier;

namespace {

struct Ring {
  VarSetPtr vars = VarSet::make({"x", "y", "t0"});
  RatFunc x = RatFunc::variable(vars, "x");
  RatFunc y = RatFunc::variable(vars, "y");
  RatFunc t0 = RatFunc::variable(vars, "t0");
  RatFunc c(long n, long d = 1) const { return RatFunc::constant(vars, make_scalar(n, d)); }
};

}  // namespace

TEST_CASE("normalize removes constants and common factors") {
  Ring r;
  RatFunc a = RatFunc::quotient((r.c(2) * r.x).num(), r.c(4).num());
  CHECK(a == r.x * Scalar(1, 2));
  CHECK(a.is_polynomial());
  RatFunc b = RatFunc::quotient((r.x * r.x - r.c(1)).num(), (r.x - r.c(1)).num());
  CHECK(b.is_polynomial());
  CHECK(b.num() == (r.x + r.c(1)).num());
  CHECK_THROWS_AS(RatFunc::quotient(r.x.num(), MultiPoly(r.vars)), DomainError);
}

TEST_CASE("canonical denominator is monic") {
  Ring r;
  RatFunc a = RatFunc::quotient(r.y.num(), (r.c(-3) * r.x + r.c(6)).num());
  CHECK(a.den().leading_coeff() == 1);
  CHECK(a.num() == (r.y * Scalar(-1, 3)).num());
}

TEST_CASE("composite denominators split on partial cancellation") {
  Ring r;
  MultiPoly d = ((r.x - r.y) * (r.x + r.y * r.y)).num();
  RatFunc a = RatFunc::quotient(r.c(1).num(), d);
  RatFunc b = a * (r.x - r.y);
  CHECK(b == (r.x + r.y * r.y).inverse());
  CHECK((a - a).is_zero());
}

TEST_CASE("derivatives") {
  Ring r;
  CHECK((r.x * r.x).diff(0) == r.c(2) * r.x);
  CHECK((r.t0 * r.t0).diff("t0") == r.c(2) * r.t0);
  RatFunc f = (r.x + r.y) / (r.x - r.c(1)).pow(2);
  RatFunc expect = r.c(1) / (r.x - r.c(1)).pow(2) - r.c(2) * (r.x + r.y) / (r.x - r.c(1)).pow(3);
  CHECK(f.diff(0) == expect);
  CHECK_THROWS_AS(f.diff("w"), UnknownVariable);
}

TEST_CASE("evaluation and poles") {
  Ring r;
  std::vector<Scalar> pt{Scalar(4), Scalar(0), Scalar(0)};
  CHECK((r.x * Scalar(1, 2)).eval(pt) == 2);
  RatFunc raw = RatFunc::unreduced((r.x * r.x - r.c(1)).num(), (r.x - r.c(1)).num());
  std::vector<Scalar> one{Scalar(1), Scalar(0), Scalar(0)};
  CHECK_THROWS_AS(raw.eval(one), PoleError);
  CHECK(raw.normalized().eval(one) == 2);
}

TEST_CASE("composition") {
  Ring r;
  RatFunc f = r.c(1) / (r.x * r.x - r.y);
  std::vector<RatFunc> img{r.c(1) / r.y, r.y, r.t0};
  RatFunc g = f.compose(img, r.vars);
  CHECK(g == r.y * r.y / (r.c(1) - r.y.pow(3)));
  CHECK(r.x.pow(3).substitute(0, r.y / r.t0) == r.y.pow(3) / r.t0.pow(3));
}
