#include <doctest.h>

#include "garnier/tau.hpp"

using namespace garnier;

namespace {

RatFunc sv(int i) { return RatFunc::variable(s_ring(), std::size_t(i)); }

const TauReport& report() {
  static const TauReport r = verify_tau();
  return r;
}

}  // namespace

TEST_CASE("varpi is minus the closed form") {
  const TauReport& r = report();
  const OneFormS disp = displayed_varpi();
  for (int i = 0; i < 3; ++i) {
    CHECK_FALSE(r.matches_display[i]);
    CHECK(r.varpi.a[i] == -disp.a[i]);
  }
  CHECK(r.pass_negated());
  CHECK_FALSE(r.pass());
}

TEST_CASE("closedness") {
  CHECK(check_closed(displayed_varpi()));
  OneFormS w = displayed_varpi();
  w.a[0] += sv(1);
  CHECK_FALSE(check_closed(w));
}

TEST_CASE("closed form is a rotation of one pattern") {
  const OneFormS w = displayed_varpi();
  const std::array<std::size_t, 3> rot{2, 0, 1};  // s0 -> s1 -> s2 -> s0
  CHECK(w.a[0].permute(rot) == w.a[1]);
  CHECK(w.a[1].permute(rot) == w.a[2]);
}

TEST_CASE("potential") {
  const LogRatFunc F = potential_F();
  const OneFormS w = displayed_varpi();
  for (int i = 0; i < 3; ++i) CHECK(F.diff(std::size_t(i)) == w.a[i]);
  CHECK(report().F_symmetric);
  // Five-point derivative of F in s0 at s = (1,2,3), h = 1e-7, 40 digits.
  DigitsScope d(40);
  const Scalar h(1, 10000000);
  auto f = [&](int k) { return tau_exponent({Scalar(1) + Scalar(k) * h, 2, 3}); };
  const Real fd = (-f(2) + 8 * f(1) - 8 * f(-1) + f(-2)) / (12 * to_real(h));
  const Real exact = to_real(w.a[0].eval(std::array<Scalar, 3>{1, 2, 3}));
  CHECK(boost::multiprecision::abs(fd - exact) < Real("1e-25"));
}

TEST_CASE("restricted brackets vanish and varpi is branch independent") {
  const TauReport& r = report();
  for (bool b : r.bracket_zero) CHECK(b);
  const OneFormS w = build_varpi(Branch::parse("-+-"));
  for (int i = 0; i < 3; ++i) CHECK(w.a[i] == r.varpi.a[i]);
}
