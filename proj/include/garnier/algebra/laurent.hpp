#pragma once

#include <cstddef>
#include <vector>

#include "garnier/algebra/ratfunc.hpp"

namespace garnier {

// Truncated Laurent series sum_{m >= low} c_m z^m in one variable z of a ring;
// the coefficients are rational functions of the remaining variables. Known
// exactly through order `high()`.
class Laurent {
 public:
  Laurent() = default;
  Laurent(VarSetPtr vars, int low, std::vector<RatFunc> coeffs);

  // Expansion of r at z = 0 through order `max_order` (z = variable `var`).
  static Laurent expand(const RatFunc& r, std::size_t var, int max_order);

  int low() const { return low_; }
  int high() const { return low_ + int(c_.size()) - 1; }
  // Coefficient of z^m; zero below low(), std::out_of_range above high().
  RatFunc coeff(int m) const;
  // Lowest order with a nonzero coefficient, or high() + 1 when none is known.
  int valuation() const;

  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const RatFunc& s);

 private:
  VarSetPtr vars_;
  int low_ = 0;
  std::vector<RatFunc> c_;
};

}  // namespace garnier
