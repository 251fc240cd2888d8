#include "garnier/algebra/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace garnier {

namespace {

// Power series a_0 + a_1 z + ... of a polynomial with z^k factored out.
std::vector<RatFunc> shifted_coeffs(const MultiPoly& p, std::size_t var, std::size_t len, int& shift) {
  auto cs = p.coefficients(var);
  shift = int(p.min_degree(var));
  std::vector<RatFunc> out(len, RatFunc(p.vars()));
  for (std::size_t k = 0; k < len && k + std::size_t(shift) < cs.size(); ++k) out[k] = RatFunc(cs[k + std::size_t(shift)]);
  return out;
}

std::vector<RatFunc> series_mul(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b, std::size_t len) {
  std::vector<RatFunc> out(len, RatFunc(a.front().vars()));
  for (std::size_t i = 0; i < len && i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < len && j < b.size(); ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<RatFunc> series_inverse(const std::vector<RatFunc>& a, std::size_t len) {
  std::vector<RatFunc> b(len, RatFunc(a.front().vars()));
  const RatFunc inv0 = a.front().inverse();
  b[0] = inv0;
  for (std::size_t n = 1; n < len; ++n) {
    RatFunc s(a.front().vars());
    for (std::size_t k = 1; k <= n && k < a.size(); ++k)
      if (!a[k].is_zero() && !b[n - k].is_zero()) s += a[k] * b[n - k];
    b[n] = -(s * inv0);
  }
  return b;
}

}  // namespace

Laurent::Laurent(VarSetPtr vars, int low, std::vector<RatFunc> coeffs) : vars_(std::move(vars)), low_(low), c_(std::move(coeffs)) {}

Laurent Laurent::expand(const RatFunc& r0, std::size_t var, int max_order) {
  const RatFunc r = r0.normalized();
  const VarSetPtr& V = r.vars();
  if (r.is_zero()) return Laurent(V, max_order + 1, {});
  // Valuation of r: num shift minus the shifts of the denominator factors.
  int val = int(r.num().min_degree(var));
  for (const auto& f : r.den_factors()) val -= int(f.exp * f.base.min_degree(var));
  if (val > max_order) return Laurent(V, max_order + 1, {});
  const std::size_t len = std::size_t(max_order - val + 1);
  int shift = 0;
  std::vector<RatFunc> acc = shifted_coeffs(r.num(), var, len, shift);
  RatFunc scale = RatFunc::constant(V, Scalar(1));
  for (const auto& f : r.den_factors()) {
    if (!f.base.depends_on(var)) {
      scale *= RatFunc(f.base).pow(int(f.exp));
      continue;
    }
    std::vector<RatFunc> b = series_inverse(shifted_coeffs(f.base, var, len, shift), len);
    for (unsigned e = 0; e < f.exp; ++e) acc = series_mul(acc, b, len);
  }
  if (!(scale.is_constant() && scale.num().constant_value() == 1)) {
    const RatFunc inv = scale.inverse();
    for (auto& c : acc)
      if (!c.is_zero()) c *= inv;
  }
  return Laurent(V, val, std::move(acc));
}

RatFunc Laurent::coeff(int m) const {
  if (m > high()) throw std::out_of_range("Laurent::coeff: order beyond truncation");
  if (m < low_) return RatFunc(vars_);
  return c_[std::size_t(m - low_)];
}

int Laurent::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return low_ + int(k);
  return high() + 1;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  const VarSetPtr& V = a.vars_ ? a.vars_ : b.vars_;
  const int lo = std::min(a.low_, b.low_), hi = std::min(a.high(), b.high());
  std::vector<RatFunc> c;
  for (int m = lo; m <= hi; ++m) c.push_back(a.coeff(m) + b.coeff(m));
  return Laurent(V, lo, std::move(c));
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + b * RatFunc::constant(b.vars_ ? b.vars_ : a.vars_, Scalar(-1)); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  const VarSetPtr& V = a.vars_ ? a.vars_ : b.vars_;
  const int lo = a.low_ + b.low_;
  // Each factor is known through its own high(); the product through
  // min(a.high + b.low, b.high + a.low).
  const int hi = std::min(a.high() + b.low_, b.high() + a.low_);
  std::vector<RatFunc> c(std::size_t(std::max(0, hi - lo + 1)), RatFunc(V));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size() && int(i + j) <= hi - lo; ++j)
      if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Laurent(V, lo, std::move(c));
}

Laurent operator*(const Laurent& a, const RatFunc& s) {
  Laurent r = a;
  for (auto& c : r.c_)
    if (!c.is_zero()) c *= s;
  return r;
}

}  // namespace garnier
