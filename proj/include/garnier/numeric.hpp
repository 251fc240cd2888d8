#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <array>
#include <span>
#include <string>
#include <vector>

#include "garnier/algebra/ratfunc.hpp"

namespace garnier {

using Real = boost::multiprecision::mpfr_float;

// Sets the default working precision (decimal digits) of newly created Reals.
void set_working_digits(unsigned digits);
unsigned working_digits();

// RAII precision scope; restores the previous default on exit.
class DigitsScope {
 public:
  explicit DigitsScope(unsigned digits);
  ~DigitsScope();
  DigitsScope(const DigitsScope&) = delete;
  DigitsScope& operator=(const DigitsScope&) = delete;

 private:
  unsigned saved_;
};

Real to_real(const Scalar& q);

struct Complex {
  Real re, im;
  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT: reals embed implicitly
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(const Scalar& q) : re(to_real(q)), im(0) {}  // NOLINT
  Complex(int v) : re(v), im(0) {}  // NOLINT

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  Complex operator-() const { return Complex(-re, -im); }
};

Real abs(const Complex& z);
Real arg(const Complex& z);
Complex conj(const Complex& z);
// Principal branches (cut along the negative real axis).
Complex sqrt(const Complex& z);
Complex cbrt(const Complex& z);
Complex pow(const Complex& z, unsigned n);
std::string to_string(const Complex& z, unsigned digits = 20);
std::string to_string(const Real& x, unsigned digits = 20);

// Rational functions of one ring compiled together for repeated numeric
// evaluation: every distinct monomial is computed once per point from a parent
// monomial, and equal denominator bases are shared. Coefficients are rounded
// once at the precision current at construction time.
class CompiledRatFuncSet {
 public:
  CompiledRatFuncSet() = default;
  explicit CompiledRatFuncSet(std::span<const RatFunc> fs);
  std::size_t size() const { return funcs_.size(); }
  std::size_t nvars() const { return nvars_; }
  // Throws PoleError when a denominator evaluates to exactly zero.
  std::vector<Complex> eval(std::span<const Complex> point) const;

 private:
  struct Term {
    Real coeff;
    std::size_t mono;
  };
  struct Poly {
    std::vector<Term> terms;
  };
  struct Func {
    std::size_t num;
    std::vector<std::pair<std::size_t, unsigned>> den;  // (poly index, exponent)
  };
  std::size_t nvars_ = 0;
  // Monomial k = monomial parent_[k] times variable var_[k]; monomial 0 is 1.
  std::vector<std::size_t> parent_, var_;
  std::vector<Poly> polys_;
  std::vector<Func> funcs_;
};

class CompiledRatFunc {
 public:
  CompiledRatFunc() = default;
  explicit CompiledRatFunc(const RatFunc& r);
  std::size_t nvars() const { return set_.nvars(); }
  Complex eval(std::span<const Complex> point) const { return set_.eval(point).front(); }

 private:
  CompiledRatFuncSet set_;
};

// Roots of sum_k c[k] x^k (c.back() != 0) by Aberth iteration, polished by
// Newton steps; accurate to the working precision for simple roots.
std::vector<Complex> polynomial_roots(std::span<const Complex> c);

}  // namespace garnier
