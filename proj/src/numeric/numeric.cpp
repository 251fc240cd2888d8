#include "garnier/numeric.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "garnier/algebra/errors.hpp"

namespace garnier {

void set_working_digits(unsigned digits) { Real::default_precision(digits); }
unsigned working_digits() { return Real::default_precision(); }

DigitsScope::DigitsScope(unsigned digits) : saved_(working_digits()) { set_working_digits(digits); }
DigitsScope::~DigitsScope() { set_working_digits(saved_); }

Real to_real(const Scalar& q) {
  Real n(q.get_num().get_str()), d(q.get_den().get_str());
  return n / d;
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real d = o.re * o.re + o.im * o.im;
  if (d == 0) throw PoleError("complex division by zero");
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }
Real arg(const Complex& z) { return boost::multiprecision::atan2(z.im, z.re); }
Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Complex sqrt(const Complex& z) {
  if (z.re == 0 && z.im == 0) return Complex();
  const Real m = abs(z);
  Real a = boost::multiprecision::sqrt((m + z.re) / 2);
  Real b = boost::multiprecision::sqrt((m - z.re) / 2);
  if (z.im < 0) b = -b;
  return Complex(std::move(a), std::move(b));
}

Complex cbrt(const Complex& z) {
  if (z.re == 0 && z.im == 0) return Complex();
  const Real r = boost::multiprecision::cbrt(abs(z));
  const Real th = arg(z) / 3;
  return Complex(r * boost::multiprecision::cos(th), r * boost::multiprecision::sin(th));
}

Complex pow(const Complex& z, unsigned n) {
  Complex r(1), b = z;
  while (n) {
    if (n & 1u) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

std::string to_string(const Real& x, unsigned digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

std::string to_string(const Complex& z, unsigned digits) {
  std::ostringstream os;
  os.precision(digits);
  os << z.re << (z.im < 0 ? "-" : "+") << boost::multiprecision::abs(z.im) << "i";
  return os.str();
}

// ---------------------------------------------------------------- compiled

CompiledRatFuncSet::CompiledRatFuncSet(std::span<const RatFunc> fs) {
  if (fs.empty()) return;
  nvars_ = fs.front().nvars();
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  index.emplace(Monomial{}, 0);
  parent_.push_back(0);
  var_.push_back(0);
  // Registers m and, recursively, the chain of parents obtained by lowering
  // the last nonzero exponent.
  std::function<std::size_t(const Monomial&)> intern = [&](const Monomial& m) -> std::size_t {
    if (auto it = index.find(m); it != index.end()) return it->second;
    std::size_t v = nvars_;
    while (v-- > 0)
      if (m.exp[v]) break;
    Monomial up = m;
    --up.exp[v];
    const std::size_t pidx = intern(up);
    const std::size_t k = parent_.size();
    parent_.push_back(pidx);
    var_.push_back(v);
    index.emplace(m, k);
    return k;
  };
  auto compile = [&](const MultiPoly& p) {
    Poly c;
    c.terms.reserve(p.size());
    for (const auto& t : p.terms()) c.terms.push_back(Term{to_real(t.coeff), intern(t.mono)});
    polys_.push_back(std::move(c));
    return polys_.size() - 1;
  };
  std::vector<MultiPoly> bases;
  std::vector<std::size_t> base_poly;
  for (const RatFunc& f0 : fs) {
    const RatFunc f = f0.normalized();
    if (f.nvars() != nvars_) throw std::invalid_argument("CompiledRatFuncSet: functions from different rings");
    Func fn;
    fn.num = compile(f.num());
    for (const auto& d : f.den_factors()) {
      std::size_t b = 0;
      while (b < bases.size() && !(bases[b] == d.base)) ++b;
      if (b == bases.size()) {
        bases.push_back(d.base);
        base_poly.push_back(compile(d.base));
      }
      fn.den.emplace_back(base_poly[b], d.exp);
    }
    funcs_.push_back(std::move(fn));
  }
}

namespace {

mpfr_ptr raw(Real& x) { return x.backend().data(); }
mpfr_srcptr raw(const Real& x) { return x.backend().data(); }

// Per-thread buffers reused across evaluations; rebuilt when the working
// precision changes.
struct EvalScratch {
  unsigned digits = 0;
  std::vector<Complex> mono, pv;
  Real a, b;
  void prepare(std::size_t nmono, std::size_t npoly) {
    if (digits != working_digits()) {
      digits = working_digits();
      mono.clear();
      pv.clear();
      a = Real(0);
      b = Real(0);
    }
    while (mono.size() < nmono) mono.emplace_back();
    while (pv.size() < npoly) pv.emplace_back();
  }
};

// z = x * y without temporaries.
void mul_into(Complex& z, const Complex& x, const Complex& y, Real& a, Real& b) {
  mpfr_mul(raw(a), raw(x.re), raw(y.re), MPFR_RNDN);
  mpfr_mul(raw(b), raw(x.im), raw(y.im), MPFR_RNDN);
  mpfr_sub(raw(z.re), raw(a), raw(b), MPFR_RNDN);
  mpfr_mul(raw(a), raw(x.re), raw(y.im), MPFR_RNDN);
  mpfr_mul(raw(b), raw(x.im), raw(y.re), MPFR_RNDN);
  mpfr_add(raw(z.im), raw(a), raw(b), MPFR_RNDN);
}

}  // namespace

std::vector<Complex> CompiledRatFuncSet::eval(std::span<const Complex> point) const {
  if (point.size() < nvars_) throw std::invalid_argument("CompiledRatFuncSet::eval: point too short");
  thread_local EvalScratch sc;
  sc.prepare(parent_.size(), polys_.size());
  auto& mono = sc.mono;
  if (!parent_.empty()) {
    mpfr_set_ui(raw(mono[0].re), 1, MPFR_RNDN);
    mpfr_set_ui(raw(mono[0].im), 0, MPFR_RNDN);
  }
  for (std::size_t k = 1; k < parent_.size(); ++k) mul_into(mono[k], mono[parent_[k]], point[var_[k]], sc.a, sc.b);
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    Complex& acc = sc.pv[i];
    mpfr_set_ui(raw(acc.re), 0, MPFR_RNDN);
    mpfr_set_ui(raw(acc.im), 0, MPFR_RNDN);
    for (const Term& t : polys_[i].terms) {
      const Complex& m = mono[t.mono];
      mpfr_mul(raw(sc.a), raw(t.coeff), raw(m.re), MPFR_RNDN);
      mpfr_add(raw(acc.re), raw(acc.re), raw(sc.a), MPFR_RNDN);
      mpfr_mul(raw(sc.a), raw(t.coeff), raw(m.im), MPFR_RNDN);
      mpfr_add(raw(acc.im), raw(acc.im), raw(sc.a), MPFR_RNDN);
    }
  }
  std::vector<Complex> out;
  out.reserve(funcs_.size());
  for (const Func& f : funcs_) {
    Complex d(1);
    for (const auto& [b, e] : f.den) d *= pow(sc.pv[b], e);
    if (d.re == 0 && d.im == 0) throw PoleError("compiled rational function: pole");
    out.push_back(sc.pv[f.num] / d);
  }
  return out;
}

CompiledRatFunc::CompiledRatFunc(const RatFunc& r) : set_(std::span<const RatFunc>(&r, 1)) {}

// ---------------------------------------------------------------- roots

namespace {

void horner(std::span<const Complex> c, const Complex& x, Complex& p, Complex& dp) {
  p = c.back();
  dp = Complex();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * x + p;
    p = p * x + c[k];
  }
}

}  // namespace

std::vector<Complex> polynomial_roots(std::span<const Complex> c) {
  if (c.size() < 2) return {};
  if (c.back().re == 0 && c.back().im == 0) throw DomainError("polynomial_roots: zero leading coefficient");
  const std::size_t n = c.size() - 1;
  // Cauchy bound for the initial circle.
  Real radius = 0;
  const Real lead = abs(c.back());
  for (std::size_t k = 0; k < n; ++k) radius = boost::multiprecision::max(radius, Real(abs(c[k]) / lead));
  radius += 1;
  const Real pi = boost::multiprecision::acos(Real(-1));
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    Real th = 2 * pi * Real(k) / Real(n) + Real(0.4);
    z[k] = Complex(radius * boost::multiprecision::cos(th), radius * boost::multiprecision::sin(th));
  }
  const Real eps = boost::multiprecision::pow(Real(10), -Real(int(working_digits()) - 3));
  for (int iter = 0; iter < 2000; ++iter) {
    Real worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex p, dp;
      horner(c, z[k], p, dp);
      if (p.re == 0 && p.im == 0) continue;
      Complex ratio = p / dp;
      Complex sum;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += Complex(1) / (z[k] - z[j]);
      Complex w = ratio / (Complex(1) - ratio * sum);
      z[k] -= w;
      worst = boost::multiprecision::max(worst, Real(abs(w) / (1 + abs(z[k]))));
    }
    if (worst < eps) break;
  }
  for (auto& r : z) {
    for (int k = 0; k < 2; ++k) {
      Complex p, dp;
      horner(c, r, p, dp);
      if (dp.re == 0 && dp.im == 0) break;
      r -= p / dp;
    }
  }
  return z;
}

}  // namespace garnier
