#include "garnier/solution.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "garnier/algebra/errors.hpp"
#include "garnier/algebra/symmetric.hpp"

namespace garnier {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const VarSetPtr& x_ring() {
  static const VarSetPtr ring = VarSet::make({"x"});
  return ring;
}

void require_s(const STriple& s) {
  if (s[2] == 0) throw DomainError("s2 must be nonzero");
}

}  // namespace

const VarSetPtr& s_ring() {
  static const VarSetPtr ring = VarSet::make({"s0", "s1", "s2"});
  return ring;
}

const VarSetPtr& st_ring() {
  static const VarSetPtr ring = VarSet::make({"s0", "s1", "s2", "t0", "t1", "t2"});
  return ring;
}

const VarSetPtr& xs_ring() {
  static const VarSetPtr ring = VarSet::make({"x", "s0", "s1", "s2"});
  return ring;
}

const RelRingPtr& solution_relring() {
  static const RelRingPtr ring = RelRing::make(s_ring());
  return ring;
}

const VarSetPtr& sigma_phase_ring() {
  static const VarSetPtr ring = sigma_ring(phase_ring());
  return ring;
}

// ---------------------------------------------------------------- cubic

RatFunc cubic_family() {
  const VarSetPtr& R = xs_ring();
  auto v = [&](const char* n) { return RatFunc::variable(R, n); };
  auto k = [&](long c) { return RatFunc::constant(R, Scalar(c)); };
  const RatFunc x = v("x"), s0 = v("s0"), s1 = v("s1"), s2 = v("s2");
  return x.pow(3) + (s0 - s1 - k(3) * s2) / (k(2) * s2) * x.pow(2) + (-k(3) * s0 - s1 + s2) / (k(2) * s2) * x + s0 / s2;
}

MultiPoly cubic_at(const STriple& s) {
  require_s(s);
  const VarSetPtr& R = x_ring();
  std::vector<MultiPoly> c = {
      MultiPoly::constant(R, s[0] / s[2]),
      MultiPoly::constant(R, (-3 * s[0] - s[1] + s[2]) / (2 * s[2])),
      MultiPoly::constant(R, (s[0] - s[1] - 3 * s[2]) / (2 * s[2])),
      MultiPoly::constant(R, Scalar(1)),
  };
  return MultiPoly::from_coefficients(R, 0, c);
}

Scalar cubic_discriminant(const MultiPoly& cubic) {
  if (cubic.nvars() != 1 || cubic.degree(0) != 3) throw std::invalid_argument("cubic_discriminant: univariate cubic expected");
  auto cs = cubic.coefficients(0);
  auto c = [&](std::size_t k) { return k < cs.size() && !cs[k].is_zero() ? cs[k].constant_value() : Scalar(0); };
  const Scalar a = c(3), b = c(2), cc = c(1), d = c(0);
  return 18 * a * b * cc * d - 4 * b * b * b * d + b * b * cc * cc - 4 * a * cc * cc * cc - 27 * a * a * d * d;
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  if (n > Integer("1000000000000")) throw DomainError("rational_roots: coefficients too large");
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::vector<Scalar> rational_roots(const MultiPoly& p0) {
  if (p0.nvars() != 1) throw std::invalid_argument("rational_roots: univariate polynomial expected");
  std::vector<Scalar> roots;
  if (p0.is_zero()) throw DomainError("rational_roots: zero polynomial");
  MultiPoly p = p0.primitive();
  const std::size_t low = p.min_degree(0);
  for (std::size_t k = 0; k < low; ++k) roots.push_back(Scalar(0));
  if (low) {
    Monomial m{};
    m.exp[0] = static_cast<std::uint8_t>(low);
    p = p.div_monomial(m);
  }
  while (p.degree(0) > 0) {
    auto cs = p.coefficients(0);
    const Integer a0 = cs.front().constant_value().get_num();
    const Integer an = cs.back().constant_value().get_num();
    bool found = false;
    for (const Integer& num : positive_divisors(a0)) {
      for (const Integer& den : positive_divisors(an)) {
        for (int sign : {1, -1}) {
          Scalar r(sign * num, den);
          r.canonicalize();
          const Scalar pt[1] = {r};
          if (p.eval(pt) != 0) continue;
          roots.push_back(r);
          MultiPoly lin = MultiPoly::variable(p.vars(), 0) - MultiPoly::constant(p.vars(), r);
          p = p.divide_exact(lin)->primitive();
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

SigmaPoint sigma_from_s() {
  const VarSetPtr& R = s_ring();
  auto v = [&](std::size_t i) { return RatFunc::variable(R, i); };
  auto k = [&](long c) { return RatFunc::constant(R, Scalar(c)); };
  const RatFunc s0 = v(0), s1 = v(1), s2 = v(2);
  return SigmaPoint{-(s0 - s1 - k(3) * s2) / (k(2) * s2), (-k(3) * s0 - s1 + s2) / (k(2) * s2), -s0 / s2};
}

std::array<Scalar, 3> sigma_at(const STriple& s) {
  require_s(s);
  return {-(s[0] - s[1] - 3 * s[2]) / (2 * s[2]), (-3 * s[0] - s[1] + s[2]) / (2 * s[2]), -s[0] / s[2]};
}

// ---------------------------------------------------------------- K operators

RatFunc section_eta(int j) {
  const RatFunc q = phase::var(phase::q(j));
  const RatFunc third = phase::constant(make_scalar(1, 3));
  return third * q.inverse() + third * (q - phase::constant(Scalar(1))).inverse();
}

RatFunc build_K(int k, int i) {
  if (k < 1 || k > 3) throw std::invalid_argument("build_K: k must be 1, 2 or 3");
  const RatFunc& h = hamiltonian(i);
  RatFunc out(phase_ring());
  for (int j = 0; j < 3; ++j) {
    RatFunc w = phase::constant(Scalar(1));
    if (k >= 2) {
      RatFunc a = phase::constant(Scalar(k == 2 ? 0 : 1));
      for (int l = 0; l < 3; ++l) {
        if (l == j) continue;
        if (k == 2)
          a += phase::var(phase::q(l));
        else
          a *= phase::var(phase::q(l));
      }
      w = a;
    }
    out += w * h.diff(phase::eta(j));
  }
  return out;
}

RatFunc pullback_by_section(const RatFunc& k_op) {
  RatFunc r = k_op;
  for (int j = 0; j < 3; ++j) r = r.substitute(phase::eta(j), section_eta(j));
  return symmetric_reduce(r, sigma_phase_ring());
}

RelRingElem on_solution(const RatFunc& f) {
  const VarSetPtr& src = sigma_phase_ring();
  const VarSetPtr& dst = st_ring();
  const RatFunc g = f.rebase(src);
  const SigmaPoint sg = sigma_from_s();
  std::vector<RatFunc> img(src->size());
  for (int i = 0; i < 3; ++i) img[phase::t(i)] = RatFunc::variable(dst, dst->index("t" + std::to_string(i)));
  img[phase::q(0)] = sg.sigma1.rebase(dst);
  img[phase::q(1)] = sg.sigma2.rebase(dst);
  img[phase::q(2)] = sg.sigma3.rebase(dst);
  for (int j = 0; j < 3; ++j) {
    if (g.depends_on(phase::eta(j))) throw DomainError("on_solution: expression still depends on eta");
    img[phase::eta(j)] = RatFunc(dst);
  }
  return rel_reduce(g.compose(img, dst), solution_relring());
}

SigmaSystemReport verify_sigma_system() {
  const auto start = std::chrono::steady_clock::now();
  SigmaSystemReport rep;
  const RelRingPtr& ring = solution_relring();
  const SigmaPoint sg = sigma_from_s();
  const RatFunc* sig[3] = {&sg.sigma1, &sg.sigma2, &sg.sigma3};
  rep.all_zero = true;
  for (int i = 0; i < 3; ++i) {
    // ds_i/dt_i = 2 t_i / (3 s_i^2) along t_i^2 = s_i^3.
    const RatFunc si = RatFunc::variable(s_ring(), std::size_t(i));
    const RelRingElem dsdt = RelRingElem::t(ring, i) * (RatFunc::constant(s_ring(), make_scalar(2, 3)) / si.pow(2));
    for (int k = 1; k <= 3; ++k) {
      SigmaEquation eq;
      eq.i = i;
      eq.k = k;
      eq.lhs = RelRingElem(ring, sig[k - 1]->diff(std::size_t(i))) * dsdt;
      eq.rhs = on_solution(pullback_by_section(build_K(k, i)));
      eq.zero = (eq.lhs - eq.rhs).is_zero();
      rep.all_zero = rep.all_zero && eq.zero;
      rep.equations.push_back(std::move(eq));
    }
  }
  rep.seconds = seconds_since(start);
  return rep;
}

// ---------------------------------------------------------------- numeric

Branch Branch::parse(const std::string& text) {
  if (text.size() != 3) throw std::invalid_argument("branch must be three characters from {+,-}");
  Branch b;
  for (int i = 0; i < 3; ++i) {
    if (text[i] == '+')
      b.sign[i] = 1;
    else if (text[i] == '-')
      b.sign[i] = -1;
    else
      throw std::invalid_argument("branch must be three characters from {+,-}");
  }
  return b;
}

std::string Branch::to_string() const {
  std::string s;
  for (int v : sign) s += v > 0 ? '+' : '-';
  return s;
}

LocusPoint locus_point(const STriple& s, const Branch& branch) {
  for (const auto& v : s)
    if (v == 0) throw DomainError("locus_point: s_i must be nonzero");
  const MultiPoly Q = cubic_at(s);
  if (cubic_discriminant(Q) == 0) throw DomainError("locus_point: root collision (zero discriminant)");
  LocusPoint p;
  for (int i = 0; i < 3; ++i) {
    p.s[i] = Complex(s[i]);
    p.t[i] = pow(sqrt(p.s[i]), 3) * Complex(branch.sign[i]);
  }
  auto cs = Q.coefficients(0);
  std::vector<Complex> c;
  for (const auto& m : cs) c.emplace_back(m.is_zero() ? Scalar(0) : m.constant_value());
  auto roots = polynomial_roots(c);
  // Sort by real part, then imaginary part, for a reproducible labelling.
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  const Real third = Real(1) / 3;
  for (int j = 0; j < 3; ++j) {
    p.q[j] = roots[j];
    p.eta[j] = Complex(third) / p.q[j] + Complex(third) / (p.q[j] - Complex(1));
  }
  return p;
}

EtaReport verify_eta_equations_numeric(const STriple& s, unsigned digits, const Branch& branch) {
  const auto start = std::chrono::steady_clock::now();
  if (digits < 15) throw std::invalid_argument("digits must be at least 15");
  DigitsScope scope(digits);
  EtaReport rep;
  rep.s = s;
  rep.branch = branch;
  rep.digits = digits;
  const LocusPoint p = locus_point(s, branch);

  const RatFunc Q = cubic_family();
  const CompiledRatFunc dQdx(Q.diff(std::size_t(0)));
  std::array<CompiledRatFunc, 3> dQds;
  for (int i = 0; i < 3; ++i) dQds[i] = CompiledRatFunc(Q.diff(std::size_t(1 + i)));

  std::vector<Complex> phase_pt(9);
  for (int i = 0; i < 3; ++i) {
    phase_pt[phase::t(i)] = p.t[i];
    phase_pt[phase::q(i)] = p.q[i];
    phase_pt[phase::eta(i)] = p.eta[i];
  }
  rep.max_residual = 0;
  for (int i = 0; i < 3; ++i) {
    const Complex dsdt = Complex(2) * p.t[i] / (Complex(3) * p.s[i] * p.s[i]);
    for (int j = 0; j < 3; ++j) {
      const Complex xs[4] = {p.q[j], p.s[0], p.s[1], p.s[2]};
      const Complex dqds = -dQds[i].eval(xs) / dQdx.eval(xs);
      const Complex q = p.q[j], qm1 = p.q[j] - Complex(1);
      const Complex deta_dq = -(Complex(1) / (Complex(3) * q * q)) - Complex(1) / (Complex(3) * qm1 * qm1);
      const Complex lhs = deta_dq * dqds * dsdt;
      const Complex rhs = -CompiledRatFunc(hamiltonian(i).diff(phase::q(j))).eval(phase_pt);
      // Scaled by the size of the right-hand side: at fixed precision the
      // rounding floor grows with the magnitude of the terms.
      rep.residual[i][j] = abs(lhs - rhs) / (1 + abs(rhs));
      rep.max_residual = boost::multiprecision::max(rep.max_residual, rep.residual[i][j]);
    }
  }
  rep.threshold = boost::multiprecision::pow(Real(10), -Real(int(digits) - 10));
  rep.pass = rep.max_residual < rep.threshold;
  rep.seconds = seconds_since(start);
  return rep;
}

}  // namespace garnier
