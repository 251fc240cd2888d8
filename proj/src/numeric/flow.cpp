#include "garnier/flow.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>

#include "garnier/algebra/errors.hpp"
#include "garnier/hamiltonian.hpp"

namespace garnier {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct CompiledSystem {
  std::array<CompiledRatFuncSet, 3> field;  // 6 components per direction
  std::array<CompiledRatFunc, 3> h, dh_dt;
};

// Coefficients are rounded at the precision current at compile time, so the
// compiled system is cached per working precision.
const CompiledSystem& compiled_system() {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<CompiledSystem>> cache;
  const unsigned digits = working_digits();
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[digits];
  if (!slot) {
    auto sys = std::make_unique<CompiledSystem>();
    for (int i = 0; i < 3; ++i) {
      const auto vf = vector_field(i);
      sys->field[i] = CompiledRatFuncSet(vf);
      sys->h[i] = CompiledRatFunc(hamiltonian(i));
      sys->dh_dt[i] = CompiledRatFunc(hamiltonian(i).diff(phase::t(i)));
    }
    slot = std::move(sys);
  }
  return *slot;
}

std::array<Complex, 9> coordinates(const PhasePoint& p) {
  return {p.t[0], p.t[1], p.t[2], p.q[0], p.q[1], p.q[2], p.eta[0], p.eta[1], p.eta[2]};
}

using State = std::array<Complex, 6>;

State state_of(const PhasePoint& p) { return {p.q[0], p.q[1], p.q[2], p.eta[0], p.eta[1], p.eta[2]}; }

PhasePoint point_of(const std::array<Complex, 3>& t, const State& y) {
  return PhasePoint{t, {y[0], y[1], y[2]}, {y[3], y[4], y[5]}};
}

std::optional<std::string> singular(const PhasePoint& p, const Real& guard) {
  for (int j = 0; j < 3; ++j) {
    if (abs(p.q[j]) < guard) return "q" + std::to_string(j + 1) + " -> 0";
    if (abs(p.q[j] - Complex(1)) < guard) return "q" + std::to_string(j + 1) + " -> 1";
    for (int k = j + 1; k < 3; ++k)
      if (abs(p.q[j] - p.q[k]) < guard) return "q" + std::to_string(j + 1) + " -> q" + std::to_string(k + 1);
    if (abs(p.t[j]) < guard) return "t" + std::to_string(j) + " -> 0";
  }
  return std::nullopt;
}

// Dormand-Prince 5(4).
struct Tableau {
  std::array<Real, 7> c;
  std::array<std::array<Real, 6>, 7> a;
  std::array<Real, 7> b5, b4;
  Tableau() {
    auto r = [](long n, long d) { return to_real(make_scalar(n, d)); };
    c = {r(0, 1), r(1, 5), r(3, 10), r(4, 5), r(8, 9), r(1, 1), r(1, 1)};
    for (auto& row : a) row.fill(Real(0));
    a[1] = {r(1, 5)};
    a[2] = {r(3, 40), r(9, 40)};
    a[3] = {r(44, 45), r(-56, 15), r(32, 9)};
    a[4] = {r(19372, 6561), r(-25360, 2187), r(64448, 6561), r(-212, 729)};
    a[5] = {r(9017, 3168), r(-355, 33), r(46732, 5247), r(49, 176), r(-5103, 18656)};
    a[6] = {r(35, 384), r(0, 1), r(500, 1113), r(125, 192), r(-2187, 6784), r(11, 84)};
    b5 = {r(35, 384), r(0, 1), r(500, 1113), r(125, 192), r(-2187, 6784), r(11, 84), r(0, 1)};
    b4 = {r(5179, 57600), r(0, 1), r(7571, 16695), r(393, 640), r(-92097, 339200), r(187, 2100), r(1, 40)};
  }
};

}  // namespace

PhasePoint phase_point(const LocusPoint& p) { return PhasePoint{p.t, p.q, p.eta}; }

Complex hamiltonian_value(int i, const PhasePoint& p) {
  if (i < 0 || i > 2) throw std::invalid_argument("hamiltonian_value: index out of range");
  const auto x = coordinates(p);
  return compiled_system().h[i].eval(x);
}

Complex hamiltonian_time_derivative(int i, const PhasePoint& p) {
  if (i < 0 || i > 2) throw std::invalid_argument("hamiltonian_time_derivative: index out of range");
  const auto x = coordinates(p);
  return compiled_system().dh_dt[i].eval(x);
}

Trajectory integrate(int i, const PhasePoint& start, const Complex& delta, const Real& tol, const FlowOptions& opt) {
  if (i < 0 || i > 2) throw std::invalid_argument("integrate: direction out of range");
  if (!(tol > 0)) throw std::invalid_argument("integrate: tol must be positive");
  const Real guard(opt.guard);
  if (auto why = singular(start, guard)) throw DomainError("integrate: singular start (" + *why + ")");

  Trajectory tr;
  tr.direction = i;
  tr.samples.push_back({start.t[i], start});
  if (delta.re == 0 && delta.im == 0) return tr;

  const CompiledSystem& sys = compiled_system();
  const Tableau tab;
  const std::array<Complex, 3> t0 = start.t;
  auto times = [&](const Real& tau) {
    std::array<Complex, 3> t = t0;
    t[i] = t0[i] + delta * Complex(tau);
    return t;
  };
  auto rhs = [&](const Real& tau, const State& y) {
    const PhasePoint p = point_of(times(tau), y);
    const auto x = coordinates(p);
    const std::vector<Complex> v = sys.field[i].eval(x);
    State f;
    for (std::size_t k = 0; k < 6; ++k) f[k] = delta * v[k];
    return f;
  };

  State y = state_of(start);
  Real tau(0), h = opt.fixed_steps ? Real(1) / Real(opt.fixed_steps) : Real("1e-3");
  const Real fifth = Real(1) / Real(5), h_min = pow(Real(10), -Real(working_digits()) / 2);
  std::array<State, 7> k;
  bool have_k0 = false;
  std::size_t attempts = 0;
  try {
    while (tau < 1) {
      if (++attempts > opt.max_steps) {
        tr.aborted = true;
        tr.abort_reason = "step budget exhausted";
        break;
      }
      if (tau + h > 1) h = Real(1) - tau;
      if (!have_k0) k[0] = rhs(tau, y);
      for (int s = 1; s < 7; ++s) {
        State ys = y;
        for (int m = 0; m < s; ++m)
          if (tab.a[s][m] != 0)
            for (std::size_t c = 0; c < 6; ++c) ys[c] += Complex(h * tab.a[s][m]) * k[m][c];
        k[s] = rhs(tau + tab.c[s] * h, ys);
      }
      State y5 = y, y4 = y;
      for (int s = 0; s < 7; ++s)
        for (std::size_t c = 0; c < 6; ++c) {
          if (tab.b5[s] != 0) y5[c] += Complex(h * tab.b5[s]) * k[s][c];
          if (tab.b4[s] != 0) y4[c] += Complex(h * tab.b4[s]) * k[s][c];
        }
      Real err(0);
      for (std::size_t c = 0; c < 6; ++c) {
        const Real scale = 1 + std::max(abs(y[c]), abs(y5[c]));
        err = std::max(err, Real(abs(y5[c] - y4[c]) / scale));
      }
      const bool accept = opt.fixed_steps || err <= tol;
      if (accept) {
        tau += h;
        y = y5;
        k[0] = k[6];  // first-same-as-last
        have_k0 = true;
        ++tr.accepted;
        const PhasePoint p = point_of(times(tau), y);
        if (auto why = singular(p, guard)) {
          tr.aborted = true;
          tr.abort_reason = "singular locus: " + *why;
          tr.samples.push_back({p.t[i], p});
          break;
        }
        if (opt.record_all || tau >= 1) tr.samples.push_back({p.t[i], p});
      } else {
        ++tr.rejected;
        have_k0 = true;  // k[0] still belongs to (tau, y)
      }
      if (!opt.fixed_steps) {
        Real factor = err == 0 ? Real(5) : Real(0.9) * pow(tol / err, fifth);
        factor = std::min(Real(5), std::max(Real(0.2), factor));
        h *= factor;
        if (h < h_min) {
          tr.aborted = true;
          tr.abort_reason = "step size underflow";
          break;
        }
      }
    }
  } catch (const PoleError& e) {
    tr.aborted = true;
    tr.abort_reason = std::string("pole hit: ") + e.what();
  }
  return tr;
}

Real LocusResidual::max() const {
  Real m(0);
  for (const auto& v : cubic) m = std::max(m, v);
  for (const auto& v : time) m = std::max(m, v);
  for (const auto& v : eta) m = std::max(m, v);
  return m;
}

LocusResidual locus_residual(const PhasePoint& p, const std::optional<Complex>& s0_hint) {
  const Complex one(1), two(2), three(3);
  const Complex sigma1 = p.q[0] + p.q[1] + p.q[2];
  const Complex sigma3 = p.q[0] * p.q[1] * p.q[2];
  if (abs(sigma3) == 0) throw DomainError("locus_residual: sigma3 = 0, scale unrecoverable");
  // sigma3 = -s0/s2 and sigma1 = -(s0 - s1 - 3 s2)/(2 s2).
  const Complex r0 = -sigma3, r1 = two * sigma1 - sigma3 - three;
  // s0 from t0^2 = s0^3: the cube root nearest the hint.
  const Complex base = cbrt(p.t[0] * p.t[0]);
  Complex s0 = base;
  if (s0_hint) {
    const Real third_turn = boost::multiprecision::acos(Real(-1)) * 2 / 3;
    const Complex w(boost::multiprecision::cos(third_turn), boost::multiprecision::sin(third_turn));
    Complex cand = base;
    Real best = abs(base - *s0_hint);
    for (int k = 0; k < 2; ++k) {
      cand = cand * w;
      const Real d = abs(cand - *s0_hint);
      if (d < best) {
        best = d;
        s0 = cand;
      }
    }
  }
  LocusResidual r;
  const Complex s2 = s0 / r0, s1 = r1 * s2;
  r.s = {s0, s1, s2};
  for (int j = 0; j < 3; ++j) {
    const Complex x = p.q[j];
    const Complex Q = pow(x, 3) + (s0 - s1 - three * s2) / (two * s2) * pow(x, 2) +
                      (-three * s0 - s1 + s2) / (two * s2) * x + s0 / s2;
    r.cubic[j] = abs(Q);
    r.eta[j] = abs(p.eta[j] - one / (three * x) - one / (three * (x - one)));
  }
  for (int i = 1; i < 3; ++i) r.time[i - 1] = abs(p.t[i] * p.t[i] - pow(r.s[i], 3));
  return r;
}

FlowReport flow_preserves_locus(int i, const STriple& s, const Branch& branch, const Complex& delta, const Real& tol,
                                const std::optional<Real>& threshold, const FlowOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  FlowReport rep;
  rep.direction = i;
  rep.s = s;
  rep.branch = branch;
  rep.threshold = threshold ? *threshold : Real(1000) * tol;
  const PhasePoint p0 = phase_point(locus_point(s, branch));
  rep.trajectory = integrate(i, p0, delta, tol, opt);
  Complex hint = Complex(s[0]);
  rep.max_residual = 0;
  bool first = true;
  for (const auto& smp : rep.trajectory.samples) {
    const LocusResidual r = locus_residual(smp.point, hint);
    hint = r.s[0];
    const Real m = r.max();
    if (first) rep.initial_residual = m;
    first = false;
    rep.max_residual = std::max(rep.max_residual, m);
  }
  rep.pass = !rep.trajectory.aborted && rep.max_residual < rep.threshold;
  rep.seconds = seconds_since(start);
  return rep;
}

}  // namespace garnier
