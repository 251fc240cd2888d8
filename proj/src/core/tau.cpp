#include "garnier/tau.hpp"

#include <algorithm>
#include <chrono>

#include "garnier/algebra/errors.hpp"

namespace garnier {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

RatFunc s_var(int i) { return RatFunc::variable(s_ring(), std::size_t(i)); }
RatFunc s_k(const Scalar& c) { return RatFunc::constant(s_ring(), c); }

// t_i -> -t_i for every negative sign.
RelRingElem apply_branch(RelRingElem e, const Branch& branch) {
  for (int i = 0; i < 3; ++i)
    if (branch.sign[i] < 0) e = e.conj(i);
  return e;
}

RelRingElem restrict_function(const RatFunc& f, const Branch& branch) {
  return apply_branch(on_solution(pullback_by_section(f)), branch);
}

}  // namespace

std::array<RelRingElem, 3> restrict_hamiltonians(const Branch& branch) {
  std::array<RelRingElem, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = restrict_function(hamiltonian(i), branch);
  return out;
}

RelRingElem restricted_bracket(int i, int j, const Branch& branch) {
  return restrict_function(poisson(hamiltonian(i), hamiltonian(j)), branch);
}

OneFormS build_varpi(const Branch& branch) {
  const auto h = restrict_hamiltonians(branch);
  const RelRingPtr& ring = solution_relring();
  OneFormS w;
  for (int i = 0; i < 3; ++i) {
    // dt_i/ds_i = 3 s_i^2 / (2 t_i) = 3 t_i / (2 s_i) on t_i^2 = s_i^3.
    const RelRingElem dtds = RelRingElem::t(ring, i) * (s_k(make_scalar(3 * branch.sign[i], 2)) / s_var(i));
    const RelRingElem a = h[i] * dtds;
    if (!a.is_scalar()) throw DomainError("build_varpi: coefficient " + std::to_string(i) + " keeps a t-component");
    w.a[i] = a.scalar();
  }
  return w;
}

OneFormS displayed_varpi() {
  OneFormS w;
  for (int i = 0; i < 3; ++i) {
    const RatFunc a = s_var(i), b = s_var((i + 1) % 3), c = s_var((i + 2) % 3);
    w.a[i] = (s_k(1) + s_k(36) * a.pow(3) - s_k(216) * (b + c) * a.pow(2) - s_k(108) * (b - c).pow(2) * a) / (s_k(24) * a);
  }
  return w;
}

bool check_closed(const OneFormS& w) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(w.a[i].diff(std::size_t(j)) == w.a[j].diff(std::size_t(i)))) return false;
  return true;
}

RatFunc LogRatFunc::diff(std::size_t var) const {
  RatFunc d = rational.diff(var);
  for (const auto& [c, u] : logs)
    if (u.depends_on(var)) d += RatFunc(u.derivative(var)) / RatFunc(u) * c;
  return d;
}

std::string LogRatFunc::to_string() const {
  std::string out = rational.to_string();
  for (const auto& [c, u] : logs) out += " + (" + garnier::to_string(c) + ")*ln(" + u.to_string() + ")";
  return out;
}

LogRatFunc potential_F() {
  const RatFunc s0 = s_var(0), s1 = s_var(1), s2 = s_var(2);
  LogRatFunc F;
  F.rational = (s0.pow(3) + s1.pow(3) + s2.pow(3)) * make_scalar(1, 2) -
               ((s1 - s2).pow(2) * s0 + (s0 - s2).pow(2) * s1 + (s1 - s0).pow(2) * s2) * make_scalar(9, 2) -
               s0 * s1 * s2 * Scalar(18);
  F.logs.emplace_back(make_scalar(1, 24), (s0 * s1 * s2).num());
  return F;
}

bool TauReport::pass() const {
  auto all = [](const std::array<bool, 3>& a) { return std::all_of(a.begin(), a.end(), [](bool b) { return b; }); };
  return all(matches_display) && closed && all(exact) && F_symmetric && all(bracket_zero);
}

bool TauReport::pass_negated() const {
  auto all = [](const std::array<bool, 3>& a) { return std::all_of(a.begin(), a.end(), [](bool b) { return b; }); };
  return all(matches_negated_display) && closed && all(exact_negated) && F_symmetric && all(bracket_zero);
}

TauReport verify_tau(const Branch& branch, bool with_bracket) {
  const auto start = std::chrono::steady_clock::now();
  TauReport rep;
  rep.branch = branch;
  rep.varpi = build_varpi(branch);
  const OneFormS disp = displayed_varpi();
  for (int i = 0; i < 3; ++i) {
    rep.matches_display[i] = rep.varpi.a[i] == disp.a[i];
    rep.matches_negated_display[i] = rep.varpi.a[i] == -disp.a[i];
  }
  rep.closed = check_closed(rep.varpi);
  const LogRatFunc F = potential_F();
  for (int i = 0; i < 3; ++i) {
    const RatFunc dF = F.diff(std::size_t(i));
    rep.exact[i] = dF == rep.varpi.a[i];
    rep.exact_negated[i] = dF == -rep.varpi.a[i];
  }
  // The log part ln(s0 s1 s2) is symmetric; check the rational part under the generators of S3.
  rep.F_symmetric = true;
  for (const auto& perm : {std::array<std::size_t, 3>{1, 0, 2}, std::array<std::size_t, 3>{1, 2, 0}})
    rep.F_symmetric = rep.F_symmetric && F.rational.permute(perm) == F.rational;
  if (with_bracket) {
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int k = 0; k < 3; ++k) rep.bracket_zero[k] = restricted_bracket(pairs[k][0], pairs[k][1], branch).is_zero();
  } else {
    rep.bracket_zero = {true, true, true};
  }
  rep.seconds = seconds_since(start);
  return rep;
}

Real tau_exponent(const STriple& s) {
  for (const auto& v : s)
    if (v <= 0) throw DomainError("tau_exponent: s_i must be positive");
  const LogRatFunc F = potential_F();
  Real out = to_real(F.rational.eval(s));
  for (const auto& [c, u] : F.logs) out += to_real(c) * boost::multiprecision::log(to_real(u.eval(s)));
  return out;
}

}  // namespace garnier
