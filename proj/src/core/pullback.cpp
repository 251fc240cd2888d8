#include "garnier/pullback.hpp"

#include <chrono>

#include "garnier/algebra/errors.hpp"
#include "garnier/algebra/serialize.hpp"
#include "garnier/algebra/symmetric.hpp"

namespace garnier {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

RatFunc xs_var(const char* name) { return RatFunc::variable(xs_ring(), name); }
RatFunc xs_k(const Scalar& c) { return RatFunc::constant(xs_ring(), c); }

// Exact values of s live in xs_ring() as constants.
std::array<RatFunc, 3> s_values(const STriple& s) { return {xs_k(s[0]), xs_k(s[1]), xs_k(s[2])}; }
std::array<RatFunc, 3> s_symbols() { return {xs_var("s0"), xs_var("s1"), xs_var("s2")}; }

RatFunc phi_from(const std::array<RatFunc, 3>& s) {
  const RatFunc x = xs_var("x"), one = xs_k(1);
  const RatFunc inner = s[2] * x * (x - one) + s[1] * x + s[0] * (one - x);
  return inner.pow(3) * x.pow(-2) * (x - one).pow(-2);
}

RatFunc cubic_from(const std::array<RatFunc, 3>& s) {
  const RatFunc x = xs_var("x");
  auto k = [](long c) { return xs_k(Scalar(c)); };
  return x.pow(3) + (s[0] - s[1] - k(3) * s[2]) / (k(2) * s[2]) * x.pow(2) +
         (-k(3) * s[0] - s[1] + s[2]) / (k(2) * s[2]) * x + s[0] / s[2];
}

ConnectionMatrix display_from(const std::array<RatFunc, 3>& s, DisplayReading reading) {
  const RatFunc x = xs_var("x"), one = xs_k(1), third = xs_k(make_scalar(1, 3));
  const RatFunc Q = cubic_from(s);
  const RatFunc frame = x.pow(-2) * (x - one).pow(-2);
  const RatFunc lead = reading == DisplayReading::Rescaled ? s[2].pow(2) : s[2];
  const RatFunc c2 = xs_k(4) * lead * (s[2] * x.pow(2) - (s[0] - s[1] + s[2]) * x + s[0]) * Q.pow(2) * frame;
  // The display's sum has no dependence on its index; read as the single term Q'/Q.
  const RatFunc d2 = -third * x.inverse() - third * (x - one).inverse() - Q.diff(std::size_t(0)) / Q;
  return ConnectionMatrix{{xs_k(0), frame, c2, d2}, Chart::X};
}

std::optional<Scalar> rational_sqrt(const Scalar& v) {
  if (v < 0) return std::nullopt;
  Integer n = v.get_num(), d = v.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Scalar(rn, rd);
}

const RelRingPtr& xs_relring() {
  static const RelRingPtr ring = RelRing::make(xs_ring());
  return ring;
}

// A function of (x, t, q) symmetric in q, evaluated on the locus of the
// algebraic solution: q -> roots of Q(x; s), t_i -> sign_i t_i with t_i^2 = s_i^3.
RelRingElem on_locus(const RatFunc& f, const Branch& branch) {
  const VarSetPtr sig = sigma_ring(connection_ring());
  const RatFunc g = symmetric_reduce(f, sig);
  static const VarSetPtr dst = VarSet::make({"x", "s0", "s1", "s2", "t0", "t1", "t2"});
  const SigmaPoint sp = sigma_from_s();
  std::vector<RatFunc> img(sig->size());
  img[conn::x] = RatFunc::variable(dst, "x");
  for (int i = 0; i < 3; ++i) {
    img[conn::t(i)] = RatFunc::variable(dst, dst->index("t" + std::to_string(i))) * Scalar(branch.sign[i]);
    img[conn::p(i)] = RatFunc(dst);
  }
  img[conn::q(0)] = sp.sigma1.rebase(dst);
  img[conn::q(1)] = sp.sigma2.rebase(dst);
  img[conn::q(2)] = sp.sigma3.rebase(dst);
  return rel_reduce(g.compose(img, dst), xs_relring());
}

}  // namespace

ScalarODE fixed_system(const VarSetPtr& vars) {
  const RatFunc z = RatFunc::variable(vars, std::size_t(0));
  return ScalarODE{RatFunc::constant(vars, make_scalar(2, 3)) / z, -z.inverse()};
}

RatFunc cover_phi() { return phi_from(s_symbols()); }

RatFunc cover_phi(const STriple& s) {
  if (s[2] == 0) throw DomainError("cover_phi: s2 must be nonzero");
  return phi_from(s_values(s));
}

ScalarODE pullback_ode(const RatFunc& phi) {
  const RatFunc d1 = phi.diff(std::size_t(0));
  if (d1.is_zero()) throw DomainError("pullback_ode: constant cover");
  const RatFunc d2 = d1.diff(std::size_t(0));
  const VarSetPtr& V = phi.vars();
  const RatFunc P = RatFunc::constant(V, make_scalar(2, 3)) / phi * d1 - d2 / d1;
  const RatFunc Qc = -(d1.pow(2) / phi);
  return ScalarODE{P, Qc};
}

RatFunc ode_invariant(const ScalarODE& o) {
  const VarSetPtr& V = o.P.vars() ? o.P.vars() : o.Qc.vars();
  const RatFunc half = RatFunc::constant(V, make_scalar(1, 2)), quarter = RatFunc::constant(V, make_scalar(1, 4));
  return o.Qc - half * o.P.diff(std::size_t(0)) - quarter * o.P.pow(2);
}

ScalarODE gauge(const ScalarODE& o, const RatFunc& g) {
  // y = g v: v'' + (P + 2 g'/g) v' + (Qc + P g'/g + g''/g) v = 0.
  const RatFunc g1 = g.diff(std::size_t(0)), g2 = g1.diff(std::size_t(0));
  const RatFunc two = RatFunc::constant(g.vars(), Scalar(2));
  return ScalarODE{o.P + two * g1 / g, o.Qc + o.P * g1 / g + g2 / g};
}

ConnectionMatrix pulled_back_display(DisplayReading reading) { return display_from(s_symbols(), reading); }

ConnectionMatrix pulled_back_display(const STriple& s, DisplayReading reading) {
  if (s[2] == 0) throw DomainError("pulled_back_display: s2 must be nonzero");
  return display_from(s_values(s), reading);
}

PullbackReport verify_pullback_exact(const STriple& s, const Branch& branch) {
  const auto start = std::chrono::steady_clock::now();
  PullbackReport rep;
  rep.mode = "exact";
  rep.branch = branch;
  const auto roots = rational_roots(cubic_at(s));
  if (roots.size() != 3 || roots[0] == roots[1] || roots[1] == roots[2])
    throw DomainError("verify_pullback_exact: the cubic needs three distinct rational roots");
  std::array<Scalar, 3> t;
  for (int i = 0; i < 3; ++i) {
    auto r = rational_sqrt(s[i]);
    if (!r) throw DomainError("verify_pullback_exact: s_i^(3/2) is not rational");
    t[i] = Scalar(branch.sign[i]) * *r * *r * *r;
  }
  const ConnectionParams prm = ConnectionParams::exact(t, {roots[0], roots[1], roots[2]}, {0, 0, 0});
  const ScalarODE fam = scalar_form(build_connection(prm));
  const ScalarODE pull = pullback_ode(cover_phi(s));
  const RatFunc Ip = ode_invariant(pull);
  const RatFunc dfam = ode_invariant(fam).rebase(xs_ring()) - Ip;
  rep.family_zero = dfam.is_zero();
  if (!rep.family_zero) rep.witness = to_canonical_text(dfam);
  rep.display_literal_zero = ode_invariant(scalar_form(pulled_back_display(s))) == Ip;
  rep.display_rescaled_zero = ode_invariant(scalar_form(pulled_back_display(s, DisplayReading::Rescaled))) == Ip;
  rep.gauge_log_derivative = (fam.P.rebase(xs_ring()) - pull.P) * make_scalar(1, 2);
  rep.seconds = seconds_since(start);
  return rep;
}

PullbackReport verify_pullback_symbolic(const Branch& branch) {
  const auto start = std::chrono::steady_clock::now();
  PullbackReport rep;
  rep.mode = "symbolic";
  rep.branch = branch;
  ConnectionParams prm = ConnectionParams::symbolic();
  for (auto& p : prm.p) p = RatFunc(connection_ring());
  const ScalarODE fam = scalar_form(build_connection(prm));
  const ScalarODE pull = pullback_ode(cover_phi());
  const RatFunc Ip = ode_invariant(pull);
  const RelRingElem Ifam = on_locus(ode_invariant(fam), branch);
  const RelRingElem dfam = Ifam - RelRingElem(xs_relring(), Ip);
  rep.family_zero = dfam.is_zero();
  if (!rep.family_zero) rep.witness = dfam.to_string();
  rep.display_literal_zero = ode_invariant(scalar_form(pulled_back_display())) == Ip;
  rep.display_rescaled_zero = ode_invariant(scalar_form(pulled_back_display(DisplayReading::Rescaled))) == Ip;
  const RelRingElem Pfam = on_locus(fam.P, branch);
  rep.gauge_log_derivative = (Pfam.scalar() - pull.P) * make_scalar(1, 2);
  rep.seconds = seconds_since(start);
  return rep;
}

}  // namespace garnier
