#include "garnier/connection.hpp"

#include <stdexcept>

#include "garnier/algebra/errors.hpp"
#include "garnier/hamiltonian.hpp"

namespace garnier {

const VarSetPtr& connection_ring() {
  static const VarSetPtr ring = VarSet::make({"x", "t0", "t1", "t2", "q1", "q2", "q3", "p1", "p2", "p3"});
  return ring;
}

namespace {

RatFunc var(std::size_t i) { return RatFunc::variable(connection_ring(), i); }
RatFunc k(long n, long d = 1) { return RatFunc::constant(connection_ring(), make_scalar(n, d)); }
RatFunc kq(const Scalar& c) { return RatFunc::constant(connection_ring(), c); }

struct M2 {
  RatFunc a, b, c, d;
};

M2 operator*(const M2& x, const M2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}
M2 operator+(const M2& x, const M2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
M2 operator-(const M2& x, const M2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
M2 scale(const M2& x, const RatFunc& s) { return {x.a * s, x.b * s, x.c * s, x.d * s}; }
M2 zero2() { return {k(0), k(0), k(0), k(0)}; }

}  // namespace

ConnectionParams ConnectionParams::symbolic() {
  ConnectionParams prm;
  for (int i = 0; i < 3; ++i) {
    prm.t[i] = var(conn::t(i));
    prm.q[i] = var(conn::q(i));
    prm.p[i] = var(conn::p(i));
  }
  return prm;
}

ConnectionParams ConnectionParams::exact(const std::array<Scalar, 3>& t, const std::array<Scalar, 3>& q,
                                         const std::array<Scalar, 3>& p) {
  for (int j = 0; j < 3; ++j) {
    if (q[j] == 0 || q[j] == 1) throw DomainError("q_j must avoid 0 and 1");
    for (int l = j + 1; l < 3; ++l)
      if (q[j] == q[l]) throw DomainError("q_j must be pairwise distinct");
  }
  ConnectionParams prm;
  for (int i = 0; i < 3; ++i) {
    prm.t[i] = kq(t[i]);
    prm.q[i] = kq(q[i]);
    prm.p[i] = kq(p[i]);
  }
  return prm;
}

ConnectionData connection_data(const ConnectionParams& prm, const std::array<Scalar, 3>& ctilde_shift) {
  const RatFunc x = var(conn::x);
  const auto &t = prm.t, &q = prm.q, &p = prm.p;
  ConnectionData d;
  d.C0 = k(4) * t[0].pow(2) * (k(1) - k(2) * x);
  d.C1 = k(4) * t[1].pow(2) * (k(2) * x - k(1));
  d.Cinf = k(4) * t[2].pow(2) * (x - k(2));
  d.D0 = -x * k(1, 3);
  d.D1 = -(x - k(1)) * k(1, 3);
  d.Dinf = k(0);
  for (int j = 0; j < 3; ++j) {
    const RatFunc& qj = q[j];
    const RatFunc qj1 = qj - k(1);
    RatFunc inner = p[j].pow(2) * qj.pow(-2) * qj1.pow(-2) +
                    (qj * p[j] + k(12) * t[0].pow(2) * (k(2) * qj - k(1))) * k(1, 3) * qj.pow(-2) +
                    (qj1 * p[j] - k(12) * t[1].pow(2) * (k(2) * qj - k(1))) * k(1, 3) * qj1.pow(-2) -
                    k(4) * t[2].pow(2) * qj.pow(3) * (qj - k(2));
    RatFunc qprime_inv = k(1);
    for (int l = 0; l < 3; ++l) {
      if (l == j) continue;
      const RatFunc gap_inv = (qj - q[l]).inverse();
      inner += (p[j] - p[l]) * gap_inv;
      qprime_inv *= gap_inv;
    }
    d.Ctilde[j] = inner * qprime_inv + kq(ctilde_shift[j]);
  }
  const RatFunc xinv = x.inverse(), x1inv = (x - k(1)).inverse();
  d.c2 = d.C0 * xinv.pow(2) + d.C1 * x1inv.pow(2) + x.pow(3) * d.Cinf;
  d.d2 = d.D0 * xinv.pow(2) + d.D1 * x1inv.pow(2) + d.Dinf;
  for (int j = 0; j < 3; ++j) {
    const RatFunc pole = (x - q[j]).inverse();
    d.c2 += p[j] * pole;
    // The apparent-pole sum runs over all three q_j.
    d.d2 -= pole;
    RatFunc others = k(1);
    for (int l = 0; l < 3; ++l)
      if (l != j) others *= x - q[l];
    d.c2 += d.Ctilde[j] * others;
  }
  d.f = xinv.pow(2) * x1inv.pow(2);
  return d;
}

ConnectionMatrix build_connection(const ConnectionParams& prm, const std::array<Scalar, 3>& ctilde_shift) {
  const ConnectionData d = connection_data(prm, ctilde_shift);
  return ConnectionMatrix{{k(0), d.f, d.c2, d.d2}, Chart::X};
}

ScalarForm scalar_form(const ConnectionMatrix& c) {
  const RatFunc& f = c(0, 1);
  if (f.is_zero()) throw DomainError("scalar_form: (1,2) entry vanishes");
  const std::size_t xv = conn::x;
  return ScalarForm{c(1, 1) - f.diff(xv) / f, -(c(1, 0) * f)};
}

ApparentReport check_apparent(const ConnectionMatrix& c, const ConnectionParams& prm, int j) {
  if (j < 0 || j > 2) throw std::invalid_argument("check_apparent: j must be 0, 1 or 2");
  for (int l = 0; l < 3; ++l)
    if (l != j && (prm.q[l] - prm.q[j]).is_zero()) throw DomainError("check_apparent: q_j collides with another q");
  const ScalarForm sf = scalar_form(c);
  const RatFunc shift = var(conn::x) + prm.q[j];
  const Laurent P = Laurent::expand(sf.P.substitute(conn::x, shift), conn::x, 1);
  const Laurent Qc = Laurent::expand(sf.Qc.substitute(conn::x, shift), conn::x, 0);
  if (P.valuation() != -1) throw DomainError("check_apparent: q_j is not a simple pole of P");
  ApparentReport rep;
  rep.j = j;
  rep.indicial_ok = Qc.valuation() >= -1 && P.coeff(-1) == k(-1);
  // u P = sum Ph_n u^n, u^2 Qc = sum Rh_n u^n. With Ph_0 = -1, Rh_0 = 0 the
  // exponent-0 series y = 1 + Rh_1 u + a_2 u^2 + ... exists iff
  // Rh_2 + (Ph_1 + Rh_1) Rh_1 = 0.
  const RatFunc Ph1 = P.coeff(0), Rh1 = Qc.coeff(-1), Rh2 = Qc.coeff(0);
  rep.obstruction = Rh2 + (Ph1 + Rh1) * Rh1;
  rep.log_free = rep.obstruction.is_zero();
  return rep;
}

FormalData formal_diagonalize(const ConnectionMatrix& c, const ConnectionParams& prm, Point point, int K) {
  if (K < 2) throw std::invalid_argument("formal_diagonalize: K must be at least 2");
  const RatFunc x = var(conn::x);
  M2 A{c(0, 0), c(0, 1), c(1, 0), c(1, 1)};
  RatFunc t;
  int sgn = 1;
  switch (point) {
    case Point::Zero:
      t = prm.t[0];
      break;
    case Point::One: {
      t = prm.t[1];
      const RatFunc s = x + k(1);
      A = {A.a.substitute(conn::x, s), A.b.substitute(conn::x, s), A.c.substitute(conn::x, s), A.d.substitute(conn::x, s)};
      break;
    }
    case Point::Infinity: {
      t = prm.t[2];
      sgn = -1;
      // Gauge diag(1, x^4), then w = 1/x (stored in the x slot).
      const RatFunc x4 = x.pow(4);
      M2 At{A.a, A.b * x4, A.c / x4, A.d + k(4) / x};
      const RatFunc winv = x.inverse(), jac = -(winv.pow(2));
      A = {At.a.substitute(conn::x, winv) * jac, At.b.substitute(conn::x, winv) * jac,
           At.c.substitute(conn::x, winv) * jac, At.d.substitute(conn::x, winv) * jac};
      break;
    }
  }
  if (t.is_zero()) throw DomainError("formal_diagonalize: vanishing eigenvalue gap (t = 0)");
  const RatFunc a = k(sgn) / (k(2) * t);
  const M2 Phi{a, -a, k(1), k(1)};
  const M2 PhiInv = scale(M2{k(1), a, k(-1), a}, (k(2) * a).inverse());
  const M2 Ap = PhiInv * A * Phi;

  const int top = K - 2;
  std::array<Laurent, 4> L = {Laurent::expand(Ap.a, conn::x, top), Laurent::expand(Ap.b, conn::x, top),
                              Laurent::expand(Ap.c, conn::x, top), Laurent::expand(Ap.d, conn::x, top)};
  for (const auto& e : L)
    if (e.low() < -2 && e.valuation() < -2) throw DomainError("formal_diagonalize: pole order exceeds 2");
  auto coeff = [&](int m) { return M2{L[0].coeff(m), L[1].coeff(m), L[2].coeff(m), L[3].coeff(m)}; };

  const M2 lam = coeff(-2);
  if (!lam.b.is_zero() || !lam.c.is_zero()) throw std::logic_error("formal_diagonalize: framing does not diagonalize the leading term");
  const RatFunc gap = lam.a - lam.d;
  if (gap.is_zero()) throw DomainError("formal_diagonalize: vanishing eigenvalue gap");
  const RatFunc gap_inv = gap.inverse();

  // B_m diagonal, Xi_k with zero diagonal; index offsets B[m + 2], Xi[k].
  std::vector<M2> B(std::size_t(top + 3), zero2()), Xi(std::size_t(K + 1), zero2());
  B[0] = lam;
  Xi[0] = M2{k(1), k(0), k(0), k(1)};
  for (int m = -1; m <= top; ++m) {
    M2 R = coeff(m);
    for (int kk = 1; kk <= m + 1; ++kk) R = R + coeff(m - kk) * Xi[std::size_t(kk)] - Xi[std::size_t(kk)] * B[std::size_t(m - kk + 2)];
    if (m + 1 >= 1) R = R + scale(Xi[std::size_t(m + 1)], k(m + 1));
    B[std::size_t(m + 2)] = M2{R.a, k(0), k(0), R.d};
    Xi[std::size_t(m + 2)] = M2{k(0), -(R.b * gap_inv), R.c * gap_inv, k(0)};
  }

  FormalData fd;
  fd.point = point;
  fd.order = K;
  fd.leading = {B[0].a, B[0].d};
  fd.residue = {B[1].a, B[1].d};
  fd.theta_plus = B[2].a;
  fd.theta_minus = B[2].d;
  for (const auto& b : B) fd.diagonal.push_back({b.a, b.d});
  return fd;
}

RatFunc p_of_eta(int j) {
  const RatFunc q = phase::var(phase::q(j)), e = phase::var(phase::eta(j));
  const RatFunc one = phase::constant(Scalar(1)), third = phase::constant(make_scalar(1, 3));
  const RatFunc q1 = q - one;
  return q.pow(2) * q1.pow(2) * (e - third * q.inverse() - third * q1.inverse());
}

DerivedHamiltonian derive_hamiltonian_from_connection(int i, const PitOptions& opt) {
  if (i < 0 || i > 2) throw std::invalid_argument("Hamiltonian index must be 0, 1 or 2");
  const ConnectionParams prm = ConnectionParams::symbolic();
  const ConnectionMatrix c = build_connection(prm);
  const Point pt = i == 0 ? Point::Zero : (i == 1 ? Point::One : Point::Infinity);
  const FormalData fd = formal_diagonalize(c, prm, pt, 3);
  const RatFunc h = k(2) * fd.theta_minus - k(2) * fd.theta_plus;

  std::vector<RatFunc> img(connection_ring()->size());
  img[conn::x] = RatFunc(phase_ring());
  for (int l = 0; l < 3; ++l) {
    img[conn::t(l)] = phase::var(phase::t(l));
    img[conn::q(l)] = phase::var(phase::q(l));
    img[conn::p(l)] = p_of_eta(l);
  }
  DerivedHamiltonian out;
  out.index = i;
  out.derived = h.compose(img, phase_ring());
  out.pit = pit_zero(Expr(out.derived) - Expr(hamiltonian(i)), opt);
  out.exact_equal = out.derived == hamiltonian(i);
  return out;
}

}  // namespace garnier
