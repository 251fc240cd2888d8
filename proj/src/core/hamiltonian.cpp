#include "garnier/hamiltonian.hpp"

#include <chrono>
#include <mutex>
#include <stdexcept>

namespace garnier {

const VarSetPtr& phase_ring() {
  static const VarSetPtr ring = VarSet::make({"t0", "t1", "t2", "q1", "q2", "q3", "eta1", "eta2", "eta3"});
  return ring;
}

namespace phase {

RatFunc var(std::size_t index) { return RatFunc::variable(phase_ring(), index); }
RatFunc constant(const Scalar& c) { return RatFunc::constant(phase_ring(), c); }

RatFunc qprime(int j) {
  RatFunc r = constant(Scalar(1));
  for (int k = 0; k < 3; ++k)
    if (k != j) r *= var(q(j)) - var(q(k));
  return r;
}

}  // namespace phase

namespace {

void check_index(int i) {
  if (i < 0 || i > 2) throw std::invalid_argument("Hamiltonian index must be 0, 1 or 2");
}

RatFunc k(long n, long d = 1) { return phase::constant(make_scalar(n, d)); }

// Denominators are assembled from linear factors so that every base of the
// factored denominator stays irreducible.
struct Sym {
  RatFunc t[3], q[3], e[3], qp_inv[3];
  RatFunc s1, s2, s3, prod_qm1, inv_s3, inv_prod_qm1;
  Sym() {
    for (int i = 0; i < 3; ++i) {
      t[i] = phase::var(phase::t(i));
      q[i] = phase::var(phase::q(i));
      e[i] = phase::var(phase::eta(i));
    }
    for (int j = 0; j < 3; ++j) {
      qp_inv[j] = k(1);
      for (int l = 0; l < 3; ++l)
        if (l != j) qp_inv[j] *= (q[j] - q[l]).inverse();
    }
    s1 = q[0] + q[1] + q[2];
    s2 = q[0] * q[1] + q[1] * q[2] + q[0] * q[2];
    s3 = q[0] * q[1] * q[2];
    prod_qm1 = (q[0] - k(1)) * (q[1] - k(1)) * (q[2] - k(1));
    inv_s3 = q[0].inverse() * q[1].inverse() * q[2].inverse();
    inv_prod_qm1 = (q[0] - k(1)).inverse() * (q[1] - k(1)).inverse() * (q[2] - k(1)).inverse();
  }
};

// Display subscripts t_1, t_2, t_3 are t0, t1, t2 here.
RatFunc build_h0(const Sym& S) {
  const auto &t0 = S.t[0], &t1 = S.t[1], &t2 = S.t[2];
  const auto &s1 = S.s1, &s2 = S.s2, &s3 = S.s3;
  RatFunc kinetic = k(0);
  for (int j = 0; j < 3; ++j) {
    const RatFunc& q = S.q[j];
    kinetic += q * (q - k(1)).pow(2) * S.qp_inv[j] * S.e[j].pow(2) -
               (k(5) * q * q - k(9) * q + k(4)) * S.qp_inv[j] * k(1, 3) * S.e[j];
  }
  RatFunc h = -(s3 / t0) * kinetic;
  for (int j = 0; j < 3; ++j) h += k(4) * t0 / S.q[j].pow(2);
  h += (k(144) * t0 * t0 + k(144) * t1 * t1 - k(13)) / (k(36) * t0);
  h += k(4) * t2 * t2 * s3 * (s1 - k(2)) / t0;
  h -= k(4) * t0 * (k(2) * s2 - s1) * S.inv_s3;
  RatFunc poly = s1 * s1 - k(2) * s1 * s2 + k(3) * s1 * s3 + s2 * s2 - k(2) * s2 * s3 - k(2) * s1 + k(2) * s2 -
                 k(4) * s3 + k(1);
  h -= k(4) * t1 * t1 * poly * S.inv_prod_qm1.pow(2) / t0;
  return h;
}

RatFunc build_h1(const Sym& S) {
  const auto &t0 = S.t[0], &t1 = S.t[1], &t2 = S.t[2];
  const auto &s1 = S.s1, &s2 = S.s2, &s3 = S.s3;
  RatFunc kinetic = k(0);
  for (int j = 0; j < 3; ++j) {
    const RatFunc& q = S.q[j];
    kinetic += q * q * (q - k(1)) * S.qp_inv[j] * S.e[j].pow(2) -
               q * (k(5) * q - k(1)) * S.qp_inv[j] * k(1, 3) * S.e[j];
  }
  RatFunc h = -(S.prod_qm1 / t1) * kinetic;
  for (int j = 0; j < 3; ++j) h += k(4) * t1 / (S.q[j] - k(1)).pow(2);
  h += (k(144) * t0 * t0 + k(144) * t1 * t1 - k(13)) / (k(36) * t1);
  h += k(4) * t2 * t2 * (s1 - s2 + s3 - k(1)) * (s1 - k(1)) / t1;
  h += k(4) * t1 * (k(2) * s2 - k(3) * s1 + k(3)) * S.inv_prod_qm1;
  RatFunc poly = s1 * s2 - s1 * s3 - s2 * s2 + k(2) * s2 * s3 - s2 + s3;
  h -= k(4) * t0 * t0 * poly * S.inv_s3.pow(2) / t1;
  return h;
}

RatFunc build_h2(const Sym& S) {
  const auto &t0 = S.t[0], &t1 = S.t[1], &t2 = S.t[2];
  const auto &s1 = S.s1, &s2 = S.s2, &s3 = S.s3;
  RatFunc kinetic = k(0);
  for (int j = 0; j < 3; ++j) {
    const RatFunc& q = S.q[j];
    kinetic += q * q * (q - k(1)).pow(2) * S.qp_inv[j] * S.e[j].pow(2) -
               q * (k(2) * q * q - k(3) * q + k(1)) * S.qp_inv[j] * k(1, 3) * S.e[j];
  }
  RatFunc h = -kinetic / t2;
  h += k(4) * t2 * (s1 * s1 - k(2) * s1 - s2 + k(1));
  h -= k(1) / (k(36) * t2);
  h -= k(4) * t0 * t0 * (k(2) * s3 - s2) * S.inv_s3.pow(2) / t2;
  h += k(4) * t1 * t1 * (k(2) * s3 - s2 + k(1)) * S.inv_prod_qm1.pow(2) / t2;
  return h;
}

}  // namespace

Hamiltonian build_hamiltonian(int i) {
  check_index(i);
  Sym S;
  switch (i) {
    case 0: return {0, build_h0(S)};
    case 1: return {1, build_h1(S)};
    default: return {2, build_h2(S)};
  }
}

const RatFunc& hamiltonian(int i) {
  check_index(i);
  static std::once_flag once[3];
  static RatFunc cache[3];
  std::call_once(once[i], [i] { cache[i] = build_hamiltonian(i).expr; });
  return cache[i];
}

RatFunc poisson(const RatFunc& f, const RatFunc& g) {
  RatFunc r(phase_ring());
  for (int k = 0; k < 3; ++k) {
    const std::size_t q = phase::q(k), e = phase::eta(k);
    r += f.diff(q) * g.diff(e) - g.diff(q) * f.diff(e);
  }
  return r;
}

Expr compatibility_expr(int i, int j) {
  check_index(i);
  check_index(j);
  const RatFunc& hi = hamiltonian(i);
  const RatFunc& hj = hamiltonian(j);
  Expr e = Expr(hi.diff(phase::t(j))) - Expr(hj.diff(phase::t(i)));
  for (int k = 0; k < 3; ++k) {
    const std::size_t q = phase::q(k), p = phase::eta(k);
    e = e + (Expr(hi.diff(q)) * Expr(hj.diff(p)) - Expr(hj.diff(q)) * Expr(hi.diff(p)));
  }
  return e;
}

CompatibilityReport check_compatibility(int i, int j, CheckMode mode, const PitOptions& opt) {
  check_index(i);
  check_index(j);
  if (i == j) throw std::invalid_argument("check_compatibility requires i != j");
  const auto start = std::chrono::steady_clock::now();
  CompatibilityReport rep;
  rep.i = i;
  rep.j = j;
  rep.mode = mode;
  if (mode == CheckMode::Pit) {
    rep.pit = pit_zero(compatibility_expr(i, j), opt);
    rep.zero = rep.pit->zero;
  } else {
    const RatFunc& hi = hamiltonian(i);
    const RatFunc& hj = hamiltonian(j);
    RatFunc r = hi.diff(phase::t(j)) - hj.diff(phase::t(i)) + poisson(hi, hj);
    rep.zero = r.is_zero();
    if (!rep.zero) rep.residual = r;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<RatFunc> vector_field(int i) {
  const RatFunc& h = hamiltonian(i);
  std::vector<RatFunc> out;
  out.reserve(6);
  for (int j = 0; j < 3; ++j) out.push_back(h.diff(phase::eta(j)));
  for (int j = 0; j < 3; ++j) out.push_back(-h.diff(phase::q(j)));
  return out;
}

}  // namespace garnier
