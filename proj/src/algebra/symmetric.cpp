#include "garnier/algebra/symmetric.hpp"

#include <vector>

#include "garnier/algebra/errors.hpp"

namespace garnier {

namespace {

struct Work {
  VarSetPtr ring;
  std::array<std::size_t, 3> q{}, s{};
  MultiPoly q3_image, m2, m1;
};

Work make_work(const VarSetPtr& src, const SymmetricNames& names) {
  std::vector<std::string> all = src->names();
  for (const auto& n : names.sigma)
    if (!src->find(n)) all.push_back(n);
  Work w;
  w.ring = VarSet::make(std::move(all));
  for (int i = 0; i < 3; ++i) {
    w.q[i] = w.ring->index(names.q[i]);
    w.s[i] = w.ring->index(names.sigma[i]);
  }
  auto v = [&](std::size_t i) { return MultiPoly::variable(w.ring, i); };
  MultiPoly q1 = v(w.q[0]), q2 = v(w.q[1]), s1 = v(w.s[0]), s2 = v(w.s[1]), s3 = v(w.s[2]);
  w.q3_image = s1 - q1 - q2;
  // (P(x) - P(q1)) / (x - q1) at x = q2, with P = x^3 - s1 x^2 + s2 x - s3.
  w.m2 = q2 * q2 + (q1 - s1) * q2 + (q1 * q1 - s1 * q1 + s2);
  w.m1 = q1 * q1 * q1 - s1 * q1 * q1 + s2 * q1 - s3;
  return w;
}

MultiPoly reduce_in(const Work& w, const MultiPoly& p0) {
  MultiPoly p = p0.rebase(w.ring);
  auto red = [&](MultiPoly a) {
    if (a.degree(w.q[1]) >= 2) a = a.rem_monic(w.m2, w.q[1]);
    if (a.degree(w.q[0]) >= 3) a = a.rem_monic(w.m1, w.q[0]);
    return a;
  };
  auto coeffs = p.coefficients(w.q[2]);
  MultiPoly acc(w.ring);
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = red(acc * w.q3_image + red(coeffs[k]));
  if (acc.degree(w.q[0]) || acc.degree(w.q[1])) throw DomainError("expression is not symmetric in the permuted variables");
  return acc;
}

std::vector<std::size_t> transposition(std::size_t n, std::size_t a, std::size_t b) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::swap(p[a], p[b]);
  return p;
}

}  // namespace

VarSetPtr sigma_ring(const VarSetPtr& src, const SymmetricNames& names) {
  std::vector<std::string> all = src->names();
  for (int i = 0; i < 3; ++i) all[src->index(names.q[i])] = names.sigma[i];
  return VarSet::make(std::move(all));
}

MultiPoly symmetric_reduce(const MultiPoly& p, const VarSetPtr& target, const SymmetricNames& names) {
  Work w = make_work(p.vars(), names);
  return reduce_in(w, p).rebase(target);
}

RatFunc symmetric_reduce(const RatFunc& r0, const VarSetPtr& target, const SymmetricNames& names) {
  const RatFunc r = r0.normalized();
  const VarSetPtr& src = r.vars();
  Work w = make_work(src, names);
  const std::size_t n = src->size();
  std::array<std::size_t, 3> q{};
  for (int i = 0; i < 3; ++i) q[i] = src->index(names.q[i]);
  const auto t01 = transposition(n, q[0], q[1]);
  const auto t12 = transposition(n, q[1], q[2]);
  // All six permutations of (q1, q2, q3), as products of two transpositions.
  std::vector<std::vector<std::size_t>> perms;
  {
    std::vector<std::size_t> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = i;
    auto compose = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = a[b[i]];
      return c;
    };
    perms = {id, t01, t12, compose(t01, t12), compose(t12, t01), compose(t01, compose(t12, t01))};
  }

  struct Orbit {
    std::vector<MultiPoly> members;
    unsigned exp = 0;
  };
  std::vector<Orbit> orbits;
  std::vector<std::pair<MultiPoly, int>> extra;  // multiplies the numerator
  for (const auto& f : r.den_factors()) {
    bool found = false;
    for (auto& o : orbits)
      for (const auto& m : o.members)
        if (m == f.base) {
          o.exp = std::max(o.exp, f.exp);
          found = true;
        }
    if (found) continue;
    Orbit o;
    o.exp = f.exp;
    for (const auto& p : perms) {
      MultiPoly img = f.base.permute(p).monic();
      bool dup = false;
      for (const auto& m : o.members) dup = dup || m == img;
      if (!dup) o.members.push_back(std::move(img));
    }
    orbits.push_back(std::move(o));
  }

  // Numerator: r * (symmetric denominator) = num * prod(orbit members not in r's den).
  MultiPoly num = r.num();
  std::vector<std::pair<MultiPoly, int>> den_parts;
  const MultiPoly vandermonde = [&] {
    auto v = [&](int i) { return MultiPoly::variable(src, q[i]); };
    return (v(0) - v(1)) * (v(0) - v(2)) * (v(1) - v(2));
  }();
  for (const auto& o : orbits) {
    MultiPoly prod = MultiPoly::constant(src, Scalar(1));
    for (const auto& m : o.members) {
      prod = prod * m.pow(o.exp);
      unsigned have = 0;
      for (const auto& f : r.den_factors())
        if (f.base == m) have = f.exp;
      if (o.exp > have) num = num * m.pow(o.exp - have);
    }
    MultiPoly s01 = prod.permute(t01), s12 = prod.permute(t12);
    if (!(s01 == prod && s12 == prod)) {
      if (s01 == -prod && s12 == -prod) {
        prod = prod * vandermonde;
        num = num * vandermonde;
      } else {
        throw DomainError("denominator orbit is not symmetric up to sign");
      }
    }
    den_parts.emplace_back(reduce_in(w, prod).rebase(target), 1);
  }
  MultiPoly top = reduce_in(w, num).rebase(target);
  return RatFunc::from_factors(std::move(top), den_parts);
}

}  // namespace garnier
