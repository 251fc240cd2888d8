#include "garnier/algebra/properties.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "garnier/algebra/errors.hpp"
#include "garnier/algebra/gcd.hpp"
#include "garnier/algebra/relring.hpp"

namespace garnier {

unsigned PropertyReport::cases() const {
  unsigned n = 0;
  for (const auto& p : properties) n += p.cases;
  return n;
}

unsigned PropertyReport::failures() const {
  unsigned n = 0;
  for (const auto& p : properties) n += p.failures;
  return n;
}

namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Scalar scalar() {
    Scalar q(integer(-9, 9), integer(1, 5));
    q.canonicalize();
    return q;
  }

  Scalar nonzero_scalar() {
    Scalar q;
    do q = scalar();
    while (q == 0);
    return q;
  }

  // Up to `terms` terms of total degree <= deg.
  MultiPoly poly(const VarSetPtr& v, int terms = 3, int deg = 2) {
    MultiPoly p(v);
    const int n = int(integer(1, terms));
    for (int k = 0; k < n; ++k) {
      Monomial m;
      int left = int(integer(0, deg));
      while (left-- > 0) ++m.exp[std::size_t(integer(0, long(v->size()) - 1))];
      p += MultiPoly::monomial(v, m, scalar());
    }
    return p;
  }

  MultiPoly nonzero_poly(const VarSetPtr& v, int terms = 3, int deg = 2) {
    MultiPoly p;
    do p = poly(v, terms, deg);
    while (p.is_zero());
    return p;
  }

  RatFunc ratfunc(const VarSetPtr& v) { return RatFunc::quotient(poly(v), nonzero_poly(v, 2, 1)); }

  RatFunc nonzero_ratfunc(const VarSetPtr& v) { return RatFunc::quotient(nonzero_poly(v), nonzero_poly(v, 2, 1)); }

  // Two nonzero t-components keep the eight-fold norm small.
  RelRingElem relelem(const RelRingPtr& ring) {
    RelRingElem e(ring);
    for (int k = 0; k < 2; ++k) {
      const unsigned slot = unsigned(integer(0, 7));
      e.component(slot) += RatFunc::quotient(poly(ring->base(), 2, 1), nonzero_poly(ring->base(), 1, 1));
    }
    return e;
  }

 private:
  std::mt19937_64 rng_;
};

struct Runner {
  PropertyReport& rep;
  unsigned cases;

  void check(const std::string& name, const std::function<std::optional<std::string>()>& one_case) {
    PropertyResult r;
    r.name = name;
    for (unsigned k = 0; k < cases; ++k) {
      ++r.cases;
      std::optional<std::string> bad;
      try {
        bad = one_case();
      } catch (const std::exception& e) {
        bad = std::string("exception: ") + e.what();
      }
      if (bad) {
        ++r.failures;
        if (!r.witness) r.witness = "case " + std::to_string(k) + ": " + *bad;
      }
    }
    rep.properties.push_back(std::move(r));
  }
};

std::optional<std::string> unless(bool ok, const std::string& what) {
  if (ok) return std::nullopt;
  return what;
}

bool canonical(const RatFunc& r) {
  const MultiPoly d = r.den();
  if (!d.is_zero() && d.leading_coeff() != 1) return false;
  if (r.is_zero()) return r.is_polynomial();
  return gcd(r.num(), d).is_constant();
}

}  // namespace

PropertyReport run_kernel_properties(std::uint64_t seed, unsigned cases_per_property) {
  const auto start = std::chrono::steady_clock::now();
  PropertyReport rep;
  rep.seed = seed;
  Gen g(seed);
  Runner run{rep, cases_per_property};
  const VarSetPtr V = VarSet::make({"s0", "s1", "s2"});
  const RelRingPtr R = RelRing::make(V);

  run.check("polynomial ring axioms", [&]() -> std::optional<std::string> {
    const MultiPoly a = g.poly(V), b = g.poly(V), c = g.poly(V);
    const MultiPoly zero(V), one = MultiPoly::constant(V, 1);
    const bool ok = (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) && a * b == b * a &&
                    a * (b + c) == a * b + a * c && a + zero == a && a * one == a && (a - a).is_zero();
    return unless(ok, "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string());
  });

  run.check("rational function field axioms", [&]() -> std::optional<std::string> {
    const RatFunc a = g.ratfunc(V), b = g.ratfunc(V), c = g.nonzero_ratfunc(V);
    const RatFunc one = RatFunc::constant(V, 1);
    const bool ok = (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) && a * b == b * a &&
                    a * (b + c) == a * b + a * c && c * c.inverse() == one && (a / c) * c == a;
    return unless(ok, "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string());
  });

  run.check("Leibniz rule", [&]() -> std::optional<std::string> {
    const RatFunc f = g.ratfunc(V), h = g.nonzero_ratfunc(V);
    const std::size_t v = std::size_t(g.integer(0, 2));
    const bool ok = (f * h).diff(v) == f.diff(v) * h + f * h.diff(v) &&
                    (f / h).diff(v) == (f.diff(v) * h - f * h.diff(v)) / h.pow(2);
    return unless(ok, "f=" + f.to_string() + " h=" + h.to_string() + " var=" + std::to_string(v));
  });

  run.check("canonical form uniqueness", [&]() -> std::optional<std::string> {
    const MultiPoly a = g.poly(V), b = g.nonzero_poly(V, 2, 1), c = g.nonzero_poly(V, 2, 1);
    const RatFunc direct = RatFunc::quotient(a, b);
    const RatFunc scaled = RatFunc::quotient(a * c, b * c);
    const RatFunc shifted = (RatFunc(a) / RatFunc(b) + RatFunc(c) / RatFunc(b)) - RatFunc(c) / RatFunc(b);
    const RatFunc viaden = RatFunc::quotient(direct.num(), direct.den());
    bool ok = true;
    for (const RatFunc* r : {&scaled, &shifted, &viaden})
      ok = ok && r->num() == direct.num() && r->den() == direct.den() && canonical(*r);
    ok = ok && canonical(direct);
    return unless(ok, "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string());
  });

  run.check("t_i -> -t_i is an involutive automorphism", [&]() -> std::optional<std::string> {
    const RelRingElem x = g.relelem(R), y = g.relelem(R);
    const int i = int(g.integer(0, 2));
    const RelRingElem ti = RelRingElem::t(R, i);
    const bool ok = (x * y).conj(i) == x.conj(i) * y.conj(i) && (x + y).conj(i) == x.conj(i) + y.conj(i) &&
                    x.conj(i).conj(i) == x && ti.conj(i) == -ti && RelRingElem::t(R, (i + 1) % 3).conj(i) == RelRingElem::t(R, (i + 1) % 3);
    return unless(ok, "x=" + x.to_string() + " y=" + y.to_string() + " i=" + std::to_string(i));
  });

  run.check("relation ring axioms", [&]() -> std::optional<std::string> {
    const RelRingElem x = g.relelem(R), y = g.relelem(R), z = g.relelem(R);
    const bool ok = (x * y) * z == x * (y * z) && x * y == y * x && x * (y + z) == x * y + x * z;
    return unless(ok, "x=" + x.to_string() + " y=" + y.to_string() + " z=" + z.to_string());
  });

  run.check("rel_invert", [&]() -> std::optional<std::string> {
    RelRingElem x = g.relelem(R);
    while (x.is_zero()) x = g.relelem(R);
    const RelRingElem one(R, RatFunc::constant(V, 1));
    const RelRingElem inv = rel_invert(x);
    return unless(x * inv == one && rel_invert(inv) == x, "x=" + x.to_string());
  });

  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace garnier
