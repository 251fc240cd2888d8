#include "garnier/algebra/gcd.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace garnier {

namespace {

// ---------------------------------------------------------------- arithmetic mod 2^61 - 1

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mod_mul(r, a);
    a = mod_mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, kPrime - 2); }

std::optional<std::uint64_t> to_mod(const Scalar& q) {
  Integer r;
  Integer p = Integer(static_cast<unsigned long>(kPrime));
  mpz_fdiv_r(r.get_mpz_t(), q.get_num_mpz_t(), p.get_mpz_t());
  std::uint64_t n = r.get_ui();
  mpz_fdiv_r(r.get_mpz_t(), q.get_den_mpz_t(), p.get_mpz_t());
  std::uint64_t d = r.get_ui();
  if (d == 0) return std::nullopt;
  return mod_mul(n, mod_inv(d));
}

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Degree of gcd of two univariate images (-1 for the zero polynomial).
int mod_gcd_degree(ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    if (a.size() < b.size()) std::swap(a, b);
    std::uint64_t inv = mod_inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      std::uint64_t f = mod_mul(a.back(), inv);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod_sub(a[shift + i], mod_mul(f, b[i]));
      trim(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// Univariate image in x with every other variable replaced by point[v].
std::optional<ModPoly> image(const MultiPoly& p, std::size_t x, const std::vector<std::uint64_t>& point) {
  ModPoly out(p.degree(x) + 1, 0);
  const std::size_t n = p.nvars();
  for (const auto& t : p.terms()) {
    auto c = to_mod(t.coeff);
    if (!c) return std::nullopt;
    std::uint64_t v = *c;
    for (std::size_t i = 0; i < n; ++i)
      if (i != x && t.mono.exp[i]) v = mod_mul(v, mod_pow(point[i], t.mono.exp[i]));
    out[t.mono.exp[x]] = mod_add(out[t.mono.exp[x]], v);
  }
  return out;
}

// Upper bound on deg_x gcd(a, b) from one modular image whose leading
// coefficients survive; nullopt if no clean image was found.
std::optional<int> gcd_degree_bound(const MultiPoly& a, const MultiPoly& b, std::size_t x) {
  static thread_local std::mt19937_64 rng(0x5eed1234abcdULL);
  std::uniform_int_distribution<std::uint64_t> dist(1, kPrime - 1);
  const unsigned da = a.degree(x), db = b.degree(x);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<std::uint64_t> point(a.nvars());
    for (auto& v : point) v = dist(rng);
    auto ia = image(a, x, point);
    auto ib = image(b, x, point);
    if (!ia || !ib) continue;
    if ((*ia)[da] == 0 || (*ib)[db] == 0) continue;
    return mod_gcd_degree(std::move(*ia), std::move(*ib));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- recursive gcd

MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.vars(), Scalar(1)); }

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_rec(const MultiPoly& p, std::size_t x) {
  auto coeffs = p.coefficients(x);
  // Smallest coefficients first keeps the running gcd cheap.
  std::sort(coeffs.begin(), coeffs.end(), [](const MultiPoly& u, const MultiPoly& v) { return u.size() < v.size(); });
  MultiPoly g(p.vars());
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.primitive() : gcd_rec(g, c);
    if (g.is_constant()) return one_like(p);
  }
  return g;
}

MultiPoly prem_primitive(const MultiPoly& a, const MultiPoly& b, std::size_t x) {
  auto ac = a.coefficients(x);
  auto bc = b.coefficients(x);
  const std::size_t m = bc.size() - 1;
  const MultiPoly& lc = bc[m];
  while (ac.size() > m && !ac.empty()) {
    MultiPoly c = ac.back();
    std::size_t shift = ac.size() - 1 - m;
    for (auto& coeff : ac) coeff = coeff * lc;
    for (std::size_t k = 0; k <= m; ++k) ac[shift + k] -= c * bc[k];
    while (!ac.empty() && ac.back().is_zero()) ac.pop_back();
  }
  return MultiPoly::from_coefficients(a.vars(), x, ac).primitive();
}

MultiPoly gcd_rec(const MultiPoly& a0, const MultiPoly& b0) {
  if (a0.is_zero()) return b0.primitive();
  if (b0.is_zero()) return a0.primitive();
  if (a0.is_constant() || b0.is_constant()) return one_like(a0);

  // Monomial content.
  Monomial ma = a0.min_monomial(), mb = b0.min_monomial();
  Monomial mg = min_exponents(ma, mb);
  MultiPoly gm = MultiPoly::monomial(a0.vars(), mg, Scalar(1));
  MultiPoly a = ma.is_one() ? a0.primitive() : a0.div_monomial(ma).primitive();
  MultiPoly b = mb.is_one() ? b0.primitive() : b0.div_monomial(mb).primitive();
  if (a.is_constant() || b.is_constant()) return gm;
  if (a == b) return gm * a;

  const std::uint32_t sa = a.support(), sb = b.support();
  // A variable present in only one argument: the gcd divides every coefficient.
  for (std::size_t v = 0; v < a.nvars(); ++v) {
    const std::uint32_t bit = 1u << v;
    if ((sa & bit) && !(sb & bit)) {
      MultiPoly g = b;
      for (const auto& c : a.coefficients(v)) {
        if (c.is_zero()) continue;
        g = gcd_rec(g, c);
        if (g.is_constant()) return gm;
      }
      return gm * g;
    }
    if ((sb & bit) && !(sa & bit)) {
      MultiPoly g = a;
      for (const auto& c : b.coefficients(v)) {
        if (c.is_zero()) continue;
        g = gcd_rec(g, c);
        if (g.is_constant()) return gm;
      }
      return gm * g;
    }
  }

  // Same support. Main variable: smallest degree in the smaller argument.
  const MultiPoly& small = a.size() <= b.size() ? a : b;
  std::size_t x = a.nvars();
  unsigned best = 256;
  for (std::size_t v = 0; v < a.nvars(); ++v) {
    if (!(sa & (1u << v))) continue;
    unsigned d = small.degree(v);
    if (d < best) {
      best = d;
      x = v;
    }
  }

  // Trial division covers the frequent "one divides the other" case.
  const MultiPoly& big = a.size() <= b.size() ? b : a;
  if (may_divide(small, big) && big.divide_exact(small)) return gm * small;

  auto bound = gcd_degree_bound(a, b, x);
  if (bound && *bound == 0) {
    // The gcd is free of x, so it divides both contents.
    MultiPoly cs = content_rec(small, x);
    if (cs.is_constant()) return gm;
    MultiPoly cb = content_rec(big, x);
    return gm * gcd_rec(cs, cb);
  }

  MultiPoly ca = content_rec(a, x), cb = content_rec(b, x);
  MultiPoly pa = ca.is_constant() ? a : *a.divide_exact(ca);
  MultiPoly pb = cb.is_constant() ? b : *b.divide_exact(cb);
  MultiPoly gc = (ca.is_constant() || cb.is_constant()) ? one_like(a) : gcd_rec(ca, cb);

  if (pa.degree(x) < pb.degree(x)) std::swap(pa, pb);
  while (true) {
    if (pb.degree(x) == 0) {
      // pb is primitive in x and free of x, hence constant.
      return gm * gc;
    }
    MultiPoly r = prem_primitive(pa, pb, x);
    if (r.is_zero()) return gm * gc * pb;
    if (r.degree(x) == 0) return gm * gc;
    MultiPoly cr = content_rec(r, x);
    pa = std::move(pb);
    pb = cr.is_constant() ? r : *r.divide_exact(cr);
  }
}

}  // namespace

bool may_divide(const MultiPoly& divisor, const MultiPoly& dividend) {
  if (divisor.is_constant()) return !divisor.is_zero();
  if (dividend.is_zero()) return true;
  std::size_t x = divisor.nvars();
  for (std::size_t v = 0; v < divisor.nvars(); ++v) {
    unsigned d = divisor.degree(v);
    if (d > dividend.degree(v)) return false;
    if (d && (x == divisor.nvars() || d < divisor.degree(x))) x = v;
  }
  static thread_local std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::uint64_t> dist(1, kPrime - 1);
  const unsigned db = divisor.degree(x);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<std::uint64_t> point(divisor.nvars());
    for (auto& v : point) v = dist(rng);
    auto ib = image(divisor, x, point);
    auto ia = image(dividend, x, point);
    if (!ib || !ia || (*ib)[db] == 0) continue;
    ModPoly r = std::move(*ia);
    trim(r);
    std::uint64_t inv = mod_inv((*ib)[db]);
    while (r.size() > db) {
      std::uint64_t f = mod_mul(r.back(), inv);
      std::size_t shift = r.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) r[shift + i] = mod_sub(r[shift + i], mod_mul(f, (*ib)[i]));
      trim(r);
    }
    return r.empty();
  }
  return true;
}

bool certainly_coprime(const MultiPoly& small, const MultiPoly& big) {
  if (small.is_constant() || big.is_constant()) return !small.is_zero() && !big.is_zero();
  std::size_t x = small.nvars();
  for (std::size_t v = 0; v < small.nvars(); ++v) {
    unsigned d = small.degree(v);
    if (d && big.degree(v) && (x == small.nvars() || d < small.degree(x))) x = v;
  }
  // No shared variable: a common factor could involve no variable at all.
  if (x == small.nvars()) return true;
  // A common factor free of x would have to divide the content of `small`.
  if (!content_rec(small.primitive(), x).is_constant()) return false;
  auto bound = gcd_degree_bound(small, big, x);
  return bound && *bound == 0;
}

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() && b.is_zero()) return a;
  if (a.vars() && b.vars()) require_same_ring(a, b);
  return gcd_rec(a, b).monic();
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t x) {
  auto ac = a.coefficients(x);
  auto bc = b.coefficients(x);
  const std::size_t m = bc.size() - 1;
  const MultiPoly& lc = bc[m];
  while (ac.size() > m && !ac.empty()) {
    MultiPoly c = ac.back();
    std::size_t shift = ac.size() - 1 - m;
    for (auto& coeff : ac) coeff = coeff * lc;
    for (std::size_t k = 0; k <= m; ++k) ac[shift + k] -= c * bc[k];
    while (!ac.empty() && ac.back().is_zero()) ac.pop_back();
  }
  return MultiPoly::from_coefficients(a.vars(), x, ac);
}

MultiPoly content_in(const MultiPoly& p, std::size_t x) {
  if (p.is_zero()) return p;
  return content_rec(p, x).monic();
}

bool is_evidently_irreducible(const MultiPoly& p) {
  if (p.is_constant()) return false;
  if (p.total_degree() == 1) return true;
  // p = c1 * x + c0 with gcd(c1, c0) = 1 and no other factor in x.
  for (std::size_t v = 0; v < p.nvars(); ++v) {
    if (p.degree(v) != 1) continue;
    auto c = p.coefficients(v);
    if (c[1].is_constant()) return true;
    if (c[0].is_zero()) continue;
    if (c[1].size() <= 4 && c[0].size() <= 16 && gcd_rec(c[1], c[0]).is_constant()) return true;
  }
  return false;
}

}  // namespace garnier
