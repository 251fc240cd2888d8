#include "garnier/algebra/ratfunc.hpp"

#include <algorithm>
#include <sstream>

#include "garnier/algebra/errors.hpp"
#include "garnier/algebra/gcd.hpp"

namespace garnier {

namespace {

constexpr std::size_t kIrreducibleCheckLimit = 64;

bool check_irreducible(const MultiPoly& base) {
  return base.size() <= kIrreducibleCheckLimit && is_evidently_irreducible(base);
}

std::size_t find_base(const std::vector<DenFactor>& den, const MultiPoly& base) {
  for (std::size_t i = 0; i < den.size(); ++i)
    if (den[i].base.size() == base.size() && den[i].base == base) return i;
  return den.size();
}

bool all_irreducible(const std::vector<DenFactor>& den) {
  return std::all_of(den.begin(), den.end(), [](const DenFactor& f) { return f.irreducible; });
}

void merge_factor(std::vector<DenFactor>& den, MultiPoly base, unsigned e) {
  std::size_t j = find_base(den, base);
  if (j < den.size()) {
    den[j].exp += e;
  } else {
    bool irr = check_irreducible(base);
    den.push_back(DenFactor{std::move(base), e, irr});
  }
}

// Removes from n every factor it shares with the denominator list, splitting
// composite bases when only part of them cancels.
void cancel_pair(MultiPoly& n, std::vector<DenFactor>& den) {
  if (n.is_zero()) {
    den.clear();
    return;
  }
  for (std::size_t k = 0; k < den.size(); ++k) {
    if (den[k].exp == 0) continue;
    const MultiPoly base = den[k].base;
    if (den[k].irreducible || certainly_coprime(base, n)) {
      while (den[k].exp > 0 && may_divide(base, n)) {
        auto q = n.divide_exact(base);
        if (!q) break;
        n = std::move(*q);
        --den[k].exp;
      }
      continue;
    }
    MultiPoly g = gcd(base, n);
    if (g.is_constant()) continue;
    if (g == base) {
      while (den[k].exp > 0) {
        auto q = n.divide_exact(base);
        if (!q) break;
        n = std::move(*q);
        --den[k].exp;
      }
      continue;
    }
    // base = g * rest with both parts monic; each part merges with an equal
    // base already present.
    g = g.monic();
    MultiPoly rest = *base.divide_exact(g);
    const unsigned e = den[k].exp;
    den[k].exp = 0;
    merge_factor(den, std::move(rest), e);
    merge_factor(den, std::move(g), e);
    k = std::size_t(-1);  // restart: a piece may have merged into an earlier slot
  }
  den.erase(std::remove_if(den.begin(), den.end(), [](const DenFactor& f) { return f.exp == 0; }), den.end());
}

MultiPoly power_cached(std::vector<MultiPoly>& cache, const MultiPoly& base, unsigned e) {
  if (cache.empty()) cache.push_back(MultiPoly::constant(base.vars(), Scalar(1)));
  while (cache.size() <= e) cache.push_back(cache.back() * base);
  return cache[e];
}

}  // namespace

MultiPoly monic_part(const MultiPoly& p, Scalar& scale) {
  scale = p.leading_coeff();
  return p.monic();
}

// ---------------------------------------------------------------- construction

void RatFunc::insert_factor(const DenFactor& f) {
  std::size_t j = find_base(den_, f.base);
  if (j < den_.size())
    den_[j].exp += f.exp;
  else
    den_.push_back(f);
}

void RatFunc::add_factor(MultiPoly base, unsigned exp, bool irreducible) {
  insert_factor(DenFactor{std::move(base), exp, irreducible});
}

RatFunc RatFunc::from_factors(MultiPoly num, std::span<const std::pair<MultiPoly, int>> factors) {
  const VarSetPtr vars = num.vars();
  struct Signed {
    MultiPoly base;
    int exp;
  };
  std::vector<Signed> acc;
  auto push = [&](MultiPoly base, int e) {
    for (auto& s : acc)
      if (s.base.size() == base.size() && s.base == base) {
        s.exp += e;
        return;
      }
    acc.push_back(Signed{std::move(base), e});
  };
  Scalar scale = 1;
  for (const auto& [p, e] : factors) {
    if (e == 0) continue;
    if (p.is_zero()) {
      if (e > 0) throw DomainError("zero denominator");
      return RatFunc(MultiPoly(vars));
    }
    if (p.is_constant()) {
      Scalar c = p.constant_value();
      for (int k = 0; k < std::abs(e); ++k) scale *= e > 0 ? 1 / c : c;
      continue;
    }
    Monomial m = p.min_monomial();
    MultiPoly rest = m.is_one() ? p : p.div_monomial(m);
    for (std::size_t v = 0; v < p.nvars(); ++v)
      if (m.exp[v]) push(MultiPoly::variable(p.vars(), v), e * int(m.exp[v]));
    if (rest.is_constant()) {
      Scalar c = rest.constant_value();
      for (int k = 0; k < std::abs(e); ++k) scale *= e > 0 ? 1 / c : c;
      continue;
    }
    Scalar lc;
    MultiPoly base = monic_part(rest, lc);
    for (int k = 0; k < std::abs(e); ++k) scale *= e > 0 ? 1 / lc : lc;
    push(std::move(base), e);
  }
  RatFunc r(std::move(num));
  if (r.num_.is_zero()) return r;
  if (scale != 1) r.num_ *= scale;
  for (auto& s : acc) {
    if (s.exp < 0) {
      r.num_ = r.num_ * s.base.pow(unsigned(-s.exp));
    } else if (s.exp > 0) {
      bool irr = check_irreducible(s.base);
      r.den_.push_back(DenFactor{std::move(s.base), unsigned(s.exp), irr});
    }
  }
  cancel_pair(r.num_, r.den_);
  return r;
}

RatFunc RatFunc::quotient(MultiPoly num, const MultiPoly& den) {
  if (den.is_zero()) throw DomainError("zero denominator");
  std::pair<MultiPoly, int> f{den, 1};
  return from_factors(std::move(num), std::span<const std::pair<MultiPoly, int>>(&f, 1));
}

RatFunc RatFunc::unreduced(MultiPoly num, const MultiPoly& den) {
  if (den.is_zero()) throw DomainError("zero denominator");
  RatFunc r(std::move(num));
  if (den.is_constant()) {
    r.num_ *= Scalar(1 / den.constant_value());
    return r;
  }
  Scalar lc;
  MultiPoly base = monic_part(den, lc);
  r.num_ *= Scalar(1 / lc);
  r.den_.push_back(DenFactor{std::move(base), 1, false});
  r.reduced_ = false;
  return r;
}

RatFunc RatFunc::normalized() const {
  if (reduced_) return *this;
  RatFunc r = *this;
  r.reduced_ = true;
  for (auto& f : r.den_) f.irreducible = check_irreducible(f.base);
  cancel_pair(r.num_, r.den_);
  return r;
}

MultiPoly RatFunc::den() const {
  MultiPoly d = MultiPoly::constant(vars(), Scalar(1));
  for (const auto& f : den_) d = d * f.base.pow(f.exp);
  return d;
}

unsigned RatFunc::den_degree() const {
  unsigned d = 0;
  for (const auto& f : den_) d += f.exp * f.base.total_degree();
  return d;
}

unsigned RatFunc::degree(std::size_t var) const {
  unsigned dd = 0;
  for (const auto& f : den_) dd += f.exp * f.base.degree(var);
  return std::max(num_.degree(var), dd);
}

bool RatFunc::depends_on(std::size_t var) const {
  if (num_.depends_on(var)) return true;
  return std::any_of(den_.begin(), den_.end(), [&](const DenFactor& f) { return f.base.depends_on(var); });
}

// ---------------------------------------------------------------- arithmetic

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o0) {
  if (!reduced_) *this = normalized();
  RatFunc tmp;
  const RatFunc& o = o0.reduced_ ? o0 : (tmp = o0.normalized());
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  if (vars() && o.vars()) require_same_ring(num_, o.num_);
  if (den_.empty() && o.den_.empty()) {
    num_ += o.num_;
    return *this;
  }
  // Common denominator with the larger exponent of each shared base.
  std::vector<DenFactor> common = den_;
  std::vector<unsigned> ea(common.size()), eb(common.size(), 0);
  for (std::size_t i = 0; i < common.size(); ++i) ea[i] = common[i].exp;
  for (const auto& f : o.den_) {
    std::size_t j = find_base(common, f.base);
    if (j == common.size()) {
      common.push_back(f);
      ea.push_back(0);
      eb.push_back(f.exp);
    } else {
      eb[j] = f.exp;
      common[j].exp = std::max(common[j].exp, f.exp);
    }
  }
  MultiPoly ma = MultiPoly::constant(vars(), Scalar(1)), mb = ma;
  for (std::size_t i = 0; i < common.size(); ++i) {
    if (common[i].exp > ea[i]) ma = ma * common[i].base.pow(common[i].exp - ea[i]);
    if (common[i].exp > eb[i]) mb = mb * common[i].base.pow(common[i].exp - eb[i]);
  }
  num_ = num_ * ma + o.num_ * mb;
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  // With irreducible bases only a base carried with equal exponent by both
  // operands can divide the sum.
  if (all_irreducible(common)) {
    std::vector<DenFactor> candidates, fixed;
    for (std::size_t i = 0; i < common.size(); ++i)
      (ea[i] == eb[i] ? candidates : fixed).push_back(common[i]);
    cancel_pair(num_, candidates);
    for (auto& f : candidates) fixed.push_back(std::move(f));
    den_ = std::move(fixed);
  } else {
    den_ = std::move(common);
    cancel_pair(num_, den_);
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o0) {
  if (!reduced_) *this = normalized();
  RatFunc tmp;
  const RatFunc& o = o0.reduced_ ? o0 : (tmp = o0.normalized());
  if (is_zero()) return *this;
  if (o.is_zero()) {
    *this = o;
    return *this;
  }
  if (vars() && o.vars()) require_same_ring(num_, o.num_);
  MultiPoly nb = o.num_;
  std::vector<DenFactor> db = o.den_;
  cancel_pair(num_, db);
  cancel_pair(nb, den_);
  num_ = num_ * nb;
  for (auto& f : db) insert_factor(f);
  return *this;
}

RatFunc operator*(RatFunc a, const Scalar& c) {
  if (c == 0) return RatFunc(MultiPoly(a.vars()));
  a.num_ *= c;
  return a;
}

RatFunc RatFunc::inverse() const {
  const RatFunc r = normalized();
  if (r.is_zero()) throw NotInvertible("inverse of zero");
  std::vector<std::pair<MultiPoly, int>> factors;
  factors.reserve(r.den_.size() + 1);
  factors.emplace_back(r.num_, 1);
  for (const auto& f : r.den_) factors.emplace_back(f.base, -int(f.exp));
  return from_factors(MultiPoly::constant(vars(), Scalar(1)), factors);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  return *this *= o.inverse();
}

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatFunc r = normalized();
  if (r.is_zero()) return n == 0 ? constant(vars(), Scalar(1)) : r;
  r.num_ = r.num_.pow(unsigned(n));
  for (auto& f : r.den_) f.exp *= unsigned(n);
  if (n == 0) r.den_.clear();
  return r;
}

bool operator==(const RatFunc& a0, const RatFunc& b0) {
  const RatFunc a = a0.normalized(), b = b0.normalized();
  if (a.num_ == b.num_ && a.den_.size() == b.den_.size()) {
    bool same = true;
    for (const auto& f : a.den_) {
      std::size_t j = find_base(b.den_, f.base);
      if (j == b.den_.size() || b.den_[j].exp != f.exp) {
        same = false;
        break;
      }
    }
    if (same) return true;
  }
  return (a - b).is_zero();
}

// ---------------------------------------------------------------- calculus

RatFunc RatFunc::diff(std::size_t var) const {
  const RatFunc r = normalized();
  if (var >= nvars()) throw UnknownVariable("#" + std::to_string(var));
  std::vector<std::size_t> moving;
  for (std::size_t k = 0; k < r.den_.size(); ++k)
    if (r.den_[k].base.depends_on(var)) moving.push_back(k);
  if (moving.empty()) {
    RatFunc d = r;
    d.num_ = r.num_.derivative(var);
    cancel_pair(d.num_, d.den_);
    return d;
  }
  // d(N / prod b^e) = (N' L - N sum e_k b_k' L / b_k) / (prod b^e * L),
  // L the product of the bases that depend on var.
  const std::size_t m = moving.size();
  std::vector<MultiPoly> prefix(m + 1), suffix(m + 1);
  prefix[0] = MultiPoly::constant(vars(), Scalar(1));
  suffix[m] = prefix[0];
  for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] * r.den_[moving[i]].base;
  for (std::size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] * r.den_[moving[i]].base;
  MultiPoly sum(vars());
  for (std::size_t i = 0; i < m; ++i) {
    const DenFactor& f = r.den_[moving[i]];
    sum += (f.base.derivative(var) * (prefix[i] * suffix[i + 1])) * Scalar(f.exp);
  }
  RatFunc d;
  d.num_ = r.num_.derivative(var) * prefix[m] - r.num_ * sum;
  d.den_ = r.den_;
  for (std::size_t k : moving) ++d.den_[k].exp;
  if (d.num_.is_zero()) {
    d.den_.clear();
    return d;
  }
  // An irreducible base that moves cannot divide the new numerator; every
  // other base may.
  bool moving_irreducible = true;
  for (std::size_t k : moving) moving_irreducible = moving_irreducible && d.den_[k].irreducible;
  if (!moving_irreducible) {
    cancel_pair(d.num_, d.den_);
  } else {
    std::vector<DenFactor> fixed, moved;
    for (std::size_t k = 0, i = 0; k < d.den_.size(); ++k) {
      if (i < m && moving[i] == k) {
        moved.push_back(std::move(d.den_[k]));
        ++i;
      } else {
        fixed.push_back(std::move(d.den_[k]));
      }
    }
    cancel_pair(d.num_, fixed);
    for (auto& f : moved) fixed.push_back(std::move(f));
    d.den_ = std::move(fixed);
  }
  return d;
}

// ---------------------------------------------------------------- evaluation & substitution

Scalar RatFunc::eval(std::span<const Scalar> point) const {
  Scalar den = 1;
  for (const auto& f : den_) {
    Scalar v = f.base.eval(point);
    if (v == 0) throw PoleError("evaluation at a pole");
    for (unsigned k = 0; k < f.exp; ++k) den *= v;
  }
  return num_.eval(point) / den;
}

RatFunc RatFunc::partial_eval(std::span<const std::optional<Scalar>> values) const {
  std::vector<std::pair<MultiPoly, int>> factors;
  factors.reserve(den_.size());
  for (const auto& f : den_) {
    MultiPoly b = f.base.partial_eval(values);
    if (b.is_zero()) throw PoleError("substitution hits a pole");
    factors.emplace_back(std::move(b), int(f.exp));
  }
  RatFunc r = from_factors(num_.partial_eval(values), factors);
  return r;
}

RatFunc RatFunc::compose(std::span<const RatFunc> images, const VarSetPtr& target) const {
  const std::size_t n = nvars();
  if (images.size() < n) throw std::invalid_argument("compose: missing images");
  std::vector<RatFunc> img(n);
  for (std::size_t v = 0; v < n; ++v) img[v] = images[v].normalized();
  std::vector<MultiPoly> den_exp(n);
  std::vector<std::vector<MultiPoly>> num_pow(n), den_pow(n);
  for (std::size_t v = 0; v < n; ++v) den_exp[v] = img[v].den();

  // Homogenized image: P(u/W) = [sum c prod u^e W^(d-e)] / prod W^d.
  auto hom = [&](const MultiPoly& p, std::vector<unsigned>& d) {
    d.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) d[v] = p.degree(v);
    PolyBuilder builder(target, p.size());
    for (const auto& t : p.terms()) {
      MultiPoly prod = MultiPoly::constant(target, t.coeff);
      for (std::size_t v = 0; v < n; ++v) {
        if (!d[v]) continue;
        unsigned e = t.mono.exp[v];
        if (e) prod = prod * power_cached(num_pow[v], img[v].num_, e);
        if (d[v] > e && !img[v].den_.empty()) prod = prod * power_cached(den_pow[v], den_exp[v], d[v] - e);
      }
      builder.add(prod);
    }
    return builder.build();
  };
  std::vector<std::pair<MultiPoly, int>> factors;
  std::vector<unsigned> d;
  MultiPoly top = hom(num_, d);
  for (std::size_t v = 0; v < n; ++v)
    for (const auto& g : img[v].den_) factors.emplace_back(g.base, int(g.exp * d[v]));
  for (const auto& f : den_) {
    MultiPoly b = hom(f.base, d);
    if (b.is_zero()) throw PoleError("substitution hits a pole");
    factors.emplace_back(std::move(b), int(f.exp));
    for (std::size_t v = 0; v < n; ++v)
      for (const auto& g : img[v].den_) factors.emplace_back(g.base, -int(g.exp * d[v] * f.exp));
  }
  return from_factors(std::move(top), factors);
}

RatFunc RatFunc::substitute(std::size_t var, const RatFunc& value) const {
  std::vector<RatFunc> images;
  images.reserve(nvars());
  for (std::size_t v = 0; v < nvars(); ++v) images.push_back(v == var ? value : variable(vars(), v));
  return compose(images, vars());
}

RatFunc RatFunc::permute(std::span<const std::size_t> perm) const {
  RatFunc r;
  r.reduced_ = reduced_;
  r.num_ = num_.permute(perm);
  for (const auto& f : den_) {
    Scalar lc;
    MultiPoly base = monic_part(f.base.permute(perm), lc);
    for (unsigned k = 0; k < f.exp; ++k) r.num_ *= Scalar(1 / lc);
    r.den_.push_back(DenFactor{std::move(base), f.exp, f.irreducible});
  }
  return r;
}

RatFunc RatFunc::rebase(const VarSetPtr& target) const {
  RatFunc r;
  r.reduced_ = reduced_;
  r.num_ = num_.rebase(target);
  for (const auto& f : den_) {
    Scalar lc;
    MultiPoly base = monic_part(f.base.rebase(target), lc);
    for (unsigned k = 0; k < f.exp; ++k) r.num_ *= Scalar(1 / lc);
    r.den_.push_back(DenFactor{std::move(base), f.exp, f.irreducible});
  }
  return r;
}

std::string RatFunc::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::ostringstream os;
  os << "(" << num_.to_string() << ")/(";
  bool first = true;
  for (const auto& f : den_) {
    if (!first) os << "*";
    first = false;
    os << "(" << f.base.to_string() << ")";
    if (f.exp > 1) os << "^" << f.exp;
  }
  os << ")";
  return os.str();
}

}  // namespace garnier
