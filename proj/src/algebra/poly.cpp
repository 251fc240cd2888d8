#include "garnier/algebra/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "garnier/algebra/errors.hpp"

namespace garnier {

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(a.exp[i]) + unsigned(b.exp[i]);
    if (s > 255) throw std::overflow_error("monomial exponent exceeds 255");
    r.exp[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (d.exp[i] > m.exp[i]) return false;
  return true;
}

Monomial quotient(const Monomial& m, const Monomial& d) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint8_t>(m.exp[i] - d.exp[i]);
  return r;
}

Monomial min_exponents(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::min(a.exp[i], b.exp[i]);
  return r;
}

namespace {

void sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
}

// Merges two sorted term lists; `sign` = -1 subtracts b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = grlex_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Scalar s = sign < 0 ? Scalar(a[i].coeff - b[j].coeff) : Scalar(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

void require_same_ring(const MultiPoly& a, const MultiPoly& b) {
  if (!same_vars(a.vars(), b.vars())) throw std::invalid_argument("polynomials belong to different rings");
}

// ---------------------------------------------------------------- builder

PolyBuilder::PolyBuilder(VarSetPtr vars, std::size_t reserve) : vars_(std::move(vars)) {
  std::size_t cap = 16;
  while (cap < 2 * reserve) cap <<= 1;
  table_.assign(cap, -1);
  mask_ = cap - 1;
  slots_.reserve(reserve);
}

void PolyBuilder::grow() {
  std::size_t cap = table_.size() * 2;
  table_.assign(cap, -1);
  mask_ = cap - 1;
  MonomialHash h;
  for (std::size_t k = 0; k < slots_.size(); ++k) {
    std::size_t pos = h(slots_[k].mono) & mask_;
    while (table_[pos] >= 0) pos = (pos + 1) & mask_;
    table_[pos] = static_cast<std::int64_t>(k);
  }
}

std::size_t PolyBuilder::slot_for(const Monomial& m) {
  if (2 * (used_ + 1) > table_.size()) grow();
  std::size_t pos = MonomialHash{}(m)&mask_;
  while (true) {
    std::int64_t k = table_[pos];
    if (k < 0) {
      table_[pos] = static_cast<std::int64_t>(slots_.size());
      slots_.push_back(Term{m, Scalar(0)});
      ++used_;
      return slots_.size() - 1;
    }
    if (slots_[static_cast<std::size_t>(k)].mono == m) return static_cast<std::size_t>(k);
    pos = (pos + 1) & mask_;
  }
}

void PolyBuilder::add(const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  slots_[slot_for(m)].coeff += c;
}

void PolyBuilder::add_product(const Monomial& m, const Scalar& a, const Scalar& b) {
  thread_local Scalar tmp;
  mpq_mul(tmp.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  Scalar& slot = slots_[slot_for(m)].coeff;
  mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), tmp.get_mpq_t());
}

void PolyBuilder::add(const MultiPoly& p) {
  for (const auto& t : p.terms()) add(t.mono, t.coeff);
}

void PolyBuilder::add_scaled(const MultiPoly& p, const Monomial& m, const Scalar& c) {
  for (const auto& t : p.terms()) add_product(garnier::mul(t.mono, m), t.coeff, c);
}

MultiPoly PolyBuilder::build() {
  MultiPoly out(vars_);
  out.terms_.reserve(slots_.size());
  for (auto& t : slots_)
    if (t.coeff != 0) out.terms_.push_back(std::move(t));
  sort_terms(out.terms_);
  slots_.clear();
  table_.assign(16, -1);
  mask_ = 15;
  used_ = 0;
  return out;
}

// ---------------------------------------------------------------- construction

MultiPoly MultiPoly::constant(VarSetPtr vars, const Scalar& c) {
  MultiPoly p(std::move(vars));
  if (c != 0) p.terms_.push_back(Term{Monomial{}, c});
  return p;
}

MultiPoly MultiPoly::variable(VarSetPtr vars, std::size_t index) {
  if (index >= vars->size()) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.exp[index] = 1;
  MultiPoly p(std::move(vars));
  p.terms_.push_back(Term{m, Scalar(1)});
  return p;
}

MultiPoly MultiPoly::variable(VarSetPtr vars, std::string_view name) {
  std::size_t i = vars->index(name);
  return variable(std::move(vars), i);
}

MultiPoly MultiPoly::monomial(VarSetPtr vars, const Monomial& m, const Scalar& c) {
  MultiPoly p(std::move(vars));
  if (c != 0) p.terms_.push_back(Term{m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(VarSetPtr vars, std::vector<Term> terms) {
  PolyBuilder b(vars, terms.size());
  for (auto& t : terms) b.add(t.mono, t.coeff);
  return b.build();
}

Scalar MultiPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.empty() ? Scalar(0) : terms_[0].coeff;
}

Scalar MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Scalar(0);
}

unsigned MultiPoly::degree(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.exp[var]);
  return d;
}

unsigned MultiPoly::min_degree(std::size_t var) const {
  if (terms_.empty()) return 0;
  unsigned d = 255;
  for (const auto& t : terms_) d = std::min<unsigned>(d, t.mono.exp[var]);
  return d;
}

std::uint32_t MultiPoly::support() const {
  std::uint32_t s = 0;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (t.mono.exp[i]) s |= (1u << i);
  return s;
}

Monomial MultiPoly::min_monomial() const {
  if (terms_.empty()) return Monomial{};
  Monomial m = terms_[0].mono;
  for (const auto& t : terms_) m = min_exponents(m, t.mono);
  return m;
}

// ---------------------------------------------------------------- arithmetic

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.terms_.empty()) {
    if (!vars_) vars_ = other.vars_;
    return *this;
  }
  if (terms_.empty()) {
    if (vars_ && other.vars_) require_same_ring(*this, other);
    terms_ = other.terms_;
    vars_ = other.vars_;
    return *this;
  }
  require_same_ring(*this, other);
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (other.terms_.empty()) {
    if (!vars_) vars_ = other.vars_;
    return *this;
  }
  if (vars_ && other.vars_) require_same_ring(*this, other);
  if (!vars_) vars_ = other.vars_;
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m, const Scalar& c) const {
  MultiPoly r(vars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{garnier::mul(t.mono, m), t.coeff * c});
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ && b.vars_) require_same_ring(a, b);
  const VarSetPtr& vars = a.vars_ ? a.vars_ : b.vars_;
  if (a.is_zero() || b.is_zero()) return MultiPoly(vars);
  if (a.terms_.size() == 1) return b.mul_monomial(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.mul_monomial(b.terms_[0].mono, b.terms_[0].coeff);
  const MultiPoly& small = a.size() <= b.size() ? a : b;
  const MultiPoly& big = a.size() <= b.size() ? b : a;
  PolyBuilder builder(vars, std::min<std::size_t>(small.size() * big.size(), 1u << 22));
  for (const auto& s : small.terms_)
    for (const auto& t : big.terms_) builder.add_product(garnier::mul(s.mono, t.mono), s.coeff, t.coeff);
  return builder.build();
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result = constant(vars_, Scalar(1));
  MultiPoly base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty() && !same_vars(a.vars_, b.vars_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

// ---------------------------------------------------------------- calculus & evaluation

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= nvars()) throw std::out_of_range("variable index out of range");
  MultiPoly r(vars_);
  for (const auto& t : terms_) {
    unsigned e = t.mono.exp[var];
    if (!e) continue;
    Term nt{t.mono, t.coeff * e};
    nt.mono.exp[var] = static_cast<std::uint8_t>(e - 1);
    r.terms_.push_back(std::move(nt));
  }
  // Lowering the same exponent in every surviving term keeps their relative order.
  return r;
}

Scalar MultiPoly::eval(std::span<const Scalar> point) const {
  if (point.size() < nvars()) throw std::invalid_argument("evaluation point has too few coordinates");
  std::vector<std::vector<Scalar>> powers(nvars());
  for (std::size_t v = 0; v < nvars(); ++v) {
    unsigned d = degree(v);
    powers[v].resize(d + 1);
    powers[v][0] = 1;
    for (unsigned k = 1; k <= d; ++k) powers[v][k] = powers[v][k - 1] * point[v];
  }
  Scalar sum = 0, term;
  for (const auto& t : terms_) {
    term = t.coeff;
    for (std::size_t v = 0; v < nvars(); ++v)
      if (t.mono.exp[v]) term *= powers[v][t.mono.exp[v]];
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::partial_eval(std::span<const std::optional<Scalar>> values) const {
  std::vector<std::vector<Scalar>> powers(nvars());
  for (std::size_t v = 0; v < nvars() && v < values.size(); ++v) {
    if (!values[v]) continue;
    unsigned d = degree(v);
    powers[v].resize(d + 1);
    powers[v][0] = 1;
    for (unsigned k = 1; k <= d; ++k) powers[v][k] = powers[v][k - 1] * *values[v];
  }
  PolyBuilder b(vars_, terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    Scalar c = t.coeff;
    for (std::size_t v = 0; v < nvars() && v < values.size(); ++v) {
      if (!values[v] || !m.exp[v]) continue;
      c *= powers[v][m.exp[v]];
      m.exp[v] = 0;
    }
    b.add(m, c);
  }
  return b.build();
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  if (value.vars_) require_same_ring(*this, value);
  auto coeffs = coefficients(var);
  MultiPoly result(vars_);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    result = result * value;
    result += coeffs[k];
  }
  return result;
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> images, const VarSetPtr& target) const {
  if (images.size() < nvars()) throw std::invalid_argument("compose: missing images");
  std::vector<std::vector<MultiPoly>> powers(nvars());
  auto power = [&](std::size_t v, unsigned e) -> const MultiPoly& {
    auto& pv = powers[v];
    if (pv.empty()) pv.push_back(constant(target, Scalar(1)));
    while (pv.size() <= e) pv.push_back(pv.back() * images[v]);
    return pv[e];
  };
  PolyBuilder builder(target, terms_.size());
  for (const auto& t : terms_) {
    MultiPoly prod = constant(target, t.coeff);
    for (std::size_t v = 0; v < nvars(); ++v)
      if (t.mono.exp[v]) prod = prod * power(v, t.mono.exp[v]);
    builder.add(prod);
  }
  return builder.build();
}

MultiPoly MultiPoly::permute(std::span<const std::size_t> perm) const {
  MultiPoly r(vars_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term nt{Monomial{}, t.coeff};
    for (std::size_t i = 0; i < perm.size(); ++i) nt.mono.exp[i] = t.mono.exp[perm[i]];
    r.terms_.push_back(std::move(nt));
  }
  sort_terms(r.terms_);
  return r;
}

MultiPoly MultiPoly::rebase(const VarSetPtr& target) const {
  if (same_vars(vars_, target)) {
    MultiPoly r = *this;
    r.vars_ = target;
    return r;
  }
  std::vector<std::size_t> map(nvars());
  for (std::size_t v = 0; v < nvars(); ++v) {
    auto idx = target->find(vars_->name(v));
    if (!idx) {
      if (degree(v) > 0) throw UnknownVariable(vars_->name(v));
      map[v] = kMaxVars;
    } else {
      map[v] = *idx;
    }
  }
  MultiPoly r(target);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term nt{Monomial{}, t.coeff};
    for (std::size_t v = 0; v < nvars(); ++v)
      if (t.mono.exp[v]) nt.mono.exp[map[v]] = t.mono.exp[v];
    r.terms_.push_back(std::move(nt));
  }
  sort_terms(r.terms_);
  return r;
}

std::vector<MultiPoly> MultiPoly::coefficients(std::size_t var) const {
  std::vector<MultiPoly> out(degree(var) + 1, MultiPoly(vars_));
  for (const auto& t : terms_) {
    unsigned e = t.mono.exp[var];
    Term nt = t;
    nt.mono.exp[var] = 0;
    out[e].terms_.push_back(std::move(nt));
  }
  return out;
}

MultiPoly MultiPoly::from_coefficients(VarSetPtr vars, std::size_t var, const std::vector<MultiPoly>& coeffs) {
  MultiPoly r(vars);
  std::size_t total = 0;
  for (const auto& c : coeffs) total += c.size();
  r.terms_.reserve(total);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms_) {
      Term nt = t;
      unsigned e = unsigned(nt.mono.exp[var]) + unsigned(k);
      if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
      nt.mono.exp[var] = static_cast<std::uint8_t>(e);
      r.terms_.push_back(std::move(nt));
    }
  }
  sort_terms(r.terms_);
  // Inputs free of `var` never collide after shifting, so no merge is needed.
  return r;
}

// ---------------------------------------------------------------- content & division

Scalar MultiPoly::content() const {
  if (terms_.empty()) return Scalar(0);
  Integer g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Scalar c(g, l);
  c.canonicalize();
  return c;
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return *this;
  Scalar c = content();
  MultiPoly r = *this;
  if (c != 1) {
    Scalar inv = 1 / c;
    r *= inv;
  }
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty() || terms_[0].coeff == 1) return *this;
  MultiPoly r = *this;
  Scalar inv = 1 / terms_[0].coeff;
  r *= inv;
  return r;
}

MultiPoly MultiPoly::div_monomial(const Monomial& m) const {
  MultiPoly r(vars_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!divides(m, t.mono)) throw std::logic_error("div_monomial: not divisible");
    r.terms_.push_back(Term{quotient(t.mono, m), t.coeff});
  }
  return r;
}

namespace {

std::optional<MultiPoly> divide_rec(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return a;
  if (b.is_constant()) return a * Scalar(1 / b.constant_value());
  if (!divides(b.leading_term().mono, a.leading_term().mono)) return std::nullopt;
  if (b.is_monomial()) {
    const Monomial& m = b.leading_term().mono;
    Scalar inv = 1 / b.leading_coeff();
    for (const auto& t : a.terms())
      if (!divides(m, t.mono)) return std::nullopt;
    return a.div_monomial(m) * inv;
  }
  const std::size_t n = a.nvars();
  // Pick the variable in which b is cheapest to divide by: constant leading
  // coefficient first, then the lowest degree.
  std::size_t best = n;
  unsigned best_deg = 256;
  bool best_const = false;
  for (std::size_t v = 0; v < n; ++v) {
    unsigned db = b.degree(v);
    if (!db) continue;
    if (a.degree(v) < db) return std::nullopt;
    bool lc_const = true;
    for (const auto& t : b.terms())
      if (t.mono.exp[v] == db && !t.mono.is_one()) {
        Monomial m = t.mono;
        m.exp[v] = 0;
        if (!m.is_one()) {
          lc_const = false;
          break;
        }
      }
    if ((lc_const && !best_const) || (lc_const == best_const && db < best_deg)) {
      best = v;
      best_deg = db;
      best_const = lc_const;
    }
  }
  const std::size_t x = best;
  auto ac = a.coefficients(x);
  auto bc = b.coefficients(x);
  const std::size_t na = ac.size() - 1, nb = bc.size() - 1;
  std::vector<MultiPoly> q(na - nb + 1, MultiPoly(a.vars()));
  const MultiPoly& lc = bc[nb];
  for (std::size_t j = na - nb + 1; j-- > 0;) {
    if (ac[j + nb].is_zero()) continue;
    auto qj = divide_rec(ac[j + nb], lc);
    if (!qj) return std::nullopt;
    for (std::size_t k = 0; k < nb; ++k)
      if (!bc[k].is_zero()) ac[j + k] -= *qj * bc[k];
    ac[j + nb] = MultiPoly(a.vars());
    q[j] = std::move(*qj);
  }
  for (std::size_t k = 0; k < nb; ++k)
    if (!ac[k].is_zero()) return std::nullopt;
  return MultiPoly::from_coefficients(a.vars(), x, q);
}

}  // namespace

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (vars_ && divisor.vars_) require_same_ring(*this, divisor);
  return divide_rec(*this, divisor);
}

MultiPoly MultiPoly::rem_monic(const MultiPoly& modulus, std::size_t var) const {
  auto mc = modulus.coefficients(var);
  const std::size_t d = mc.size() - 1;
  if (d == 0) throw DomainError("rem_monic: modulus has degree 0 in the variable");
  if (!(mc[d].is_constant() && mc[d].constant_value() == 1))
    throw DomainError("rem_monic: modulus is not monic in the variable");
  auto pc = coefficients(var);
  if (pc.size() <= d) return *this;
  for (std::size_t k = pc.size() - 1; k >= d; --k) {
    if (!pc[k].is_zero()) {
      MultiPoly c = pc[k];
      for (std::size_t j = 0; j < d; ++j)
        if (!mc[j].is_zero()) pc[k - d + j] -= c * mc[j];
      pc[k] = MultiPoly(vars_);
    }
    if (k == d) break;
  }
  pc.resize(d);
  return from_coefficients(vars_, var, pc);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool one = t.mono.is_one();
    if (c != 1 || one) {
      os << c.get_str();
      if (!one) os << "*";
    }
    bool firstv = true;
    for (std::size_t v = 0; v < nvars(); ++v) {
      unsigned e = t.mono.exp[v];
      if (!e) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << vars_->name(v);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace garnier
