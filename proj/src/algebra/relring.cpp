#include "garnier/algebra/relring.hpp"

#include <sstream>

#include "garnier/algebra/errors.hpp"

namespace garnier {

RelRing::RelRing(VarSetPtr base, std::array<std::string, 3> s_names) : base_(std::move(base)) {
  for (int i = 0; i < 3; ++i) {
    s_[i] = base_->index(s_names[i]);
    s3_[i] = RatFunc::variable(base_, s_[i]).pow(3);
  }
}

RelRingPtr RelRing::make(VarSetPtr base, std::array<std::string, 3> s_names) {
  return std::make_shared<const RelRing>(std::move(base), std::move(s_names));
}

RelRingElem::RelRingElem(RelRingPtr ring) : ring_(std::move(ring)) {
  for (auto& c : c_) c = RatFunc(ring_->base());
}

RelRingElem::RelRingElem(RelRingPtr ring, const RatFunc& scalar) : RelRingElem(std::move(ring)) { c_[0] = scalar; }

RelRingElem RelRingElem::t(RelRingPtr ring, int i) {
  RelRingElem r(ring);
  r.c_[1u << i] = RatFunc::constant(ring->base(), Scalar(1));
  return r;
}

bool RelRingElem::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool RelRingElem::is_scalar() const {
  for (unsigned e = 1; e < 8; ++e)
    if (!c_[e].is_zero()) return false;
  return true;
}

RelRingElem RelRingElem::operator-() const {
  RelRingElem r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

RelRingElem& RelRingElem::operator+=(const RelRingElem& o) {
  for (unsigned e = 0; e < 8; ++e)
    if (!o.c_[e].is_zero()) c_[e] += o.c_[e];
  return *this;
}

RelRingElem& RelRingElem::operator-=(const RelRingElem& o) {
  for (unsigned e = 0; e < 8; ++e)
    if (!o.c_[e].is_zero()) c_[e] -= o.c_[e];
  return *this;
}

RelRingElem operator*(const RelRingElem& a, const RelRingElem& b) {
  RelRingElem r(a.ring_);
  for (unsigned e = 0; e < 8; ++e) {
    if (a.c_[e].is_zero()) continue;
    for (unsigned f = 0; f < 8; ++f) {
      if (b.c_[f].is_zero()) continue;
      RatFunc p = a.c_[e] * b.c_[f];
      const unsigned both = e & f;
      for (int i = 0; i < 3; ++i)
        if (both & (1u << i)) p *= a.ring_->s_cubed(i);
      r.c_[e ^ f] += p;
    }
  }
  return r;
}

RelRingElem operator*(RelRingElem a, const RatFunc& s) {
  for (auto& c : a.c_)
    if (!c.is_zero()) c *= s;
  return a;
}

RelRingElem RelRingElem::conj(int i) const {
  RelRingElem r = *this;
  for (unsigned e = 0; e < 8; ++e)
    if (e & (1u << i)) r.c_[e] = -r.c_[e];
  return r;
}

RatFunc RelRingElem::norm() const {
  // a * tau_0(a) is tau_0-invariant; repeating for tau_1, tau_2 leaves a scalar.
  RelRingElem n = *this;
  for (int i = 0; i < 3; ++i) n = n * n.conj(i);
  return n.c_[0];
}

RelRingElem RelRingElem::inverse() const {
  RelRingElem n = *this;
  RelRingElem cofactor(ring_, RatFunc::constant(ring_->base(), Scalar(1)));
  for (int i = 0; i < 3; ++i) {
    RelRingElem c = n.conj(i);
    cofactor = cofactor * c;
    n = n * c;
  }
  if (!n.is_scalar()) throw std::logic_error("relation-ring norm is not a scalar");
  if (n.c_[0].is_zero()) throw NotInvertible("element has zero norm");
  return cofactor * n.c_[0].inverse();
}

RelRingElem RelRingElem::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RelRingElem result(ring_, RatFunc::constant(ring_->base(), Scalar(1)));
  RelRingElem b = *this;
  while (n) {
    if (n & 1) result = result * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return result;
}

RelRingElem RelRingElem::diff_s(int j) const {
  const std::size_t s = ring_->s_index(j);
  const RatFunc sj = RatFunc::variable(ring_->base(), s);
  const RatFunc half3 = RatFunc::constant(ring_->base(), Scalar(3, 2)) / sj;
  RelRingElem r(ring_);
  for (unsigned e = 0; e < 8; ++e) {
    if (c_[e].is_zero()) continue;
    r.c_[e] = c_[e].diff(s);
    // d(R t_j)/ds_j = R' t_j + R * 3 t_j / (2 s_j)
    if (e & (1u << j)) r.c_[e] += c_[e] * half3;
  }
  return r;
}

RelRingElem RelRingElem::diff_base(std::size_t var) const {
  RelRingElem r(ring_);
  for (unsigned e = 0; e < 8; ++e)
    if (!c_[e].is_zero()) r.c_[e] = c_[e].diff(var);
  return r;
}

std::string RelRingElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned e = 0; e < 8; ++e) {
    if (c_[e].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[e].to_string() << ")";
    for (int i = 0; i < 3; ++i)
      if (e & (1u << i)) os << "*t" << i;
  }
  return first ? "0" : os.str();
}

RelRingElem rel_add(const RelRingElem& a, const RelRingElem& b) { return a + b; }
RelRingElem rel_mul(const RelRingElem& a, const RelRingElem& b) { return a * b; }
RelRingElem rel_invert(const RelRingElem& a) { return a.inverse(); }

namespace {

// Polynomial in t and base variables -> reduced element.
RelRingElem reduce_poly(const MultiPoly& p, const RelRingPtr& ring, const std::array<std::size_t, 3>& t_idx,
                        const std::vector<std::size_t>& to_base) {
  const VarSetPtr& base = ring->base();
  std::array<PolyBuilder, 8> parts = {PolyBuilder(base), PolyBuilder(base), PolyBuilder(base), PolyBuilder(base),
                                      PolyBuilder(base), PolyBuilder(base), PolyBuilder(base), PolyBuilder(base)};
  for (const auto& term : p.terms()) {
    Monomial m{};
    unsigned e = 0;
    for (std::size_t v = 0; v < p.nvars(); ++v) {
      unsigned k = term.mono.exp[v];
      if (!k) continue;
      int ti = -1;
      for (int i = 0; i < 3; ++i)
        if (t_idx[i] == v) ti = i;
      if (ti >= 0) {
        if (k & 1u) e |= 1u << ti;
        std::size_t s = ring->s_index(ti);
        unsigned add = 3 * (k / 2);
        if (m.exp[s] + add > 255) throw std::overflow_error("monomial exponent exceeds 255");
        m.exp[s] = static_cast<std::uint8_t>(m.exp[s] + add);
      } else {
        std::size_t b = to_base[v];
        if (m.exp[b] + k > 255) throw std::overflow_error("monomial exponent exceeds 255");
        m.exp[b] = static_cast<std::uint8_t>(m.exp[b] + k);
      }
    }
    parts[e].add(m, term.coeff);
  }
  RelRingElem r(ring);
  for (unsigned e = 0; e < 8; ++e) r.component(e) = RatFunc(parts[e].build());
  return r;
}

}  // namespace

RelRingElem rel_reduce(const RatFunc& r0, const RelRingPtr& ring, std::array<std::string, 3> t_names) {
  const RatFunc r = r0.normalized();
  const VarSetPtr& src = r.vars();
  std::array<std::size_t, 3> t_idx{};
  for (int i = 0; i < 3; ++i) t_idx[i] = src->find(t_names[i]).value_or(kMaxVars);
  std::vector<std::size_t> to_base(src->size(), kMaxVars);
  for (std::size_t v = 0; v < src->size(); ++v) {
    bool is_t = v == t_idx[0] || v == t_idx[1] || v == t_idx[2];
    if (is_t) continue;
    auto b = ring->base()->find(src->name(v));
    if (b)
      to_base[v] = *b;
    else if (r.depends_on(v))
      throw UnknownVariable(src->name(v));
  }
  RelRingElem out = reduce_poly(r.num(), ring, t_idx, to_base);
  for (const auto& f : r.den_factors()) {
    RelRingElem b = reduce_poly(f.base, ring, t_idx, to_base);
    RelRingElem inv = b.is_scalar() ? RelRingElem(ring, b.scalar().inverse()) : b.inverse();
    out = out * inv.pow(int(f.exp));
  }
  return out;
}

}  // namespace garnier
