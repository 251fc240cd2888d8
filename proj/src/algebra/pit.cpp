#include "garnier/algebra/pit.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

#include "garnier/algebra/errors.hpp"

namespace garnier {

struct Expr::Node {
  enum class Kind { Leaf, Add, Sub, Mul, Neg } kind;
  RatFunc leaf;
  std::shared_ptr<const Node> a, b;
  VarSetPtr vars;
  unsigned num_deg = 0, den_deg = 0;
};

Expr::Expr(const RatFunc& leaf) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Leaf;
  n->leaf = leaf.normalized();
  n->vars = leaf.vars();
  n->num_deg = n->leaf.num_degree();
  n->den_deg = n->leaf.den_degree();
  node_ = std::move(n);
}

const VarSetPtr& Expr::vars() const { return node_->vars; }
unsigned Expr::num_degree_bound() const { return node_->num_deg; }
unsigned Expr::den_degree_bound() const { return node_->den_deg; }

Expr operator+(const Expr& a, const Expr& b) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Node::Kind::Add;
  n->a = a.node_;
  n->b = b.node_;
  n->vars = a.vars();
  n->num_deg = std::max(a.node_->num_deg + b.node_->den_deg, b.node_->num_deg + a.node_->den_deg);
  n->den_deg = a.node_->den_deg + b.node_->den_deg;
  return Expr(std::shared_ptr<const Expr::Node>(std::move(n)));
}

Expr operator-(const Expr& a, const Expr& b) {
  Expr s = a + b;
  auto n = std::make_shared<Expr::Node>(*s.node_);
  n->kind = Expr::Node::Kind::Sub;
  return Expr(std::shared_ptr<const Expr::Node>(std::move(n)));
}

Expr operator*(const Expr& a, const Expr& b) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Node::Kind::Mul;
  n->a = a.node_;
  n->b = b.node_;
  n->vars = a.vars();
  n->num_deg = a.node_->num_deg + b.node_->num_deg;
  n->den_deg = a.node_->den_deg + b.node_->den_deg;
  return Expr(std::shared_ptr<const Expr::Node>(std::move(n)));
}

Expr Expr::operator-() const {
  auto n = std::make_shared<Node>(*node_);
  n->kind = Node::Kind::Neg;
  n->a = node_;
  n->b.reset();
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

namespace {

Scalar eval_node(const Expr::Node* n, std::span<const Scalar> pt, std::unordered_map<const Expr::Node*, Scalar>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  Scalar v;
  switch (n->kind) {
    case Expr::Node::Kind::Leaf: v = n->leaf.eval(pt); break;
    case Expr::Node::Kind::Add: v = eval_node(n->a.get(), pt, memo) + eval_node(n->b.get(), pt, memo); break;
    case Expr::Node::Kind::Sub: v = eval_node(n->a.get(), pt, memo) - eval_node(n->b.get(), pt, memo); break;
    case Expr::Node::Kind::Mul: v = eval_node(n->a.get(), pt, memo) * eval_node(n->b.get(), pt, memo); break;
    case Expr::Node::Kind::Neg: v = -eval_node(n->a.get(), pt, memo); break;
  }
  memo.emplace(n, v);
  return v;
}

RatFunc expand_node(const Expr::Node* n, std::unordered_map<const Expr::Node*, RatFunc>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  RatFunc v;
  switch (n->kind) {
    case Expr::Node::Kind::Leaf: v = n->leaf; break;
    case Expr::Node::Kind::Add: v = expand_node(n->a.get(), memo) + expand_node(n->b.get(), memo); break;
    case Expr::Node::Kind::Sub: v = expand_node(n->a.get(), memo) - expand_node(n->b.get(), memo); break;
    case Expr::Node::Kind::Mul: v = expand_node(n->a.get(), memo) * expand_node(n->b.get(), memo); break;
    case Expr::Node::Kind::Neg: v = -expand_node(n->a.get(), memo); break;
  }
  memo.emplace(n, v);
  return v;
}

// Per-trial Schwartz-Zippel bound, conditioned on avoiding denominator zeros.
double trial_bound(unsigned num_deg, unsigned den_deg, long box) {
  const double size = 2.0 * double(box) + 1.0;
  const double p_num = double(num_deg) / size;
  const double p_den = double(den_deg) / size;
  if (p_den >= 1.0) return 1.0;
  return std::min(1.0, p_num / (1.0 - p_den));
}

template <class Eval>
PitResult run_pit(std::size_t nvars, unsigned num_deg, unsigned den_deg, const PitOptions& opt, Eval&& eval) {
  if (opt.trials == 0) throw std::invalid_argument("pit_zero: trials must be >= 1");
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long> dist(-opt.box, opt.box);
  PitResult res;
  res.num_degree = num_deg;
  res.den_degree = den_deg;
  std::vector<Scalar> pt(nvars);
  for (unsigned t = 0; t < opt.trials; ++t) {
    std::optional<Scalar> value;
    for (unsigned attempt = 0; attempt <= opt.resample_cap && !value; ++attempt) {
      for (auto& c : pt) c = Scalar(dist(rng));
      try {
        value = eval(pt);
      } catch (const PoleError&) {
      }
    }
    if (!value) throw DomainError("pit_zero: no pole-free sample within the resampling cap");
    ++res.trials;
    if (*value != 0) {
      res.zero = false;
      res.witness = pt;
      res.witness_value = *value;
      break;
    }
  }
  const double p = trial_bound(num_deg, den_deg, opt.box);
  res.log10_failure_bound = p > 0 ? double(res.trials) * std::log10(p) : -INFINITY;
  res.failure_bound = std::pow(10.0, res.log10_failure_bound);
  if (!res.zero) {
    res.failure_bound = 0.0;
    res.log10_failure_bound = -INFINITY;
  }
  return res;
}

}  // namespace

Scalar Expr::eval(std::span<const Scalar> point) const {
  std::unordered_map<const Node*, Scalar> memo;
  return eval_node(node_.get(), point, memo);
}

RatFunc Expr::expand() const {
  std::unordered_map<const Node*, RatFunc> memo;
  return expand_node(node_.get(), memo);
}

PitResult pit_zero(const Expr& e, const PitOptions& opt) {
  return run_pit(e.vars() ? e.vars()->size() : 0, e.num_degree_bound(), e.den_degree_bound(), opt,
                 [&](std::span<const Scalar> pt) { return e.eval(pt); });
}

PitResult pit_zero(const RatFunc& r0, const PitOptions& opt) {
  const RatFunc r = r0.normalized();
  return run_pit(r.nvars(), r.num_degree(), r.den_degree(), opt, [&](std::span<const Scalar> pt) { return r.eval(pt); });
}

PitResult pit_zero(const RelRingElem& r, const PitOptions& opt) {
  unsigned nd = 0, dd = 0;
  for (unsigned e = 0; e < 8; ++e) {
    nd = std::max(nd, r.component(e).num_degree());
    dd += r.component(e).den_degree();
  }
  const std::size_t n = r.ring()->base()->size();
  // A nonzero element survives a trial only if its nonzero components all
  // vanish, so the per-component degree bound still applies.
  return run_pit(n, nd, dd, opt, [&](std::span<const Scalar> pt) {
    for (unsigned e = 0; e < 8; ++e) {
      if (r.component(e).is_zero()) continue;
      Scalar v = r.component(e).eval(pt);
      if (v != 0) return v;
    }
    return Scalar(0);
  });
}

}  // namespace garnier
