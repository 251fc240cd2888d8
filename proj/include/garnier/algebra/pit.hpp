#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "garnier/algebra/ratfunc.hpp"
#include "garnier/algebra/relring.hpp"

namespace garnier {

// Unexpanded arithmetic over RatFunc leaves. Evaluation is exact; numerator
// and denominator degree bounds are tracked through every node so that a
// Schwartz-Zippel bound can be stated without ever normalizing.
class Expr {
 public:
  Expr() = default;
  Expr(const RatFunc& leaf);  // NOLINT: leaves embed implicitly

  const VarSetPtr& vars() const;
  unsigned num_degree_bound() const;
  unsigned den_degree_bound() const;
  // Throws PoleError when a leaf denominator vanishes.
  Scalar eval(std::span<const Scalar> point) const;
  // Fully normalized value (may be expensive).
  RatFunc expand() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  Expr operator-() const;

  struct Node;

 private:
  std::shared_ptr<const Node> node_;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
};

struct PitOptions {
  unsigned trials = 20;
  std::uint64_t seed = 42;
  // Integer coordinates are drawn uniformly from [-box, box].
  long box = 1000000;
  unsigned resample_cap = 64;
};

struct PitResult {
  bool zero = true;
  unsigned trials = 0;
  unsigned num_degree = 0;
  unsigned den_degree = 0;
  // Probability that a nonzero expression passes every trial.
  double failure_bound = 0.0;
  double log10_failure_bound = 0.0;
  std::optional<std::vector<Scalar>> witness;
  std::optional<Scalar> witness_value;
};

// Randomized identity test; throws DomainError if no pole-free sample is found
// within the resampling cap.
PitResult pit_zero(const Expr& e, const PitOptions& opt = {});
PitResult pit_zero(const RatFunc& r, const PitOptions& opt = {});
// Zero iff every component vanishes; the reported degree is the maximum.
PitResult pit_zero(const RelRingElem& r, const PitOptions& opt = {});

}  // namespace garnier
