#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "garnier/algebra/monomial.hpp"
#include "garnier/algebra/scalar.hpp"
#include "garnier/algebra/varset.hpp"

namespace garnier {

struct Term {
  Monomial mono;
  Scalar coeff;
};

// Sparse multivariate polynomial over Q. Terms are kept strictly decreasing
// in graded-lex order with no zero coefficients, so two equal polynomials
// always have identical term vectors.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(VarSetPtr vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(VarSetPtr vars, const Scalar& c);
  static MultiPoly variable(VarSetPtr vars, std::size_t index);
  static MultiPoly variable(VarSetPtr vars, std::string_view name);
  static MultiPoly monomial(VarSetPtr vars, const Monomial& m, const Scalar& c);
  // Sorts and merges equal monomials; zero coefficients are dropped.
  static MultiPoly from_terms(VarSetPtr vars, std::vector<Term> terms);

  const VarSetPtr& vars() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  Scalar constant_value() const;  // requires is_constant()
  Scalar constant_term() const;

  const Term& leading_term() const { return terms_.front(); }
  const Scalar& leading_coeff() const { return terms_.front().coeff; }

  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }
  unsigned degree(std::size_t var) const;
  unsigned min_degree(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree(var) > 0; }
  // Bit i set when variable i occurs.
  std::uint32_t support() const;
  Monomial min_monomial() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Scalar& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }
  MultiPoly pow(unsigned n) const;
  MultiPoly mul_monomial(const Monomial& m, const Scalar& c) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly derivative(std::size_t var) const;

  Scalar eval(std::span<const Scalar> point) const;
  // Substitutes values for some variables; `values[i]` unset keeps variable i.
  MultiPoly partial_eval(std::span<const std::optional<Scalar>> values) const;
  // Replaces variable `var` by `value` (same ring).
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  // Simultaneous substitution of every variable by a polynomial of the target ring.
  MultiPoly compose(std::span<const MultiPoly> images, const VarSetPtr& target) const;
  // Result variable i takes the exponents of source variable perm[i].
  MultiPoly permute(std::span<const std::size_t> perm) const;
  // Moves the polynomial into another ring by variable name.
  MultiPoly rebase(const VarSetPtr& target) const;

  // Coefficients c_k (free of `var`) with P = sum_k c_k var^k.
  std::vector<MultiPoly> coefficients(std::size_t var) const;
  static MultiPoly from_coefficients(VarSetPtr vars, std::size_t var, const std::vector<MultiPoly>& coeffs);

  // Positive rational c such that P / c has coprime integer coefficients.
  Scalar content() const;
  MultiPoly primitive() const;  // P / content(P), sign kept
  MultiPoly monic() const;      // leading coefficient 1

  // Exact quotient when `divisor` divides *this, nullopt otherwise.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;
  // Division by a monomial factor; requires divisibility.
  MultiPoly div_monomial(const Monomial& m) const;
  // Remainder modulo a polynomial monic in `var`.
  MultiPoly rem_monic(const MultiPoly& modulus, std::size_t var) const;

  std::string to_string() const;

 private:
  friend class PolyBuilder;
  VarSetPtr vars_;
  std::vector<Term> terms_;
};

void require_same_ring(const MultiPoly& a, const MultiPoly& b);

// Accumulates terms in a hash map; used by products and sums of many terms.
class PolyBuilder {
 public:
  explicit PolyBuilder(VarSetPtr vars, std::size_t reserve = 0);
  void add(const Monomial& m, const Scalar& c);
  void add_product(const Monomial& m, const Scalar& a, const Scalar& b);
  void add(const MultiPoly& p);
  void add_scaled(const MultiPoly& p, const Monomial& m, const Scalar& c);
  MultiPoly build();

 private:
  VarSetPtr vars_;
  std::vector<Term> slots_;
  std::vector<std::int64_t> table_;
  std::size_t mask_ = 0;
  std::size_t used_ = 0;
  void grow();
  std::size_t slot_for(const Monomial& m);
};

}  // namespace garnier
