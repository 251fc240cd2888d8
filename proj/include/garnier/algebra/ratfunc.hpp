#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "garnier/algebra/poly.hpp"

namespace garnier {

// One factor of a denominator: base^exp with base monic and non-constant.
struct DenFactor {
  MultiPoly base;
  unsigned exp = 0;
  bool irreducible = false;
};

// Quotient num / prod(base^exp). The denominator is kept factored so that
// sums of expressions over a few linear factors never need a multivariate
// gcd. Reduced form: every base is monic and coprime to num, and num = 0
// implies an empty denominator. The expanded denominator is then monic and
// coprime to num, which makes (num, den()) canonical.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(VarSetPtr vars) : num_(std::move(vars)) {}
  RatFunc(MultiPoly num) : num_(std::move(num)) {}  // NOLINT: polynomials embed implicitly

  static RatFunc constant(VarSetPtr vars, const Scalar& c) { return RatFunc(MultiPoly::constant(std::move(vars), c)); }
  static RatFunc variable(VarSetPtr vars, std::string_view name) { return RatFunc(MultiPoly::variable(std::move(vars), name)); }
  static RatFunc variable(VarSetPtr vars, std::size_t i) { return RatFunc(MultiPoly::variable(std::move(vars), i)); }
  // num / den reduced to lowest terms. Throws DomainError when den = 0.
  static RatFunc quotient(MultiPoly num, const MultiPoly& den);
  // num / den kept exactly as given (only the constant of den is moved up).
  static RatFunc unreduced(MultiPoly num, const MultiPoly& den);
  // num * prod(f^e): positive e go to the denominator, negative e multiply num.
  static RatFunc from_factors(MultiPoly num, std::span<const std::pair<MultiPoly, int>> factors);

  const VarSetPtr& vars() const { return num_.vars(); }
  std::size_t nvars() const { return num_.nvars(); }
  const MultiPoly& num() const { return num_; }
  const std::vector<DenFactor>& den_factors() const { return den_; }
  MultiPoly den() const;  // expanded, monic
  bool is_reduced() const { return reduced_; }
  RatFunc normalized() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  Scalar constant_value() const { return num_.constant_value(); }
  unsigned num_degree() const { return num_.total_degree(); }
  unsigned den_degree() const;
  unsigned degree(std::size_t var) const;  // max of numerator and denominator degree in var
  bool depends_on(std::size_t var) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator*(RatFunc a, const Scalar& c);
  friend RatFunc operator*(const Scalar& c, RatFunc a) { return std::move(a) * c; }
  RatFunc inverse() const;  // NotInvertible for zero
  RatFunc pow(int n) const;

  // Structural equality of reduced forms; value equality otherwise.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  RatFunc diff(std::size_t var) const;
  RatFunc diff(std::string_view var) const { return diff(vars()->index(var)); }

  // Throws PoleError when some denominator factor vanishes.
  Scalar eval(std::span<const Scalar> point) const;
  // Substitutes exact values for the variables marked in `values`.
  RatFunc partial_eval(std::span<const std::optional<Scalar>> values) const;
  // Simultaneous substitution var_i -> images[i] (images live in `target`).
  RatFunc compose(std::span<const RatFunc> images, const VarSetPtr& target) const;
  RatFunc substitute(std::size_t var, const RatFunc& value) const;
  RatFunc permute(std::span<const std::size_t> perm) const;
  RatFunc rebase(const VarSetPtr& target) const;

  std::string to_string() const;

 private:
  MultiPoly num_;
  std::vector<DenFactor> den_;
  bool reduced_ = true;

  void add_factor(MultiPoly base, unsigned exp, bool irreducible);
  void cancel_against(std::size_t first_factor = 0);
  void drop_empty();
  void insert_factor(const DenFactor& f);
};

// Monic, primitive-content normalized base for a denominator factor; the
// scalar removed is returned through `scale` (p = scale * result).
MultiPoly monic_part(const MultiPoly& p, Scalar& scale);

}  // namespace garnier
