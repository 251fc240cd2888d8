#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "garnier/algebra/ratfunc.hpp"

namespace garnier {

// Q(base)[t0, t1, t2] / (t_i^2 - s_i^3), with s_i variables of the base ring.
// A free module of rank 8 over Q(base) with basis t^e, e in {0,1}^3.
class RelRing {
 public:
  RelRing(VarSetPtr base, std::array<std::string, 3> s_names);
  static std::shared_ptr<const RelRing> make(VarSetPtr base, std::array<std::string, 3> s_names = {"s0", "s1", "s2"});

  const VarSetPtr& base() const { return base_; }
  std::size_t s_index(int i) const { return s_[i]; }
  const RatFunc& s_cubed(int i) const { return s3_[i]; }

 private:
  VarSetPtr base_;
  std::array<std::size_t, 3> s_;
  std::array<RatFunc, 3> s3_;
};

using RelRingPtr = std::shared_ptr<const RelRing>;

class RelRingElem {
 public:
  RelRingElem() = default;
  explicit RelRingElem(RelRingPtr ring);  // zero
  RelRingElem(RelRingPtr ring, const RatFunc& scalar);
  static RelRingElem t(RelRingPtr ring, int i);

  const RelRingPtr& ring() const { return ring_; }
  // Coefficient of t0^(e&1) t1^(e>>1&1) t2^(e>>2&1).
  const RatFunc& component(unsigned e) const { return c_[e]; }
  RatFunc& component(unsigned e) { return c_[e]; }

  bool is_zero() const;
  bool is_scalar() const;  // only the t^0 component is nonzero
  const RatFunc& scalar() const { return c_[0]; }

  RelRingElem operator-() const;
  RelRingElem& operator+=(const RelRingElem& o);
  RelRingElem& operator-=(const RelRingElem& o);
  friend RelRingElem operator+(RelRingElem a, const RelRingElem& b) { return a += b; }
  friend RelRingElem operator-(RelRingElem a, const RelRingElem& b) { return a -= b; }
  friend RelRingElem operator*(const RelRingElem& a, const RelRingElem& b);
  friend RelRingElem operator*(RelRingElem a, const RatFunc& r);
  friend bool operator==(const RelRingElem& a, const RelRingElem& b) { return (a - b).is_zero(); }

  // tau_i: t_i -> -t_i.
  RelRingElem conj(int i) const;
  // Product of all eight conjugates; a scalar.
  RatFunc norm() const;
  // Conjugate rationalization; NotInvertible when the norm vanishes.
  RelRingElem inverse() const;
  RelRingElem pow(int n) const;

  // d/ds_j with t_j = t_j(s_j) along t_j^2 = s_j^3, i.e. dt_j/ds_j = 3 t_j / (2 s_j).
  RelRingElem diff_s(int j) const;
  // Derivative in any other base variable (t held fixed).
  RelRingElem diff_base(std::size_t var) const;

  std::string to_string() const;

 private:
  RelRingPtr ring_;
  std::array<RatFunc, 8> c_;
};

RelRingElem rel_add(const RelRingElem& a, const RelRingElem& b);
RelRingElem rel_mul(const RelRingElem& a, const RelRingElem& b);
RelRingElem rel_invert(const RelRingElem& a);

// Rewrites a rational function in t0, t1, t2 and base variables into the
// relation ring, reducing t_i^2 -> s_i^3. `t_names` locate the t variables
// in r's ring; every other variable must exist in the ring's base.
RelRingElem rel_reduce(const RatFunc& r, const RelRingPtr& ring, std::array<std::string, 3> t_names = {"t0", "t1", "t2"});

}  // namespace garnier
