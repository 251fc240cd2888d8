#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace garnier {

// Ordered list of variable names shared by every polynomial of a ring.
// The order fixes both the exponent-vector layout and the monomial order.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);

  static std::shared_ptr<const VarSet> make(std::vector<std::string> names);
  static std::shared_ptr<const VarSet> make(std::initializer_list<const char*> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws UnknownVariable.
  std::size_t index(std::string_view name) const;

  friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

bool same_vars(const VarSetPtr& a, const VarSetPtr& b);

// Union of two variable sets; keeps the order of `a` and appends the new names of `b`.
VarSetPtr merge_vars(const VarSetPtr& a, const VarSetPtr& b);

}  // namespace garnier
