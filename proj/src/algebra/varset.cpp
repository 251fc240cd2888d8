#include "garnier/algebra/varset.hpp"

#include <algorithm>
#include <stdexcept>

#include "garnier/algebra/errors.hpp"
#include "garnier/algebra/monomial.hpp"

namespace garnier {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) throw std::length_error("too many variables in one ring");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable '" + names_[i] + "'");
}

std::shared_ptr<const VarSet> VarSet::make(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

std::shared_ptr<const VarSet> VarSet::make(std::initializer_list<const char*> names) {
  return make(std::vector<std::string>(names.begin(), names.end()));
}

std::optional<std::size_t> VarSet::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VarSet::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw UnknownVariable(std::string(name));
  return *i;
}

bool same_vars(const VarSetPtr& a, const VarSetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return (!a || a->size() == 0) && (!b || b->size() == 0);
  return *a == *b;
}

VarSetPtr merge_vars(const VarSetPtr& a, const VarSetPtr& b) {
  std::vector<std::string> names = a->names();
  for (const auto& n : b->names())
    if (!a->find(n)) names.push_back(n);
  if (names.size() == a->size()) return a;
  return VarSet::make(std::move(names));
}

}  // namespace garnier
