#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace garnier {

struct PropertyResult {
  std::string name;
  unsigned cases = 0;
  unsigned failures = 0;
  std::optional<std::string> witness;  // first failing case
};

struct PropertyReport {
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;
  double seconds = 0.0;
  unsigned cases() const;
  unsigned failures() const;
  bool pass() const { return failures() == 0; }
};

// Randomized self-check of the exact kernel: ring axioms, the Leibniz rule,
// uniqueness of canonical forms, the t_i -> -t_i automorphisms and inversion
// in the relation ring. Deterministic given the seed.
PropertyReport run_kernel_properties(std::uint64_t seed, unsigned cases_per_property = 100);

}  // namespace garnier
