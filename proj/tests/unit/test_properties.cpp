#include <doctest.h>

#include "garnier/algebra/properties.hpp"

using namespace garnier;

TEST_CASE("kernel property suite") {
  const PropertyReport rep = run_kernel_properties(42, 20);
  for (const auto& p : rep.properties) {
    INFO(p.name << ": " << p.witness.value_or(""));
    CHECK(p.failures == 0);
  }
  CHECK(rep.cases() == 20 * rep.properties.size());
}

TEST_CASE("kernel property suite is deterministic") {
  const PropertyReport a = run_kernel_properties(7, 5), b = run_kernel_properties(7, 5);
  REQUIRE(a.properties.size() == b.properties.size());
  for (std::size_t k = 0; k < a.properties.size(); ++k) CHECK(a.properties[k].failures == b.properties[k].failures);
}
