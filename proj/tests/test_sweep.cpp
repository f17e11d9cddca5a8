#include <doctest.h>

#include "rootres/sweep.hpp"

using namespace rootres;

TEST_CASE("small sweeps pass") {
  for (const auto& [k, n] : {std::pair{RootClassSpec::finite_p(2), std::size_t{16}},
                             std::pair{RootClassSpec::finite_solvable(), std::size_t{24}},
                             std::pair{RootClassSpec::finite_p(5), std::size_t{4}}}) {
    CAPTURE(k.str());
    const auto r = sweep_axioms(k, n);
    CHECK(r.passed());
    CHECK(r.failures.empty());
    CHECK(r.subgroup_closure.failed == 0);
    CHECK(r.product_closure.failed == 0);
    CHECK(r.root_property.failed == 0);
    CHECK(r.intersection.failed == 0);
    CHECK(r.extension_closure.failed == 0);
    CHECK(r.residual_extension.failed == 0);
  }
}

TEST_CASE("report fields") {
  const auto r = sweep_axioms(RootClassSpec::finite_p(2), 8);
  CHECK(r.max_order == 8);
  CHECK(r.product_order_limit == 576);
  CHECK(!r.groups.empty());
  CHECK(r.subgroup_closure.checked > 0);
  CHECK(r.product_closure.checked > 0);
  CHECK(r.root_property.checked > 0);
  CHECK(r.intersection.checked > 0);
  const auto j = r.to_json();
  CHECK(j["class"] == "p:2");
  CHECK(j.contains("failures"));
}
