#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rootres/root_class.hpp"

namespace rootres {

struct SweepCounts {
  std::size_t checked = 0;
  std::size_t failed = 0;
};

// Exhaustive check of the root-class conditions and the residuality lemmas
// over the catalog groups of order <= max_order.
struct AxiomSweepReport {
  RootClassSpec cls = RootClassSpec::all_finite();
  std::size_t max_order = 0;
  std::size_t product_order_limit = 0;
  std::vector<std::string> groups;

  SweepCounts subgroup_closure;    // subgroups of members are members
  SweepCounts product_closure;     // direct products of members
  SweepCounts root_property;       // axiom3_witness on C <| B <| A
  SweepCounts intersection;        // A/(M n N) from A/M and A/N
  SweepCounts extension_closure;   // subnormal series with member factors
  SweepCounts residual_extension;  // F <| G, G/F member, F residual
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

AxiomSweepReport sweep_axioms(const RootClassSpec& k, std::size_t max_order,
                              std::size_t product_order_limit = 576);

}  // namespace rootres
