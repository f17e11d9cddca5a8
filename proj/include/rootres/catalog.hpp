#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rootres/perm_group.hpp"

namespace rootres {

struct CatalogEntry {
  std::string name;
  std::size_t expected_order = 0;
  GroupPtr group;
  std::vector<std::pair<std::string, Subgroup>> subgroups;

  // Named subgroup; "1" and the entry's own name resolve to the trivial
  // and whole subgroups.
  const Subgroup* subgroup(std::string_view name) const;
};

// C1..C12, C2xC2, C2xC2xC2, C4xC2, S3, S4, A4, D4, D6, Q8. Built once.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_catalog(std::string_view name);

}  // namespace rootres
