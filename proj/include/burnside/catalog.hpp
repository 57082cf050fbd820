#pragma once

#include <string>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

struct GroupSpec {
  std::string expr;
  GroupPtr resolved;
};

// Grammar: expr := atom ("x" atom)*
//   atom := "C"n | "D"n (order 2n) | "Q"n (dicyclic of order n, 4 | n, n >= 8)
//         | "S"n | "A"n | "SL(2,3)" | "SL(2,5)" | "PSL(2,7)"
//         | "perm:" comma-separated cycle lists, one per generator
// Catalog names take priority over the grammar. Parsed groups are cached per
// expression string; the cap is still enforced on every call.
GroupSpec parse_group_spec(const std::string& s,
                           int order_cap = default_order_cap());

GroupPtr cyclic_group(int n, int order_cap = default_order_cap());
GroupPtr dihedral_group(int n, int order_cap = default_order_cap());
GroupPtr dicyclic_group(int order, int order_cap = default_order_cap());
GroupPtr symmetric_group(int n, int order_cap = default_order_cap());
GroupPtr alternating_group(int n, int order_cap = default_order_cap());
GroupPtr special_linear_2(int q, int order_cap = default_order_cap());
GroupPtr projective_special_linear_2_7(int order_cap = default_order_cap());

struct CatalogEntry {
  std::string name;
  std::string spec;  // parseable expression realizing the entry
  int order;
};

const std::vector<CatalogEntry>& catalog_entries();
bool is_catalog_name(const std::string& name);

// Catalog name of an isomorphic entry, or "" when the catalog has none.
// Scans in catalog order, so abelian names win ties.
std::string catalog_isomorphism_type(const GroupPtr& g);

// Human-readable type: catalog name if one matches, else the generator
// permutations as a "perm:" spec.
std::string describe_isomorphism_type(const GroupPtr& g);

}  // namespace burnside
