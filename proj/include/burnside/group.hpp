#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "burnside/bitset.hpp"
#include "burnside/permutation.hpp"

namespace burnside {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Finite group on elements {0, ..., n-1} with 0 the identity, given by its
// Cayley table. A faithful permutation representation is kept for witness
// output; by default it is the left regular action.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, int order, std::vector<int> mul_table,
              std::vector<Permutation> perm_rep, std::vector<int> generators);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int mul(int a, int b) const { return mul_[size_t(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int element_order(int a) const { return elt_order_[a]; }
  const std::vector<int>& generators() const { return gens_; }
  const Permutation& perm(int a) const { return perm_rep_[a]; }
  int perm_degree() const { return perm_rep_.empty() ? 0 : perm_rep_[0].degree(); }

  bool is_abelian() const;
  bool is_cyclic() const;

 private:
  std::string name_;
  int order_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<Permutation> perm_rep_;
  std::vector<int> gens_;
  std::vector<int> elt_order_;
  mutable std::atomic<int> abelian_{-1};  // -1 unknown, else 0/1
};

// Subgroup as a member bitset over the parent's element ids.
struct Subgroup {
  GroupPtr parent;
  Bitset members;

  int order() const { return int(members.count()); }
  bool contains(int x) const { return members.test(x); }
};

// Elementwise homomorphism between materialized groups.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
};

struct Quotient {
  GroupPtr group;
  GroupHom projection;  // parent -> group
};

// A subgroup materialized as a group in its own right, with the id
// translation in both directions (from_parent is -1 off the subgroup).
struct EmbeddedGroup {
  GroupPtr group;
  GroupPtr parent;
  std::vector<int> to_parent;
  std::vector<int> from_parent;
};

// Largest group order the builders accept; reads BURNSIDE_MAX_ORDER once.
int default_order_cap();

// Builders. group_from_generators closes the generating permutations under
// composition; element 0 is the identity.
GroupPtr group_from_generators(const std::string& name,
                               const std::vector<Permutation>& gens,
                               int order_cap = default_order_cap());
GroupPtr group_from_table(const std::string& name, int order,
                          std::vector<int> mul_table,
                          int order_cap = default_order_cap());
GroupPtr direct_product(const std::string& name, const GroupPtr& a,
                        const GroupPtr& b, int order_cap = default_order_cap());

// Subgroup constructions.
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
Subgroup cyclic_subgroup(const GroupPtr& g, int x);
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& elems);
Subgroup subgroup_from_members(const GroupPtr& g, Bitset members);
Subgroup conjugate_subgroup(const Subgroup& h, int g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_subgroup_of(const Subgroup& a, const Subgroup& b);
bool is_normal(const Subgroup& h);

// Closure of `seed` under multiplication; seed must contain the identity.
Bitset closure_members(const FiniteGroup& g, const Bitset& seed);

std::vector<int> min_generating_elems(const FiniteGroup& g);

Subgroup center(const GroupPtr& g);
Subgroup commutator_subgroup(const GroupPtr& g, const Subgroup& a,
                             const Subgroup& b);
Subgroup normal_closure(const GroupPtr& g, const std::vector<int>& elems);
std::vector<Subgroup> derived_series(const GroupPtr& g);
std::vector<Subgroup> lower_central_series(const GroupPtr& g);
bool is_solvable(const GroupPtr& g);
bool is_nilpotent(const GroupPtr& g);
bool is_elementary_abelian(const GroupPtr& g, const Bitset& members);

// Largest normal p-subgroup.
Subgroup p_core(const GroupPtr& g, int p);
bool is_cyclic_mod_p(const GroupPtr& g, int p);

// Quotient by a normal subgroup. N trivial returns the parent itself with
// the identity projection; cosets are labeled in order of their smallest
// member, so the construction is deterministic.
Quotient quotient(const GroupPtr& g, const Subgroup& n);

GroupHom make_hom(const GroupPtr& source, const GroupPtr& target,
                  std::vector<int> map);
GroupHom identity_hom(const GroupPtr& g);
GroupHom compose_homs(const GroupHom& outer, const GroupHom& inner);
Subgroup hom_kernel(const GroupHom& f);
bool is_isomorphism(const GroupHom& f);
GroupHom inverse_iso(const GroupHom& f);

// Isomorphism testing: cheap invariant screening, then backtracking search
// over images of a minimal generating set.
bool are_isomorphic(const GroupPtr& a, const GroupPtr& b);
bool find_isomorphism(const GroupPtr& a, const GroupPtr& b, GroupHom* out);

// Smallest-id representatives of the double cosets H\G/K, ascending.
std::vector<int> double_cosets(const FiniteGroup& g, const Bitset& h,
                               const Bitset& k);
// Smallest-id representatives of the left cosets gH, ascending.
std::vector<int> coset_representatives(const FiniteGroup& g, const Bitset& h);

// Shared caches keyed by group identity.
EmbeddedGroup embedded_group(const Subgroup& s);
Quotient quotient_group(const GroupPtr& g, const Subgroup& n);

}  // namespace burnside
