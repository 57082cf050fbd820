#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

// Full subgroup lattice of a group, with conjugacy classes, normalizers and
// the Mobius function of the containment order. Subgroups are sorted by
// (order, members), so every index here is deterministic.
struct SubgroupLattice {
  GroupPtr group;
  std::vector<Subgroup> subgroups;

  // down[h] and up[h]: subgroup indices X with X <= H resp. H <= X.
  std::vector<Bitset> down;
  std::vector<Bitset> up;

  std::vector<int> class_of;               // subgroup index -> class index
  std::vector<std::vector<int>> classes;   // class -> member indices, ascending
  std::vector<int> reps;                   // class -> smallest member index
  std::vector<int> normalizer_order;       // per subgroup index
  std::vector<std::vector<long long>> mobius_table;  // [X][H], 0 if !(X<=H)
  std::vector<std::string> class_labels;   // "order:i", i counts within order
  std::map<std::string, int> class_by_label;
  std::map<Bitset, int> index_by_members;

  int num_subgroups() const { return int(subgroups.size()); }
  int num_classes() const { return int(classes.size()); }
  bool leq(int x, int h) const { return down[h].test(x); }
  long long mobius(int x, int h) const;
  int top_class() const { return num_classes() - 1; }
  int top_subgroup() const { return num_subgroups() - 1; }
  int order_of(int i) const { return subgroups[i].order(); }
  int class_order(int c) const { return subgroups[reps[c]].order(); }
  int index_of(const Bitset& members) const;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

LatticePtr build_lattice(const GroupPtr& g);
LatticePtr lattice_of(const GroupPtr& g);  // cached

int class_index_of_subgroup(const SubgroupLattice& lat, const Bitset& members);

// Indices of the normal subgroups (conjugacy class of size one), ascending.
std::vector<int> normal_subgroup_indices(const SubgroupLattice& lat);
// Nontrivial normal subgroups minimal under containment.
std::vector<int> minimal_normal_subgroups(const SubgroupLattice& lat);
// Subgroup indices K with K * N = G as a complement: K meet N = 1 and
// |K| |N| = |G|.
std::vector<int> complements(const SubgroupLattice& lat, int n_index);
std::vector<int> maximal_subgroup_indices(const SubgroupLattice& lat);
Bitset frattini_members(const SubgroupLattice& lat);

}  // namespace burnside
