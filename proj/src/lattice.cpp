#include "burnside/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "burnside/memo.hpp"

namespace burnside {

long long SubgroupLattice::mobius(int x, int h) const {
  if (!leq(x, h))
    throw std::invalid_argument("mobius: first subgroup not below second");
  return mobius_table[x][h];
}

int SubgroupLattice::index_of(const Bitset& members) const {
  auto it = index_by_members.find(members);
  if (it == index_by_members.end())
    throw std::invalid_argument("index_of: not a subgroup of this lattice");
  return it->second;
}

LatticePtr build_lattice(const GroupPtr& g) {
  auto lat = std::make_shared<SubgroupLattice>();
  lat->group = g;
  int n = g->order();

  // Cyclic seeds, then join closure: every subgroup is a join of cyclic ones.
  std::vector<Bitset> seeds;
  {
    std::set<Bitset> seen;
    for (int x = 0; x < n; ++x) {
      Bitset c = cyclic_subgroup(g, x).members;
      if (seen.insert(c).second) seeds.push_back(c);
    }
  }
  std::set<Bitset> all(seeds.begin(), seeds.end());
  std::vector<Bitset> work(seeds.begin(), seeds.end());
  for (size_t i = 0; i < work.size(); ++i) {
    for (const Bitset& c : seeds) {
      if (c.subset_of(work[i])) continue;
      Bitset join = closure_members(*g, work[i] | c);
      if (all.insert(join).second) work.push_back(join);
    }
  }

  for (const Bitset& m : all) lat->subgroups.push_back({g, m});
  std::sort(lat->subgroups.begin(), lat->subgroups.end(),
            [](const Subgroup& a, const Subgroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.members < b.members;
            });
  int s = lat->num_subgroups();
  for (int i = 0; i < s; ++i)
    lat->index_by_members.emplace(lat->subgroups[i].members, i);

  lat->down.assign(s, Bitset(s));
  lat->up.assign(s, Bitset(s));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (lat->subgroups[i].members.subset_of(lat->subgroups[j].members)) {
        lat->down[j].set(i);
        lat->up[i].set(j);
      }

  // Conjugacy classes by orbit search along the group's generators.
  lat->class_of.assign(s, -1);
  for (int i = 0; i < s; ++i) {
    if (lat->class_of[i] >= 0) continue;
    int c = lat->num_classes();
    std::vector<int> orbit{i};
    lat->class_of[i] = c;
    for (size_t k = 0; k < orbit.size(); ++k) {
      for (int t : g->generators()) {
        int j = lat->index_of(conjugate_subgroup(lat->subgroups[orbit[k]], t).members);
        if (lat->class_of[j] < 0) {
          lat->class_of[j] = c;
          orbit.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    lat->reps.push_back(orbit.front());
    lat->classes.push_back(std::move(orbit));
  }

  lat->normalizer_order.assign(s, 0);
  for (int i = 0; i < s; ++i) {
    const Bitset& m = lat->subgroups[i].members;
    int cnt = 0;
    for (int t = 0; t < n; ++t) {
      bool fixes = true;
      m.for_each([&](int x) {
        if (!m.test(g->conj(t, x))) fixes = false;
      });
      if (fixes) ++cnt;
    }
    lat->normalizer_order[i] = cnt;
  }

  // mobius(X, H) with X <= H, by recursion over the interval below H.
  lat->mobius_table.assign(s, std::vector<long long>(s, 0));
  for (int x = 0; x < s; ++x) {
    lat->up[x].for_each([&](int h) {
      if (h == x) {
        lat->mobius_table[x][h] = 1;
        return;
      }
      long long acc = 0;
      Bitset between = lat->up[x] & lat->down[h];
      between.for_each([&](int z) {
        if (z != h) acc += lat->mobius_table[x][z];
      });
      lat->mobius_table[x][h] = -acc;
    });
  }

  std::map<int, int> per_order;
  for (int c = 0; c < lat->num_classes(); ++c) {
    int o = lat->class_order(c);
    std::string label = std::to_string(o) + ":" + std::to_string(per_order[o]++);
    lat->class_labels.push_back(label);
    lat->class_by_label.emplace(label, c);
  }
  return lat;
}

namespace {

Memo<const FiniteGroup*, LatticePtr>& lattice_cache() {
  static Memo<const FiniteGroup*, LatticePtr> memo;
  return memo;
}

}  // namespace

LatticePtr lattice_of(const GroupPtr& g) {
  return lattice_cache().get(g.get(),
                             [&](const FiniteGroup*) { return build_lattice(g); });
}

int class_index_of_subgroup(const SubgroupLattice& lat, const Bitset& members) {
  return lat.class_of[lat.index_of(members)];
}

std::vector<int> normal_subgroup_indices(const SubgroupLattice& lat) {
  std::vector<int> out;
  for (int c = 0; c < lat.num_classes(); ++c)
    if (lat.classes[c].size() == 1) out.push_back(lat.classes[c][0]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> minimal_normal_subgroups(const SubgroupLattice& lat) {
  std::vector<int> normals = normal_subgroup_indices(lat);
  std::vector<int> out;
  for (int i : normals) {
    if (lat.order_of(i) == 1) continue;
    bool minimal = true;
    for (int j : normals)
      if (j != i && lat.order_of(j) > 1 && lat.leq(j, i)) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<int> complements(const SubgroupLattice& lat, int n_index) {
  const Bitset& n = lat.subgroups[n_index].members;
  long long target = lat.group->order();
  std::vector<int> out;
  for (int k = 0; k < lat.num_subgroups(); ++k) {
    if ((n & lat.subgroups[k].members).count() != 1) continue;
    if ((long long)lat.order_of(k) * lat.order_of(n_index) != target) continue;
    out.push_back(k);
  }
  return out;
}

std::vector<int> maximal_subgroup_indices(const SubgroupLattice& lat) {
  std::vector<int> out;
  for (int i = 0; i < lat.num_subgroups() - 1; ++i)
    if (lat.up[i].count() == 2) out.push_back(i);
  return out;
}

Bitset frattini_members(const SubgroupLattice& lat) {
  std::vector<int> maxes = maximal_subgroup_indices(lat);
  Bitset m = lat.subgroups[lat.num_subgroups() - 1].members;
  for (int i : maxes) m = m & lat.subgroups[i].members;
  return m;
}

}  // namespace burnside
