#pragma once

// Test oracles. Everything here favors the dumbest correct algorithm over
// sharing code with the implementation under test.

#include <algorithm>
#include <numeric>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "burnside/bgroup.hpp"
#include "burnside/catalog.hpp"
#include "burnside/cli.hpp"

namespace burnside::test {

// Order of the group generated by `gens`, by plain set closure over images.
inline int closure_order_oracle(const std::vector<Permutation>& gens) {
  int degree = 1;
  for (const auto& g : gens) degree = std::max(degree, g.degree());
  std::vector<Permutation> padded;
  for (const auto& g : gens) {
    Permutation p = Permutation::identity(degree);
    for (int x = 0; x < g.degree(); ++x) p.images[x] = g(x);
    padded.push_back(p);
  }
  std::set<std::vector<int>> seen;
  seen.insert(Permutation::identity(degree).images);
  for (;;) {
    std::set<std::vector<int>> next = seen;
    for (const auto& a : seen)
      for (const auto& g : padded)
        next.insert(compose(Permutation{a}, g).images);
    if (next.size() == seen.size()) break;
    seen.swap(next);
  }
  return int(seen.size());
}

// Every subgroup of g as an element bitmask, by exhaustive subset search.
// Any closed subset containing the identity is a subgroup. Order <= 24 only.
inline std::vector<unsigned> brute_force_subgroup_masks(const FiniteGroup& g) {
  int n = g.order();
  std::vector<unsigned> out;
  unsigned last = n >= 32 ? 0xFFFFFFFFu : (1u << n) - 1;
  for (unsigned mask = 1; mask <= last; ++mask) {
    if (!(mask & 1u)) continue;
    if (n % __builtin_popcount(mask) != 0) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1u)) continue;
      for (int b = 0; b < n; ++b) {
        if (!(mask >> b & 1u)) continue;
        if (!(mask >> g.mul(a, b) & 1u)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(mask);
  }
  return out;
}

inline unsigned members_to_mask(const Bitset& members) {
  unsigned mask = 0;
  for (int x : members.to_vector()) mask |= 1u << x;
  return mask;
}

// [G/H] * [G/K] = sum over double cosets HgK of [G/(H cap gKg^-1)], as
// class coefficients in lattice order.
inline std::vector<Rat> double_coset_product_oracle(const GroupPtr& g,
                                                    const SubgroupLattice& lat,
                                                    int h_idx, int k_idx) {
  std::vector<Rat> coeffs(size_t(lat.num_classes()), Rat(0));
  Subgroup h = lat.subgroups[h_idx];
  Subgroup k = lat.subgroups[k_idx];
  for (int rep : double_cosets(*g, h.members, k.members)) {
    Subgroup stab = intersect(h, conjugate_subgroup(k, rep));
    coeffs[size_t(lat.class_of[lat.index_of(stab.members)])] += 1;
  }
  return coeffs;
}

// Def_{G/N}[G/X] by N-orbit decomposition of the coset space G/X: the
// quotient acts on the N-orbits, and each orbit contributes its stabilizer
// class. Returns coefficients over lattice_of(quotient_group(g, n).group).
inline std::vector<Rat> deflation_basis_oracle(const GroupPtr& g,
                                               const Subgroup& n, int x_idx) {
  LatticePtr lat = lattice_of(g);
  const Bitset& xm = lat->subgroups[x_idx].members;
  std::vector<int> reps = coset_representatives(*g, xm);
  std::vector<int> coset_of(size_t(g->order()), -1);
  for (size_t c = 0; c < reps.size(); ++c)
    for (int x : xm.to_vector()) coset_of[size_t(g->mul(reps[c], x))] = int(c);

  // Merge cosets into N-orbits.
  std::vector<int> orbit_of(reps.size(), -1);
  int norbits = 0;
  for (size_t c = 0; c < reps.size(); ++c) {
    if (orbit_of[c] >= 0) continue;
    int id = norbits++;
    std::vector<int> stack{int(c)};
    orbit_of[c] = id;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int nn : n.members.to_vector()) {
        int img = coset_of[size_t(g->mul(nn, reps[size_t(cur)]))];
        if (orbit_of[size_t(img)] < 0) {
          orbit_of[size_t(img)] = id;
          stack.push_back(img);
        }
      }
    }
  }

  Quotient q = quotient_group(g, n);
  LatticePtr qlat = lattice_of(q.group);
  // Smallest preimage of each quotient element.
  std::vector<int> section(size_t(q.group->order()), -1);
  for (int x = g->order() - 1; x >= 0; --x) section[size_t(q.projection(x))] = x;

  std::vector<Rat> coeffs(size_t(qlat->num_classes()), Rat(0));
  std::vector<int> orbit_rep(size_t(norbits), -1);
  for (size_t c = 0; c < reps.size(); ++c)
    if (orbit_rep[size_t(orbit_of[c])] < 0) orbit_rep[size_t(orbit_of[c])] = int(c);
  // The points of the deflated set are the N-orbits; decompose the induced
  // G/N-action on them into transitive pieces.
  auto act = [&](int qq, int o) {
    int img = coset_of[size_t(
        g->mul(section[size_t(qq)], reps[size_t(orbit_rep[size_t(o)])]))];
    return orbit_of[size_t(img)];
  };
  std::vector<bool> seen(size_t(norbits), false);
  for (int o = 0; o < norbits; ++o) {
    if (seen[size_t(o)]) continue;
    Bitset stab(q.group->order());
    for (int qq = 0; qq < q.group->order(); ++qq) {
      int img = act(qq, o);
      seen[size_t(img)] = true;
      if (img == o) stab.set(qq);
    }
    coeffs[size_t(qlat->class_of[qlat->index_of(stab)])] += 1;
  }
  return coeffs;
}

// Elements of coprime order commute in exactly the nilpotent groups.
inline bool nilpotent_oracle(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (std::gcd(g.element_order(a), g.element_order(b)) == 1 &&
          g.mul(a, b) != g.mul(b, a))
        return false;
  return true;
}

inline BurnsideElement random_integral_element(const GroupPtr& g,
                                               std::mt19937& rng) {
  BurnsideElement u = zero_element(g);
  std::uniform_int_distribution<int> d(-4, 4);
  for (auto& c : u.coeffs) c = Rat(long(d(rng)));
  return u;
}

// Strips wall-clock fields so deterministic outputs compare byte-equal.
inline std::string normalize_millis(std::string s) {
  s = std::regex_replace(s, std::regex("\"millis\": [0-9]+"), "\"millis\": 0");
  s = std::regex_replace(s, std::regex(",[0-9]+\n"), ",0\n");
  s = std::regex_replace(s, std::regex("  [0-9]+ms"), "  0ms");
  return s;
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

inline CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace burnside::test
