#include "burnside/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

#include "burnside/memo.hpp"
#include "burnside/numeric.hpp"

namespace burnside {

namespace {

// Monoid closure of `seed` under the raw table; works before a FiniteGroup
// exists. Seed must contain 0.
Bitset closure_on_table(int order, const std::vector<int>& table,
                        const Bitset& seed) {
  Bitset in = seed;
  std::vector<int> elems = seed.to_vector();
  // Outer and inner bounds both grow, and both product orders are taken, so
  // every ordered pair of closure elements is eventually multiplied.
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      for (int p : {table[size_t(elems[i]) * order + elems[j]],
                    table[size_t(elems[j]) * order + elems[i]]}) {
        if (!in.test(p)) {
          in.set(p);
          elems.push_back(p);
          if (int(elems.size()) == order) return in;
        }
      }
    }
  }
  return in;
}

std::vector<int> greedy_generators(int order, const std::vector<int>& table) {
  std::vector<int> gens;
  Bitset cur(order);
  cur.set(0);
  while (int(cur.count()) < order) {
    int pick = -1;
    for (int x = 0; x < order; ++x)
      if (!cur.test(x)) {
        pick = x;
        break;
      }
    gens.push_back(pick);
    Bitset seed = cur;
    seed.set(pick);
    cur = closure_on_table(order, table, seed);
  }
  return gens;
}

void check_latin_square(int order, const std::vector<int>& table) {
  if (int(table.size()) != order * order)
    throw std::invalid_argument("group table has wrong size");
  for (int v : table)
    if (v < 0 || v >= order)
      throw std::invalid_argument("group table entry out of range");
  for (int a = 0; a < order; ++a) {
    Bitset row(order), col(order);
    for (int b = 0; b < order; ++b) {
      row.set(table[size_t(a) * order + b]);
      col.set(table[size_t(b) * order + a]);
    }
    if (row.count() != order || col.count() != order)
      throw std::invalid_argument("group table is not a Latin square");
  }
  for (int b = 0; b < order; ++b)
    if (table[b] != b || table[size_t(b) * order] != b)
      throw std::invalid_argument("element 0 is not the identity");
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, int order,
                         std::vector<int> mul_table,
                         std::vector<Permutation> perm_rep,
                         std::vector<int> generators)
    : name_(std::move(name)),
      order_(order),
      mul_(std::move(mul_table)),
      perm_rep_(std::move(perm_rep)),
      gens_(std::move(generators)) {
  if (order_ <= 0) throw std::invalid_argument("group order must be positive");
  check_latin_square(order_, mul_);
  if (int(perm_rep_.size()) != order_)
    throw std::invalid_argument("permutation representation has wrong size");
  for (const auto& p : perm_rep_)
    if (!p.is_bijection() || p.degree() != perm_rep_[0].degree())
      throw std::invalid_argument("invalid permutation representation");

  inv_.assign(order_, -1);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == 0) inv_[a] = b;

  elt_order_.assign(order_, 0);
  for (int a = 0; a < order_; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    elt_order_[a] = k == 1 ? 1 : k;
  }

  if (gens_.empty() && order_ > 1) gens_ = greedy_generators(order_, mul_);
  for (int g : gens_)
    if (g < 0 || g >= order_) throw std::invalid_argument("generator id out of range");
}

bool FiniteGroup::is_abelian() const {
  int cached = abelian_.load();
  if (cached < 0) {
    cached = 1;
    for (int a = 0; a < order_ && cached; ++a)
      for (int b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) {
          cached = 0;
          break;
        }
    abelian_.store(cached);
  }
  return cached == 1;
}

bool FiniteGroup::is_cyclic() const {
  for (int a = 0; a < order_; ++a)
    if (elt_order_[a] == order_) return true;
  return order_ == 1;
}

int default_order_cap() {
  static const int cap = [] {
    const char* s = std::getenv("BURNSIDE_MAX_ORDER");
    if (!s || !*s) return 2000;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (*end || v <= 0)
      throw std::runtime_error("BURNSIDE_MAX_ORDER must be a positive integer");
    return int(v);
  }();
  return cap;
}

GroupPtr group_from_generators(const std::string& name,
                               const std::vector<Permutation>& gens,
                               int order_cap) {
  if (gens.empty()) throw std::invalid_argument(name + ": no generators");
  int degree = 0;
  for (const auto& g : gens) {
    if (!g.is_bijection())
      throw std::invalid_argument(name + ": generator is not a permutation");
    degree = std::max(degree, g.degree());
  }
  std::vector<Permutation> padded;
  for (const auto& g : gens) {
    Permutation p = Permutation::identity(degree);
    for (int x = 0; x < g.degree(); ++x) p.images[x] = g(x);
    padded.push_back(std::move(p));
  }

  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::map<std::vector<int>, int> index{{elems[0].images, 0}};
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : padded) {
      Permutation p = compose(elems[i], g);
      auto [it, inserted] = index.try_emplace(p.images, int(elems.size()));
      (void)it;
      if (inserted) {
        if (int(elems.size()) + 1 > order_cap)
          throw std::runtime_error(name + ": order exceeds cap of " +
                                   std::to_string(order_cap));
        elems.push_back(std::move(p));
      }
    }
  }

  int n = int(elems.size());
  std::vector<int> table(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[size_t(a) * n + b] = index.at(compose(elems[a], elems[b]).images);

  std::vector<int> gen_ids;
  for (const auto& g : padded) {
    int id = index.at(g.images);
    if (id != 0 && std::find(gen_ids.begin(), gen_ids.end(), id) == gen_ids.end())
      gen_ids.push_back(id);
  }
  return std::make_shared<FiniteGroup>(name, n, std::move(table),
                                       std::move(elems), std::move(gen_ids));
}

GroupPtr group_from_table(const std::string& name, int order,
                          std::vector<int> mul_table, int order_cap) {
  if (order > order_cap)
    throw std::runtime_error(name + ": order exceeds cap of " +
                             std::to_string(order_cap));
  check_latin_square(order, mul_table);

  // Light's test: with G reached from 0 by right-multiplying generators,
  // checking a(gb) = (ag)b for generators g proves full associativity.
  std::vector<int> gens = greedy_generators(order, mul_table);
  auto mul = [&](int a, int b) { return mul_table[size_t(a) * order + b]; };
  for (int g : gens)
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        if (mul(a, mul(g, b)) != mul(mul(a, g), b))
          throw std::invalid_argument(name + ": table is not associative");

  std::vector<Permutation> regular(order);
  for (int a = 0; a < order; ++a) {
    std::vector<int> im(order);
    for (int x = 0; x < order; ++x) im[x] = mul(a, x);
    regular[a] = Permutation(std::move(im));
  }
  return std::make_shared<FiniteGroup>(name, order, std::move(mul_table),
                                       std::move(regular), std::move(gens));
}

GroupPtr direct_product(const std::string& name, const GroupPtr& a,
                        const GroupPtr& b, int order_cap) {
  long long n = (long long)a->order() * b->order();
  if (n > order_cap)
    throw std::runtime_error(name + ": order exceeds cap of " +
                             std::to_string(order_cap));
  int na = a->order(), nb = b->order(), nn = int(n);
  auto pack = [&](int x, int y) { return x * nb + y; };
  std::vector<int> table(size_t(nn) * nn);
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          table[size_t(pack(x1, y1)) * nn + pack(x2, y2)] =
              pack(a->mul(x1, x2), b->mul(y1, y2));

  // Factor permutations act on disjoint blocks of one domain.
  int da = a->perm_degree(), db = b->perm_degree();
  std::vector<Permutation> perms(nn);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      Permutation p = Permutation::identity(da + db);
      for (int t = 0; t < da; ++t) p.images[t] = a->perm(x)(t);
      for (int t = 0; t < db; ++t) p.images[da + t] = da + b->perm(y)(t);
      perms[pack(x, y)] = std::move(p);
    }

  std::vector<int> gens;
  for (int g : a->generators()) gens.push_back(pack(g, 0));
  for (int g : b->generators()) gens.push_back(pack(0, g));
  return std::make_shared<FiniteGroup>(name, nn, std::move(table),
                                       std::move(perms), std::move(gens));
}

Subgroup trivial_subgroup(const GroupPtr& g) {
  Bitset m(g->order());
  m.set(0);
  return {g, m};
}

Subgroup full_subgroup(const GroupPtr& g) {
  Bitset m(g->order());
  for (int i = 0; i < g->order(); ++i) m.set(i);
  return {g, m};
}

Bitset closure_members(const FiniteGroup& g, const Bitset& seed) {
  if (!seed.test(0))
    throw std::invalid_argument("closure seed must contain the identity");
  std::vector<int> elems = seed.to_vector();
  Bitset in = seed;
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      for (int p : {g.mul(elems[i], elems[j]), g.mul(elems[j], elems[i])}) {
        if (!in.test(p)) {
          in.set(p);
          elems.push_back(p);
          if (int(elems.size()) == g.order()) return in;
        }
      }
    }
  }
  return in;
}

Subgroup cyclic_subgroup(const GroupPtr& g, int x) {
  Bitset m(g->order());
  int y = x;
  m.set(0);
  while (y != 0) {
    m.set(y);
    y = g->mul(y, x);
  }
  return {g, m};
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& elems) {
  Bitset seed(g->order());
  seed.set(0);
  for (int e : elems) {
    if (e < 0 || e >= g->order())
      throw std::invalid_argument("element id out of range");
    seed.set(e);
  }
  return {g, closure_members(*g, seed)};
}

Subgroup subgroup_from_members(const GroupPtr& g, Bitset members) {
  if (members.universe() != g->order())
    throw std::invalid_argument("member set has wrong universe");
  if (!members.test(0)) throw std::invalid_argument("subgroup must contain 0");
  Subgroup s{g, members};
  std::vector<int> v = members.to_vector();
  for (int a : v)
    for (int b : v)
      if (!members.test(g->mul(a, b)))
        throw std::invalid_argument("member set is not closed");
  return s;
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
  Bitset m(h.parent->order());
  h.members.for_each([&](int x) { m.set(h.parent->conj(g, x)); });
  return {h.parent, m};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent)
    throw std::invalid_argument("intersect: different parents");
  return {a.parent, a.members & b.members};
}

bool is_subgroup_of(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent)
    throw std::invalid_argument("is_subgroup_of: different parents");
  return a.members.subset_of(b.members);
}

bool is_normal(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  for (int t : g.generators()) {
    bool ok = true;
    h.members.for_each([&](int x) {
      if (!h.members.test(g.conj(t, x))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::vector<int> min_generating_elems(const FiniteGroup& g) {
  std::vector<int> gens;
  Bitset cur(g.order());
  cur.set(0);
  while (int(cur.count()) < g.order()) {
    int pick = -1;
    for (int x = 0; x < g.order(); ++x)
      if (!cur.test(x)) {
        pick = x;
        break;
      }
    gens.push_back(pick);
    Bitset seed = cur;
    seed.set(pick);
    cur = closure_members(g, seed);
  }
  return gens;
}

Subgroup center(const GroupPtr& g) {
  Bitset m(g->order());
  for (int x = 0; x < g->order(); ++x) {
    bool central = true;
    for (int y = 0; y < g->order() && central; ++y)
      if (g->mul(x, y) != g->mul(y, x)) central = false;
    if (central) m.set(x);
  }
  return {g, m};
}

Subgroup commutator_subgroup(const GroupPtr& g, const Subgroup& a,
                             const Subgroup& b) {
  Bitset seed(g->order());
  seed.set(0);
  auto va = a.members.to_vector(), vb = b.members.to_vector();
  for (int x : va)
    for (int y : vb)
      seed.set(g->mul(g->mul(g->inv(x), g->inv(y)), g->mul(x, y)));
  return {g, closure_members(*g, seed)};
}

Subgroup normal_closure(const GroupPtr& g, const std::vector<int>& elems) {
  Bitset seed(g->order());
  seed.set(0);
  for (int e : elems)
    for (int t = 0; t < g->order(); ++t) seed.set(g->conj(t, e));
  return {g, closure_members(*g, seed)};
}

std::vector<Subgroup> derived_series(const GroupPtr& g) {
  std::vector<Subgroup> series{full_subgroup(g)};
  for (;;) {
    Subgroup next = commutator_subgroup(g, series.back(), series.back());
    if (next.members == series.back().members) break;
    series.push_back(next);
  }
  return series;
}

std::vector<Subgroup> lower_central_series(const GroupPtr& g) {
  std::vector<Subgroup> series{full_subgroup(g)};
  for (;;) {
    Subgroup next = commutator_subgroup(g, series.back(), series[0]);
    if (next.members == series.back().members) break;
    series.push_back(next);
  }
  return series;
}

bool is_solvable(const GroupPtr& g) {
  return derived_series(g).back().order() == 1;
}

bool is_nilpotent(const GroupPtr& g) {
  return lower_central_series(g).back().order() == 1;
}

bool is_elementary_abelian(const GroupPtr& g, const Bitset& members) {
  int n = members.count();
  if (n == 1) return false;
  std::vector<int> v = members.to_vector();
  int p = g->element_order(v[1]);
  if (!is_prime(p)) return false;
  for (int x : v)
    if (x != 0 && g->element_order(x) != p) return false;
  for (int x : v)
    for (int y : v)
      if (g->mul(x, y) != g->mul(y, x)) return false;
  int m = n;
  while (m % p == 0) m /= p;
  return m == 1;
}

Subgroup p_core(const GroupPtr& g, int p) {
  if (!is_prime(p)) throw std::invalid_argument("p_core: p must be prime");
  // x lies in the largest normal p-subgroup exactly when its normal closure
  // is a p-group, and then so does every element of that closure.
  Bitset m(g->order());
  m.set(0);
  for (int x = 0; x < g->order(); ++x) {
    if (m.test(x)) continue;
    int o = g->element_order(x);
    while (o % p == 0) o /= p;
    if (o != 1) continue;
    Subgroup ncl = normal_closure(g, {x});
    int sz = ncl.order();
    while (sz % p == 0) sz /= p;
    if (sz == 1) m = m | ncl.members;
  }
  return {g, m};
}

bool is_cyclic_mod_p(const GroupPtr& g, int p) {
  Subgroup core = p_core(g, p);
  return quotient_group(g, core).group->is_cyclic();
}

Quotient quotient(const GroupPtr& g, const Subgroup& n) {
  if (n.parent != g) throw std::invalid_argument("quotient: wrong parent");
  if (!is_normal(n)) throw std::invalid_argument("quotient: subgroup not normal");
  if (n.order() == 1) return {g, identity_hom(g)};

  int order = g->order();
  std::vector<int> label(order, -1);
  std::vector<int> reps;
  // Cosets are labeled in order of smallest member, so coset 0 is N itself.
  for (int x = 0; x < order; ++x) {
    if (label[x] >= 0) continue;
    int id = int(reps.size());
    reps.push_back(x);
    n.members.for_each([&](int y) { label[g->mul(x, y)] = id; });
  }
  int q = int(reps.size());

  std::vector<int> table(size_t(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      table[size_t(a) * q + b] = label[g->mul(reps[a], reps[b])];

  std::vector<Permutation> perms(q);
  for (int a = 0; a < q; ++a) {
    std::vector<int> im(q);
    for (int x = 0; x < q; ++x) im[x] = table[size_t(a) * q + x];
    perms[a] = Permutation(std::move(im));
  }

  std::vector<int> gens;
  for (int t : g->generators()) {
    int l = label[t];
    if (l != 0 && std::find(gens.begin(), gens.end(), l) == gens.end())
      gens.push_back(l);
  }

  std::string name = g->name() + "/N" + std::to_string(n.order()) + "_" +
                     std::to_string(n.members.to_vector()[1]);
  auto qg = std::make_shared<FiniteGroup>(name, q, std::move(table),
                                          std::move(perms), std::move(gens));
  return {qg, GroupHom{g, qg, std::move(label)}};
}

GroupHom make_hom(const GroupPtr& source, const GroupPtr& target,
                  std::vector<int> map) {
  if (int(map.size()) != source->order())
    throw std::invalid_argument("hom map has wrong size");
  for (int v : map)
    if (v < 0 || v >= target->order())
      throw std::invalid_argument("hom image out of range");
  for (int a = 0; a < source->order(); ++a)
    for (int b = 0; b < source->order(); ++b)
      if (map[source->mul(a, b)] != target->mul(map[a], map[b]))
        throw std::invalid_argument("map is not a homomorphism");
  return {source, target, std::move(map)};
}

GroupHom identity_hom(const GroupPtr& g) {
  std::vector<int> map(g->order());
  std::iota(map.begin(), map.end(), 0);
  return {g, g, std::move(map)};
}

GroupHom compose_homs(const GroupHom& outer, const GroupHom& inner) {
  if (inner.target != outer.source)
    throw std::invalid_argument("compose_homs: mismatched middle group");
  std::vector<int> map(inner.map.size());
  for (size_t i = 0; i < map.size(); ++i) map[i] = outer.map[inner.map[i]];
  return {inner.source, outer.target, std::move(map)};
}

Subgroup hom_kernel(const GroupHom& f) {
  Bitset m(f.source->order());
  for (int x = 0; x < f.source->order(); ++x)
    if (f.map[x] == 0) m.set(x);
  return {f.source, m};
}

bool is_isomorphism(const GroupHom& f) {
  if (f.source->order() != f.target->order()) return false;
  std::vector<char> used(f.map.size(), 0);
  for (int v : f.map) {
    if (used[v]) return false;
    used[v] = 1;
  }
  return true;
}

GroupHom inverse_iso(const GroupHom& f) {
  if (!is_isomorphism(f)) throw std::invalid_argument("hom is not invertible");
  std::vector<int> map(f.map.size());
  for (size_t i = 0; i < map.size(); ++i) map[f.map[i]] = int(i);
  return {f.target, f.source, std::move(map)};
}

namespace {

std::vector<int> conj_class_sizes(const FiniteGroup& g) {
  std::vector<int> size_of(g.order());
  for (int x = 0; x < g.order(); ++x) {
    int cent = 0;
    for (int y = 0; y < g.order(); ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++cent;
    size_of[x] = g.order() / cent;
  }
  return size_of;
}

std::vector<int> sorted_orders(const FiniteGroup& g) {
  std::vector<int> v(g.order());
  for (int x = 0; x < g.order(); ++x) v[x] = g.element_order(x);
  std::sort(v.begin(), v.end());
  return v;
}

// Defines phi over all of A by right-multiplication with generators and
// checks consistency; success proves a bijective homomorphism.
bool extends_to_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                            const std::vector<int>& gens,
                            const std::vector<int>& imgs,
                            std::vector<int>* out) {
  int n = a.order();
  std::vector<int> phi(n, -1);
  std::vector<char> used(n, 0);
  phi[0] = 0;
  used[0] = 1;
  std::vector<int> queue{0};
  for (size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (size_t k = 0; k < gens.size(); ++k) {
      int xa = a.mul(x, gens[k]);
      int yb = b.mul(phi[x], imgs[k]);
      if (phi[xa] == -1) {
        if (used[yb]) return false;
        phi[xa] = yb;
        used[yb] = 1;
        queue.push_back(xa);
      } else if (phi[xa] != yb) {
        return false;
      }
    }
  }
  if (int(queue.size()) != n) return false;
  if (out) *out = std::move(phi);
  return true;
}

}  // namespace

bool find_isomorphism(const GroupPtr& a, const GroupPtr& b, GroupHom* out) {
  if (a->order() != b->order()) return false;
  if (a.get() == b.get()) {
    if (out) *out = identity_hom(a);
    return true;
  }
  int n = a->order();
  if (n == 1) {
    if (out) *out = make_hom(a, b, {0});
    return true;
  }

  std::vector<int> gens = min_generating_elems(*a);
  std::vector<int> cls_a = conj_class_sizes(*a), cls_b = conj_class_sizes(*b);

  std::vector<std::vector<int>> cands(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    for (int y = 0; y < n; ++y)
      if (b->element_order(y) == a->element_order(gens[k]) &&
          cls_b[y] == cls_a[gens[k]])
        cands[k].push_back(y);
    if (cands[k].empty()) return false;
  }

  // Prefix closure sizes in A prune image tuples that collapse too early.
  std::vector<int> prefix_size(gens.size());
  {
    Bitset cur(n);
    cur.set(0);
    for (size_t k = 0; k < gens.size(); ++k) {
      cur.set(gens[k]);
      cur = closure_members(*a, cur);
      prefix_size[k] = cur.count();
    }
  }

  std::vector<int> imgs(gens.size(), -1);
  std::vector<Bitset> span(gens.size() + 1);
  span[0] = Bitset(n);
  span[0].set(0);

  std::vector<size_t> pos(gens.size(), 0);
  size_t k = 0;
  while (true) {
    if (k == gens.size()) {
      std::vector<int> phi;
      if (extends_to_isomorphism(*a, *b, gens, imgs, &phi)) {
        if (out) *out = GroupHom{a, b, std::move(phi)};
        return true;
      }
      --k;
      ++pos[k];
    }
    if (pos[k] == cands[k].size()) {
      pos[k] = 0;
      if (k == 0) return false;
      --k;
      ++pos[k];
      continue;
    }
    int y = cands[k][pos[k]];
    Bitset seed = span[k];
    seed.set(y);
    Bitset grown = closure_members(*b, seed);
    if (grown.count() != prefix_size[k]) {
      ++pos[k];
      continue;
    }
    imgs[k] = y;
    span[k + 1] = grown;
    ++k;
  }
}

bool are_isomorphic(const GroupPtr& a, const GroupPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->order() != b->order()) return false;
  if (sorted_orders(*a) != sorted_orders(*b)) return false;
  {
    std::vector<int> ca = conj_class_sizes(*a), cb = conj_class_sizes(*b);
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return false;
  }
  if (center(a).order() != center(b).order()) return false;
  Subgroup da = commutator_subgroup(a, full_subgroup(a), full_subgroup(a));
  Subgroup db = commutator_subgroup(b, full_subgroup(b), full_subgroup(b));
  if (da.order() != db.order()) return false;
  return find_isomorphism(a, b, nullptr);
}

std::vector<int> double_cosets(const FiniteGroup& g, const Bitset& h,
                               const Bitset& k) {
  Bitset covered(g.order());
  std::vector<int> reps;
  auto vh = h.to_vector(), vk = k.to_vector();
  for (int x = 0; x < g.order(); ++x) {
    if (covered.test(x)) continue;
    reps.push_back(x);
    for (int a : vh)
      for (int b : vk) covered.set(g.mul(g.mul(a, x), b));
  }
  return reps;
}

std::vector<int> coset_representatives(const FiniteGroup& g, const Bitset& h) {
  Bitset covered(g.order());
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (covered.test(x)) continue;
    reps.push_back(x);
    h.for_each([&](int y) { covered.set(g.mul(x, y)); });
  }
  return reps;
}

namespace {

struct SubKey {
  const FiniteGroup* parent;
  Bitset members;
  bool operator<(const SubKey& o) const {
    if (parent != o.parent) return std::less<const FiniteGroup*>()(parent, o.parent);
    return members < o.members;
  }
};

Memo<SubKey, EmbeddedGroup>& embed_cache() {
  static Memo<SubKey, EmbeddedGroup> memo;
  return memo;
}

Memo<SubKey, Quotient>& quotient_cache() {
  static Memo<SubKey, Quotient> memo;
  return memo;
}

EmbeddedGroup build_embedded(const Subgroup& s) {
  const GroupPtr& g = s.parent;
  if (s.order() == g->order()) {
    std::vector<int> ident(g->order());
    std::iota(ident.begin(), ident.end(), 0);
    return {g, g, ident, ident};
  }
  std::vector<int> to_parent = s.members.to_vector();
  std::vector<int> from_parent(g->order(), -1);
  for (size_t i = 0; i < to_parent.size(); ++i) from_parent[to_parent[i]] = int(i);

  int n = int(to_parent.size());
  std::vector<int> table(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[size_t(a) * n + b] = from_parent[g->mul(to_parent[a], to_parent[b])];

  // Keep the parent's permutation domain so subgroup witnesses stay readable.
  std::vector<Permutation> perms(n);
  for (int a = 0; a < n; ++a) perms[a] = g->perm(to_parent[a]);

  std::string name = g->name() + ":H" + std::to_string(n) + "_" +
                     std::to_string(n > 1 ? to_parent[1] : 0);
  auto sub = std::make_shared<FiniteGroup>(name, n, std::move(table),
                                           std::move(perms), std::vector<int>{});
  return {sub, g, std::move(to_parent), std::move(from_parent)};
}

}  // namespace

EmbeddedGroup embedded_group(const Subgroup& s) {
  auto parent = s.parent;  // keep alive across the cache call
  return embed_cache().get(SubKey{parent.get(), s.members},
                           [&](const SubKey&) { return build_embedded(s); });
}

Quotient quotient_group(const GroupPtr& g, const Subgroup& n) {
  return quotient_cache().get(SubKey{g.get(), n.members},
                              [&](const SubKey&) { return quotient(g, n); });
}

}  // namespace burnside
