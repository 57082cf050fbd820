#include "burnside/burnside.hpp"

#include <stdexcept>

#include "burnside/memo.hpp"

namespace burnside {

MarksPtr build_marks_table(const GroupPtr& g) {
  auto t = std::make_shared<MarksTable>();
  t->group = g;
  t->lattice = lattice_of(g);
  const SubgroupLattice& lat = *t->lattice;
  int k = lat.num_classes();
  t->entry.assign(k, std::vector<long long>(k, 0));

  for (int kc = 0; kc < k; ++kc) {
    const Subgroup& sk = lat.subgroups[lat.reps[kc]];
    std::vector<int> reps = coset_representatives(*g, sk.members);
    std::vector<int> hmem;
    for (int hc = 0; hc < k; ++hc) {
      const Subgroup& sh = lat.subgroups[lat.reps[hc]];
      if (sh.order() > sk.order()) continue;
      hmem = sh.members.to_vector();
      long long fixed = 0;
      for (int rep : reps) {
        int gi = g->inv(rep);
        bool all_in = true;
        for (int h : hmem)
          if (!sk.contains(g->mul(g->mul(gi, h), rep))) {
            all_in = false;
            break;
          }
        if (all_in) ++fixed;
      }
      t->entry[hc][kc] = fixed;
    }
  }
  return t;
}

namespace {

Memo<const FiniteGroup*, MarksPtr>& marks_cache() {
  static Memo<const FiniteGroup*, MarksPtr> memo;
  return memo;
}

void require_same_group(const BurnsideElement& a, const BurnsideElement& b) {
  if (a.group != b.group)
    throw std::invalid_argument("elements live over different groups");
}

}  // namespace

MarksPtr marks_of(const GroupPtr& g) {
  return marks_cache().get(
      g.get(), [&](const FiniteGroup*) { return build_marks_table(g); });
}

bool BurnsideElement::integral() const {
  for (const Rat& c : coeffs)
    if (!is_integral(c)) return false;
  return true;
}

bool BurnsideElement::is_zero() const {
  for (const Rat& c : coeffs)
    if (c != 0) return false;
  return true;
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& o) {
  require_same_group(*this, o);
  for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& o) {
  require_same_group(*this, o);
  for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

BurnsideElement& BurnsideElement::operator*=(const Rat& s) {
  for (Rat& c : coeffs) c *= s;
  return *this;
}

bool BurnsideElement::operator==(const BurnsideElement& o) const {
  return group == o.group && coeffs == o.coeffs;
}

BurnsideElement zero_element(const GroupPtr& g) {
  LatticePtr lat = lattice_of(g);
  return {g, lat, std::vector<Rat>(lat->num_classes(), Rat(0))};
}

BurnsideElement basis_element(const GroupPtr& g, int class_index) {
  BurnsideElement u = zero_element(g);
  u.coeffs.at(class_index) = 1;
  return u;
}

BurnsideElement unit_element(const GroupPtr& g) {
  BurnsideElement u = zero_element(g);
  u.coeffs[u.lattice->top_class()] = 1;
  return u;
}

std::vector<Rat> to_marks(const BurnsideElement& u) {
  const MarksTable& t = *marks_of(u.group);
  int k = t.size();
  std::vector<Rat> v(k, Rat(0));
  for (int j = 0; j < k; ++j) {
    if (u.coeffs[j] == 0) continue;
    for (int i = 0; i < k; ++i)
      if (t.entry[i][j] != 0) v[i] += u.coeffs[j] * Rat(long(t.entry[i][j]));
  }
  return v;
}

BurnsideElement from_marks(const GroupPtr& g, const std::vector<Rat>& marks) {
  const MarksTable& t = *marks_of(g);
  int k = t.size();
  if (int(marks.size()) != k)
    throw std::invalid_argument("marks vector has wrong length");
  BurnsideElement u = zero_element(g);
  for (int i = k - 1; i >= 0; --i) {
    Rat acc = marks[i];
    for (int j = i + 1; j < k; ++j)
      if (t.entry[i][j] != 0 && u.coeffs[j] != 0)
        acc -= Rat(long(t.entry[i][j])) * u.coeffs[j];
    u.coeffs[i] = acc / Rat(long(t.entry[i][i]));
  }
  return u;
}

BurnsideElement idempotent(const GroupPtr& g, int class_index) {
  LatticePtr latp = lattice_of(g);
  const SubgroupLattice& lat = *latp;
  int h = lat.reps.at(class_index);
  BurnsideElement u = zero_element(g);
  lat.down[h].for_each([&](int x) {
    long long mu = lat.mobius_table[x][h];
    if (mu != 0) u.coeffs[lat.class_of[x]] += Rat(lat.order_of(x)) * Rat(long(mu));
  });
  Rat scale = Rat(1) / Rat(lat.normalizer_order[h]);
  u *= scale;
  return u;
}

BurnsideElement top_idempotent(const GroupPtr& g) {
  return idempotent(g, lattice_of(g)->top_class());
}

BurnsideElement multiply(const BurnsideElement& u, const BurnsideElement& v) {
  require_same_group(u, v);
  std::vector<Rat> mu = to_marks(u), mv = to_marks(v);
  for (size_t i = 0; i < mu.size(); ++i) mu[i] *= mv[i];
  return from_marks(u.group, mu);
}

Rat m_coefficient(const GroupPtr& g, const Subgroup& n) {
  if (n.parent != g) throw std::invalid_argument("m_coefficient: wrong parent");
  if (!is_normal(n))
    throw std::invalid_argument("m_coefficient: subgroup not normal");
  const SubgroupLattice& lat = *lattice_of(g);
  int top = lat.top_subgroup();
  long long order = g->order(), nord = n.order();
  Int acc = 0;
  for (int x = 0; x < lat.num_subgroups(); ++x) {
    // X N = G exactly when |X| |N| = |G| |X meet N|.
    long long xord = lat.order_of(x);
    long long meet = (lat.subgroups[x].members & n.members).count();
    if (xord * nord != order * meet) continue;
    long long mu = lat.mobius_table[x][top];
    if (mu != 0) acc += Int(long(xord)) * Int(long(mu));
  }
  return Rat(acc) / Rat(Int(long(order)));
}

BurnsideElement restrict_to(const BurnsideElement& u, const Subgroup& k) {
  if (k.parent != u.group)
    throw std::invalid_argument("restrict_to: not a subgroup of the domain");
  const GroupPtr& g = u.group;
  if (k.order() == g->order()) return u;

  EmbeddedGroup ek = embedded_group(k);
  const SubgroupLattice& klat = *lattice_of(ek.group);
  BurnsideElement out = zero_element(ek.group);

  const SubgroupLattice& lat = *u.lattice;
  for (int c = 0; c < lat.num_classes(); ++c) {
    if (u.coeffs[c] == 0) continue;
    const Subgroup& x = lat.subgroups[lat.reps[c]];
    // K-orbits on G/X are the double cosets K g X; the stabilizer of gX in K
    // is K meet gXg^{-1}.
    for (int rep : double_cosets(*g, k.members, x.members)) {
      int gi = g->inv(rep);
      Bitset stab(ek.group->order());
      k.members.for_each([&](int y) {
        if (x.contains(g->mul(g->mul(gi, y), rep))) stab.set(ek.from_parent[y]);
      });
      out.coeffs[klat.class_of[klat.index_of(stab)]] += u.coeffs[c];
    }
  }
  return out;
}

BurnsideElement induce_from(const BurnsideElement& u, const Subgroup& k) {
  EmbeddedGroup ek = embedded_group(k);
  if (u.group != ek.group)
    throw std::invalid_argument("induce_from: element not over the subgroup");
  if (k.order() == k.parent->order()) return u;

  const GroupPtr& g = k.parent;
  const SubgroupLattice& glat = *lattice_of(g);
  BurnsideElement out = zero_element(g);
  const SubgroupLattice& klat = *u.lattice;
  for (int c = 0; c < klat.num_classes(); ++c) {
    if (u.coeffs[c] == 0) continue;
    Bitset global(g->order());
    klat.subgroups[klat.reps[c]].members.for_each(
        [&](int y) { global.set(ek.to_parent[y]); });
    out.coeffs[glat.class_of[glat.index_of(global)]] += u.coeffs[c];
  }
  return out;
}

BurnsideElement inflate_from(const BurnsideElement& u, const GroupPtr& g,
                             const Subgroup& n) {
  Quotient q = quotient_group(g, n);
  if (u.group != q.group)
    throw std::invalid_argument("inflate_from: element not over the quotient");
  const SubgroupLattice& glat = *lattice_of(g);
  BurnsideElement out = zero_element(g);
  const SubgroupLattice& qlat = *u.lattice;
  for (int c = 0; c < qlat.num_classes(); ++c) {
    if (u.coeffs[c] == 0) continue;
    const Bitset& down = qlat.subgroups[qlat.reps[c]].members;
    Bitset pre(g->order());
    for (int x = 0; x < g->order(); ++x)
      if (down.test(q.projection(x))) pre.set(x);
    out.coeffs[glat.class_of[glat.index_of(pre)]] += u.coeffs[c];
  }
  return out;
}

BurnsideElement deflate_to(const BurnsideElement& u, const Subgroup& n) {
  const GroupPtr& g = u.group;
  Quotient q = quotient_group(g, n);
  const SubgroupLattice& qlat = *lattice_of(q.group);
  BurnsideElement out = zero_element(q.group);
  const SubgroupLattice& lat = *u.lattice;
  for (int c = 0; c < lat.num_classes(); ++c) {
    if (u.coeffs[c] == 0) continue;
    Bitset img(q.group->order());
    lat.subgroups[lat.reps[c]].members.for_each(
        [&](int x) { img.set(q.projection(x)); });
    out.coeffs[qlat.class_of[qlat.index_of(img)]] += u.coeffs[c];
  }
  return out;
}

BurnsideElement transport(const BurnsideElement& u, const GroupHom& phi) {
  if (phi.source != u.group)
    throw std::invalid_argument("transport: domain mismatch");
  if (!is_isomorphism(phi))
    throw std::invalid_argument("transport: hom is not an isomorphism");
  const SubgroupLattice& tlat = *lattice_of(phi.target);
  BurnsideElement out = zero_element(phi.target);
  const SubgroupLattice& lat = *u.lattice;
  for (int c = 0; c < lat.num_classes(); ++c) {
    if (u.coeffs[c] == 0) continue;
    Bitset img(phi.target->order());
    lat.subgroups[lat.reps[c]].members.for_each(
        [&](int x) { img.set(phi(x)); });
    out.coeffs[tlat.class_of[tlat.index_of(img)]] += u.coeffs[c];
  }
  return out;
}

nlohmann::json element_to_json(const BurnsideElement& u) {
  nlohmann::json j;
  j["group"] = u.group->name();
  j["basis"] = u.lattice->class_labels;
  nlohmann::json cs = nlohmann::json::array();
  for (const Rat& c : u.coeffs) cs.push_back(rat_to_string(c));
  j["coeffs"] = std::move(cs);
  return j;
}

BurnsideElement element_from_json(const nlohmann::json& j, const GroupPtr& g) {
  if (!j.is_object() || !j.contains("group") || !j.contains("basis") ||
      !j.contains("coeffs"))
    throw std::invalid_argument("element json: missing fields");
  if (j["group"].get<std::string>() != g->name())
    throw std::invalid_argument("element json: group name mismatch");
  BurnsideElement u = zero_element(g);
  const auto& basis = j["basis"];
  const auto& coeffs = j["coeffs"];
  if (!basis.is_array() || !coeffs.is_array() ||
      basis.size() != coeffs.size() ||
      int(basis.size()) != u.lattice->num_classes())
    throw std::invalid_argument("element json: basis/coeffs shape mismatch");
  for (size_t i = 0; i < basis.size(); ++i) {
    const std::string label = basis[i].get<std::string>();
    auto it = u.lattice->class_by_label.find(label);
    if (it == u.lattice->class_by_label.end())
      throw std::invalid_argument("element json: unknown class label " + label);
    u.coeffs[it->second] = rat_from_string(coeffs[i].get<std::string>());
  }
  return u;
}

}  // namespace burnside
