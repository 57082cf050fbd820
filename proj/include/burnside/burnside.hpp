#pragma once

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "burnside/lattice.hpp"
#include "burnside/numeric.hpp"

namespace burnside {

// Table of marks: entry[H][K] = |(G/K)^H|, the number of cosets gK fixed by
// all of H. Triangular in the class order with nonzero diagonal, so it is
// invertible by back substitution.
struct MarksTable {
  GroupPtr group;
  LatticePtr lattice;
  std::vector<std::vector<long long>> entry;  // [H class][K class]

  int size() const { return int(entry.size()); }
};

using MarksPtr = std::shared_ptr<const MarksTable>;

MarksPtr build_marks_table(const GroupPtr& g);
MarksPtr marks_of(const GroupPtr& g);  // cached

// Element of the rationalized Burnside ring in the transitive basis [G/H],
// one coefficient per subgroup conjugacy class, in lattice class order.
struct BurnsideElement {
  GroupPtr group;
  LatticePtr lattice;
  std::vector<Rat> coeffs;

  bool integral() const;
  bool is_zero() const;

  BurnsideElement& operator+=(const BurnsideElement& o);
  BurnsideElement& operator-=(const BurnsideElement& o);
  BurnsideElement& operator*=(const Rat& s);
  bool operator==(const BurnsideElement& o) const;
  bool operator!=(const BurnsideElement& o) const { return !(*this == o); }
};

BurnsideElement zero_element(const GroupPtr& g);
BurnsideElement basis_element(const GroupPtr& g, int class_index);
BurnsideElement unit_element(const GroupPtr& g);  // [G/G]

std::vector<Rat> to_marks(const BurnsideElement& u);
BurnsideElement from_marks(const GroupPtr& g, const std::vector<Rat>& marks);

// Primitive idempotent e_H for the class of H: (1/|N_G(H)|) times the sum of
// |X| mu(X,H) [G/X] over all subgroups X of H.
BurnsideElement idempotent(const GroupPtr& g, int class_index);
BurnsideElement top_idempotent(const GroupPtr& g);

BurnsideElement multiply(const BurnsideElement& u, const BurnsideElement& v);

// Deflation number: (1/|G|) * sum of |X| mu(X,G) over subgroups X with
// X N = G. Requires N normal.
Rat m_coefficient(const GroupPtr& g, const Subgroup& n);

// The five elementary operations. Results live over the cached embedded or
// quotient group, so repeated calls share one lattice.
BurnsideElement restrict_to(const BurnsideElement& u, const Subgroup& k);
BurnsideElement induce_from(const BurnsideElement& u, const Subgroup& k);
BurnsideElement inflate_from(const BurnsideElement& u, const GroupPtr& g,
                             const Subgroup& n);
BurnsideElement deflate_to(const BurnsideElement& u, const Subgroup& n);
BurnsideElement transport(const BurnsideElement& u, const GroupHom& phi);

nlohmann::json element_to_json(const BurnsideElement& u);
BurnsideElement element_from_json(const nlohmann::json& j, const GroupPtr& g);

}  // namespace burnside
