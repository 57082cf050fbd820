#pragma once

#include <string>
#include <vector>

namespace burnside {

// Bijection of {0, ..., d-1}, stored as the image table.
struct Permutation {
  std::vector<int> images;

  Permutation() = default;
  explicit Permutation(std::vector<int> im) : images(std::move(im)) {}

  static Permutation identity(int d);

  int degree() const { return int(images.size()); }
  int operator()(int x) const { return images[x]; }
  bool is_identity() const;
  bool is_bijection() const;

  Permutation inverse() const;

  bool operator==(const Permutation& o) const { return images == o.images; }
  bool operator<(const Permutation& o) const { return images < o.images; }
};

// (a * b)(x) = a(b(x)): b acts first.
Permutation compose(const Permutation& a, const Permutation& b);

// Cycle notation without fixed points, e.g. "(0 1 2)(3 4)"; "()" is the
// identity. Degree is inferred as max moved point + 1 unless min_degree is
// larger.
Permutation parse_cycles(const std::string& s, int min_degree = 0);
std::string to_cycles(const Permutation& p);

}  // namespace burnside
