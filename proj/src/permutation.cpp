#include "burnside/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace burnside {

Permutation Permutation::identity(int d) {
  std::vector<int> im(d);
  for (int i = 0; i < d; ++i) im[i] = i;
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images[i] != i) return false;
  return true;
}

bool Permutation::is_bijection() const {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || v >= degree() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images.size());
  for (int i = 0; i < degree(); ++i) im[images[i]] = i;
  return Permutation(std::move(im));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> im(a.degree());
  for (int x = 0; x < a.degree(); ++x) im[x] = a(b(x));
  return Permutation(std::move(im));
}

Permutation parse_cycles(const std::string& s, int min_degree) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i >= s.size()) throw std::invalid_argument("parse_cycles: empty input");
  while (i < s.size()) {
    if (s[i] != '(')
      throw std::invalid_argument("parse_cycles: expected '(' at position " +
                                  std::to_string(i));
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < s.size() && s[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("parse_cycles: expected digit at position " +
                                    std::to_string(i));
      int v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > 1000000)
          throw std::invalid_argument("parse_cycles: point too large at position " +
                                      std::to_string(i));
        ++i;
      }
      cyc.push_back(v);
      skip_ws();
      if (i < s.size() && s[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= s.size())
      throw std::invalid_argument("parse_cycles: unterminated cycle");
    ++i;  // ')'
    if (cyc.size() == 1)
      throw std::invalid_argument("parse_cycles: singleton cycle");
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }

  int degree = min_degree;
  for (const auto& cyc : cycles)
    for (int v : cyc) degree = std::max(degree, v + 1);

  Permutation p = Permutation::identity(degree);
  std::vector<char> moved(degree, 0);
  for (const auto& cyc : cycles) {
    for (int v : cyc) {
      if (moved[v])
        throw std::invalid_argument("parse_cycles: point " + std::to_string(v) +
                                    " repeated");
      moved[v] = 1;
    }
    for (size_t k = 0; k < cyc.size(); ++k)
      p.images[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  return p;
}

std::string to_cycles(const Permutation& p) {
  std::vector<char> done(p.degree(), 0);
  std::ostringstream out;
  bool any = false;
  for (int start = 0; start < p.degree(); ++start) {
    if (done[start] || p(start) == start) continue;
    any = true;
    out << '(';
    int x = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << x;
      done[x] = 1;
      x = p(x);
      first = false;
    } while (x != start);
    out << ')';
  }
  return any ? out.str() : "()";
}

}  // namespace burnside
