#include "burnside/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "burnside/memo.hpp"

namespace burnside {

namespace {

// Known orders fail fast, before any permutation storage is allocated.
void check_order(long long order, int cap, const std::string& what) {
  if (order > cap)
    throw std::runtime_error(what + ": order " + std::to_string(order) +
                             " exceeds cap of " + std::to_string(cap));
}

}  // namespace

GroupPtr cyclic_group(int n, int order_cap) {
  if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
  check_order(n, order_cap, "C" + std::to_string(n));
  Permutation c = Permutation::identity(n);
  for (int i = 0; i < n; ++i) c.images[i] = (i + 1) % n;
  return group_from_generators("C" + std::to_string(n), {c}, order_cap);
}

GroupPtr dihedral_group(int n, int order_cap) {
  if (n < 1) throw std::invalid_argument("dihedral group needs n >= 1");
  std::string name = "D" + std::to_string(n);
  check_order(2LL * n, order_cap, name);
  if (n == 1)
    return group_from_generators(name, {parse_cycles("(0 1)")}, order_cap);
  if (n == 2)
    return group_from_generators(
        name, {parse_cycles("(0 1)"), parse_cycles("(2 3)")}, order_cap);
  Permutation r = Permutation::identity(n), s = Permutation::identity(n);
  for (int i = 0; i < n; ++i) {
    r.images[i] = (i + 1) % n;
    s.images[i] = (n - i) % n;
  }
  return group_from_generators(name, {r, s}, order_cap);
}

GroupPtr dicyclic_group(int order, int order_cap) {
  if (order < 8 || order % 4 != 0)
    throw std::invalid_argument(
        "dicyclic group needs order divisible by 4, at least 8");
  check_order(order, order_cap, "Q" + std::to_string(order));
  int m = order / 4;
  int two_m = 2 * m;
  // Elements a^i b^j with b^2 = a^m and b a b^{-1} = a^{-1}; id = i*2+j.
  auto id = [&](int i, int j) { return i * 2 + j; };
  std::vector<int> table(size_t(order) * order);
  for (int i1 = 0; i1 < two_m; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < two_m; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int r;
          if (j1 == 0)
            r = id((i1 + i2) % two_m, j2);
          else if (j2 == 0)
            r = id(((i1 - i2) % two_m + two_m) % two_m, 1);
          else
            r = id(((i1 - i2 + m) % two_m + two_m) % two_m, 0);
          table[size_t(id(i1, j1)) * order + id(i2, j2)] = r;
        }
  return group_from_table("Q" + std::to_string(order), order, std::move(table),
                          order_cap);
}

GroupPtr symmetric_group(int n, int order_cap) {
  if (n < 1) throw std::invalid_argument("symmetric group needs n >= 1");
  std::string name = "S" + std::to_string(n);
  long long ord = 1;
  for (int i = 2; i <= n && ord <= order_cap; ++i) ord *= i;
  if (ord > order_cap)
    throw std::runtime_error(name + ": order is at least " +
                             std::to_string(ord) + ", cap is " +
                             std::to_string(order_cap));
  if (n == 1)
    return group_from_generators(name, {Permutation::identity(1)}, order_cap);
  Permutation c = Permutation::identity(n);
  for (int i = 0; i < n; ++i) c.images[i] = (i + 1) % n;
  return group_from_generators(name, {parse_cycles("(0 1)", n), c}, order_cap);
}

GroupPtr alternating_group(int n, int order_cap) {
  if (n < 1) throw std::invalid_argument("alternating group needs n >= 1");
  std::string name = "A" + std::to_string(n);
  long long ord = 1;
  for (int i = 2; i <= n && ord / 2 <= order_cap; ++i) ord *= i;
  if (n > 2 && ord / 2 > order_cap)
    throw std::runtime_error(name + ": order is at least " +
                             std::to_string(ord / 2) + ", cap is " +
                             std::to_string(order_cap));
  if (n <= 2)
    return group_from_generators(name, {Permutation::identity(n)}, order_cap);
  if (n == 3)
    return group_from_generators(name, {parse_cycles("(0 1 2)")}, order_cap);
  Permutation c = Permutation::identity(n);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) c.images[i] = (i + 1) % n;
  } else {
    for (int i = 1; i < n; ++i) c.images[i] = i % (n - 1) + 1;
  }
  return group_from_generators(name, {parse_cycles("(0 1 2)", n), c}, order_cap);
}

GroupPtr special_linear_2(int q, int order_cap) {
  if (q != 3 && q != 5)
    throw std::invalid_argument("special_linear_2 supports q = 3 or 5");
  // Act on the q^2 - 1 nonzero vectors of F_q^2.
  auto point = [&](int x, int y) { return x * q + y - 1; };
  auto act = [&](int a, int b, int c, int d) {
    Permutation p = Permutation::identity(q * q - 1);
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y) {
        if (x == 0 && y == 0) continue;
        p.images[point(x, y)] = point((a * x + b * y) % q, (c * x + d * y) % q);
      }
    return p;
  };
  Permutation s = act(0, q - 1, 1, 0);  // [[0,-1],[1,0]]
  Permutation t = act(1, 1, 0, 1);      // [[1,1],[0,1]]
  return group_from_generators("SL(2," + std::to_string(q) + ")", {s, t},
                               order_cap);
}

GroupPtr projective_special_linear_2_7(int order_cap) {
  // Projective line over F_7: points 0..6 are field elements, 7 is infinity.
  const int q = 7, inf = 7;
  Permutation t = Permutation::identity(8);
  for (int z = 0; z < q; ++z) t.images[z] = (z + 1) % q;
  Permutation s = Permutation::identity(8);  // z -> -1/z
  s.images[0] = inf;
  s.images[inf] = 0;
  for (int z = 1; z < q; ++z) {
    int zi = 1;
    while (z * zi % q != 1) ++zi;
    s.images[z] = (q - zi) % q;
  }
  return group_from_generators("PSL(2,7)", {t, s}, order_cap);
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;
  int cap;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("group spec \"" + s + "\": " + what +
                                " at position " + std::to_string(i));
  }

  int read_int() {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("expected a number");
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > 1000000) fail("number too large");
      ++i;
    }
    return int(v);
  }

  bool try_literal(const std::string& lit) {
    if (s.compare(i, lit.size(), lit) == 0) {
      i += lit.size();
      return true;
    }
    return false;
  }

  GroupPtr atom() {
    if (try_literal("SL(2,3)")) return special_linear_2(3, cap);
    if (try_literal("SL(2,5)")) return special_linear_2(5, cap);
    if (try_literal("PSL(2,7)")) return projective_special_linear_2_7(cap);
    if (try_literal("perm:")) {
      static const std::string allowed = "( )0123456789,";
      size_t start = i;
      while (i < s.size() && allowed.find(s[i]) != std::string::npos) ++i;
      std::string payload = s.substr(start, i - start);
      if (payload.empty()) fail("empty permutation list");
      std::vector<Permutation> gens;
      size_t pos = 0;
      // Generators are comma-separated at depth zero.
      int depth = 0;
      size_t gen_start = 0;
      auto flush = [&](size_t end) {
        std::string one = payload.substr(gen_start, end - gen_start);
        if (one.find_first_not_of(' ') == std::string::npos)
          fail("empty generator");
        gens.push_back(parse_cycles(one));
      };
      for (pos = 0; pos < payload.size(); ++pos) {
        if (payload[pos] == '(') ++depth;
        if (payload[pos] == ')') --depth;
        if (payload[pos] == ',' && depth == 0) {
          flush(pos);
          gen_start = pos + 1;
        }
      }
      flush(payload.size());
      int degree = 0;
      for (const auto& g : gens) degree = std::max(degree, g.degree());
      if (degree > 5000) fail("permutation degree too large (limit 5000)");
      for (auto& g : gens) {
        Permutation p = Permutation::identity(degree);
        for (int x = 0; x < g.degree(); ++x) p.images[x] = g(x);
        g = std::move(p);
      }
      return group_from_generators("perm:" + payload, gens, cap);
    }
    if (i >= s.size()) fail("expected an atom");
    char c = s[i];
    ++i;
    switch (c) {
      case 'C':
        return cyclic_group(read_int(), cap);
      case 'D':
        return dihedral_group(read_int(), cap);
      case 'Q':
        return dicyclic_group(read_int(), cap);
      case 'S':
        return symmetric_group(read_int(), cap);
      case 'A':
        return alternating_group(read_int(), cap);
      default:
        --i;
        fail("unknown atom");
    }
  }

  GroupPtr expr() {
    GroupPtr g = atom();
    while (i < s.size() && s[i] == 'x') {
      ++i;
      GroupPtr h = atom();
      g = direct_product(g->name() + "x" + h->name(), g, h, cap);
    }
    if (i != s.size()) fail("trailing input");
    return g;
  }
};

GroupPtr parse_uncached(const std::string& s, int cap) {
  Parser p{s, 0, cap};
  return p.expr();
}

// Catalog entries always construct under this cap, independent of the
// environment override; --max-order filters usage, not the catalog itself.
constexpr int kCatalogCap = 2000;

Memo<std::string, GroupPtr>& spec_cache() {
  static Memo<std::string, GroupPtr> memo;
  return memo;
}

// Cache key carries the cap: a failed parse under a small cap must not
// poison the same expression under a larger one.
GroupPtr parse_cached(const std::string& s, int cap) {
  return spec_cache().get(s + "#" + std::to_string(cap),
                          [&](const std::string&) { return parse_uncached(s, cap); });
}

const char* kCatalogSpecs[][2] = {
    // name, spec (empty spec: name parses directly)
    {"C3:C4", "perm:(4 5 6),(0 1 2 3)(5 6)"},
    {"C7:C3", "perm:(0 1 2 3 4 5 6),(1 2 4)(3 6 5)"},
    {"C5:C4", "perm:(0 1 2 3 4),(1 2 4 3)"},
};

std::vector<CatalogEntry> build_catalog() {
  std::vector<std::string> names;
  for (int n = 1; n <= 36; ++n) names.push_back("C" + std::to_string(n));
  for (int n : {1, 2, 3, 5, 6, 10})
    names.push_back("C" + std::to_string(n) + "xC" + std::to_string(n));
  names.push_back("C4xC4");
  names.push_back("C2xC2xC2");
  names.push_back("C2xC2xC2xC2");
  for (int n = 2; n <= 12; ++n) names.push_back("D" + std::to_string(n));
  for (const char* n : {"Q8", "Q16", "S3", "S4", "S5", "A4", "A5", "SL(2,3)",
                        "SL(2,5)", "PSL(2,7)", "C3:C4", "C7:C3", "C5:C4",
                        "D4xC2", "A4xC2"})
    names.push_back(n);

  std::vector<CatalogEntry> entries;
  for (const std::string& name : names) {
    std::string spec = name;
    for (const auto& row : kCatalogSpecs)
      if (name == row[0]) spec = row[1];
    GroupPtr g = parse_cached(spec, kCatalogCap);
    entries.push_back({name, spec, g->order()});
  }
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

bool is_catalog_name(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return true;
  return false;
}

GroupSpec parse_group_spec(const std::string& s, int order_cap) {
  std::string spec = s;
  bool from_catalog = false;
  for (const auto& e : catalog_entries())
    if (e.name == s) {
      spec = e.spec;
      from_catalog = true;
      break;
    }
  // Catalog entries share the canonical instance; the cap still gates usage.
  GroupPtr g = from_catalog ? parse_cached(spec, kCatalogCap)
                            : parse_cached(spec, order_cap);
  if (g->order() > order_cap)
    throw std::runtime_error("group spec \"" + s + "\": order " +
                             std::to_string(g->order()) + " exceeds cap of " +
                             std::to_string(order_cap));
  return {s, g};
}

std::string catalog_isomorphism_type(const GroupPtr& g) {
  for (const auto& e : catalog_entries()) {
    if (e.order != g->order()) continue;
    GroupPtr h = parse_cached(e.spec, kCatalogCap);
    if (are_isomorphic(g, h)) return e.name;
  }
  return "";
}

std::string describe_isomorphism_type(const GroupPtr& g) {
  std::string name = catalog_isomorphism_type(g);
  if (!name.empty()) return name;
  std::string out = "perm:";
  bool first = true;
  for (int t : g->generators()) {
    if (!first) out += ",";
    out += to_cycles(g->perm(t));
    first = false;
  }
  if (g->generators().empty()) out += "()";
  return out;
}

}  // namespace burnside
