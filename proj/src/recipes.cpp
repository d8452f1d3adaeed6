#include "tpplab/recipes.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace tpplab {

GroupRecipe GroupRecipe::cyclic(unsigned n) {
  GroupRecipe r;
  r.kind = RecipeKind::Cyclic;
  r.params = {long(n)};
  return r;
}

GroupRecipe GroupRecipe::dihedral(unsigned order) {
  GroupRecipe r;
  r.kind = RecipeKind::Dihedral;
  r.params = {long(order)};
  return r;
}

GroupRecipe GroupRecipe::quaternion8() {
  GroupRecipe r;
  r.kind = RecipeKind::Quaternion;
  return r;
}

GroupRecipe GroupRecipe::elementary_abelian(unsigned p, unsigned k) {
  GroupRecipe r;
  r.kind = RecipeKind::ElementaryAbelian;
  r.params = {long(p), long(k)};
  return r;
}

GroupRecipe GroupRecipe::direct_product(GroupRecipe a, GroupRecipe b) {
  GroupRecipe r;
  r.kind = RecipeKind::DirectProduct;
  r.children.push_back(std::make_shared<GroupRecipe>(std::move(a)));
  r.children.push_back(std::make_shared<GroupRecipe>(std::move(b)));
  return r;
}

GroupRecipe GroupRecipe::central_product(GroupRecipe a, GroupRecipe b, unsigned zeta_a,
                                         unsigned zeta_b) {
  GroupRecipe r;
  r.kind = RecipeKind::CentralProduct;
  r.children.push_back(std::make_shared<GroupRecipe>(std::move(a)));
  r.children.push_back(std::make_shared<GroupRecipe>(std::move(b)));
  r.params = {long(zeta_a), long(zeta_b)};
  return r;
}

GroupRecipe GroupRecipe::from_generators(unsigned degree,
                                         std::vector<std::vector<unsigned>> gens) {
  GroupRecipe r;
  r.kind = RecipeKind::FromGenerators;
  r.degree = degree;
  r.generators = std::move(gens);
  return r;
}

GroupRecipe GroupRecipe::from_table_file(std::string path) {
  GroupRecipe r;
  r.kind = RecipeKind::FromTableFile;
  r.path = std::move(path);
  return r;
}

namespace {

GroupTable build_cyclic(unsigned n) {
  if (n == 0) throw GroupError(Err::BadParams, "cyclic order must be positive");
  std::vector<std::uint16_t> flat(std::size_t(n) * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) flat[std::size_t(i) * n + j] = std::uint16_t((i + j) % n);
  std::vector<std::string> labels(n);
  labels[0] = "1";
  for (unsigned i = 1; i < n; ++i) labels[i] = i == 1 ? "x" : "x" + std::to_string(i);
  return GroupTable::validate_flat(n, std::move(flat), std::move(labels));
}

// Order 2m: indices [0, m) are rotations r^i, [m, 2m) are reflections r^i s.
GroupTable build_dihedral(unsigned order) {
  if (order < 4 || order % 2 != 0)
    throw GroupError(Err::BadParams, "dihedral order must be even and >= 4");
  const unsigned m = order / 2;
  const unsigned n = order;
  auto enc = [&](unsigned rot, bool refl) { return refl ? m + rot : rot; };
  std::vector<std::uint16_t> flat(std::size_t(n) * n);
  for (unsigned i = 0; i < n; ++i) {
    unsigned ri = i % m;
    bool fi = i >= m;
    for (unsigned j = 0; j < n; ++j) {
      unsigned rj = j % m;
      bool fj = j >= m;
      // (r^a s^e)(r^b s^f) = r^(a + b or a - b) s^(e xor f)
      unsigned rot = fi ? (ri + m - rj) % m : (ri + rj) % m;
      flat[std::size_t(i) * n + j] = std::uint16_t(enc(rot, fi != fj));
    }
  }
  std::vector<std::string> labels(n);
  for (unsigned i = 0; i < m; ++i) {
    labels[i] = i == 0 ? "1" : (i == 1 ? "r" : "r" + std::to_string(i));
    labels[m + i] = i == 0 ? "s" : (i == 1 ? "rs" : "r" + std::to_string(i) + "s");
  }
  return GroupTable::validate_flat(n, std::move(flat), std::move(labels));
}

// {1, -1, i, -i, j, -j, k, -k}; index = axis * 2 + (sign < 0).
GroupTable build_quaternion8() {
  auto mul_axes = [](unsigned a, unsigned b, int& sign) -> unsigned {
    // axes: 0 = e, 1 = i, 2 = j, 3 = k
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == b) {
      sign = -sign;
      return 0;
    }
    // i*j = k, j*k = i, k*i = j, anticommutative otherwise
    static const unsigned third[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    unsigned c = third[a][b];
    bool forward = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
    if (!forward) sign = -sign;
    return c;
  };
  const unsigned n = 8;
  std::vector<std::uint16_t> flat(64);
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y) {
      int sign = (x & 1 ? -1 : 1) * (y & 1 ? -1 : 1);
      unsigned axis = mul_axes(x >> 1, y >> 1, sign);
      flat[x * n + y] = std::uint16_t(axis * 2 + (sign < 0 ? 1 : 0));
    }
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return GroupTable::validate_flat(n, std::move(flat), std::move(labels));
}

GroupTable build_elementary_abelian(unsigned p, unsigned k) {
  if (p < 2 || k == 0) throw GroupError(Err::BadParams, "need prime p >= 2 and k >= 1");
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) throw GroupError(Err::BadParams, "p must be prime");
  unsigned long n = 1;
  for (unsigned i = 0; i < k; ++i) {
    n *= p;
    if (n > kVerifyCap) throw GroupError(Err::CapExceeded, "order exceeds verification cap");
  }
  const unsigned nn = unsigned(n);
  std::vector<std::uint16_t> flat(std::size_t(nn) * nn);
  for (unsigned a = 0; a < nn; ++a)
    for (unsigned b = 0; b < nn; ++b) {
      unsigned x = a, y = b, pw = 1, sum = 0;
      for (unsigned i = 0; i < k; ++i) {
        sum += ((x % p) + (y % p)) % p * pw;
        x /= p;
        y /= p;
        pw *= p;
      }
      flat[std::size_t(a) * nn + b] = std::uint16_t(sum);
    }
  return GroupTable::validate_flat(nn, std::move(flat));
}

}  // namespace

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const unsigned na = a.order(), nb = b.order();
  unsigned long n = static_cast<unsigned long>(na) * nb;
  if (n > kVerifyCap)
    throw GroupError(Err::CapExceeded, "direct product order exceeds verification cap");
  const unsigned nn = unsigned(n);
  std::vector<std::uint16_t> flat(std::size_t(nn) * nn);
  for (unsigned x = 0; x < nn; ++x)
    for (unsigned y = 0; y < nn; ++y) {
      unsigned xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
      flat[std::size_t(x) * nn + y] = std::uint16_t(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  return GroupTable::validate_flat(nn, std::move(flat));
}

GroupTable central_product(const GroupTable& a, const GroupTable& b, unsigned zeta_a,
                           unsigned zeta_b) {
  if (zeta_a >= a.order() || zeta_b >= b.order())
    throw GroupError(Err::BadParams, "central generator index out of range");
  const unsigned p = a.element_order(zeta_a);
  auto is_central = [](const GroupTable& g, unsigned z) {
    for (unsigned x = 0; x < g.order(); ++x)
      if (g.mul(z, x) != g.mul(x, z)) return false;
    return true;
  };
  // The identification must be an isomorphism of central subgroups of the
  // same prime order.
  if (p < 2 || b.element_order(zeta_b) != p)
    throw GroupError(Err::CentralSubgroupMismatch,
                     "identified generators have different (or trivial) orders");
  bool prime = true;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime)
    throw GroupError(Err::CentralSubgroupMismatch, "identified subgroup order is not prime");
  if (!is_central(a, zeta_a) || !is_central(b, zeta_b))
    throw GroupError(Err::CentralSubgroupMismatch, "identified generators are not central");

  GroupTable prod = direct_product(a, b);
  // Amalgamate: quotient by the graph of zeta_a -> zeta_b^-1.
  ElementSet n;
  n.parent = &prod;
  unsigned za = zeta_a, zb = b.inverse(zeta_b);
  unsigned cur_a = 0, cur_b = 0;
  for (unsigned i = 0; i < p; ++i) {
    n.members.set(cur_a * b.order() + cur_b);
    cur_a = a.mul(cur_a, za);
    cur_b = b.mul(cur_b, zb);
  }
  n.is_subgroup = true;
  return quotient_group(prod, n).table;
}

GroupTable construct_named(const GroupRecipe& recipe) { return build_recipe(recipe, "."); }

GroupTable build_recipe(const GroupRecipe& recipe, const std::string& base_dir) {
  switch (recipe.kind) {
    case RecipeKind::Cyclic:
      if (recipe.params.size() != 1) throw GroupError(Err::BadParams, "cyclic needs one param");
      return build_cyclic(unsigned(recipe.params[0]));
    case RecipeKind::Dihedral:
      if (recipe.params.size() != 1) throw GroupError(Err::BadParams, "dihedral needs one param");
      return build_dihedral(unsigned(recipe.params[0]));
    case RecipeKind::Quaternion:
      return build_quaternion8();
    case RecipeKind::ElementaryAbelian:
      if (recipe.params.size() != 2)
        throw GroupError(Err::BadParams, "elementary abelian needs p and k");
      return build_elementary_abelian(unsigned(recipe.params[0]), unsigned(recipe.params[1]));
    case RecipeKind::DirectProduct: {
      if (recipe.children.size() != 2)
        throw GroupError(Err::BadParams, "direct product needs two factors");
      return direct_product(build_recipe(*recipe.children[0], base_dir),
                            build_recipe(*recipe.children[1], base_dir));
    }
    case RecipeKind::CentralProduct: {
      if (recipe.children.size() != 2 || recipe.params.size() != 2)
        throw GroupError(Err::BadParams, "central product needs two factors and two generators");
      return central_product(build_recipe(*recipe.children[0], base_dir),
                             build_recipe(*recipe.children[1], base_dir),
                             unsigned(recipe.params[0]), unsigned(recipe.params[1]));
    }
    case RecipeKind::FromGenerators: {
      if (!recipe.path.empty()) {
        std::ifstream in(base_dir + "/" + recipe.path);
        if (!in) throw GroupError(Err::IoError, "cannot open " + recipe.path);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_group_or_generators(ss.str());
      }
      return group_from_permutations(recipe.degree, recipe.generators);
    }
    case RecipeKind::FromTableFile: {
      std::ifstream in(base_dir + "/" + recipe.path);
      if (!in) throw GroupError(Err::IoError, "cannot open " + recipe.path);
      std::stringstream ss;
      ss << in.rdbuf();
      return parse_group_or_generators(ss.str());
    }
  }
  throw GroupError(Err::BadParams, "unknown recipe kind");
}

// --- recipe expressions ---------------------------------------------------

namespace {

struct RecipeParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit RecipeParser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw GroupError(Err::ParseError, "recipe '" + s + "': " + why + " at offset " +
                                          std::to_string(pos));
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(s[pos]) || s[pos] == '_' || s[pos] == '.' ||
                              s[pos] == '-' || s[pos] == '/'))
      ++pos;
    if (start == pos) fail("expected identifier");
    return s.substr(start, pos - start);
  }

  long number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(s[pos])) ++pos;
    if (start == pos) fail("expected number");
    return std::stol(s.substr(start, pos - start));
  }

  GroupRecipe parse() {
    std::string name = ident();
    if (name == "cyclic") {
      expect('(');
      long n = number();
      expect(')');
      return GroupRecipe::cyclic(unsigned(n));
    }
    if (name == "dihedral") {
      expect('(');
      long n = number();
      expect(')');
      return GroupRecipe::dihedral(unsigned(n));
    }
    if (name == "quaternion8") {
      if (eat('(')) expect(')');
      return GroupRecipe::quaternion8();
    }
    if (name == "elemab") {
      expect('(');
      long p = number();
      expect(',');
      long k = number();
      expect(')');
      return GroupRecipe::elementary_abelian(unsigned(p), unsigned(k));
    }
    if (name == "direct") {
      expect('(');
      GroupRecipe a = parse();
      expect(',');
      GroupRecipe b = parse();
      expect(')');
      return GroupRecipe::direct_product(std::move(a), std::move(b));
    }
    if (name == "central") {
      expect('(');
      GroupRecipe a = parse();
      expect(',');
      GroupRecipe b = parse();
      expect(',');
      long za = number();
      expect(',');
      long zb = number();
      expect(')');
      return GroupRecipe::central_product(std::move(a), std::move(b), unsigned(za), unsigned(zb));
    }
    if (name == "gens" || name == "table") {
      expect('(');
      std::string path = ident();
      expect(')');
      GroupRecipe r;
      r.kind = name == "gens" ? RecipeKind::FromGenerators : RecipeKind::FromTableFile;
      r.path = path;
      return r;
    }
    fail("unknown constructor '" + name + "'");
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
};

}  // namespace

GroupRecipe parse_recipe(const std::string& expr) {
  RecipeParser p(expr);
  GroupRecipe r = p.parse();
  p.skip_ws();
  if (p.pos != expr.size()) p.fail("trailing content");
  return r;
}

std::string recipe_to_string(const GroupRecipe& r) {
  switch (r.kind) {
    case RecipeKind::Cyclic:
      return "cyclic(" + std::to_string(r.params[0]) + ")";
    case RecipeKind::Dihedral:
      return "dihedral(" + std::to_string(r.params[0]) + ")";
    case RecipeKind::Quaternion:
      return "quaternion8";
    case RecipeKind::ElementaryAbelian:
      return "elemab(" + std::to_string(r.params[0]) + "," + std::to_string(r.params[1]) + ")";
    case RecipeKind::DirectProduct:
      return "direct(" + recipe_to_string(*r.children[0]) + "," +
             recipe_to_string(*r.children[1]) + ")";
    case RecipeKind::CentralProduct:
      return "central(" + recipe_to_string(*r.children[0]) + "," +
             recipe_to_string(*r.children[1]) + "," + std::to_string(r.params[0]) + "," +
             std::to_string(r.params[1]) + ")";
    case RecipeKind::FromGenerators:
      return "gens(" + r.path + ")";
    case RecipeKind::FromTableFile:
      return "table(" + r.path + ")";
  }
  return "?";
}

}  // namespace tpplab
