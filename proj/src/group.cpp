#include "tpplab/group.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace tpplab {

namespace {

std::string fmt_pair(unsigned a, unsigned b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

unsigned GroupTable::power(unsigned a, long e) const {
  unsigned base = a;
  if (e < 0) {
    base = inv_[a];
    e = -e;
  }
  unsigned acc = 0;  // identity
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::string GroupTable::label_of(unsigned i) const {
  if (i < labels_.size()) return labels_[i];
  return "g" + std::to_string(i);
}

GroupTable GroupTable::validate(const std::vector<std::vector<unsigned>>& raw,
                                std::vector<std::string> labels) {
  const unsigned n = unsigned(raw.size());
  if (n == 0) throw GroupError(Err::BadParams, "empty table");
  std::vector<std::uint16_t> flat(std::size_t(n) * n);
  for (unsigned i = 0; i < n; ++i) {
    if (raw[i].size() != n)
      throw GroupError(Err::BadParams, "table is not square at row " + std::to_string(i), {i});
    for (unsigned j = 0; j < n; ++j) {
      if (raw[i][j] >= n)
        throw GroupError(Err::BadParams,
                         "entry out of range at " + fmt_pair(i, j), {i, j});
      flat[std::size_t(i) * n + j] = std::uint16_t(raw[i][j]);
    }
  }
  return validate_flat(n, std::move(flat), std::move(labels));
}

GroupTable GroupTable::validate_flat(unsigned n, std::vector<std::uint16_t> flat,
                                     std::vector<std::string> labels) {
  if (n == 0 || flat.size() != std::size_t(n) * n)
    throw GroupError(Err::BadParams, "table size does not match order");
  if (n > kVerifyCap)
    throw GroupError(Err::CapExceeded,
                     "order " + std::to_string(n) + " exceeds the verification cap " +
                         std::to_string(kVerifyCap));

  auto at = [&](unsigned a, unsigned b) -> unsigned { return flat[std::size_t(a) * n + b]; };

  // Latin square: every row and column is a permutation of [0, n).
  {
    std::vector<char> seen(n);
    for (unsigned i = 0; i < n; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (unsigned j = 0; j < n; ++j) {
        unsigned v = at(i, j);
        if (seen[v])
          throw GroupError(Err::NotLatinSquare,
                           "row " + std::to_string(i) + " repeats value " + std::to_string(v),
                           {0, i, v});
        seen[v] = 1;
      }
    }
    for (unsigned j = 0; j < n; ++j) {
      std::fill(seen.begin(), seen.end(), 0);
      for (unsigned i = 0; i < n; ++i) {
        unsigned v = at(i, j);
        if (seen[v])
          throw GroupError(Err::NotLatinSquare,
                           "column " + std::to_string(j) + " repeats value " + std::to_string(v),
                           {1, j, v});
        seen[v] = 1;
      }
    }
  }

  // Two-sided identity.
  unsigned e = n;
  for (unsigned cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (unsigned j = 0; j < n && ok; ++j)
      if (at(cand, j) != j || at(j, cand) != j) ok = false;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e == n) throw GroupError(Err::NoIdentity, "no two-sided identity element");

  // Normalize identity to index 0 by swapping labels 0 <-> e.
  if (e != 0) {
    auto swap_idx = [&](unsigned v) -> std::uint16_t {
      if (v == e) return 0;
      if (v == 0) return std::uint16_t(e);
      return std::uint16_t(v);
    };
    std::vector<std::uint16_t> renum(std::size_t(n) * n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        renum[std::size_t(swap_idx(i)) * n + swap_idx(j)] = swap_idx(at(i, j));
    flat = std::move(renum);
    if (!labels.empty() && labels.size() == n) std::swap(labels[0], labels[e]);
  }

  auto at2 = [&](unsigned a, unsigned b) -> unsigned { return flat[std::size_t(a) * n + b]; };

  // Full associativity scan. Honest n^3 check; the cap above keeps this at
  // desk scale.
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      unsigned ij = at2(i, j);
      for (unsigned k = 0; k < n; ++k)
        if (at2(ij, k) != at2(i, at2(j, k)))
          throw GroupError(Err::NotAssociative,
                           "associativity fails at (" + std::to_string(i) + ", " +
                               std::to_string(j) + ", " + std::to_string(k) + ")",
                           {i, j, k});
    }

  // Two-sided inverses.
  for (unsigned i = 0; i < n; ++i) {
    bool found = false;
    for (unsigned j = 0; j < n; ++j)
      if (at2(i, j) == 0 && at2(j, i) == 0) {
        found = true;
        break;
      }
    if (!found)
      throw GroupError(Err::NoInverse, "element " + std::to_string(i) + " has no inverse", {i});
  }

  GroupTable g;
  g.n_ = n;
  g.table_ = std::move(flat);
  if (labels.size() == n) g.labels_ = std::move(labels);
  g.finish_build();
  return g;
}

void GroupTable::finish_build() {
  inv_.assign(n_, 0);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j)
      if (mul(i, j) == 0) {
        inv_[i] = std::uint16_t(j);
        break;
      }
  elem_order_.assign(n_, 1);
  for (unsigned i = 0; i < n_; ++i) {
    unsigned k = 1, x = i;
    while (x != 0) {
      x = mul(x, i);
      ++k;
    }
    elem_order_[i] = i == 0 ? 1 : k;
  }
}

ElementSet make_subset(const GroupTable& g, const std::vector<unsigned>& idx) {
  ElementSet s;
  s.parent = &g;
  for (unsigned i : idx) {
    if (i >= g.order())
      throw GroupError(Err::BadParams, "element index " + std::to_string(i) + " out of range",
                       {long(i)});
    s.members.set(i);
  }
  return s;
}

ElementArithmetic element_arithmetic(const GroupTable& g, unsigned a, unsigned b) {
  if (a >= g.order() || b >= g.order())
    throw GroupError(Err::BadParams, "element index out of range", {long(a), long(b)});
  return {g.mul(a, b), g.inverse(a), g.element_order(a)};
}

// --- quotient -----------------------------------------------------------

namespace {

// Throws unless H is a subgroup (0 in H, closed under product).
void require_subgroup(const GroupTable& g, const ElemMask& h) {
  if (!h.test(0)) throw GroupError(Err::NotSubgroup, "set does not contain the identity");
  bool ok = true;
  h.for_each([&](unsigned a) {
    if (!ok) return;
    h.for_each([&](unsigned b) {
      if (!ok) return;
      if (!h.test(g.mul(a, b))) ok = false;
    });
  });
  if (!ok) throw GroupError(Err::NotSubgroup, "set is not closed under the group product");
}

}  // namespace

QuotientResult quotient_group(const GroupTable& g, const ElementSet& nset) {
  const unsigned n = g.order();
  const ElemMask& nm = nset.members;
  require_subgroup(g, nm);

  // Normality, with a witness conjugator on failure.
  for (unsigned x = 0; x < n; ++x) {
    bool bad = false;
    nm.for_each([&](unsigned h) {
      if (bad) return;
      unsigned conj = g.mul(g.mul(g.inverse(x), h), x);
      if (!nm.test(conj)) bad = true;
    });
    if (bad)
      throw GroupError(Err::NotNormal, "subgroup is not normal; conjugator " + std::to_string(x),
                       {x});
  }

  // Cosets, labeled by their minimal element so construction is
  // deterministic. The coset of the identity is N itself, landing at 0.
  std::vector<unsigned> coset_of(n, n);
  std::vector<unsigned> reps;
  for (unsigned x = 0; x < n; ++x) {
    if (coset_of[x] != n) continue;
    unsigned id = unsigned(reps.size());
    reps.push_back(x);
    nm.for_each([&](unsigned h) { coset_of[g.mul(x, h)] = id; });
  }
  const unsigned q = unsigned(reps.size());

  std::vector<std::uint16_t> qt(std::size_t(q) * q);
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b)
      qt[std::size_t(a) * q + b] = std::uint16_t(coset_of[g.mul(reps[a], reps[b])]);

  QuotientResult result{GroupTable::validate_flat(q, std::move(qt)), coset_of};

  // The projection must be a homomorphism with kernel exactly N.
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      if (result.projection[g.mul(a, b)] !=
          result.table.mul(result.projection[a], result.projection[b]))
        throw GroupError(Err::ValidationError, "quotient projection is not a homomorphism",
                         {a, b});
  for (unsigned a = 0; a < n; ++a)
    if ((result.projection[a] == 0) != nm.test(a))
      throw GroupError(Err::ValidationError, "quotient kernel differs from N", {a});
  return result;
}

// --- serialization ------------------------------------------------------

std::string serialize_group(const GroupTable& g) {
  std::string out = "group-table v1\norder " + std::to_string(g.order()) + "\n";
  for (unsigned i = 0; i < g.order(); ++i) {
    for (unsigned j = 0; j < g.order(); ++j) {
      if (j) out += ' ';
      out += std::to_string(g.mul(i, j));
    }
    out += '\n';
  }
  if (g.has_labels()) {
    out += "labels\n";
    for (unsigned i = 0; i < g.order(); ++i) {
      out += g.labels()[i];
      out += '\n';
    }
  }
  return out;
}

namespace {

struct LineReader {
  std::istringstream in;
  unsigned line_no = 0;
  explicit LineReader(const std::string& s) : in(s) {}
  bool next(std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++line_no;
    return true;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw GroupError(Err::ParseError,
                     "line " + std::to_string(line_no) + ": " + why, {long(line_no)});
  }
};

std::vector<unsigned> parse_index_row(LineReader& r, const std::string& line, unsigned expect,
                                      unsigned bound) {
  std::istringstream ls(line);
  std::vector<unsigned> row;
  long v;
  while (ls >> v) {
    if (v < 0 || unsigned(v) >= bound) r.fail("index " + std::to_string(v) + " out of range");
    row.push_back(unsigned(v));
  }
  if (!ls.eof()) r.fail("non-numeric token");
  if (row.size() != expect)
    r.fail("expected " + std::to_string(expect) + " entries, got " + std::to_string(row.size()));
  return row;
}

GroupTable parse_table_body(LineReader& r) {
  std::string line;
  if (!r.next(line)) r.fail("missing order line");
  unsigned n = 0;
  if (std::sscanf(line.c_str(), "order %u", &n) != 1 || n == 0) r.fail("bad order line");
  std::vector<std::vector<unsigned>> raw;
  raw.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    if (!r.next(line)) r.fail("truncated table");
    raw.push_back(parse_index_row(r, line, n, n));
  }
  std::vector<std::string> labels;
  if (r.next(line)) {
    if (line != "labels") {
      if (!line.empty()) r.fail("unexpected trailing content");
    } else {
      for (unsigned i = 0; i < n; ++i) {
        if (!r.next(line)) r.fail("truncated labels block");
        labels.push_back(line);
      }
    }
  }
  return GroupTable::validate(raw, std::move(labels));
}

GroupTable parse_gens_body(LineReader& r, unsigned closure_cap) {
  std::string line;
  if (!r.next(line)) r.fail("missing degree line");
  unsigned d = 0;
  if (std::sscanf(line.c_str(), "degree %u", &d) != 1 || d == 0) r.fail("bad degree line");
  std::vector<std::vector<unsigned>> gens;
  while (r.next(line)) {
    if (line.empty()) break;
    gens.push_back(parse_index_row(r, line, d, d));
  }
  if (gens.empty()) r.fail("no generators");
  return group_from_permutations(d, gens, closure_cap);
}

}  // namespace

GroupTable parse_group(const std::string& text) {
  LineReader r(text);
  std::string line;
  if (!r.next(line)) r.fail("empty input");
  if (line != "group-table v1") r.fail("bad header, expected 'group-table v1'");
  return parse_table_body(r);
}

GroupTable parse_group_or_generators(const std::string& text, unsigned closure_cap) {
  LineReader r(text);
  std::string line;
  if (!r.next(line)) r.fail("empty input");
  if (line == "group-table v1") return parse_table_body(r);
  if (line == "perm-gens v1") return parse_gens_body(r, closure_cap);
  r.fail("unknown header '" + line + "'");
}

// --- permutation closure --------------------------------------------------

GroupTable group_from_permutations(unsigned degree,
                                   const std::vector<std::vector<unsigned>>& gens,
                                   unsigned closure_cap) {
  for (const auto& p : gens) {
    if (p.size() != degree)
      throw GroupError(Err::BadParams, "generator degree mismatch");
    std::vector<char> seen(degree, 0);
    for (unsigned v : p) {
      if (v >= degree || seen[v])
        throw GroupError(Err::BadParams, "generator is not a permutation");
      seen[v] = 1;
    }
  }

  std::vector<unsigned> id(degree);
  for (unsigned i = 0; i < degree; ++i) id[i] = i;

  // BFS over products with the generators; discovery order numbers the
  // elements, identity first.
  std::vector<std::vector<unsigned>> elems{id};
  std::map<std::vector<unsigned>, unsigned> index{{id, 0}};
  auto compose = [&](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    std::vector<unsigned> c(degree);
    for (unsigned i = 0; i < degree; ++i) c[i] = b[a[i]];
    return c;
  };
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gperm : gens) {
      auto prod = compose(elems[head], gperm);
      if (index.emplace(prod, unsigned(elems.size())).second) {
        elems.push_back(std::move(prod));
        if (elems.size() > closure_cap)
          throw GroupError(Err::ClosureTooLarge,
                           "generator closure exceeds cap " + std::to_string(closure_cap));
      }
    }
  }

  const unsigned n = unsigned(elems.size());
  std::vector<std::uint16_t> flat(std::size_t(n) * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      flat[std::size_t(a) * n + b] = std::uint16_t(index.at(compose(elems[a], elems[b])));
  return GroupTable::validate_flat(n, std::move(flat));
}

std::string serialize_permutation_generators(unsigned degree,
                                             const std::vector<std::vector<unsigned>>& gens) {
  std::string out = "perm-gens v1\ndegree " + std::to_string(degree) + "\n";
  for (const auto& p : gens) {
    for (unsigned i = 0; i < degree; ++i) {
      if (i) out += ' ';
      out += std::to_string(p[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace tpplab
