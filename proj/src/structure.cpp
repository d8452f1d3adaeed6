#include "tpplab/structure.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace tpplab {

namespace {

// Closure of a generating set under right multiplication, by BFS from the
// identity. Finiteness makes inverse closure automatic.
ElemMask closure(const GroupTable& g, const std::vector<unsigned>& gens) {
  ElemMask seen;
  seen.set(0);
  std::vector<unsigned> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    unsigned x = queue[head];
    for (unsigned s : gens) {
      unsigned y = g.mul(x, s);
      if (!seen.test(y)) {
        seen.set(y);
        queue.push_back(y);
      }
    }
  }
  return seen;
}

ElementSet as_subgroup(const GroupTable& g, ElemMask m) {
  ElementSet s;
  s.parent = &g;
  s.members = m;
  s.is_subgroup = true;
  return s;
}

}  // namespace

ElementSet generated_subgroup(const GroupTable& g, const std::vector<unsigned>& seed) {
  for (unsigned i : seed)
    if (i >= g.order())
      throw GroupError(Err::BadParams, "seed element out of range", {long(i)});
  return as_subgroup(g, closure(g, seed));
}

ElementSet generated_subgroup_mask(const GroupTable& g, const ElemMask& seed) {
  return as_subgroup(g, closure(g, seed.to_indices()));
}

ElementSet center(const GroupTable& g) {
  ElemMask m;
  for (unsigned z = 0; z < g.order(); ++z) {
    bool central = true;
    for (unsigned x = 0; x < g.order() && central; ++x)
      if (g.mul(z, x) != g.mul(x, z)) central = false;
    if (central) m.set(z);
  }
  return as_subgroup(g, m);
}

ElementSet centralizer(const GroupTable& g, const ElementSet& x) {
  ElemMask m;
  for (unsigned c = 0; c < g.order(); ++c) {
    bool ok = true;
    x.members.for_each([&](unsigned e) {
      if (ok && g.mul(c, e) != g.mul(e, c)) ok = false;
    });
    if (ok) m.set(c);
  }
  return as_subgroup(g, m);
}

ElementSet normalizer(const GroupTable& g, const ElementSet& h) {
  ElemMask m;
  for (unsigned x = 0; x < g.order(); ++x) {
    unsigned xi = g.inverse(x);
    bool ok = true;
    h.members.for_each([&](unsigned e) {
      if (ok && !h.members.test(g.mul(g.mul(xi, e), x))) ok = false;
    });
    if (ok) m.set(x);
  }
  return as_subgroup(g, m);
}

ElementSet commutator_subgroup(const GroupTable& g) {
  std::vector<unsigned> comms;
  ElemMask seen;
  for (unsigned a = 0; a < g.order(); ++a)
    for (unsigned b = 0; b < g.order(); ++b) {
      unsigned c = g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b));
      if (!seen.test(c)) {
        seen.set(c);
        comms.push_back(c);
      }
    }
  return as_subgroup(g, closure(g, comms));
}

ElementSet normal_core(const GroupTable& g, const ElementSet& h) {
  if (!is_subgroup_mask(g, h.members))
    throw GroupError(Err::NotSubgroup, "core requires a subgroup");
  ElemMask core = h.members;
  for (unsigned x = 0; x < g.order(); ++x) {
    unsigned xi = g.inverse(x);
    ElemMask conj;
    h.members.for_each([&](unsigned e) { conj.set(g.mul(g.mul(xi, e), x)); });
    core &= conj;
  }
  return as_subgroup(g, core);
}

ElementSet set_product(const ElementSet& x, const ElementSet& y) {
  const GroupTable& g = *x.parent;
  ElemMask m;
  x.members.for_each([&](unsigned a) {
    y.members.for_each([&](unsigned b) { m.set(g.mul(a, b)); });
  });
  ElementSet out;
  out.parent = &g;
  out.members = m;
  out.is_subgroup = is_subgroup_mask(g, m);
  return out;
}

bool is_normal(const GroupTable& g, const ElementSet& h, unsigned* witness_conjugator) {
  for (unsigned x = 0; x < g.order(); ++x) {
    unsigned xi = g.inverse(x);
    bool ok = true;
    h.members.for_each([&](unsigned e) {
      if (ok && !h.members.test(g.mul(g.mul(xi, e), x))) ok = false;
    });
    if (!ok) {
      if (witness_conjugator) *witness_conjugator = x;
      return false;
    }
  }
  return true;
}

bool is_abelian_set(const GroupTable& g, const ElemMask& m) {
  bool ok = true;
  m.for_each([&](unsigned a) {
    if (!ok) return;
    m.for_each([&](unsigned b) {
      if (ok && g.mul(a, b) != g.mul(b, a)) ok = false;
    });
  });
  return ok;
}

bool is_subgroup_mask(const GroupTable& g, const ElemMask& m) {
  if (!m.test(0)) return false;
  bool ok = true;
  m.for_each([&](unsigned a) {
    if (!ok) return;
    m.for_each([&](unsigned b) {
      if (ok && !m.test(g.mul(a, b))) ok = false;
    });
  });
  return ok;
}

bool is_cyclic_subgroup(const GroupTable& g, const ElemMask& m) {
  const std::size_t sz = m.count();
  bool found = false;
  m.for_each([&](unsigned a) {
    if (!found && g.element_order(a) == sz) found = true;
  });
  return found;
}

// --- lattice ---------------------------------------------------------------

std::vector<ElementSet> all_subgroups(const GroupTable& g, unsigned cap) {
  if (g.order() > cap)
    throw GroupError(Err::CapExceeded, "order " + std::to_string(g.order()) +
                                           " exceeds the lattice cap " + std::to_string(cap));
  const unsigned n = g.order();

  struct Node {
    ElemMask mask;
    std::vector<unsigned> gens;
  };
  std::vector<Node> nodes;
  std::unordered_set<ElemMask, ElemMaskHash> known;

  auto add = [&](ElemMask m, std::vector<unsigned> gens) -> bool {
    if (known.insert(m).second) {
      nodes.push_back({m, std::move(gens)});
      return true;
    }
    return false;
  };

  // Seed: trivial plus every cyclic subgroup.
  {
    ElemMask triv;
    triv.set(0);
    add(triv, {});
  }
  for (unsigned x = 1; x < n; ++x) add(closure(g, {x}), {x});

  // One-element extensions until fixpoint.
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].mask.count() == n) continue;
    for (unsigned x = 1; x < n; ++x) {
      if (nodes[head].mask.test(x)) continue;
      std::vector<unsigned> gens = nodes[head].gens;
      gens.push_back(x);
      ElemMask ext = closure(g, gens);
      add(ext, std::move(gens));
    }
  }

  std::vector<ElementSet> out;
  out.reserve(nodes.size());
  for (auto& nd : nodes) out.push_back(as_subgroup(g, nd.mask));
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    std::size_t sa = a.members.count(), sb = b.members.count();
    if (sa != sb) return sa < sb;
    return ElemMask::lex_less(a.members, b.members);
  });
  return out;
}

std::vector<ElementSet> maximal_subgroups(const GroupTable& g,
                                          const std::vector<ElementSet>& lattice) {
  std::vector<ElementSet> out;
  for (const auto& h : lattice) {
    if (h.members.count() == g.order()) continue;
    bool maximal = true;
    for (const auto& k : lattice) {
      if (k.members.count() == g.order() || k.members == h.members) continue;
      if (k.members.contains(h.members) && k.members.count() > h.members.count()) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(h);
  }
  return out;
}

ElementSet frattini_subgroup(const GroupTable& g, const std::vector<ElementSet>& lattice) {
  auto maxes = maximal_subgroups(g, lattice);
  ElemMask m = g.all_elements();
  for (const auto& h : maxes) m &= h.members;
  // The trivial group has no maximal subgroups; its Frattini subgroup is itself.
  return as_subgroup(g, m);
}

CentralSeries upper_central_series(const GroupTable& g) {
  CentralSeries series;
  ElemMask cur;
  cur.set(0);
  series.terms.push_back(as_subgroup(g, cur));
  while (true) {
    if (cur.count() == g.order()) {
      series.nilpotency_class = unsigned(series.terms.size() - 1);
      return series;
    }
    // Z_{i+1} is the preimage of Z(G / Z_i).
    ElementSet zi = as_subgroup(g, cur);
    QuotientResult q = quotient_group(g, zi);
    ElementSet zq = center(q.table);
    ElemMask next;
    for (unsigned x = 0; x < g.order(); ++x)
      if (zq.members.test(q.projection[x])) next.set(x);
    if (next == cur) {
      // Stabilized below G: not nilpotent.
      return series;
    }
    cur = next;
    series.terms.push_back(as_subgroup(g, cur));
  }
}

StructureCache compute_structure(const GroupTable& g, unsigned lattice_cap) {
  StructureCache s;
  s.center = center(g);
  s.commutator = commutator_subgroup(g);
  CentralSeries cs = upper_central_series(g);
  s.upper_central_series = std::move(cs.terms);
  s.nilpotency_class = cs.nilpotency_class;
  if (g.order() <= lattice_cap) {
    s.all_subgroups = all_subgroups(g, lattice_cap);
    s.maximal_subgroups = maximal_subgroups(g, s.all_subgroups);
    s.frattini = frattini_subgroup(g, s.all_subgroups);
  }
  return s;
}

SubgroupAsGroup subgroup_as_group(const GroupTable& g, const ElementSet& h) {
  if (!is_subgroup_mask(g, h.members))
    throw GroupError(Err::NotSubgroup, "not a subgroup");
  std::vector<unsigned> idx = h.members.to_indices();
  std::unordered_map<unsigned, unsigned> pos;
  for (unsigned i = 0; i < idx.size(); ++i) pos[idx[i]] = i;
  const unsigned m = unsigned(idx.size());
  std::vector<std::uint16_t> flat(std::size_t(m) * m);
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < m; ++b)
      flat[std::size_t(a) * m + b] = std::uint16_t(pos.at(g.mul(idx[a], idx[b])));
  return {GroupTable::validate_flat(m, std::move(flat)), idx};
}

std::vector<std::pair<unsigned, unsigned>> element_order_histogram(const GroupTable& g) {
  std::map<unsigned, unsigned> hist;
  for (unsigned i = 0; i < g.order(); ++i) ++hist[g.element_order(i)];
  return {hist.begin(), hist.end()};
}

}  // namespace tpplab
