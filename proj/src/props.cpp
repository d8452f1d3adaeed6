#include "tpplab/props.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "tpplab/classifier.hpp"
#include "tpplab/rng.hpp"
#include "tpplab/search.hpp"
#include "tpplab/tpp.hpp"

namespace tpplab {

GroupTable table_from_rule(unsigned n, const std::function<unsigned(unsigned, unsigned)>& mul) {
  std::vector<std::uint16_t> flat(std::size_t(n) * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) flat[std::size_t(a) * n + b] = std::uint16_t(mul(a, b));
  return GroupTable::validate_flat(n, std::move(flat));
}

namespace {

struct Named {
  std::string name;
  GroupTable table;
};

std::vector<Named> catalog_groups(const Catalog& cat, unsigned max_order,
                                  bool include_deep = false) {
  std::vector<Named> out;
  for (const auto& e : cat.entries()) {
    if (e.declared_order > max_order) continue;
    if (e.deep_only && !include_deep) continue;
    out.push_back({e.label, cat.build(e)});
  }
  return out;
}

ElementSet subset_from_mask(const GroupTable& g, const ElemMask& m, bool subgroup = false) {
  ElementSet s;
  s.parent = &g;
  s.members = m;
  s.is_subgroup = subgroup;
  return s;
}

ElemMask random_subset(Rng& rng, unsigned n, unsigned max_size) {
  unsigned size = 1 + unsigned(rng.below(max_size));
  ElemMask m;
  for (unsigned i = 0; i < size; ++i) m.set(unsigned(rng.below(n)));
  return m;  // may be smaller than `size` after duplicates; never empty
}

std::string mask_str(const ElemMask& m) {
  std::string s = "{";
  bool first = true;
  m.for_each([&](unsigned i) {
    if (!first) s += ' ';
    first = false;
    s += std::to_string(i);
  });
  return s + "}";
}

// Generalized quaternion Q16 and semidihedral SD16, which the recipe kinds
// do not cover; encoded as (i, j) over Z8 x Z2.
GroupTable build_q16() {
  return table_from_rule(16, [](unsigned a, unsigned b) {
    unsigned i1 = a >> 1, j1 = a & 1, i2 = b >> 1, j2 = b & 1;
    unsigned i = (j1 ? (8 + i1 - i2) % 8 : (i1 + i2) % 8);
    if (j1 && j2) i = (i + 4) % 8;  // b^2 = a^4
    return (i << 1) | (j1 ^ j2);
  });
}

GroupTable build_sd16() {
  return table_from_rule(16, [](unsigned a, unsigned b) {
    unsigned i1 = a >> 1, j1 = a & 1, i2 = b >> 1, j2 = b & 1;
    unsigned i = (i1 + (j1 ? 3 * i2 : i2)) % 8;  // b a b^-1 = a^3
    return (i << 1) | (j1 ^ j2);
  });
}

using SuiteFn = PropOutcome (*)(const Catalog&, std::uint64_t);

// --- oracle-equivalence ----------------------------------------------------

PropOutcome suite_oracle_equivalence(const Catalog& cat, std::uint64_t seed) {
  PropOutcome out;
  std::vector<Named> groups = catalog_groups(cat, 16);
  groups.push_back({"C3", construct_named(GroupRecipe::cyclic(3))});
  groups.push_back({"C6", construct_named(GroupRecipe::cyclic(6))});
  groups.push_back({"C7", construct_named(GroupRecipe::cyclic(7))});
  groups.push_back({"C9", construct_named(GroupRecipe::cyclic(9))});
  groups.push_back({"C12", construct_named(GroupRecipe::cyclic(12))});
  groups.push_back({"C15", construct_named(GroupRecipe::cyclic(15))});
  groups.push_back({"S3", construct_named(GroupRecipe::dihedral(6))});
  groups.push_back({"D12", construct_named(GroupRecipe::dihedral(12))});
  groups.push_back({"C2^3", construct_named(GroupRecipe::elementary_abelian(2, 3))});
  groups.push_back({"C3^2", construct_named(GroupRecipe::elementary_abelian(3, 2))});

  Rng rng(seed ^ 0x0a11ce);
  const std::uint64_t rounds = (10500 + groups.size() - 1) / groups.size();
  for (const auto& [name, g] : groups) {
    for (std::uint64_t k = 0; k < rounds; ++k) {
      TppTriple t{subset_from_mask(g, random_subset(rng, g.order(), 5)),
                  subset_from_mask(g, random_subset(rng, g.order(), 5)),
                  subset_from_mask(g, random_subset(rng, g.order(), 5))};
      ++out.checks;
      if (tpp_check_definition(t) != tpp_check_sets(t)) {
        out.failures.push_back(name + " S=" + mask_str(t.s.members) + " T=" +
                               mask_str(t.t.members) + " U=" + mask_str(t.u.members));
        if (out.failures.size() > 5) return out;
      }
    }
  }
  return out;
}

// --- oracle-subgroup-agreement ----------------------------------------------

PropOutcome suite_oracle_subgroup_agreement(const Catalog& cat, std::uint64_t) {
  PropOutcome out;
  for (const auto& [name, g] : catalog_groups(cat, 32)) {
    auto lattice = all_subgroups(g);
    const std::size_t L = lattice.size();
    for (std::size_t a = 0; a < L; ++a)
      for (std::size_t b = a; b < L; ++b)
        for (std::size_t c = b; c < L; ++c) {
          TppTriple t{lattice[a], lattice[b], lattice[c]};
          bool sub = tpp_check_subgroups(t);
          bool sets = tpp_check_sets(t);
          ++out.checks;
          if (sub != sets || sub != tpp_check_definition(t)) {
            out.failures.push_back(name + " S=" + mask_str(t.s.members) + " T=" +
                                   mask_str(t.t.members) + " U=" + mask_str(t.u.members));
            if (out.failures.size() > 5) return out;
          }
        }
  }
  return out;
}

// --- commutator-identities ---------------------------------------------------

PropOutcome suite_commutator_identities(const Catalog& cat, std::uint64_t) {
  PropOutcome out;
  for (const auto& [name, g] : catalog_groups(cat, 512, true)) {
    CentralSeries cs = upper_central_series(g);
    if (!cs.nilpotency_class || *cs.nilpotency_class != 2) continue;
    // class 2 is exactly {1} < G' <= Z(G) < G
    ElementSet comm_sub = commutator_subgroup(g);
    ElementSet z = center(g);
    ++out.checks;
    if (comm_sub.size() <= 1 || !z.members.contains(comm_sub.members) ||
        z.size() >= g.order()) {
      out.failures.push_back(name + ": class-2 chain {1} < G' <= Z < G violated");
      if (out.failures.size() > 5) return out;
    }
    auto comm = [&](unsigned x, unsigned y) {
      return g.mul(g.mul(g.inverse(x), g.inverse(y)), g.mul(x, y));
    };
    const unsigned n = g.order();
    for (unsigned x = 0; x < n; ++x)
      for (unsigned y = 0; y < n; ++y) {
        for (unsigned z = 0; z < n; ++z) {
          ++out.checks;
          if (comm(g.mul(x, y), z) != g.mul(comm(x, z), comm(y, z))) {
            out.failures.push_back(name + " [xy,z] != [x,z][y,z] at x=" + std::to_string(x) +
                                   " y=" + std::to_string(y) + " z=" + std::to_string(z));
            if (out.failures.size() > 5) return out;
          }
        }
        for (unsigned p : {2u, 3u, 4u, 5u, 7u}) {
          ++out.checks;
          unsigned lhs = comm(g.power(x, p), y);
          unsigned rhs = g.power(comm(x, y), p);
          if (lhs != rhs) {
            out.failures.push_back(name + " [x^p,y] != [x,y]^p at x=" + std::to_string(x) +
                                   " y=" + std::to_string(y) + " p=" + std::to_string(p));
            if (out.failures.size() > 5) return out;
          }
        }
      }
  }
  return out;
}

// --- normal-orderp-central ----------------------------------------------------

PropOutcome suite_normal_orderp_central(const Catalog& cat, std::uint64_t) {
  PropOutcome out;
  for (const auto& [name, g] : catalog_groups(cat, 512, true)) {
    auto pg = prime_power(g.order());
    if (!pg) continue;
    unsigned p = pg->first;
    ElementSet z = center(g);
    std::unordered_set<ElemMask, ElemMaskHash> seen;
    for (unsigned x = 1; x < g.order(); ++x) {
      if (g.element_order(x) != p) continue;
      ElementSet h = generated_subgroup(g, {x});
      if (!seen.insert(h.members).second) continue;
      ++out.checks;
      if (is_normal(g, h) && !z.members.contains(h.members)) {
        out.failures.push_back(name + " normal order-" + std::to_string(p) + " subgroup " +
                               mask_str(h.members) + " not central");
        if (out.failures.size() > 5) return out;
      }
    }
  }
  return out;
}

// --- noncyclic-central-quotient -------------------------------------------------

PropOutcome suite_noncyclic_central_quotient(const Catalog& cat, std::uint64_t) {
  PropOutcome out;
  for (const auto& [name, g] : catalog_groups(cat, 512, true)) {
    ElementSet z = center(g);
    if (z.size() == g.order()) continue;  // abelian
    QuotientResult q = quotient_group(g, z);
    ++out.checks;
    bool cyclic = false;
    for (unsigned x = 0; x < q.table.order(); ++x)
      if (q.table.element_order(x) == q.table.order()) cyclic = true;
    if (cyclic) {
      out.failures.push_back(name + " has cyclic central quotient");
      if (out.failures.size() > 5) return out;
    }
  }
  return out;
}

// --- quotient-triple -------------------------------------------------------------

PropOutcome suite_quotient_triple(const Catalog& cat, std::uint64_t seed) {
  PropOutcome out;
  Rng rng(seed ^ 0x4007);
  for (const auto& [name, g] : catalog_groups(cat, 32)) {
    auto lattice = all_subgroups(g);
    const std::size_t L = lattice.size();

    // TPP triples: the maximal ones plus random passing candidates.
    std::vector<TppTriple> triples;
    TppReport rep = search_beta0(g, lattice);
    triples.insert(triples.end(), rep.maximal_subgroup_triples.begin(),
                   rep.maximal_subgroup_triples.end());
    for (unsigned tries = 0; tries < 200 && triples.size() < 24; ++tries) {
      TppTriple t{lattice[rng.below(L)], lattice[rng.below(L)], lattice[rng.below(L)]};
      if (tpp_check_subgroups(t)) triples.push_back(t);
    }

    for (const auto& t : triples) {
      for (const auto& n : lattice) {
        if (!t.s.members.contains(n.members)) continue;
        if (!is_normal(g, n)) continue;
        ++out.checks;
        try {
          QuotientTriple qt = quotient_triple(g, t, n);
          if (!tpp_check_subgroups(qt.triple)) throw GroupError(Err::ValidationError, "lost TPP");
          if (qt.triple.s.size() != t.s.size() / n.size() ||
              qt.triple.t.size() != t.t.size() || qt.triple.u.size() != t.u.size())
            throw GroupError(Err::ValidationError, "wrong type");
        } catch (const GroupError& e) {
          out.failures.push_back(name + " N=" + mask_str(n.members) + ": " + e.what());
          if (out.failures.size() > 5) return out;
        }
      }
    }
  }
  if (out.checks < 100) {
    out.failures.push_back("only " + std::to_string(out.checks) +
                           " (triple, N) instances sampled; need >= 100");
  }
  return out;
}

// --- extraspecial-non-generation ----------------------------------------------

PropOutcome suite_extraspecial_non_generation(const Catalog& cat, std::uint64_t) {
  PropOutcome out;
  for (const auto& [name, g] : catalog_groups(cat, 32)) {
    StructureCache st = compute_structure(g);
    GroupClassification cls = classify_group(g, st);
    if (!cls.extraspecial) continue;
    unsigned p = cls.p_group->first;
    unsigned n2 = cls.p_group->second - 1;  // |G| = p^(1+2n)
    std::uint64_t half = 1;
    for (unsigned i = 0; i < n2 / 2; ++i) half *= p;
    std::size_t group_failures = 0;
    for (const auto& s : st.all_subgroups) {
      if (s.size() != half) continue;
      for (const auto& t : st.all_subgroups) {
        if (t.size() != half) continue;
        ++out.checks;
        ElemMask both = s.members | t.members;
        ElementSet gen = generated_subgroup_mask(g, both);
        if (gen.size() == g.order() && group_failures < 2) {
          ++group_failures;
          out.failures.push_back(name + " S=" + mask_str(s.members) + " T=" +
                                 mask_str(t.members) + " generate G");
        }
      }
    }
  }
  return out;
}

// --- abelian-beta ------------------------------------------------------------------

PropOutcome suite_abelian_beta(const Catalog& cat, std::uint64_t) {
  (void)cat;
  PropOutcome out;
  for (unsigned n = 2; n <= 8; ++n) {
    GroupTable g = construct_named(GroupRecipe::cyclic(n));
    TppReport rep = search_beta_subsets(g);
    ++out.checks;
    if (!rep.beta || *rep.beta != n) {
      out.failures.push_back("C" + std::to_string(n) + ": beta = " +
                             std::to_string(rep.beta ? *rep.beta : 0) + ", expected " +
                             std::to_string(n));
    }
  }
  return out;
}

// --- splitting-bound ----------------------------------------------------------------

PropOutcome suite_splitting_bound(const Catalog& cat, std::uint64_t) {
  PropOutcome out;
  for (const auto& [name, g] : catalog_groups(cat, 32)) {
    auto lattice = all_subgroups(g);
    TppReport rep = search_beta0(g, lattice);

    std::unordered_map<unsigned, std::uint64_t> beta0_cache;  // lattice index -> beta0(H)
    auto beta0_of = [&](unsigned idx) {
      auto it = beta0_cache.find(idx);
      if (it != beta0_cache.end()) return it->second;
      SubgroupAsGroup sub = subgroup_as_group(g, lattice[idx]);
      TppReport r = search_beta0(sub.table, all_subgroups(sub.table));
      beta0_cache.emplace(idx, r.beta0);
      return r.beta0;
    };

    for (const auto& t : rep.maximal_subgroup_triples) {
      const ElemMask* members[3] = {&t.s.members, &t.t.members, &t.u.members};
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          ElemMask both = *members[i] | *members[j];
          for (unsigned idx = 0; idx < lattice.size(); ++idx) {
            if (lattice[idx].size() == g.order()) continue;
            if (!lattice[idx].members.contains(both)) continue;
            ++out.checks;
            // size/|G| <= beta0(H)/|H|, in integers
            std::uint64_t lhs = t.size() * lattice[idx].size();
            std::uint64_t rhs = beta0_of(idx) * g.order();
            if (lhs > rhs) {
              out.failures.push_back(name + " H=" + mask_str(lattice[idx].members) +
                                     " violates the splitting bound");
              if (out.failures.size() > 5) return out;
            }
          }
        }
    }
  }
  return out;
}

// --- quotient-centre-inequality ------------------------------------------------------

PropOutcome suite_quotient_centre_inequality(const Catalog& cat, std::uint64_t) {
  PropOutcome out;
  for (const auto& [name, g] : catalog_groups(cat, 64)) {
    CentralSeries cs = upper_central_series(g);
    if (!cs.nilpotency_class || *cs.nilpotency_class != 2) continue;
    std::uint64_t g_centre_index = g.order() / center(g).size();
    auto lattice = all_subgroups(g);
    for (const auto& n : lattice) {
      if (!is_normal(g, n)) continue;
      QuotientResult q = quotient_group(g, n);
      std::uint64_t q_centre_index = q.table.order() / center(q.table).size();
      TppReport rep = search_beta0(q.table, all_subgroups(q.table));
      ++out.checks;
      // If rho0(G/N) <= sqrt(|G/N : Z(G/N)|) then rho0(G/N) <= sqrt(|G : Z(G)|).
      bool premise = rep.rho0.square_at_most(std::int64_t(q_centre_index));
      bool conclusion = rep.rho0.square_at_most(std::int64_t(g_centre_index));
      if (premise && !conclusion) {
        out.failures.push_back(name + " N=" + mask_str(n.members) +
                               " violates the quotient-centre inequality");
        if (out.failures.size() > 5) return out;
      }
    }
  }
  return out;
}

// --- p4-law -----------------------------------------------------------------------------

PropOutcome suite_p4_law(const Catalog& cat, std::uint64_t) {
  PropOutcome out;
  std::vector<Named> groups;
  auto add = [&](const std::string& name, GroupTable g) {
    groups.push_back({name, std::move(g)});
  };
  // order 8
  add("C8", construct_named(GroupRecipe::cyclic(8)));
  add("C4xC2", construct_named(GroupRecipe::direct_product(GroupRecipe::cyclic(4),
                                                           GroupRecipe::cyclic(2))));
  add("C2^3", construct_named(GroupRecipe::elementary_abelian(2, 3)));
  add("D8", construct_named(GroupRecipe::dihedral(8)));
  add("Q8", construct_named(GroupRecipe::quaternion8()));
  // order 16: all fourteen groups
  add("C16", construct_named(GroupRecipe::cyclic(16)));
  add("C8xC2", construct_named(GroupRecipe::direct_product(GroupRecipe::cyclic(8),
                                                           GroupRecipe::cyclic(2))));
  add("C4xC4", construct_named(GroupRecipe::direct_product(GroupRecipe::cyclic(4),
                                                           GroupRecipe::cyclic(4))));
  add("C4xC2^2", construct_named(GroupRecipe::direct_product(
                     GroupRecipe::cyclic(4), GroupRecipe::elementary_abelian(2, 2))));
  add("C2^4", construct_named(GroupRecipe::elementary_abelian(2, 4)));
  add("D16", construct_named(GroupRecipe::dihedral(16)));
  add("SD16", build_sd16());
  add("Q16", build_q16());
  for (const char* label : {"[16, 3]", "[16, 4]", "[16, 6]", "[16, 11]", "[16, 12]", "[16, 13]"})
    if (cat.has(label)) add(label, cat.build(label));
  // order 27
  add("C27", construct_named(GroupRecipe::cyclic(27)));
  add("C9xC3", construct_named(GroupRecipe::direct_product(GroupRecipe::cyclic(9),
                                                           GroupRecipe::cyclic(3))));
  add("C3^3", construct_named(GroupRecipe::elementary_abelian(3, 3)));
  for (const char* label : {"[27, 3]", "[27, 4]"})
    if (cat.has(label)) add(label, cat.build(label));
  // order 81
  add("C81", construct_named(GroupRecipe::cyclic(81)));
  add("C27xC3", construct_named(GroupRecipe::direct_product(GroupRecipe::cyclic(27),
                                                            GroupRecipe::cyclic(3))));
  add("C9xC9", construct_named(GroupRecipe::direct_product(GroupRecipe::cyclic(9),
                                                           GroupRecipe::cyclic(9))));
  add("C9xC3^2", construct_named(GroupRecipe::direct_product(
                     GroupRecipe::cyclic(9), GroupRecipe::elementary_abelian(3, 2))));
  add("C3^4", construct_named(GroupRecipe::elementary_abelian(3, 4)));
  if (cat.has("[27, 3]"))
    add("C3x[27, 3]",
        direct_product(construct_named(GroupRecipe::cyclic(3)), cat.build("[27, 3]")));
  if (cat.has("[27, 4]"))
    add("C3x[27, 4]",
        direct_product(construct_named(GroupRecipe::cyclic(3)), cat.build("[27, 4]")));

  for (const auto& [name, g] : groups) {
    TppReport rep = search_beta0(g, all_subgroups(g));
    ++out.checks;
    if (rep.beta0 != g.order()) {
      out.failures.push_back(name + ": rho0 = " + rep.rho0.str() + ", expected 1");
      if (out.failures.size() > 5) return out;
    }
  }
  return out;
}

// --- permutation-invariance ------------------------------------------------------------

PropOutcome suite_permutation_invariance(const Catalog& cat, std::uint64_t seed) {
  PropOutcome out;
  Rng rng(seed ^ 0x9e57);
  for (const auto& [name, g] : catalog_groups(cat, 16)) {
    for (unsigned round = 0; round < 400; ++round) {
      ElementSet sets[3] = {subset_from_mask(g, random_subset(rng, g.order(), 5)),
                            subset_from_mask(g, random_subset(rng, g.order(), 5)),
                            subset_from_mask(g, random_subset(rng, g.order(), 5))};
      int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      bool base = tpp_check_sets({sets[0], sets[1], sets[2]});
      ++out.checks;
      for (auto& p : perms) {
        if (tpp_check_sets({sets[p[0]], sets[p[1]], sets[p[2]]}) != base) {
          out.failures.push_back(name + " permutation changed the TPP verdict");
          if (out.failures.size() > 5) return out;
        }
      }
    }
  }
  return out;
}

// --- translation-invariance -------------------------------------------------------------

PropOutcome suite_translation_invariance(const Catalog& cat, std::uint64_t seed) {
  PropOutcome out;
  Rng rng(seed ^ 0x7245);
  for (const auto& [name, g] : catalog_groups(cat, 16)) {
    for (unsigned round = 0; round < 400; ++round) {
      ElemMask x = random_subset(rng, g.order(), 5);
      unsigned by = unsigned(rng.below(g.order()));
      ++out.checks;
      if (quotient_set(g, right_translate(g, x, by)) != quotient_set(g, x)) {
        out.failures.push_back(name + " Q(Xg) != Q(X) for X=" + mask_str(x) + " g=" +
                               std::to_string(by));
        if (out.failures.size() > 5) return out;
      }
      ElementSet s = subset_from_mask(g, random_subset(rng, g.order(), 4));
      ElementSet t = subset_from_mask(g, random_subset(rng, g.order(), 4));
      ElementSet u = subset_from_mask(g, random_subset(rng, g.order(), 4));
      bool base = tpp_check_sets({s, t, u});
      ElementSet s2 = subset_from_mask(g, right_translate(g, s.members, by));
      ++out.checks;
      if (tpp_check_sets({s2, t, u}) != base) {
        out.failures.push_back(name + " right translation changed the TPP verdict");
        if (out.failures.size() > 5) return out;
      }
    }
  }
  return out;
}

// --- maximal-structure -------------------------------------------------------------------

PropOutcome suite_maximal_structure(const Catalog& cat, std::uint64_t) {
  PropOutcome out;
  for (const auto& [name, g] : catalog_groups(cat, 64)) {
    StructureCache st = compute_structure(g);
    if (st.center.size() == g.order()) continue;
    TppReport rep = search_beta0(g, st.all_subgroups);
    if (rep.beta0 <= g.order()) continue;
    GroupClassification cls = classify_group(g, st);
    for (const auto& t : rep.maximal_subgroup_triples) {
      const ElementSet* members[3] = {&t.s, &t.t, &t.u};
      for (const auto* m : members) {
        ++out.checks;
        bool bad = is_normal(g, *m) || m->members.contains(st.commutator.members);
        if (cls.nilpotency_class && *cls.nilpotency_class == 2)
          bad = bad || m->members.contains(st.center.members);
        if (cls.p_group) bad = bad || m->members.contains(st.frattini.members);
        if (bad) {
          out.failures.push_back(name + " member " + mask_str(m->members) +
                                 " of a non-trivial maximal triple is normal or contains "
                                 "G'/Z/Phi");
          if (out.failures.size() > 5) return out;
        }
      }
    }
  }
  return out;
}

// --- hz-observation -----------------------------------------------------------------------

PropOutcome suite_hz_observation(const Catalog& cat, std::uint64_t) {
  PropOutcome out;
  for (const auto& [name, g] : catalog_groups(cat, 64)) {
    CentralSeries cs = upper_central_series(g);
    if (!cs.nilpotency_class || *cs.nilpotency_class != 2) continue;
    ElementSet z = center(g);
    for (const auto& h : all_subgroups(g)) {
      if (h.size() == 1) continue;
      if (!h.members.intersects_only_identity(z.members)) continue;
      ElementSet hz = set_product(h, z);
      ++out.checks;
      bool ok = hz.is_subgroup && is_abelian_set(g, hz.members) && is_normal(g, hz) &&
                hz.size() == h.size() * z.size();
      if (!ok) {
        out.failures.push_back(name + " H=" + mask_str(h.members) +
                               ": HZ(G) not abelian normal of size |H||Z|");
        if (out.failures.size() > 5) return out;
      }
    }
  }
  return out;
}

// --- band-abelian-maximal -------------------------------------------------------------------

PropOutcome suite_band_abelian_maximal(const Catalog& cat, std::uint64_t) {
  PropOutcome out;
  for (const auto& [name, g] : catalog_groups(cat, 64)) {
    auto pg = prime_power(g.order());
    if (!pg) continue;
    ElementSet z = center(g);
    if (z.size() == g.order()) continue;
    unsigned p = pg->first;
    QuotientResult q = quotient_group(g, z);
    std::uint64_t qn = q.table.order();
    bool elem_abelian_p2 = qn == std::uint64_t(p) * p;
    if (elem_abelian_p2)
      for (unsigned x = 1; x < q.table.order(); ++x)
        if (q.table.element_order(x) != p) elem_abelian_p2 = false;
    bool abelian_p3 = qn == std::uint64_t(p) * p * p && center(q.table).size() == qn;
    if (!elem_abelian_p2 && !abelian_p3) continue;

    StructureCache st = compute_structure(g);
    GroupClassification cls = classify_group(g, st);
    ++out.checks;
    if (!cls.has_abelian_index_p_subgroup) {
      out.failures.push_back(name + " lacks an abelian maximal subgroup of index p");
      if (out.failures.size() > 5) return out;
    }
  }
  return out;
}

// --- lattice-brute-force --------------------------------------------------------------------

PropOutcome suite_lattice_brute_force(const Catalog& cat, std::uint64_t) {
  PropOutcome out;
  std::vector<Named> groups = catalog_groups(cat, 16);
  groups.push_back({"C12", construct_named(GroupRecipe::cyclic(12))});
  groups.push_back({"S3", construct_named(GroupRecipe::dihedral(6))});
  groups.push_back({"D12", construct_named(GroupRecipe::dihedral(12))});
  for (const auto& [name, g] : groups) {
    const unsigned n = g.order();
    std::unordered_set<ElemMask, ElemMaskHash> brute;
    const std::uint32_t subsets = 1u << (n - 1);
    for (std::uint32_t bits = 0; bits < subsets; ++bits) {
      ElemMask m;
      m.set(0);
      for (unsigned i = 1; i < n; ++i)
        if ((bits >> (i - 1)) & 1) m.set(i);
      if (is_subgroup_mask(g, m)) brute.insert(m);
    }
    auto lattice = all_subgroups(g);
    ++out.checks;
    bool ok = lattice.size() == brute.size();
    for (const auto& h : lattice)
      if (!brute.count(h.members)) ok = false;
    if (!ok) {
      out.failures.push_back(name + ": lattice enumeration disagrees with the brute-force scan (" +
                             std::to_string(lattice.size()) + " vs " +
                             std::to_string(brute.size()) + ")");
      if (out.failures.size() > 5) return out;
    }
  }
  return out;
}

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"oracle-equivalence", suite_oracle_equivalence},
      {"oracle-subgroup-agreement", suite_oracle_subgroup_agreement},
      {"commutator-identities", suite_commutator_identities},
      {"normal-orderp-central", suite_normal_orderp_central},
      {"noncyclic-central-quotient", suite_noncyclic_central_quotient},
      {"quotient-triple", suite_quotient_triple},
      {"extraspecial-non-generation", suite_extraspecial_non_generation},
      {"abelian-beta", suite_abelian_beta},
      {"splitting-bound", suite_splitting_bound},
      {"quotient-centre-inequality", suite_quotient_centre_inequality},
      {"p4-law", suite_p4_law},
      {"permutation-invariance", suite_permutation_invariance},
      {"translation-invariance", suite_translation_invariance},
      {"maximal-structure", suite_maximal_structure},
      {"hz-observation", suite_hz_observation},
      {"band-abelian-maximal", suite_band_abelian_maximal},
      {"lattice-brute-force", suite_lattice_brute_force},
  };
  return table;
}

}  // namespace

std::vector<std::string> prop_suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suite_table()) names.push_back(name);
  return names;
}

PropOutcome run_prop_suite(const std::string& name, const Catalog& catalog, std::uint64_t seed) {
  for (const auto& [n, fn] : suite_table()) {
    if (n == name) {
      auto t0 = std::chrono::steady_clock::now();
      PropOutcome out = fn(catalog, seed);
      out.suite = name;
      out.passed = out.failures.empty();
      out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return out;
    }
  }
  throw GroupError(Err::BadParams, "unknown property suite " + name);
}

std::vector<PropOutcome> run_all_prop_suites(const Catalog& catalog, std::uint64_t seed) {
  std::vector<PropOutcome> out;
  for (const auto& [name, fn] : suite_table()) out.push_back(run_prop_suite(name, catalog, seed));
  return out;
}

}  // namespace tpplab
