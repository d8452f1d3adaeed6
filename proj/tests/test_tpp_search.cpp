#include <doctest.h>

#include "tpplab/recipes.hpp"
#include "tpplab/rng.hpp"
#include "tpplab/search.hpp"
#include "tpplab/structure.hpp"
#include "tpplab/tpp.hpp"

using namespace tpplab;

namespace {

ElementSet subset(const GroupTable& g, std::vector<unsigned> idx) {
  return make_subset(g, idx);
}

ElementSet whole_group(const GroupTable& g) {
  ElementSet s;
  s.parent = &g;
  s.members = g.all_elements();
  s.is_subgroup = true;
  return s;
}

ElementSet trivial(const GroupTable& g) {
  ElementSet s;
  s.parent = &g;
  s.members.set(0);
  s.is_subgroup = true;
  return s;
}

// The definition verbatim: six nested loops over the equivalence. The
// factored production check is tested against this on small inputs.
bool tpp_six_loops(const TppTriple& t) {
  const GroupTable& g = t.group();
  auto s_idx = t.s.members.to_indices();
  auto t_idx = t.t.members.to_indices();
  auto u_idx = t.u.members.to_indices();
  for (unsigned s : s_idx)
    for (unsigned sp : s_idx)
      for (unsigned tt : t_idx)
        for (unsigned tp : t_idx)
          for (unsigned u : u_idx)
            for (unsigned up : u_idx) {
              unsigned prod = g.mul(
                  g.mul(g.mul(g.mul(g.mul(sp, g.inverse(s)), tp), g.inverse(tt)), up),
                  g.inverse(u));
              bool diagonal = s == sp && tt == tp && u == up;
              if ((prod == 0) != diagonal) return false;
            }
  return true;
}

}  // namespace

TEST_CASE("quotient sets") {
  GroupTable c4 = construct_named(GroupRecipe::cyclic(4));
  CHECK(quotient_set(c4, make_subset(c4, {2}).members).is_identity_only());

  ElemMask q = quotient_set(c4, make_subset(c4, {0, 1}).members);
  ElemMask expect;
  expect.set(0);
  expect.set(1);
  expect.set(3);
  CHECK(q == expect);

  GroupTable d8 = construct_named(GroupRecipe::dihedral(8));
  for (unsigned seed : {1u, 4u, 2u}) {
    ElementSet h = generated_subgroup(d8, {seed});
    CHECK(quotient_set(d8, h.members) == h.members);  // Q(H) = H
  }
  CHECK_THROWS_AS(quotient_set(c4, ElemMask{}), GroupError);
}

TEST_CASE("the three TPP checks agree on the published examples") {
  GroupTable d8 = construct_named(GroupRecipe::dihedral(8));

  SUBCASE("(G, {1}, {1}) always passes") {
    TppTriple t = make_triple(d8, whole_group(d8), trivial(d8), trivial(d8));
    CHECK(tpp_check_definition(t));
    CHECK(tpp_check_sets(t));
    CHECK(tpp_check_subgroups(t));
  }
  SUBCASE("({1,g}, {1,g}, {1}) with g an involution fails") {
    TppTriple t{subset(d8, {0, 4}), subset(d8, {0, 4}), subset(d8, {0})};
    CHECK_FALSE(tpp_check_definition(t));
    CHECK_FALSE(tpp_check_sets(t));
  }
  SUBCASE("a shared nonidentity element in T and U fails") {
    TppTriple t{subset(d8, {0}), subset(d8, {0, 1}), subset(d8, {0, 1, 2})};
    CHECK_FALSE(tpp_check_definition(t));
    CHECK_FALSE(tpp_check_sets(t));
  }
  SUBCASE("in Q8 two distinct cyclic four-subgroups intersect in the center") {
    GroupTable q8 = construct_named(GroupRecipe::quaternion8());
    TppTriple t = make_triple(q8, generated_subgroup(q8, {2}), generated_subgroup(q8, {4}),
                              generated_subgroup(q8, {4}));
    CHECK_FALSE(tpp_check_subgroups(t));
    TppTriple t2 = make_triple(q8, whole_group(q8), generated_subgroup(q8, {2}),
                               generated_subgroup(q8, {4}));
    CHECK_FALSE(tpp_check_subgroups(t2));
  }
  SUBCASE("in D8 the rotation subgroup with a reflection subgroup passes") {
    TppTriple t = make_triple(d8, generated_subgroup(d8, {1}), generated_subgroup(d8, {4}),
                              trivial(d8));
    CHECK(tpp_check_definition(t));
    CHECK(tpp_check_sets(t));
    CHECK(tpp_check_subgroups(t));
    CHECK(t.size() == 8);
  }
  SUBCASE("subgroup check refuses unflagged members") {
    TppTriple t{subset(d8, {0, 1}), trivial(d8), trivial(d8)};
    CHECK_THROWS_AS(tpp_check_subgroups(t), GroupError);
  }
}

TEST_CASE("factored definition check equals the literal six-loop scan") {
  Rng rng(2024);
  for (auto recipe : {GroupRecipe::dihedral(8), GroupRecipe::quaternion8(),
                      GroupRecipe::dihedral(6), GroupRecipe::cyclic(7),
                      GroupRecipe::direct_product(GroupRecipe::cyclic(2), GroupRecipe::cyclic(4))}) {
    GroupTable g = construct_named(recipe);
    for (int round = 0; round < 300; ++round) {
      auto rand_set = [&]() {
        ElemMask m;
        unsigned size = 1 + unsigned(rng.below(4));
        for (unsigned i = 0; i < size; ++i) m.set(unsigned(rng.below(g.order())));
        ElementSet s;
        s.parent = &g;
        s.members = m;
        return s;
      };
      TppTriple t{rand_set(), rand_set(), rand_set()};
      CHECK(tpp_check_definition(t) == tpp_six_loops(t));
    }
  }
}

TEST_CASE("classify_triple flags") {
  GroupTable d8 = construct_named(GroupRecipe::dihedral(8));
  TppTriple improper = make_triple(d8, whole_group(d8), trivial(d8), trivial(d8));
  TripleFlags f = classify_triple(improper, 8);
  CHECK_FALSE(f.proper);
  CHECK(f.trivial_size);
  CHECK(f.maximal_for_subgroup_capacity);

  TppTriple proper = make_triple(d8, generated_subgroup(d8, {1}), generated_subgroup(d8, {4}),
                                 generated_subgroup(d8, {6}));
  TripleFlags f2 = classify_triple(proper, 32);
  CHECK(f2.proper);
  // improper implies trivial size: any triple with a singleton member has
  // size <= |G| * 1 * 1 when the other members are subgroups of G
  CHECK(improper.size() <= d8.order());
}

TEST_CASE("search_beta0 on small groups") {
  SUBCASE("trivial group") {
    GroupTable g = GroupTable::validate({{0}});
    TppReport r = search_beta0(g, all_subgroups(g));
    CHECK(r.beta0 == 1);
    CHECK(r.rho0 == Rational::whole(1));
  }
  SUBCASE("abelian groups have beta0 = |G|") {
    for (auto recipe : {GroupRecipe::cyclic(8), GroupRecipe::cyclic(12),
                        GroupRecipe::elementary_abelian(2, 3),
                        GroupRecipe::elementary_abelian(3, 2)}) {
      GroupTable g = construct_named(recipe);
      TppReport r = search_beta0(g, all_subgroups(g));
      CHECK(r.beta0 == g.order());
      CHECK(r.rho0 == Rational::whole(1));
    }
  }
  SUBCASE("D8 and Q8 have rho0 = 1") {
    for (auto recipe : {GroupRecipe::dihedral(8), GroupRecipe::quaternion8()}) {
      GroupTable g = construct_named(recipe);
      TppReport r = search_beta0(g, all_subgroups(g));
      CHECK(r.beta0 == 8);
      for (const auto& t : r.maximal_subgroup_triples) {
        CHECK(t.size() == 8);
        CHECK(tpp_check_subgroups(t));
      }
    }
  }
  SUBCASE("the order-32 extraspecial plus-type group attains rho0 = 2") {
    GroupTable e32 = construct_named(GroupRecipe::central_product(
        GroupRecipe::dihedral(8), GroupRecipe::dihedral(8), 2, 2));
    TppReport r = search_beta0(e32, all_subgroups(e32));
    CHECK(r.beta0 == 64);
    CHECK(r.rho0 == Rational(2, 1));
    REQUIRE(!r.maximal_subgroup_triples.empty());
    for (const auto& t : r.maximal_subgroup_triples) {
      CHECK(tpp_check_subgroups(t));
      CHECK(tpp_check_definition(t));
      CHECK(t.size() == 64);
    }
  }
  SUBCASE("the minus-type extraspecial group of order 32 stays at rho0 = 1") {
    GroupTable e32m = construct_named(GroupRecipe::central_product(
        GroupRecipe::dihedral(8), GroupRecipe::quaternion8(), 2, 1));
    CHECK(center(e32m).size() == 2);
    TppReport r = search_beta0(e32m, all_subgroups(e32m));
    CHECK(r.beta0 == 32);
  }
  SUBCASE("witness triples are canonically ordered with |S| >= |T| >= |U|") {
    GroupTable d8 = construct_named(GroupRecipe::dihedral(8));
    TppReport r = search_beta0(d8, all_subgroups(d8));
    for (const auto& t : r.maximal_subgroup_triples) {
      CHECK(t.s.size() >= t.t.size());
      CHECK(t.t.size() >= t.u.size());
    }
    for (std::size_t i = 1; i < r.maximal_subgroup_triples.size(); ++i)
      CHECK(triple_canonical_less(r.maximal_subgroup_triples[i - 1],
                                  r.maximal_subgroup_triples[i]));
  }
}

TEST_CASE("search budget exhaustion reports lower bounds") {
  GroupTable e32 = construct_named(GroupRecipe::central_product(
      GroupRecipe::dihedral(8), GroupRecipe::dihedral(8), 2, 2));
  SearchBudget budget;
  budget.max_candidates = 3;
  TppReport r = search_beta0(e32, all_subgroups(e32), budget);
  CHECK(r.budget_exhausted);
  CHECK(r.beta0 >= 32);  // the seed value |G| is always a valid lower bound
  CHECK(r.stats.candidates_examined <= 3);
}

TEST_CASE("subset search: abelian beta equals |G| and the cap is enforced") {
  for (unsigned n = 2; n <= 8; ++n) {
    GroupTable g = construct_named(GroupRecipe::cyclic(n));
    TppReport r = search_beta_subsets(g);
    REQUIRE(r.beta.has_value());
    CHECK(*r.beta == n);
    CHECK(*r.rho == Rational::whole(1));
  }
  GroupTable g12 = construct_named(GroupRecipe::cyclic(12));
  CHECK_THROWS_AS(search_beta_subsets(g12), GroupError);

  GroupTable triv = GroupTable::validate({{0}});
  TppReport r = search_beta_subsets(triv);
  CHECK(*r.beta == 1);
}

TEST_CASE("subset search on D8 against the definition oracle") {
  // Independent oracle: enumerate every basic subset triple and decide with
  // the brute-force definition check only.
  GroupTable d8 = construct_named(GroupRecipe::dihedral(8));
  std::uint64_t oracle_best = 0;
  const std::uint32_t count = 1u << 7;
  std::vector<ElemMask> masks;
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    ElemMask m;
    m.set(0);
    for (unsigned i = 1; i < 8; ++i)
      if ((bits >> (i - 1)) & 1) m.set(i);
    masks.push_back(m);
  }
  for (const auto& ms : masks)
    for (const auto& mt : masks)
      for (const auto& mu : masks) {
        std::uint64_t size = std::uint64_t(ms.count()) * mt.count() * mu.count();
        if (size <= oracle_best) continue;
        ElementSet s, t, u;
        s.parent = t.parent = u.parent = &d8;
        s.members = ms;
        t.members = mt;
        u.members = mu;
        if (tpp_check_definition({s, t, u})) oracle_best = size;
      }

  TppReport r = search_beta_subsets(d8);
  REQUIRE(r.beta.has_value());
  CHECK(*r.beta == oracle_best);
  // frozen value from the oracle above: subsets do no better than subgroups
  // in D8
  CHECK(*r.beta == 8);
  CHECK(*r.rho == Rational::whole(1));
  CHECK(*r.rho >= r.rho0);
}

TEST_CASE("subset search on S3 finds the classic (2, 2, 2) triple") {
  GroupTable s3 = construct_named(GroupRecipe::dihedral(6));
  // oracle as above, definition check only
  std::uint64_t oracle_best = 0;
  std::vector<ElemMask> masks;
  for (std::uint32_t bits = 0; bits < (1u << 5); ++bits) {
    ElemMask m;
    m.set(0);
    for (unsigned i = 1; i < 6; ++i)
      if ((bits >> (i - 1)) & 1) m.set(i);
    masks.push_back(m);
  }
  for (const auto& ms : masks)
    for (const auto& mt : masks)
      for (const auto& mu : masks) {
        std::uint64_t size = std::uint64_t(ms.count()) * mt.count() * mu.count();
        if (size <= oracle_best) continue;
        ElementSet s, t, u;
        s.parent = t.parent = u.parent = &s3;
        s.members = ms;
        t.members = mt;
        u.members = mu;
        if (tpp_check_definition({s, t, u})) oracle_best = size;
      }
  CHECK(oracle_best == 8);

  TppReport r = search_beta_subsets(s3);
  REQUIRE(r.beta.has_value());
  CHECK(*r.beta == 8);
  CHECK(*r.rho == Rational(4, 3));
  // the witness members are the three reflection subgroups, so the subgroup
  // search reaches the same capacity
  TppReport r0 = search_beta0(s3, all_subgroups(s3));
  CHECK(r0.beta0 == 8);
  CHECK(r0.rho0 == Rational(4, 3));
  CHECK(*r.rho >= r0.rho0);
}

TEST_CASE("quotient triples") {
  GroupTable d8 = construct_named(GroupRecipe::dihedral(8));
  TppTriple t = make_triple(d8, generated_subgroup(d8, {1}), generated_subgroup(d8, {4}),
                            trivial(d8));

  SUBCASE("N = {1} keeps the type") {
    QuotientTriple qt = quotient_triple(d8, t, trivial(d8));
    CHECK(qt.triple.type() == std::array<std::size_t, 3>{4, 2, 1});
    CHECK(tpp_check_subgroups(qt.triple));
  }
  SUBCASE("N = S collapses the first member") {
    QuotientTriple qt = quotient_triple(d8, t, generated_subgroup(d8, {1}));
    CHECK(qt.triple.s.size() == 1);
    CHECK(qt.triple.t.size() == 2);
  }
  SUBCASE("N = <r^2> inside S gives a (2, 2, 1) triple") {
    QuotientTriple qt = quotient_triple(d8, t, generated_subgroup(d8, {2}));
    CHECK(qt.quotient->order() == 4);
    CHECK(qt.triple.type() == std::array<std::size_t, 3>{2, 2, 1});
    CHECK(tpp_check_subgroups(qt.triple));
  }
  SUBCASE("N must lie inside S") {
    CHECK_THROWS_AS(quotient_triple(d8, t, generated_subgroup(d8, {4})), GroupError);
  }
}

TEST_CASE("JSON export mentions the exact rational") {
  GroupTable d8 = construct_named(GroupRecipe::dihedral(8));
  TppReport r = search_beta0(d8, all_subgroups(d8));
  std::string j = report_to_json(r, "D8");
  CHECK(j.find("\"rho0_num\": 1") != std::string::npos);
  CHECK(j.find("\"rho0_den\": 1") != std::string::npos);
  CHECK(j.find("\"beta0\": 8") != std::string::npos);
}

TEST_CASE("generating pairs of small subgroups in the extraspecial groups of order 32") {
  // Exhaustive scan, frozen: the plus type contains pairs of order-4
  // subgroups that generate the whole group (e.g. Klein subgroups drawn
  // across the two central factors), the minus type contains none. The
  // asymmetry lines up with rho0 = 2 vs rho0 = 1.
  auto generating_pairs = [](const GroupTable& g) {
    auto lattice = all_subgroups(g);
    unsigned count = 0;
    for (const auto& s : lattice) {
      if (s.size() != 4) continue;
      for (const auto& t : lattice) {
        if (t.size() != 4) continue;
        if (generated_subgroup_mask(g, s.members | t.members).size() == g.order()) ++count;
      }
    }
    return count;
  };
  GroupTable plus = construct_named(GroupRecipe::central_product(
      GroupRecipe::dihedral(8), GroupRecipe::dihedral(8), 2, 2));
  GroupTable minus = construct_named(GroupRecipe::central_product(
      GroupRecipe::dihedral(8), GroupRecipe::quaternion8(), 2, 1));
  CHECK(generating_pairs(plus) > 0);
  CHECK(generating_pairs(minus) == 0);
}

TEST_CASE("pruned search equals a naive unpruned scan") {
  // Independent oracle for the search engine itself: enumerate every
  // canonical subgroup triple with no size pruning, no normality or
  // centralizer skips, deciding each candidate with the subgroup check
  // alone, and compare capacity and witness sets.
  auto member_order = [](const ElementSet& x, const ElementSet& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return ElemMask::lex_less(x.members, y.members);
  };
  auto naive = [&](const GroupTable& g, const std::vector<ElementSet>& lattice) {
    std::uint64_t best = g.order();
    std::vector<TppTriple> ties;
    const std::size_t L = lattice.size();
    for (std::size_t a = 0; a < L; ++a)
      for (std::size_t b = 0; b <= a; ++b)
        for (std::size_t c = 0; c <= b; ++c) {
          TppTriple t{lattice[a], lattice[b], lattice[c]};
          if (t.size() < best) continue;
          if (!tpp_check_subgroups(t)) continue;
          if (t.size() > best) {
            best = t.size();
            ties.clear();
          }
          std::array<ElementSet, 3> members{t.s, t.t, t.u};
          std::sort(members.begin(), members.end(), member_order);
          ties.push_back({members[0], members[1], members[2]});
        }
    std::sort(ties.begin(), ties.end(), triple_canonical_less);
    return std::make_pair(best, ties);
  };

  std::vector<GroupRecipe> family = {
      GroupRecipe::dihedral(6),   // non-nilpotent, beta0 > |G|
      GroupRecipe::dihedral(8),
      GroupRecipe::quaternion8(),
      GroupRecipe::dihedral(12),
      GroupRecipe::cyclic(15),
      GroupRecipe::direct_product(GroupRecipe::cyclic(3), GroupRecipe::dihedral(8)),
      GroupRecipe::central_product(GroupRecipe::dihedral(8), GroupRecipe::dihedral(8), 2, 2),
      GroupRecipe::central_product(GroupRecipe::dihedral(8), GroupRecipe::quaternion8(), 2, 1),
      GroupRecipe::direct_product(GroupRecipe::cyclic(2), GroupRecipe::dihedral(12)),
  };
  for (const auto& recipe : family) {
    GroupTable g = construct_named(recipe);
    CAPTURE(g.order());
    auto lattice = all_subgroups(g);
    auto [naive_best, naive_ties] = naive(g, lattice);
    TppReport rep = search_beta0(g, lattice);
    CHECK(rep.beta0 == naive_best);
    REQUIRE(rep.maximal_subgroup_triples.size() == naive_ties.size());
    for (std::size_t i = 0; i < naive_ties.size(); ++i) {
      CHECK(rep.maximal_subgroup_triples[i].s.members == naive_ties[i].s.members);
      CHECK(rep.maximal_subgroup_triples[i].t.members == naive_ties[i].t.members);
      CHECK(rep.maximal_subgroup_triples[i].u.members == naive_ties[i].u.members);
    }
  }
}
