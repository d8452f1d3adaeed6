#include <doctest.h>

#include <unordered_set>

#include "tpplab/catalog.hpp"
#include "tpplab/recipes.hpp"
#include "tpplab/structure.hpp"

using namespace tpplab;

namespace {

GroupTable s3() { return construct_named(GroupRecipe::dihedral(6)); }

}  // namespace

TEST_CASE("generated subgroups") {
  GroupTable c6 = construct_named(GroupRecipe::cyclic(6));
  CHECK(generated_subgroup(c6, {}).size() == 1);
  CHECK(generated_subgroup(c6, {0}).size() == 1);
  CHECK(generated_subgroup(c6, {2}).size() == 3);

  GroupTable d8 = construct_named(GroupRecipe::dihedral(8));
  ElementSet v4 = generated_subgroup(d8, {2, 4});  // <r^2, s>
  CHECK(v4.size() == 4);
  CHECK(is_abelian_set(d8, v4.members));
}

TEST_CASE("subgroup lattices") {
  CHECK(all_subgroups(construct_named(GroupRecipe::cyclic(5))).size() == 2);
  CHECK(all_subgroups(construct_named(GroupRecipe::cyclic(7))).size() == 2);
  CHECK(all_subgroups(construct_named(GroupRecipe::quaternion8())).size() == 6);
  CHECK(all_subgroups(construct_named(GroupRecipe::dihedral(8))).size() == 10);
  CHECK(all_subgroups(s3()).size() == 6);

  SUBCASE("lattice matches a brute-force subset scan") {
    for (auto recipe : {GroupRecipe::dihedral(12), GroupRecipe::direct_product(
                                                       GroupRecipe::cyclic(2),
                                                       GroupRecipe::cyclic(6))}) {
      GroupTable g = construct_named(recipe);
      std::unordered_set<ElemMask, ElemMaskHash> brute;
      const std::uint32_t subsets = 1u << (g.order() - 1);
      for (std::uint32_t bits = 0; bits < subsets; ++bits) {
        ElemMask m;
        m.set(0);
        for (unsigned i = 1; i < g.order(); ++i)
          if ((bits >> (i - 1)) & 1) m.set(i);
        if (is_subgroup_mask(g, m)) brute.insert(m);
      }
      auto lattice = all_subgroups(g);
      CHECK(lattice.size() == brute.size());
      for (const auto& h : lattice) CHECK(brute.count(h.members) == 1);
    }
  }
  SUBCASE("lattice is sorted by size then lexicographic order") {
    auto lattice = all_subgroups(construct_named(GroupRecipe::dihedral(8)));
    for (std::size_t i = 1; i < lattice.size(); ++i) {
      bool ordered = lattice[i - 1].size() < lattice[i].size() ||
                     (lattice[i - 1].size() == lattice[i].size() &&
                      ElemMask::lex_less(lattice[i - 1].members, lattice[i].members));
      CHECK(ordered);
    }
  }
  SUBCASE("cap") {
    CHECK_THROWS_AS(all_subgroups(construct_named(GroupRecipe::cyclic(300)), 256), GroupError);
  }
}

TEST_CASE("center, centralizer, normalizer") {
  GroupTable c12 = construct_named(GroupRecipe::cyclic(12));
  CHECK(center(c12).size() == 12);

  GroupTable d8 = construct_named(GroupRecipe::dihedral(8));
  CHECK(center(d8).size() == 2);

  GroupTable c3q8 = construct_named(
      GroupRecipe::direct_product(GroupRecipe::cyclic(3), GroupRecipe::quaternion8()));
  CHECK(center(c3q8).size() == 6);

  // C_G(X) <= N_G(X)
  ElementSet x = generated_subgroup(d8, {4});
  CHECK(normalizer(d8, x).members.contains(centralizer(d8, x).members));
}

TEST_CASE("commutator subgroup") {
  CHECK(commutator_subgroup(construct_named(GroupRecipe::cyclic(9))).size() == 1);
  GroupTable d8 = construct_named(GroupRecipe::dihedral(8));
  GroupTable q8 = construct_named(GroupRecipe::quaternion8());
  CHECK(commutator_subgroup(d8).size() == 2);
  CHECK(commutator_subgroup(q8).size() == 2);

  // quotient by G' is abelian
  auto q = quotient_group(d8, commutator_subgroup(d8));
  CHECK(center(q.table).size() == q.table.order());
}

TEST_CASE("frattini subgroup and normal core") {
  GroupTable q8 = construct_named(GroupRecipe::quaternion8());
  auto lattice = all_subgroups(q8);
  ElementSet phi = frattini_subgroup(q8, lattice);
  CHECK(phi.size() == 2);
  CHECK(phi.members == center(q8).members);

  GroupTable d8 = construct_named(GroupRecipe::dihedral(8));
  ElementSet rot = generated_subgroup(d8, {1});
  CHECK(normal_core(d8, rot).members == rot.members);  // normal: core is itself
  ElementSet refl = generated_subgroup(d8, {4});
  CHECK(normal_core(d8, refl).size() == 1);

  // extraspecial: G' = Z = Phi
  GroupTable e32 = construct_named(GroupRecipe::central_product(
      GroupRecipe::dihedral(8), GroupRecipe::dihedral(8), 2, 2));
  auto lat32 = all_subgroups(e32);
  CHECK(frattini_subgroup(e32, lat32).members == center(e32).members);
  CHECK(commutator_subgroup(e32).members == center(e32).members);
}

TEST_CASE("upper central series and nilpotency class") {
  CHECK(upper_central_series(GroupTable::validate({{0}})).nilpotency_class == 0u);
  CHECK(upper_central_series(construct_named(GroupRecipe::cyclic(6))).nilpotency_class == 1u);
  CHECK(upper_central_series(construct_named(GroupRecipe::dihedral(8))).nilpotency_class == 2u);
  CHECK(upper_central_series(construct_named(GroupRecipe::dihedral(16))).nilpotency_class == 3u);
  CHECK_FALSE(upper_central_series(s3()).nilpotency_class.has_value());
}

TEST_CASE("set products and normality") {
  GroupTable d8 = construct_named(GroupRecipe::dihedral(8));
  ElementSet rot = generated_subgroup(d8, {1});
  ElementSet x = make_subset(d8, {0});
  CHECK(set_product(rot, x).members == rot.members);

  ElementSet refl2 = generated_subgroup(d8, {4});  // <s>
  CHECK(set_product(rot, refl2).size() == 8);
  ElementSet pair = make_subset(d8, {4, 6});
  CHECK(set_product(rot, pair).size() == 4);  // products stay inside the reflections

  unsigned witness = 99;
  ElementSet refl = generated_subgroup(d8, {4});
  CHECK_FALSE(is_normal(d8, refl, &witness));
  CHECK(witness < 8);
  // H normal iff N_G(H) = G
  for (const auto& h : all_subgroups(d8))
    CHECK(is_normal(d8, h) == (normalizer(d8, h).size() == 8));
}

TEST_CASE("subgroup as its own table") {
  GroupTable d8 = construct_named(GroupRecipe::dihedral(8));
  ElementSet rot = generated_subgroup(d8, {1});
  SubgroupAsGroup sub = subgroup_as_group(d8, rot);
  CHECK(sub.table.order() == 4);
  CHECK(center(sub.table).size() == 4);
  CHECK(sub.parent_index[0] == 0);
}

TEST_CASE("order-p^3 extraspecial groups are generated by two order-p subgroups") {
  // The non-generation property for pairs of order-p^n subgroups of an
  // extraspecial group of order p^(1+2n) fails at n = 1: these explicit
  // pairs generate everything. At n = 2 (order 32) the property holds;
  // the property suite checks that side.
  GroupTable d8 = construct_named(GroupRecipe::dihedral(8));
  ElementSet s1 = generated_subgroup(d8, {4});  // <s>
  ElementSet s2 = generated_subgroup(d8, {5});  // <rs>
  CHECK(s1.size() == 2);
  CHECK(s2.size() == 2);
  CHECK(generated_subgroup_mask(d8, s1.members | s2.members).size() == 8);

  GroupTable he3 = parse_group_or_generators(read_text_file(
      std::string(TPPLAB_DEFAULT_CATALOG_DIR) + "/g27_3.pgens"));
  REQUIRE(he3.order() == 27);
  // two non-central order-3 subgroups that generate the Heisenberg group
  bool found = false;
  for (unsigned x = 1; x < 27 && !found; ++x)
    for (unsigned y = x + 1; y < 27 && !found; ++y) {
      if (he3.element_order(x) != 3 || he3.element_order(y) != 3) continue;
      ElementSet a = generated_subgroup(he3, {x});
      ElementSet b = generated_subgroup(he3, {y});
      if (generated_subgroup_mask(he3, a.members | b.members).size() == 27) found = true;
    }
  CHECK(found);
}
