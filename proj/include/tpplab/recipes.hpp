#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tpplab/group.hpp"

namespace tpplab {

enum class RecipeKind {
  Cyclic,           // n
  Dihedral,         // group order 2m, even, >= 4
  Quaternion,       // order 8
  ElementaryAbelian,  // p, k  -> order p^k
  DirectProduct,    // two child recipes
  CentralProduct,   // two child recipes + central generator index in each factor
  FromGenerators,   // inline permutation generators
  FromTableFile,    // path to a group-table file
};

// Reproducible construction description. Children make products composable
// (e.g. C2 x (central product of D8 and C4)).
struct GroupRecipe {
  RecipeKind kind = RecipeKind::Cyclic;
  std::vector<long> params;          // kind-specific integers
  std::vector<std::shared_ptr<GroupRecipe>> children;
  unsigned degree = 0;               // FromGenerators
  std::vector<std::vector<unsigned>> generators;
  std::string path;                  // FromTableFile / FromGenerators via file

  static GroupRecipe cyclic(unsigned n);
  static GroupRecipe dihedral(unsigned order);
  static GroupRecipe quaternion8();
  static GroupRecipe elementary_abelian(unsigned p, unsigned k);
  static GroupRecipe direct_product(GroupRecipe a, GroupRecipe b);
  // zeta_a / zeta_b are element indices generating the identified central
  // subgroups of order p in each factor.
  static GroupRecipe central_product(GroupRecipe a, GroupRecipe b, unsigned zeta_a,
                                     unsigned zeta_b);
  static GroupRecipe from_generators(unsigned degree,
                                     std::vector<std::vector<unsigned>> gens);
  static GroupRecipe from_table_file(std::string path);
};

GroupTable construct_named(const GroupRecipe& recipe);

// Direct constructions, also usable on already-built tables.
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
GroupTable central_product(const GroupTable& a, const GroupTable& b, unsigned zeta_a,
                           unsigned zeta_b);

// Recipe expressions as used by the catalog manifest, e.g.
//   "direct(cyclic(3),dihedral(8))", "central(dihedral(8),dihedral(8),2,2)",
//   "gens(q8_like.pgens)", "table(foo.gtab)".
// File references resolve against base_dir.
GroupRecipe parse_recipe(const std::string& expr);
std::string recipe_to_string(const GroupRecipe& recipe);
GroupTable build_recipe(const GroupRecipe& recipe, const std::string& base_dir);

}  // namespace tpplab
