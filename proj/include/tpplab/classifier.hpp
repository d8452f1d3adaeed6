#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tpplab/rational.hpp"
#include "tpplab/structure.hpp"

namespace tpplab {

// Which theorem hypotheses a group satisfies. Everything here is decided
// structurally; cd(G) is never computed from characters -- only the
// abelian-index-p / centre-index-p^3 criterion plus catalog metadata.
struct GroupClassification {
  bool is_abelian = false;
  std::optional<std::pair<unsigned, unsigned>> p_group;  // (p, n) with |G| = p^n
  std::optional<unsigned> nilpotency_class;
  bool cyclic_commutator_of_order_p = false;
  bool extraspecial = false;
  std::uint64_t centre_index = 1;
  bool large_centre_band = false;  // nonabelian p-group with p^2 <= |G:Z| <= p^3
  bool has_abelian_index_p_subgroup = false;
  bool cd_one_p_criterion = false;
  std::optional<std::set<unsigned>> declared_cd;  // catalog metadata only
};

GroupClassification classify_group(const GroupTable& g, const StructureCache& structure);

enum class BoundKind {
  StrictSqrt,   // rho0 < sqrt(|G:Z|), compared as rho0^2 * |Z| < |G|
  AtMostP,      // rho0 <= p
  ExactlyOne,   // rho0 = 1
};

struct PredictedBound {
  BoundKind kind;
  std::string theorem;      // stable tag, e.g. "class2-strict-sqrt"
  std::uint64_t payload;    // centre index, p, or unused

  // Exact check of a computed rho0 against this bound.
  bool holds(const Rational& rho0, std::uint64_t group_order, std::uint64_t centre_order) const;
  std::string describe() const;
};

// Every applicable theorem constraint, in a fixed order; empty when no
// hypothesis matches.
std::vector<PredictedBound> predicted_bound(const GroupClassification& c,
                                            std::uint64_t group_order);

// Order as p^n for prime p, when possible.
std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t n);

}  // namespace tpplab
