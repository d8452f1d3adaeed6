#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tpplab/rational.hpp"
#include "tpplab/tpp.hpp"

namespace tpplab {

inline constexpr unsigned kSubsetSearchCap = 10;

// max_candidates counts S-against-TU tests; 0 means unlimited on both axes.
struct SearchBudget {
  std::uint64_t max_candidates = 0;
  double max_seconds = 0.0;

  bool unlimited() const { return max_candidates == 0 && max_seconds == 0.0; }
};

struct SearchStats {
  std::uint64_t pairs_examined = 0;
  std::uint64_t candidates_examined = 0;
  std::uint64_t pruned = 0;
  double wall_seconds = 0.0;
};

// Search outcome. When budget_exhausted is set, beta0/beta are lower
// bounds, never silently truncated exact values.
struct TppReport {
  unsigned group_order = 0;
  std::uint64_t beta0 = 0;
  Rational rho0;
  std::vector<TppTriple> maximal_subgroup_triples;
  // total count of maximal triples found; exceeds the list size only when
  // the retention cap was hit (ties in the hundreds of thousands)
  std::uint64_t maximal_triples_total = 0;

  std::optional<std::uint64_t> beta;  // arbitrary-subset capacity, tiny scale
  std::optional<Rational> rho;
  std::vector<TppTriple> maximal_subset_triples;

  SearchStats stats;
  bool budget_exhausted = false;
};

inline constexpr std::size_t kMaxRetainedTriples = 1u << 17;

// Exhaustive beta0 search over a complete subgroup lattice. Witness triples
// are reported with |S| >= |T| >= |U| (permutation invariance) and all ties
// are retained in canonical order, up to the retention cap (the exact tie
// count is always reported).
//
// Pruning: (a) pairs with T n U != 1; (b) size cannot reach the current
// best; (c) once best > |G|, pairs that centralize each other; (d) once
// best > |G|, normal members (non-trivial triples have non-normal members).
TppReport search_beta0(const GroupTable& g, const std::vector<ElementSet>& lattice,
                       const SearchBudget& budget = {});

// Exhaustive beta search over basic subset triples (identity in every
// member, justified by translation invariance). Throws CapExceeded above
// the cap.
TppReport search_beta_subsets(const GroupTable& g, const SearchBudget& budget = {},
                              unsigned cap = kSubsetSearchCap);

// Canonical comparison for witness triples (size, then type, then members).
bool triple_canonical_less(const TppTriple& a, const TppTriple& b);

std::string report_to_json(const TppReport& report, const std::string& group_name);

}  // namespace tpplab
