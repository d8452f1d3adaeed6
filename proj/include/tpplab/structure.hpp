#pragma once

#include <optional>
#include <vector>

#include "tpplab/group.hpp"

namespace tpplab {

// Subgroup lattice enumeration is refused above this order by default.
inline constexpr unsigned kLatticeCap = 256;

ElementSet generated_subgroup(const GroupTable& g, const std::vector<unsigned>& seed);
ElementSet generated_subgroup_mask(const GroupTable& g, const ElemMask& seed);

ElementSet center(const GroupTable& g);
ElementSet centralizer(const GroupTable& g, const ElementSet& x);
ElementSet normalizer(const GroupTable& g, const ElementSet& h);
ElementSet commutator_subgroup(const GroupTable& g);
ElementSet normal_core(const GroupTable& g, const ElementSet& h);

ElementSet set_product(const ElementSet& x, const ElementSet& y);
bool is_normal(const GroupTable& g, const ElementSet& h, unsigned* witness_conjugator = nullptr);
bool is_abelian_set(const GroupTable& g, const ElemMask& m);
bool is_subgroup_mask(const GroupTable& g, const ElemMask& m);
// True when m = <g0> for a single element g0 of m.
bool is_cyclic_subgroup(const GroupTable& g, const ElemMask& m);

// Every subgroup exactly once, sorted by (size, lexicographic bitset).
// Breadth-first closure extension from the cyclic subgroups; throws
// CapExceeded above the cap.
std::vector<ElementSet> all_subgroups(const GroupTable& g, unsigned cap = kLatticeCap);

std::vector<ElementSet> maximal_subgroups(const GroupTable& g,
                                          const std::vector<ElementSet>& lattice);
ElementSet frattini_subgroup(const GroupTable& g, const std::vector<ElementSet>& lattice);

struct CentralSeries {
  std::vector<ElementSet> terms;       // Z_0 = {1} <= Z_1 <= ...
  std::optional<unsigned> nilpotency_class;  // empty when not nilpotent
};

CentralSeries upper_central_series(const GroupTable& g);

// Computed structural landmarks of one group; write-once, then shared
// read-only. Lattice-dependent fields are filled only when the order is
// within the lattice cap.
struct StructureCache {
  ElementSet center;
  ElementSet commutator;
  ElementSet frattini;
  std::vector<ElementSet> upper_central_series;
  std::optional<unsigned> nilpotency_class;
  std::vector<ElementSet> all_subgroups;
  std::vector<ElementSet> maximal_subgroups;
};

StructureCache compute_structure(const GroupTable& g, unsigned lattice_cap = kLatticeCap);

// The subgroup H with its own multiplication table, plus the index map
// from new indices into the parent (new identity = 0).
struct SubgroupAsGroup {
  GroupTable table;
  std::vector<unsigned> parent_index;
};

SubgroupAsGroup subgroup_as_group(const GroupTable& g, const ElementSet& h);

// Multiset of element orders as (order, count) pairs, sorted by order.
std::vector<std::pair<unsigned, unsigned>> element_order_histogram(const GroupTable& g);

}  // namespace tpplab
