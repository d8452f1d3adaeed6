#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tpplab/elem_mask.hpp"
#include "tpplab/errors.hpp"

namespace tpplab {

// Exhaustive associativity verification is refused above this order;
// groups that large must come from a verified construction.
inline constexpr unsigned kVerifyCap = 512;

// Immutable multiplication table of a validated finite group. Index 0 is
// the identity after normalization, which the bitset code downstream
// relies on (bit 0 = identity). Safe to share across threads once built.
class GroupTable {
public:
  GroupTable() = default;  // empty; fill through validate()

  unsigned order() const { return n_; }
  unsigned mul(unsigned a, unsigned b) const { return table_[std::size_t(a) * n_ + b]; }
  unsigned inverse(unsigned a) const { return inv_[a]; }
  unsigned element_order(unsigned a) const { return elem_order_[a]; }
  unsigned power(unsigned a, long e) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label_of(unsigned i) const;

  ElemMask all_elements() const { return ElemMask::full(n_); }

  // Verifies every group axiom on a raw table and normalizes the identity
  // to index 0. Throws GroupError naming the first failed axiom with a
  // witness pair/triple.
  static GroupTable validate(const std::vector<std::vector<unsigned>>& raw,
                             std::vector<std::string> labels = {});

  // Same, for a pre-flattened row-major table.
  static GroupTable validate_flat(unsigned n, std::vector<std::uint16_t> flat,
                                  std::vector<std::string> labels = {});

private:
  void finish_build();  // inverses + element orders

  unsigned n_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inv_;
  std::vector<unsigned> elem_order_;
  std::vector<std::string> labels_;
};

// A set of element indices of one parent group. Carries a bitset plus the
// closed-under-product flag; it does not own the parent.
struct ElementSet {
  const GroupTable* parent = nullptr;
  ElemMask members;
  bool is_subgroup = false;

  std::size_t size() const { return members.count(); }
  bool contains(unsigned i) const { return members.test(i); }
};

ElementSet make_subset(const GroupTable& g, const std::vector<unsigned>& idx);

// --- element arithmetic -----------------------------------------------

struct ElementArithmetic {
  unsigned product;
  unsigned inverse_of_g;
  unsigned order_of_g;
};

ElementArithmetic element_arithmetic(const GroupTable& g, unsigned a, unsigned b);

// --- quotients ---------------------------------------------------------

struct QuotientResult {
  GroupTable table;
  // projection[g] = index of gN in the quotient; a surjective homomorphism
  // with kernel exactly N (verified at construction).
  std::vector<unsigned> projection;
};

QuotientResult quotient_group(const GroupTable& g, const ElementSet& normal_subgroup);

// --- file formats ------------------------------------------------------
//
// Table file:  "group-table v1" / "order N" / N rows of N indices /
//              optional "labels" block, one label per line.
// Generator file: "perm-gens v1" / "degree D" / one generator per line as
//              D images of points 0..D-1.
// Both serialize byte-deterministically (LF, single spaces).

std::string serialize_group(const GroupTable& g);
GroupTable parse_group(const std::string& text);

// Parses either format. Generator files go through permutation closure
// with the given element cap.
GroupTable parse_group_or_generators(const std::string& text, unsigned closure_cap = kVerifyCap);

// Closure of permutation generators acting on [0, degree). Element 0 is the
// identity; element numbering is BFS discovery order, so serialization of
// the resulting table is deterministic.
GroupTable group_from_permutations(unsigned degree,
                                   const std::vector<std::vector<unsigned>>& gens,
                                   unsigned closure_cap = kVerifyCap);

std::string serialize_permutation_generators(unsigned degree,
                                             const std::vector<std::vector<unsigned>>& gens);

}  // namespace tpplab
