#pragma once

#include <array>
#include <cstdint>
#include <memory>

#include "tpplab/group.hpp"

namespace tpplab {

// A candidate or certified triple (S, T, U) over one parent group.
struct TppTriple {
  ElementSet s, t, u;

  const GroupTable& group() const { return *s.parent; }
  std::uint64_t size() const {
    return std::uint64_t(s.size()) * t.size() * u.size();
  }
  // (|S|, |T|, |U|)
  std::array<std::size_t, 3> type() const { return {s.size(), t.size(), u.size()}; }
};

TppTriple make_triple(const GroupTable& g, const ElementSet& s, const ElementSet& t,
                      const ElementSet& u);

// Q(X) = { x' x^-1 | x, x' in X }. Contains the identity, closed under
// inverse, and equals X when X is a subgroup.
ElemMask quotient_set(const GroupTable& g, const ElemMask& x);
ElementSet quotient_set(const ElementSet& x);

// The three equivalent decision procedures.
//
// Definition check: s's^-1 t't^-1 u'u^-1 = 1 only for s=s', t=t', u=u'.
// Full cost O(|S|^2 |T|^2 + |U|^2); this is the oracle the others are
// tested against.
bool tpp_check_definition(const TppTriple& t);

// Set characterization: Q(S) n Q(T)Q(U) = Q(T) n Q(U) = {1}.
bool tpp_check_sets(const TppTriple& t);

// Subgroup shortcut: S n TU = T n U = {1}. Requires all members flagged
// as subgroups.
bool tpp_check_subgroups(const TppTriple& t);

// proper: min parameter > 1; trivial_size: |S||T||U| <= |G|;
// maximal flags are judged against a capacity by the caller.
struct TripleFlags {
  bool proper = false;
  bool trivial_size = false;
  bool maximal_for_subgroup_capacity = false;  // against beta0
  bool maximal_for_subset_capacity = false;    // against beta, when known
};

TripleFlags classify_triple(const TppTriple& t, std::uint64_t beta0,
                            std::uint64_t beta_subsets = 0);

// Image triple (S/N, TN/N, UN/N) in G/N, for normal N <= S of a subgroup
// TPP triple. The result passes the subgroup check in the quotient and has
// type (|S|/|N|, |T|, |U|). The quotient table is heap-held so the triple's
// parent pointer stays valid across moves.
struct QuotientTriple {
  std::shared_ptr<GroupTable> quotient;
  std::vector<unsigned> projection;
  TppTriple triple;
};

QuotientTriple quotient_triple(const GroupTable& g, const TppTriple& t, const ElementSet& n);

// X g, the right translate of a subset.
ElemMask right_translate(const GroupTable& g, const ElemMask& x, unsigned by);

}  // namespace tpplab
