#include "tpplab/tpp.hpp"

namespace tpplab {

TppTriple make_triple(const GroupTable& g, const ElementSet& s, const ElementSet& t,
                      const ElementSet& u) {
  if (s.parent != &g || t.parent != &g || u.parent != &g)
    throw GroupError(Err::BadParams, "triple members belong to different groups");
  if (s.members.empty() || t.members.empty() || u.members.empty())
    throw GroupError(Err::EmptySet, "triple members must be non-empty");
  return {s, t, u};
}

ElemMask quotient_set(const GroupTable& g, const ElemMask& x) {
  if (x.empty()) throw GroupError(Err::EmptySet, "quotient set of the empty set");
  ElemMask q;
  x.for_each([&](unsigned a) {
    unsigned ai = g.inverse(a);
    x.for_each([&](unsigned b) { q.set(g.mul(b, ai)); });
  });
  return q;
}

ElementSet quotient_set(const ElementSet& x) {
  ElementSet out;
  out.parent = x.parent;
  out.members = quotient_set(*x.parent, x.members);
  out.is_subgroup = x.is_subgroup;  // Q(H) = H for subgroups
  return out;
}

namespace {

ElemMask product_mask(const GroupTable& g, const ElemMask& x, const ElemMask& y) {
  ElemMask m;
  x.for_each([&](unsigned a) {
    y.for_each([&](unsigned b) { m.set(g.mul(a, b)); });
  });
  return m;
}

}  // namespace

bool tpp_check_definition(const TppTriple& t) {
  const GroupTable& g = t.group();
  auto s_idx = t.s.members.to_indices();
  auto t_idx = t.t.members.to_indices();
  auto u_idx = t.u.members.to_indices();

  // q in Q(U) \ {1} iff q = u'u^-1 for some u != u', so the last factor is
  // resolvable by one membership mask.
  ElemMask qu_nontrivial = quotient_set(g, t.u.members);
  qu_nontrivial.reset(0);

  for (unsigned s : s_idx) {
    unsigned si = g.inverse(s);
    for (unsigned sp : s_idx) {
      unsigned a = g.mul(sp, si);
      bool s_diag = sp == s;
      for (unsigned tp : t_idx) {
        unsigned atp = g.mul(a, tp);
        for (unsigned tt : t_idx) {
          unsigned ab = g.mul(atp, g.inverse(tt));
          if (ab == 0) {
            // u'u^-1 must be 1, i.e. u = u'; equivalence demands the s and
            // t pairs be diagonal too.
            if (!s_diag || tp != tt) return false;
          } else {
            if (qu_nontrivial.test(g.inverse(ab))) return false;
          }
        }
      }
    }
  }
  return true;
}

bool tpp_check_sets(const TppTriple& t) {
  const GroupTable& g = t.group();
  ElemMask qs = quotient_set(g, t.s.members);
  ElemMask qt = quotient_set(g, t.t.members);
  ElemMask qu = quotient_set(g, t.u.members);
  if (!qt.intersects_only_identity(qu)) return false;
  ElemMask qtqu = product_mask(g, qt, qu);
  return qs.intersects_only_identity(qtqu);
}

bool tpp_check_subgroups(const TppTriple& t) {
  const GroupTable& g = t.group();
  const char* names[3] = {"S", "T", "U"};
  const ElementSet* members[3] = {&t.s, &t.t, &t.u};
  for (int i = 0; i < 3; ++i)
    if (!members[i]->is_subgroup)
      throw GroupError(Err::NotSubgroup,
                       std::string("member ") + names[i] + " is not flagged as a subgroup");
  if (!t.t.members.intersects_only_identity(t.u.members)) return false;
  ElemMask tu = product_mask(g, t.t.members, t.u.members);
  return t.s.members.intersects_only_identity(tu);
}

TripleFlags classify_triple(const TppTriple& t, std::uint64_t beta0, std::uint64_t beta_subsets) {
  TripleFlags f;
  std::size_t mn = std::min({t.s.size(), t.t.size(), t.u.size()});
  f.proper = mn > 1;
  f.trivial_size = t.size() <= t.group().order();
  f.maximal_for_subgroup_capacity = beta0 != 0 && t.size() == beta0;
  f.maximal_for_subset_capacity = beta_subsets != 0 && t.size() == beta_subsets;
  return f;
}

QuotientTriple quotient_triple(const GroupTable& g, const TppTriple& t, const ElementSet& n) {
  if (!tpp_check_subgroups(t))
    throw GroupError(Err::BadParams, "triple does not satisfy the subgroup TPP");
  if (!t.s.members.contains(n.members))
    throw GroupError(Err::NotContained, "N is not contained in S");
  QuotientResult q = quotient_group(g, n);  // throws NotNormal with witness

  QuotientTriple out;
  out.quotient = std::make_shared<GroupTable>(std::move(q.table));
  out.projection = std::move(q.projection);

  auto image = [&](const ElemMask& m) {
    ElementSet s;
    s.parent = out.quotient.get();
    m.for_each([&](unsigned x) { s.members.set(out.projection[x]); });
    s.is_subgroup = true;  // images of subgroups under a homomorphism
    return s;
  };
  out.triple = {image(t.s.members), image(t.t.members), image(t.u.members)};

  if (!tpp_check_subgroups(out.triple))
    throw GroupError(Err::ValidationError, "quotient triple lost the TPP");
  const std::size_t ns = n.size();
  if (out.triple.s.size() != t.s.size() / ns || out.triple.t.size() != t.t.size() ||
      out.triple.u.size() != t.u.size())
    throw GroupError(Err::ValidationError, "quotient triple has unexpected type");
  return out;
}

ElemMask right_translate(const GroupTable& g, const ElemMask& x, unsigned by) {
  ElemMask m;
  x.for_each([&](unsigned a) { m.set(g.mul(a, by)); });
  return m;
}

}  // namespace tpplab
