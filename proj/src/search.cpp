#include "tpplab/search.hpp"

#include <algorithm>
#include <chrono>

#include <json.hpp>

#include "tpplab/structure.hpp"

namespace tpplab {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point start = Clock::now();
  double max_seconds = 0.0;

  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }
  bool expired() const { return max_seconds > 0.0 && elapsed() > max_seconds; }
};

ElemMask product_mask(const GroupTable& g, const ElemMask& x, const ElemMask& y) {
  ElemMask m;
  x.for_each([&](unsigned a) {
    y.for_each([&](unsigned b) { m.set(g.mul(a, b)); });
  });
  return m;
}

ElementSet wrap(const GroupTable& g, const ElemMask& m, bool subgroup) {
  ElementSet s;
  s.parent = &g;
  s.members = m;
  s.is_subgroup = subgroup;
  return s;
}

}  // namespace

bool triple_canonical_less(const TppTriple& a, const TppTriple& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ta = a.type(), tb = b.type();
  if (ta != tb) return ta < tb;
  if (a.s.members != b.s.members) return ElemMask::lex_less(a.s.members, b.s.members);
  if (a.t.members != b.t.members) return ElemMask::lex_less(a.t.members, b.t.members);
  return ElemMask::lex_less(a.u.members, b.u.members);
}

TppReport search_beta0(const GroupTable& g, const std::vector<ElementSet>& lattice,
                       const SearchBudget& budget) {
  const unsigned n = g.order();
  // the search is only exact over a complete lattice
  bool has_trivial = false, has_whole = false;
  for (const auto& h : lattice) {
    if (h.members.is_identity_only()) has_trivial = true;
    if (h.members == g.all_elements()) has_whole = true;
  }
  if (!has_trivial || !has_whole)
    throw GroupError(Err::BadParams, "subgroup lattice is incomplete");

  TppReport report;
  report.group_order = n;

  struct Sub {
    ElemMask mask;
    std::uint64_t size;
    bool normal;
    ElemMask centralizer;
  };

  // Element centralizers once, subgroup centralizers by intersection.
  std::vector<ElemMask> elem_cent(n);
  for (unsigned e = 0; e < n; ++e) {
    ElemMask m;
    for (unsigned x = 0; x < n; ++x)
      if (g.mul(e, x) == g.mul(x, e)) m.set(x);
    elem_cent[e] = m;
  }

  std::vector<Sub> subs;
  subs.reserve(lattice.size());
  for (const auto& h : lattice) {
    Sub s;
    s.mask = h.members;
    s.size = h.members.count();
    ElementSet hs = wrap(g, h.members, true);
    s.normal = is_normal(g, hs);
    ElemMask c = g.all_elements();
    h.members.for_each([&](unsigned e) { c &= elem_cent[e]; });
    s.centralizer = c;
    subs.push_back(std::move(s));
  }
  std::sort(subs.begin(), subs.end(), [](const Sub& a, const Sub& b) {
    if (a.size != b.size) return a.size > b.size;
    return ElemMask::lex_less(a.mask, b.mask);
  });

  const std::uint64_t order64 = n;
  std::uint64_t best = order64;  // (G, {1}, {1}) always realizes |G|
  std::vector<std::array<std::size_t, 3>> ties;
  std::uint64_t tie_count = 0;

  Deadline deadline{Clock::now(), budget.max_seconds};
  bool exhausted = false;
  SearchStats stats;

  const std::size_t L = subs.size();
  for (std::size_t it = 0; it < L && !exhausted; ++it) {
    const Sub& T = subs[it];
    if (order64 * T.size * T.size < best) break;  // everything later is smaller
    for (std::size_t iu = it; iu < L; ++iu) {
      const Sub& U = subs[iu];
      if (order64 * T.size * U.size < best) break;
      ++stats.pairs_examined;
      if (!T.mask.intersects_only_identity(U.mask)) {
        ++stats.pruned;
        continue;
      }
      if (best > order64 && (T.normal || U.normal)) {
        ++stats.pruned;
        continue;
      }
      if (best > order64 && T.centralizer.contains(U.mask)) {
        ++stats.pruned;
        continue;
      }
      ElemMask tu = product_mask(g, T.mask, U.mask);
      for (std::size_t is = 0; is <= it; ++is) {
        const Sub& S = subs[is];
        std::uint64_t size = S.size * T.size * U.size;
        if (size < best) break;
        if (best > order64 && S.normal) {
          ++stats.pruned;
          continue;
        }
        ++stats.candidates_examined;
        if (S.mask.intersects_only_identity(tu)) {
          if (size > best) {
            best = size;
            ties.clear();
            tie_count = 0;
          }
          ++tie_count;
          if (ties.size() < kMaxRetainedTriples) ties.push_back({is, it, iu});
        }
        if (budget.max_candidates && stats.candidates_examined >= budget.max_candidates) {
          exhausted = true;
          break;
        }
        if ((stats.candidates_examined & 0xfff) == 0 && deadline.expired()) {
          exhausted = true;
          break;
        }
      }
      if (exhausted) break;
    }
  }

  report.beta0 = best;
  report.rho0 = Rational(std::int64_t(best), std::int64_t(order64));
  report.budget_exhausted = exhausted;
  report.maximal_triples_total = tie_count;
  for (auto [is, it, iu] : ties) {
    report.maximal_subgroup_triples.push_back(
        {wrap(g, subs[is].mask, true), wrap(g, subs[it].mask, true), wrap(g, subs[iu].mask, true)});
  }
  std::sort(report.maximal_subgroup_triples.begin(), report.maximal_subgroup_triples.end(),
            triple_canonical_less);
  stats.wall_seconds = deadline.elapsed();
  report.stats = stats;
  return report;
}

TppReport search_beta_subsets(const GroupTable& g, const SearchBudget& budget, unsigned cap) {
  const unsigned n = g.order();
  if (n > cap)
    throw GroupError(Err::CapExceeded, "order " + std::to_string(n) +
                                           " exceeds the subset search cap " + std::to_string(cap));
  TppReport report;
  report.group_order = n;

  // All subsets containing the identity, largest first.
  struct Basic {
    ElemMask mask;
    ElemMask qset;
    std::uint64_t size;
  };
  std::vector<Basic> basics;
  const std::uint32_t count = n >= 1 ? (1u << (n - 1)) : 0;
  basics.reserve(count);
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    ElemMask m;
    m.set(0);
    for (unsigned i = 1; i < n; ++i)
      if ((bits >> (i - 1)) & 1) m.set(i);
    Basic b;
    b.mask = m;
    b.qset = quotient_set(g, m);
    b.size = m.count();
    basics.push_back(std::move(b));
  }
  std::sort(basics.begin(), basics.end(), [](const Basic& a, const Basic& b) {
    if (a.size != b.size) return a.size > b.size;
    return ElemMask::lex_less(a.mask, b.mask);
  });

  const std::uint64_t order64 = n;
  std::uint64_t best = order64;
  std::vector<std::array<std::size_t, 3>> ties;
  Deadline deadline{Clock::now(), budget.max_seconds};
  bool exhausted = false;
  SearchStats stats;

  const std::size_t L = basics.size();
  for (std::size_t it = 0; it < L && !exhausted; ++it) {
    const Basic& T = basics[it];
    if (order64 * T.size * T.size < best) break;
    for (std::size_t iu = it; iu < L; ++iu) {
      const Basic& U = basics[iu];
      if (order64 * T.size * U.size < best) break;
      ++stats.pairs_examined;
      if (!T.qset.intersects_only_identity(U.qset)) {
        ++stats.pruned;
        continue;
      }
      ElemMask qtqu = product_mask(g, T.qset, U.qset);
      for (std::size_t is = 0; is <= it; ++is) {
        const Basic& S = basics[is];
        std::uint64_t size = S.size * T.size * U.size;
        if (size < best) break;
        ++stats.candidates_examined;
        if (S.qset.intersects_only_identity(qtqu)) {
          if (size > best) {
            best = size;
            ties.clear();
          }
          ties.push_back({is, it, iu});
        }
        if (budget.max_candidates && stats.candidates_examined >= budget.max_candidates) {
          exhausted = true;
          break;
        }
        if ((stats.candidates_examined & 0xfff) == 0 && deadline.expired()) {
          exhausted = true;
          break;
        }
      }
      if (exhausted) break;
    }
  }

  report.beta = best;
  report.rho = Rational(std::int64_t(best), std::int64_t(order64));
  report.budget_exhausted = exhausted;
  report.maximal_triples_total = ties.size();
  for (auto [is, it, iu] : ties) {
    auto as_set = [&](const ElemMask& m) { return wrap(g, m, is_subgroup_mask(g, m)); };
    report.maximal_subset_triples.push_back(
        {as_set(basics[is].mask), as_set(basics[it].mask), as_set(basics[iu].mask)});
  }
  std::sort(report.maximal_subset_triples.begin(), report.maximal_subset_triples.end(),
            triple_canonical_less);
  stats.wall_seconds = deadline.elapsed();
  report.stats = stats;
  return report;
}

std::string report_to_json(const TppReport& report, const std::string& group_name) {
  nlohmann::json j;
  j["group"] = group_name;
  j["order"] = report.group_order;
  j["beta0"] = report.beta0;
  j["rho0_num"] = report.rho0.num;
  j["rho0_den"] = report.rho0.den;
  auto triples = nlohmann::json::array();
  for (const auto& t : report.maximal_subgroup_triples)
    triples.push_back({t.s.members.to_indices(), t.t.members.to_indices(),
                       t.u.members.to_indices()});
  j["triples"] = triples;
  if (report.beta) {
    j["beta"] = *report.beta;
    j["rho_num"] = report.rho->num;
    j["rho_den"] = report.rho->den;
    auto st = nlohmann::json::array();
    for (const auto& t : report.maximal_subset_triples)
      st.push_back({t.s.members.to_indices(), t.t.members.to_indices(),
                    t.u.members.to_indices()});
    j["subset_triples"] = st;
  }
  j["stats"] = {{"pairs_examined", report.stats.pairs_examined},
                {"candidates_examined", report.stats.candidates_examined},
                {"pruned", report.stats.pruned},
                {"wall_seconds", report.stats.wall_seconds}};
  j["budget_exhausted"] = report.budget_exhausted;
  return j.dump(2);
}

}  // namespace tpplab
