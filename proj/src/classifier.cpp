#include "tpplab/classifier.hpp"

namespace tpplab {

std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  unsigned p = 2;
  while (n % p != 0) {
    ++p;
    if (std::uint64_t(p) * p > n) {
      p = unsigned(n);
      break;
    }
  }
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, e);
}

GroupClassification classify_group(const GroupTable& g, const StructureCache& st) {
  GroupClassification c;
  const std::uint64_t n = g.order();
  const std::uint64_t z = st.center.size();
  const std::uint64_t comm = st.commutator.size();

  c.is_abelian = z == n;
  c.p_group = prime_power(n);
  c.nilpotency_class = st.nilpotency_class;
  c.centre_index = n / z;

  if (c.p_group) {
    unsigned p = c.p_group->first;
    c.cyclic_commutator_of_order_p = !c.is_abelian && comm == p;

    // extraspecial: G' = Z = Phi, all of order p.
    if (!c.is_abelian && z == p && comm == p && st.commutator.members == st.center.members &&
        !st.frattini.members.empty() && st.frattini.members == st.center.members)
      c.extraspecial = true;

    std::uint64_t p2 = std::uint64_t(p) * p;
    c.large_centre_band = !c.is_abelian && c.centre_index >= p2 && c.centre_index <= p2 * p;

    for (const auto& m : st.maximal_subgroups) {
      if (m.size() * p != n) continue;
      if (is_abelian_set(g, m.members)) {
        c.has_abelian_index_p_subgroup = true;
        break;
      }
    }
    c.cd_one_p_criterion =
        !c.is_abelian && (c.has_abelian_index_p_subgroup || c.centre_index == p2 * p);
  }
  return c;
}

bool PredictedBound::holds(const Rational& rho0, std::uint64_t group_order,
                           std::uint64_t centre_order) const {
  switch (kind) {
    case BoundKind::StrictSqrt:
      // rho0 < sqrt(|G:Z|)  <=>  rho0^2 * |Z| < |G| in integers.
      return rho0.num * rho0.num * std::int64_t(centre_order) <
             std::int64_t(group_order) * rho0.den * rho0.den;
    case BoundKind::AtMostP:
      return rho0 <= Rational::whole(std::int64_t(payload));
    case BoundKind::ExactlyOne:
      return rho0 == Rational::whole(1);
  }
  return false;
}

std::string PredictedBound::describe() const {
  switch (kind) {
    case BoundKind::StrictSqrt:
      return "rho0 < sqrt(" + std::to_string(payload) + ")";
    case BoundKind::AtMostP:
      return "rho0 <= " + std::to_string(payload);
    case BoundKind::ExactlyOne:
      return "rho0 = 1";
  }
  return "?";
}

std::vector<PredictedBound> predicted_bound(const GroupClassification& c,
                                            std::uint64_t group_order) {
  std::vector<PredictedBound> out;
  if (c.is_abelian) {
    out.push_back({BoundKind::ExactlyOne, "abelian", 0});
    return out;
  }
  if (c.nilpotency_class && *c.nilpotency_class == 2)
    out.push_back({BoundKind::StrictSqrt, "class2-strict-sqrt", c.centre_index});
  if (c.p_group) {
    unsigned p = c.p_group->first;
    unsigned e = c.p_group->second;
    if (c.cyclic_commutator_of_order_p)
      out.push_back({BoundKind::AtMostP, "cyclic-commutator-at-most-p", p});
    if (c.nilpotency_class && *c.nilpotency_class == 2 && c.large_centre_band)
      out.push_back({BoundKind::ExactlyOne, "large-centre", 0});
    if (c.cd_one_p_criterion)
      out.push_back({BoundKind::ExactlyOne, "cd-one-p", 0});
    if (e <= 4) out.push_back({BoundKind::ExactlyOne, "order-at-most-p4", 0});
  }
  (void)group_order;
  return out;
}

}  // namespace tpplab
