#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tpplab/catalog.hpp"
#include "tpplab/group.hpp"

namespace tpplab {

// One lemma-level property suite run. Failures carry minimal witnesses
// (group label, member indices); deterministic given the seed.
struct PropOutcome {
  std::string suite;
  bool passed = true;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;
  double wall_seconds = 0.0;
};

std::vector<std::string> prop_suite_names();
PropOutcome run_prop_suite(const std::string& name, const Catalog& catalog, std::uint64_t seed);
std::vector<PropOutcome> run_all_prop_suites(const Catalog& catalog, std::uint64_t seed);

// Multiplication table from an explicit rule; used by suites that exercise
// groups outside the catalog (e.g. semidihedral and generalized quaternion
// 16-groups for the order <= p^4 law).
GroupTable table_from_rule(unsigned n, const std::function<unsigned(unsigned, unsigned)>& mul);

}  // namespace tpplab
