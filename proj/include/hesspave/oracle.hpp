#ifndef HESSPAVE_ORACLE_HPP
#define HESSPAVE_ORACLE_HPP

#include <string>
#include <vector>

#include "hesspave/paving.hpp"

namespace hesspave::oracle {

/// One mismatch between a report cell and the oracle recomputation.
struct Discrepancy {
  int cell_index = -1;
  std::vector<int> word;
  std::string field;  // "nonempty", "dimension", "decomposition"
  long long expected = 0;  // oracle value
  long long got = 0;       // report value
};

/**
 * Recomputes every cell of the report from first-principle definitions in
 * an independent root model (Euclidean coordinates for classical types,
 * literal std::set arithmetic throughout) and returns all mismatches.
 * An empty result means the report is confirmed.
 */
std::vector<Discrepancy> verify_report(const RootSystem& rs,
                                       const ElementSpec& spec,
                                       const HessenbergSpace& H,
                                       const PavingReport& report);

/// One line of the closed-form fixture ledger.
struct FixtureResult {
  std::string name;
  bool ran = false;   // false: no fixture for this (type, rank)
  bool passed = false;
  std::string detail;
};

/**
 * Classical cross-checks: Springer point, |W| points, flag Poincare
 * polynomial, Peterson (1+q)^rank, the A2 permutohedral surface and the
 * sl3 minimal-nilpotent Springer fiber.
 */
std::vector<FixtureResult> known_variety_checks(const RootSystem& rs,
                                                long long max_order = 1'000'000);

}  // namespace hesspave::oracle

#endif
