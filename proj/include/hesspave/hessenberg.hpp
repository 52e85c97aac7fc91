#ifndef HESSPAVE_HESSENBERG_HPP
#define HESSPAVE_HESSENBERG_HPP

#include <vector>

#include "hesspave/root_system.hpp"
#include "hesspave/weyl.hpp"

namespace hesspave {

/**
 * A Hessenberg space as a root subset: Phi^+ subseteq Phi_H, and Phi_H is
 * closed under addition with positive roots. Validated at construction.
 */
class HessenbergSpace {
public:
  /// Phi_H = Phi^+ union Psi for a set Psi of negative roots; throws
  /// std::invalid_argument with a witness pair when closure fails.
  static HessenbergSpace from_negative_roots(const RootSystem& rs,
                                             const RootSet& psi);

  /// Full space Phi_H = Phi.
  static HessenbergSpace full(const RootSystem& rs);
  /// Borel space Phi_H = Phi^+.
  static HessenbergSpace borel(const RootSystem& rs);

  const RootSet& phi_H() const { return phi_H_; }
  /// Phi_H^- = Phi_H cap Phi^-, cached.
  const RootSet& negatives() const { return negatives_; }

  bool operator==(const HessenbergSpace& o) const { return phi_H_ == o.phi_H_; }

private:
  HessenbergSpace(RootSet phi_H, RootSet negatives)
      : phi_H_(std::move(phi_H)), negatives_(std::move(negatives)) {}
  RootSet phi_H_;
  RootSet negatives_;
};

/**
 * Type-A encoding: positive root e_i - e_j (1 <= i < j <= n) sits at
 * matrix position (i, j); Phi_H contains position (i, j) with i > j iff
 * i <= h(j). Requires h nondecreasing with i <= h(i) <= n.
 */
HessenbergSpace from_hessenberg_function(const RootSystem& rs,
                                         const std::vector<int>& h);

/// w(Phi_H) as a plain root set (not itself Hessenberg in general).
RootSet transform(const RootSystem& rs, const WeylElement& w,
                  const HessenbergSpace& H);

/**
 * The induced space H_v with Phi_{H_v} = v(Phi_H) cap Phi_M, returned as a
 * Hessenberg space over the abstract subsystem; requires v in W^M.
 */
HessenbergSpace restrict_to_levi(const RootSystem& rs, const HessenbergSpace& H,
                                 const WeylElement& v, const RootSubsystem& sub);

/**
 * All Hessenberg spaces of rs, deduplicated, sorted by (|Psi|, bits).
 * Power-set sweep over Phi^- at rank <= 3, closure-growing search at
 * rank 4; higher ranks are refused.
 */
std::vector<HessenbergSpace> enumerate_all(const RootSystem& rs);

}  // namespace hesspave

#endif
