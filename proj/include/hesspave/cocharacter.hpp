#ifndef HESSPAVE_COCHARACTER_HPP
#define HESSPAVE_COCHARACTER_HPP

#include <vector>

#include "hesspave/root_system.hpp"
#include "hesspave/weyl.hpp"

namespace hesspave {

/**
 * The normalized cocharacter package for a Levi support Delta_M: the
 * dominant coweight lambda with its integer root weights, the minimal
 * representative v1 with lambda = v1 . lambda_tilde, and the root sets
 * Phi_N = v1(Delta_M), Phi_L, Phi^{+-}(V) and Phi(script V).
 */
struct CocharacterData {
  std::vector<int> delta_M;      // 0-based simple indices, sorted
  Coweight lambda_tilde;         // coefficients on the coroot basis
  Coweight lambda;               // dominant, = v1 . lambda_tilde
  std::vector<int> weights;      // <gamma, lambda> per root index
  WeylElement w1;                // make_dominant witness
  WeylElement y1, v1;            // w1 = y1 v1, y1 in W_L, v1 in W^L
  RootSet phi_N;                 // v1(Delta_M)
  RootSet phi_L;                 // weight-0 roots
  RootSet phi_V_plus, phi_V_minus;
  RootSet phi_script_V;          // Phi^+(V) union {weight >= 3}
};

/**
 * lambda_tilde = sum_{i in Delta_M} c_i alpha_i^vee with
 * <alpha_j, lambda_tilde> = 2 for all j in Delta_M; exact rational solve
 * against the Levi Cartan submatrix. Delta_M must be nonempty.
 */
Coweight levi_cocharacter(const RootSystem& rs, const std::vector<int>& delta_M);

/**
 * Full normalization: dominance step, w1 = y1 v1 decomposition against the
 * weight-0 simple roots, Phi_N and the V root sets. All invariants are
 * re-verified; a failure is an internal error.
 */
CocharacterData normalize(const RootSystem& rs, const std::vector<int>& delta_M,
                          TieBreak tie = TieBreak::kLowestIndex);

/// Phi(script V) from a computed package (also cached in the struct).
RootSet orbit_roots(const RootSystem& rs, const CocharacterData& cd);

}  // namespace hesspave

#endif
