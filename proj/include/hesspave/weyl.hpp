#ifndef HESSPAVE_WEYL_HPP
#define HESSPAVE_WEYL_HPP

#include <boost/rational.hpp>
#include <vector>

#include "hesspave/root_system.hpp"

namespace hesspave {

using Rational = boost::rational<long long>;

/// A coweight as rational coefficients on the full coroot basis.
using Coweight = std::vector<Rational>;

/**
 * A Weyl group element, stored as its integer action matrix on the
 * simple-root basis (mat * coeffs = image coeffs), together with one
 * reduced word and the cached length.
 *
 * Equality and ordering are by the action matrix; words are not unique.
 */
struct WeylElement {
  Eigen::MatrixXi mat;
  std::vector<int> word;  // 0-based simple indices
  int length = 0;

  bool is_identity() const { return length == 0; }
  bool operator==(const WeylElement& o) const { return mat == o.mat; }
};

/// The action matrix of the simple reflection s_i.
Eigen::MatrixXi reflection_matrix(const RootSystem& rs, int i);

WeylElement identity_element(const RootSystem& rs);

/// Element with the given (not necessarily reduced) word; the stored word
/// is recomputed in canonical reduced form.
WeylElement element_from_word(const RootSystem& rs, const std::vector<int>& word);

/// Canonical reduced word for an action matrix (greedy lowest descent).
std::vector<int> reduced_word(const RootSystem& rs, const Eigen::MatrixXi& mat);

/// w(gamma) as a root index.
int act(const RootSystem& rs, const WeylElement& w, int root_index);
Root act(const RootSystem& rs, const WeylElement& w, const Root& gamma);

/// Image set {w(gamma) : gamma in s}.
RootSet act(const RootSystem& rs, const WeylElement& w, const RootSet& s);

/// Phi_w = {gamma in Phi^+ : w^{-1}(gamma) in Phi^-} = w(Phi^-) cap Phi^+.
RootSet inversion_set(const RootSystem& rs, const WeylElement& w);

WeylElement inverse(const RootSystem& rs, const WeylElement& w);
WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b);

/**
 * All of W, breadth-first from the identity; the identity is first and the
 * order is deterministic. Throws guard_error if |W| (known or discovered)
 * exceeds max_order.
 */
std::vector<WeylElement> enumerate(const RootSystem& rs,
                                   long long max_order = 1'000'000);

/**
 * The unique decomposition w = y v with y in W_M, v in W^M and
 * l(w) = l(y) + l(v). Lowest-index tie-break; Phi_w = y(Phi_v) disjoint
 * Phi_y.
 */
std::pair<WeylElement, WeylElement> parabolic_decompose(
    const RootSystem& rs, const WeylElement& w, const std::vector<int>& delta_M);

/// W^M = {v : Phi_v cap Phi_M = empty}, filtered from a full enumeration.
std::vector<WeylElement> minimal_reps(const RootSystem& rs,
                                      const std::vector<int>& delta_M,
                                      long long max_order = 1'000'000);

enum class TieBreak { kLowestIndex, kHighestIndex };

/// <gamma, lambda> for a coweight on the coroot basis; exact rational.
Rational coweight_pairing(const RootSystem& rs, const Root& gamma,
                          const Coweight& lambda);

/// s_i acting on a coweight (coroot-basis coefficients).
Coweight reflect_coweight(const RootSystem& rs, const Coweight& lambda, int i);

/// w acting on a coweight, via its word.
Coweight act_coweight(const RootSystem& rs, const WeylElement& w,
                      const Coweight& lambda);

/**
 * Returns (w1, lambda) with lambda = w1 . input dominant. While some
 * simple pairing is negative, applies that simple reflection (tie-break
 * picks which).
 */
std::pair<WeylElement, Coweight> make_dominant(
    const RootSystem& rs, const Coweight& input,
    TieBreak tie = TieBreak::kLowestIndex);

}  // namespace hesspave

#endif
