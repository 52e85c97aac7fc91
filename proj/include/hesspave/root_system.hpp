#ifndef HESSPAVE_ROOT_SYSTEM_HPP
#define HESSPAVE_ROOT_SYSTEM_HPP

#include <Eigen/Core>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hesspave/root_set.hpp"

namespace hesspave {

/// Root coordinates in the simple-root basis; exact integer arithmetic.
using Root = Eigen::VectorXi;

/// Raised when an enumeration would exceed a configured size guard.
class guard_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/**
 * A finite crystallographic root system, built by reflection closure
 * from a Cartan matrix with convention A(i,j) = <alpha_j, alpha_i^vee>.
 *
 * Roots are indexed in a deterministic order: sorted by (height,
 * lexicographic coefficients), so all negative roots precede all
 * positive ones. Immutable after construction.
 */
class RootSystem {
public:
  /// Build from an explicit (generalized: possibly decomposable) Cartan matrix.
  explicit RootSystem(Eigen::MatrixXi cartan, std::string type_label = "");

  const std::string& type_label() const { return type_label_; }
  int rank() const { return rank_; }
  const Eigen::MatrixXi& cartan() const { return cartan_; }

  int size() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return size() / 2; }
  const Root& root(int i) const { return roots_[i]; }
  const std::vector<Root>& roots() const { return roots_; }

  /// Index of a root in the master list, or -1 if the vector is not a root.
  int index_of(const Root& r) const;

  /// Index of simple root alpha_i (0-based i).
  int simple_index(int i) const { return simple_idx_[i]; }

  bool is_positive(int i) const { return positive_.test(i); }
  int height(int i) const { return roots_[i].sum(); }
  int negate(int i) const { return neg_idx_[i]; }

  const RootSet& positive_set() const { return positive_; }
  RootSet empty_set() const { return RootSet(size()); }
  RootSet full_set() const;
  RootSet negative_set() const;

private:
  std::string type_label_;
  int rank_;
  Eigen::MatrixXi cartan_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> simple_idx_;
  std::vector<int> neg_idx_;
  RootSet positive_;
};

/// Cartan matrix of a named type in Bourbaki numbering; validates (type, rank).
Eigen::MatrixXi cartan_matrix(char type_label, int rank);

/// Construct the root system of a named type; throws std::invalid_argument
/// on an unsupported (type, rank) pair.
RootSystem build_root_system(char type_label, int rank);

/// |W| for a named irreducible type.
long long weyl_order(char type_label, int rank);

/// <gamma, alpha_i^vee> for 0-based simple index i.
int pairing(const RootSystem& rs, const Root& gamma, int i);

/// s_i(gamma) = gamma - <gamma, alpha_i^vee> alpha_i.
Root reflect(const RootSystem& rs, const Root& gamma, int i);

/// Classical root count |Phi| for a named type; used for validation.
int classical_root_count(char type_label, int rank);

/// Human-readable root name in coefficient syntax, e.g. "a1+a2", "-a1-2a2".
std::string root_name(const RootSystem& rs, int index);

/**
 * The Levi subsystem Phi_M spanned by a subset of simple roots, together
 * with the abstract root system on its Cartan submatrix and index maps
 * between the two.
 */
class RootSubsystem {
public:
  RootSubsystem(const RootSystem& parent, std::vector<int> delta_M);

  const RootSystem& parent() const { return *parent_; }
  const std::vector<int>& delta_M() const { return delta_M_; }
  const Eigen::MatrixXi& cartan_M() const { return cartan_M_; }

  const RootSet& phi_M() const { return phi_M_; }
  const RootSet& phi_M_plus() const { return phi_M_plus_; }
  /// Phi(u_Q) = Phi^+ \ Phi_M^+.
  RootSet phi_uQ() const;

  /// Root system on the Cartan submatrix (empty delta_M gives rank 0).
  const RootSystem& sub_system() const { return *sub_; }

  /// Ambient index -> subsystem index (root must lie in Phi_M).
  int to_sub(int ambient_index) const;
  /// Subsystem index -> ambient index.
  int to_ambient(int sub_index) const;

private:
  const RootSystem* parent_;
  std::vector<int> delta_M_;
  Eigen::MatrixXi cartan_M_;
  RootSet phi_M_, phi_M_plus_;
  std::shared_ptr<const RootSystem> sub_;
  std::map<int, int> amb_to_sub_;
  std::vector<int> sub_to_amb_;
};

}  // namespace hesspave

#endif
