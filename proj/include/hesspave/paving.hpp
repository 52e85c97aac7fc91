#ifndef HESSPAVE_PAVING_HPP
#define HESSPAVE_PAVING_HPP

#include <optional>
#include <string>
#include <vector>

#include "hesspave/cocharacter.hpp"
#include "hesspave/hessenberg.hpp"

namespace hesspave {

/// Which element class the paving is computed for; Levi supports are
/// 0-based simple indices of standard Levis.
struct ElementSpec {
  enum class Kind {
    kRegularNilpotent,
    kNilpotentLevi,   // N regular in the Levi of delta_M
    kSemisimple,      // S with centralizer Levi delta_M
    kRegular,         // X = S + N, N regular in the Levi of delta_M
    kGeneral,         // X = S + N, N regular in the Levi of delta_inner
  };
  Kind kind = Kind::kRegularNilpotent;
  std::vector<int> delta_M;      // unused for kRegularNilpotent
  std::vector<int> delta_inner;  // kGeneral only; subset of delta_M

  static ElementSpec regular_nilpotent();
  static ElementSpec nilpotent_levi(std::vector<int> delta_M);
  static ElementSpec semisimple(std::vector<int> delta_M);
  static ElementSpec regular(std::vector<int> delta_M);
  static ElementSpec general(std::vector<int> delta_M, std::vector<int> delta_inner);
};

/// Per-Schubert-cell result.
struct CellReport {
  WeylElement w;
  WeylElement y, v;  // Delta_M decomposition; identity-based when unused
  bool nonempty = false;
  int dimension = -1;  // valid iff nonempty

  std::optional<int> dim() const {
    return nonempty ? std::optional<int>(dimension) : std::nullopt;
  }
};

/// Aggregate over all of W, in enumeration order.
struct PavingReport {
  std::vector<CellReport> cells;
  std::vector<long long> betti;  // n_0 .. n_d
  long long euler = 0;

  std::string poincare_string() const;
};

CellReport cell_regular_nilpotent(const RootSystem& rs, const HessenbergSpace& H,
                                  const WeylElement& w);

/// Precondition: cd = normalize(rs, delta_M), computed once per report.
CellReport cell_nilpotent_levi(const RootSystem& rs, const CocharacterData& cd,
                               const HessenbergSpace& H, const WeylElement& w);

CellReport cell_semisimple(const RootSystem& rs, const std::vector<int>& delta_M,
                           const HessenbergSpace& H, const WeylElement& w);

CellReport cell_regular(const RootSystem& rs, const std::vector<int>& delta_M,
                        const HessenbergSpace& H, const WeylElement& w);

CellReport cell_general(const RootSystem& rs, const std::vector<int>& delta_M,
                        const std::vector<int>& delta_inner,
                        const HessenbergSpace& H, const WeylElement& w,
                        TieBreak tie = TieBreak::kLowestIndex);

/// Apply the matching cell operation to every w and aggregate.
PavingReport paving_report(const RootSystem& rs, const ElementSpec& spec,
                           const HessenbergSpace& H,
                           long long max_order = 1'000'000,
                           TieBreak tie = TieBreak::kLowestIndex);

}  // namespace hesspave

#endif
