#pragma once

#include <optional>

#include "bpatlas/weights.hpp"

namespace bpatlas {

enum class Sector { untwisted, twisted };

enum class ModuleClass {
  highestWeight,
  conjugateHighestWeight,
  relaxedSimple,
  relaxedPlus,
  relaxedMinus,
};

inline constexpr long kInfiniteDim = -1;

// Charge/conformal-weight pair of a distinguished vector.
struct HwData {
  Rat j;
  Rat Delta;
  bool operator==(const HwData& o) const { return j == o.j && Delta == o.Delta; }
};

struct ModuleLabel {
  Sector sector = Sector::untwisted;
  ModuleClass cls = ModuleClass::highestWeight;
  Rat j;
  Rat Delta;
  std::optional<Rat> omega;
  long topDim = 1;  // kInfiniteDim when infinite
  std::optional<AffineWeight> source;

  bool operator==(const ModuleLabel& o) const {
    return sector == o.sector && cls == o.cls && j == o.j && Delta == o.Delta &&
           omega == o.omega && topDim == o.topDim && source == o.source;
  }
};

// (j, Delta) of the untwisted highest-weight module attached to w.
HwData untwisted_data(const AffineWeight& w);

// (j, Delta) of the twisted highest-weight module attached to w.
HwData twisted_data(const AffineWeight& w);

// Coherent-family Casimir parameter; requires w in I(u,v).
Rat family_omega(const AffineWeight& w);

// Dimension of the twisted top space: lambdaI[1] + 1 when lambdaF[1] = 0,
// infinite otherwise. Requires w surviving.
long top_space_dim(const AffineWeight& w);

struct WeightSolution {
  enum class Status { found, nonSquareDiscriminant, noSurvivingSolution };
  Status status = Status::noSurvivingSolution;
  std::optional<AffineWeight> weight;
};

// Inverts untwisted_data: recovers the unique surviving weight with the given
// (j, Delta), when one exists.
WeightSolution solve_weight(const LevelParams& lv, const Rat& j, const Rat& Delta);

}  // namespace bpatlas
