#pragma once

#include <array>
#include <vector>

#include "bpatlas/level.hpp"
#include "bpatlas/rational.hpp"

namespace bpatlas {

// Dynkin-label triple of naturals.
using DynkinTriple = std::array<int, 3>;

// Surviving sl3-hat weight lambda = lambdaI - (u/v) lambdaF at level k,
// with lambdaI summing to u-3, lambdaF summing to v-1 and lambdaF[0] >= 1.
struct AffineWeight {
  DynkinTriple lambdaI{0, 0, 0};
  DynkinTriple lambdaF{0, 0, 0};
  LevelParams level;

  RatTriple labels() const;

  bool operator==(const AffineWeight& o) const {
    return lambdaI == o.lambdaI && lambdaF == o.lambdaF && level == o.level;
  }
  bool operator<(const AffineWeight& o) const {
    return lambdaI != o.lambdaI ? lambdaI < o.lambdaI : lambdaF < o.lambdaF;
  }
};

// Dominant triples summing to ell, ascending lexicographic. Size (ell+1)(ell+2)/2.
std::vector<DynkinTriple> enumerate_dominant(int ell);

bool is_surviving(const AffineWeight& w);
bool in_relaxed_support(const AffineWeight& w);

// Validated constructor; throws DomainError(NotSurviving).
AffineWeight make_weight(const LevelParams& lv, const DynkinTriple& lambdaI,
                         const DynkinTriple& lambdaF);

// Sigma(u,v), lexicographic by (lambdaI, lambdaF). Size (u-1)(u-2)v(v-1)/4.
std::vector<AffineWeight> enumerate_surviving(const LevelParams& lv);

// I(u,v): the lambdaF[1] >= 1 subset. Size (u-1)(u-2)(v-1)(v-2)/4.
std::vector<AffineWeight> enumerate_relaxed_support(const LevelParams& lv);

// Relaxed-class symmetry actions on I(u,v). Both throw NotRelaxedSupport
// when the image would leave the relaxed support.
AffineWeight z3_act(const AffineWeight& w);
AffineWeight z2_act(const AffineWeight& w);

// Closure of {w} under z3_act and z2_act, sorted; size 3 or 6.
std::vector<AffineWeight> s3_orbit(const AffineWeight& w);

}  // namespace bpatlas
