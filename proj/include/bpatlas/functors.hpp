#pragma once

#include <optional>
#include <vector>

#include "bpatlas/smith.hpp"

namespace bpatlas {

// Spectral-flow amount, an exact half-integer.
struct FlowAmount {
  long twiceEll = 0;
  Rat ell() const {
    Rat r(twiceEll, 2);
    r.canonicalize();
    return r;
  }
};

// (j, Delta) of the image of a vector with data d under sigma^ell.
HwData sf_weight(const LevelParams& lv, const HwData& d, FlowAmount ell);

HwData conj_weight(const HwData& d);

// Conjugate of an untwisted highest-weight module: lambda1 <-> lambda2.
AffineWeight conj_untwisted(const AffineWeight& w);

// Weight of the highest-weight cover of the conjugated twisted module;
// exists only when the top space is finite dimensional (lambdaF[1] = 0).
std::optional<AffineWeight> conj_twisted(const AffineWeight& w);

// sigma^{+1} / sigma^{-1} of an untwisted highest-weight module, when the
// image is again highest-weight.
std::optional<AffineWeight> sf_untwisted(const AffineWeight& w);
std::optional<AffineWeight> sf_untwisted_inv(const AffineWeight& w);

enum class OrbitStatus { hw, relaxed, nonRelaxed };

struct OrbitEntry {
  FlowAmount ell;
  Sector sector = Sector::untwisted;
  OrbitStatus status = OrbitStatus::nonRelaxed;
  Rat j;
  Rat Delta;
  std::optional<AffineWeight> source;  // set when status == hw
  std::optional<long> topDim;

  bool operator==(const OrbitEntry& o) const {
    return ell.twiceEll == o.ell.twiceEll && sector == o.sector &&
           status == o.status && j == o.j && Delta == o.Delta &&
           source == o.source && topDim == o.topDim;
  }
};

struct OrbitTable {
  AffineWeight base;
  std::vector<OrbitEntry> entries;
};

// Spectral-flow orbit of the untwisted module attached to w over
// ell in [lo, hi], half-integer steps. Integer flows stay untwisted,
// half-odd-integer flows are twisted.
OrbitTable sf_orbit(const AffineWeight& w, FlowAmount lo, FlowAmount hi);

// Conjugation on dense-module labels: coset negated mod 1, omega negated.
DenseLabel conj_relaxed(const LevelParams& lv, const DenseLabel& d);

}  // namespace bpatlas
