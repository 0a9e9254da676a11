#pragma once

#include "bpatlas/errors.hpp"
#include "bpatlas/rational.hpp"

namespace bpatlas {

// Admissible level k = -3 + u/v with u >= 3, v >= 2, gcd(u, v) = 1.
struct LevelParams {
  int u = 0;
  int v = 0;
  Rat k;
  Rat c;

  bool operator==(const LevelParams& o) const { return u == o.u && v == o.v; }
};

// Throws DomainError: NotCoprime, BelowAdmissible (u < 3), NoReduction (v < 2).
LevelParams make_level(int u, int v);

// The relaxed sector is empty exactly when v = 2.
bool relaxed_sector_exists(const LevelParams& lv);

// Alternate central-charge form 1 - 6(u-2v)^2/(uv); used for cross-checks.
Rat central_charge_uv(int u, int v);

}  // namespace bpatlas
