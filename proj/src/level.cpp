#include "bpatlas/level.hpp"

#include <numeric>

namespace bpatlas {

LevelParams make_level(int u, int v) {
  if (std::gcd(u, v) != 1) throw DomainError(Errc::NotCoprime);
  if (u < 3) throw DomainError(Errc::BelowAdmissible);
  if (v < 2) throw DomainError(Errc::NoReduction);
  LevelParams lv;
  lv.u = u;
  lv.v = v;
  lv.k = Rat(u, v) - 3;
  lv.c = -(2 * lv.k + 3) * (3 * lv.k + 1) / (lv.k + 3);
  return lv;
}

bool relaxed_sector_exists(const LevelParams& lv) { return lv.v >= 3; }

Rat central_charge_uv(int u, int v) {
  Rat d(u - 2 * v);
  return 1 - 6 * d * d / Rat(u * v);
}

}  // namespace bpatlas
