#include "bpatlas/functors.hpp"

#include <map>
#include <stdexcept>

namespace bpatlas {

HwData sf_weight(const LevelParams& lv, const HwData& d, FlowAmount ell) {
  Rat l = ell.ell();
  Rat t = 2 * lv.k + 3;
  return {d.j + t * l / 3, d.Delta + d.j * l + t * l * l / 6};
}

HwData conj_weight(const HwData& d) { return {-d.j, d.Delta}; }

AffineWeight conj_untwisted(const AffineWeight& w) {
  if (!is_surviving(w)) throw DomainError(Errc::NotSurviving);
  return make_weight(w.level, {w.lambdaI[0], w.lambdaI[2], w.lambdaI[1]},
                     {w.lambdaF[0], w.lambdaF[2], w.lambdaF[1]});
}

std::optional<AffineWeight> conj_twisted(const AffineWeight& w) {
  if (!is_surviving(w)) throw DomainError(Errc::NotSurviving);
  if (w.lambdaF[1] != 0) return std::nullopt;
  return make_weight(w.level, {w.lambdaI[2], w.lambdaI[1], w.lambdaI[0]},
                     {w.lambdaF[2] + 1, 0, w.lambdaF[0] - 1});
}

std::optional<AffineWeight> sf_untwisted(const AffineWeight& w) {
  if (!is_surviving(w)) throw DomainError(Errc::NotSurviving);
  if (w.lambdaF[1] != 0) return std::nullopt;
  return make_weight(w.level, {w.lambdaI[2], w.lambdaI[0], w.lambdaI[1]},
                     {w.lambdaF[2] + 1, w.lambdaF[0] - 1, 0});
}

std::optional<AffineWeight> sf_untwisted_inv(const AffineWeight& w) {
  if (!is_surviving(w)) throw DomainError(Errc::NotSurviving);
  if (w.lambdaF[2] != 0) return std::nullopt;
  return make_weight(w.level, {w.lambdaI[1], w.lambdaI[2], w.lambdaI[0]},
                     {w.lambdaF[1] + 1, 0, w.lambdaF[0] - 1});
}

namespace {

long floordiv2(long t) { return t >= 0 ? t / 2 : -((-t + 1) / 2); }

}  // namespace

OrbitTable sf_orbit(const AffineWeight& w, FlowAmount lo, FlowAmount hi) {
  if (!is_surviving(w)) throw DomainError(Errc::NotSurviving);
  if (lo.twiceEll > hi.twiceEll) throw std::invalid_argument("empty flow range");
  const LevelParams& lv = w.level;
  HwData base = untwisted_data(w);

  // Integer-step walk in both directions; stops where the image leaves the
  // highest-weight class.
  std::map<long, AffineWeight> at{{0, w}};
  long max_pos = floordiv2(hi.twiceEll);
  long min_pos = floordiv2(lo.twiceEll);
  AffineWeight cur = w;
  for (long n = 1; n <= max_pos; ++n) {
    auto next = sf_untwisted(cur);
    if (!next) break;
    cur = *next;
    at.emplace(n, cur);
  }
  cur = w;
  for (long n = -1; n >= min_pos; --n) {
    auto prev = sf_untwisted_inv(cur);
    if (!prev) break;
    cur = *prev;
    at.emplace(n, cur);
  }

  OrbitTable table{w, {}};
  for (long t = lo.twiceEll; t <= hi.twiceEll; ++t) {
    OrbitEntry e;
    e.ell = FlowAmount{t};
    e.sector = (t % 2 == 0) ? Sector::untwisted : Sector::twisted;
    auto it = at.find(floordiv2(t));
    if (it != at.end()) {
      const AffineWeight& src = it->second;
      HwData own = (e.sector == Sector::untwisted) ? untwisted_data(src)
                                                   : twisted_data(src);
      e.j = own.j;
      e.Delta = own.Delta;
      e.status = OrbitStatus::hw;
      e.source = src;
      e.topDim = (e.sector == Sector::untwisted) ? 1 : top_space_dim(src);
    } else {
      // The image is no longer bounded below; record only the flowed data of
      // the original top vector.
      HwData moved = sf_weight(lv, base, e.ell);
      e.j = moved.j;
      e.Delta = moved.Delta;
      e.status = OrbitStatus::nonRelaxed;
    }
    table.entries.push_back(e);
  }
  return table;
}

DenseLabel conj_relaxed(const LevelParams&, const DenseLabel& d) {
  return {mod1(-d.cosetRep), d.Delta, -d.omega};
}

}  // namespace bpatlas
