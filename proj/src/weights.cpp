#include "bpatlas/weights.hpp"

#include <algorithm>

namespace bpatlas {

RatTriple AffineWeight::labels() const {
  Rat uv(level.u, level.v);
  RatTriple t;
  for (int i = 0; i < 3; ++i) t[i] = lambdaI[i] - uv * lambdaF[i];
  return t;
}

std::vector<DynkinTriple> enumerate_dominant(int ell) {
  std::vector<DynkinTriple> out;
  if (ell < 0) return out;
  out.reserve(static_cast<std::size_t>(ell + 1) * (ell + 2) / 2);
  for (int a = 0; a <= ell; ++a)
    for (int b = 0; b <= ell - a; ++b) out.push_back({a, b, ell - a - b});
  return out;
}

static bool triple_ok(const DynkinTriple& t, int sum) {
  return t[0] >= 0 && t[1] >= 0 && t[2] >= 0 && t[0] + t[1] + t[2] == sum;
}

bool is_surviving(const AffineWeight& w) {
  return triple_ok(w.lambdaI, w.level.u - 3) &&
         triple_ok(w.lambdaF, w.level.v - 1) && w.lambdaF[0] >= 1;
}

bool in_relaxed_support(const AffineWeight& w) {
  return is_surviving(w) && w.lambdaF[1] >= 1;
}

AffineWeight make_weight(const LevelParams& lv, const DynkinTriple& lambdaI,
                         const DynkinTriple& lambdaF) {
  AffineWeight w{lambdaI, lambdaF, lv};
  if (!is_surviving(w)) throw DomainError(Errc::NotSurviving);
  return w;
}

std::vector<AffineWeight> enumerate_surviving(const LevelParams& lv) {
  auto inner = enumerate_dominant(lv.u - 3);
  auto fractional = enumerate_dominant(lv.v - 1);
  std::vector<AffineWeight> out;
  out.reserve(inner.size() * fractional.size());
  for (const auto& li : inner)
    for (const auto& lf : fractional)
      if (lf[0] >= 1) out.push_back({li, lf, lv});
  return out;
}

std::vector<AffineWeight> enumerate_relaxed_support(const LevelParams& lv) {
  auto all = enumerate_surviving(lv);
  std::vector<AffineWeight> out;
  for (const auto& w : all)
    if (w.lambdaF[1] >= 1) out.push_back(w);
  return out;
}

AffineWeight z3_act(const AffineWeight& w) {
  if (!is_surviving(w)) throw DomainError(Errc::NotSurviving);
  if (w.lambdaF[1] < 1) throw DomainError(Errc::NotRelaxedSupport);
  AffineWeight r = w;
  r.lambdaI = {w.lambdaI[2], w.lambdaI[0], w.lambdaI[1]};
  r.lambdaF = {w.lambdaF[2] + 1, w.lambdaF[0], w.lambdaF[1] - 1};
  return r;
}

AffineWeight z2_act(const AffineWeight& w) {
  if (!is_surviving(w)) throw DomainError(Errc::NotSurviving);
  if (w.lambdaF[0] < 1) throw DomainError(Errc::NotRelaxedSupport);
  AffineWeight r = w;
  r.lambdaI = {w.lambdaI[2], w.lambdaI[1], w.lambdaI[0]};
  r.lambdaF = {w.lambdaF[2] + 1, w.lambdaF[1], w.lambdaF[0] - 1};
  return r;
}

std::vector<AffineWeight> s3_orbit(const AffineWeight& w) {
  if (!in_relaxed_support(w)) throw DomainError(Errc::NotRelaxedSupport);
  std::vector<AffineWeight> orbit{w};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const AffineWeight& img : {z3_act(orbit[i]), z2_act(orbit[i])}) {
      if (std::find(orbit.begin(), orbit.end(), img) == orbit.end())
        orbit.push_back(img);
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

}  // namespace bpatlas
