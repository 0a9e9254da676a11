#include "bpatlas/module_data.hpp"

namespace bpatlas {

HwData untwisted_data(const AffineWeight& w) {
  if (!is_surviving(w)) throw DomainError(Errc::NotSurviving);
  const Rat k = w.level.k;
  RatTriple lam = w.labels();
  Rat diff = lam[1] - lam[2];
  Rat sum = lam[1] + lam[2];
  HwData d;
  d.j = diff / 3;
  d.Delta = (diff * diff - 3 * sum * (2 * (k + 1) - sum)) / (12 * (k + 3));
  return d;
}

HwData twisted_data(const AffineWeight& w) {
  HwData d = untwisted_data(w);
  const Rat k = w.level.k;
  RatTriple lam = w.labels();
  d.j += (2 * k + 3) / 6;
  d.Delta += (lam[1] - lam[2]) / 6 + (2 * k + 3) / 24;
  return d;
}

Rat family_omega(const AffineWeight& w) {
  if (!in_relaxed_support(w)) throw DomainError(Errc::NotRelaxedSupport);
  const Rat k = w.level.k;
  RatTriple lam = w.labels();
  return Rat(-2, 27) * (lam[1] - lam[2] + k + 3) * (2 * lam[1] + lam[2] - k) *
         (lam[1] + 2 * lam[2] - 2 * k - 3);
}

long top_space_dim(const AffineWeight& w) {
  if (!is_surviving(w)) throw DomainError(Errc::NotSurviving);
  return w.lambdaF[1] == 0 ? w.lambdaI[1] + 1 : kInfiniteDim;
}

namespace {

// lambda_i = lambdaI_i - (u/v) lambdaF_i with lambdaF_i in [0, v); unique
// since gcd(u, v) = 1.
std::optional<std::pair<DynkinTriple, DynkinTriple>> decompose(
    const LevelParams& lv, const RatTriple& lam) {
  mpz_class u(lv.u), v(lv.v), uinv;
  mpz_invert(uinv.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
  DynkinTriple li{}, lf{};
  for (int i = 0; i < 3; ++i) {
    Rat scaled = lam[i] * lv.v;
    if (!is_integer(scaled)) return std::nullopt;
    mpz_class a = scaled.get_num();
    mpz_class f = ((-a * uinv) % v + v) % v;
    mpz_class e = (a + u * f) / v;
    if (e < 0 || !e.fits_slong_p()) return std::nullopt;
    lf[i] = static_cast<int>(f.get_si());
    li[i] = static_cast<int>(e.get_si());
  }
  return std::make_pair(li, lf);
}

}  // namespace

WeightSolution solve_weight(const LevelParams& lv, const Rat& j, const Rat& Delta) {
  const Rat k = lv.k;
  Rat disc = 4 * (k + 3) * Delta + (k + 1) * (k + 1) - 3 * j * j;
  auto root = rat_sqrt(disc);
  if (!root) return {WeightSolution::Status::nonSquareDiscriminant, std::nullopt};

  WeightSolution res;
  res.status = WeightSolution::Status::noSurvivingSolution;
  for (int side = 0; side < (disc == 0 ? 1 : 2); ++side) {
    Rat lam0 = -1 + (side == 0 ? *root : -*root);
    Rat lam1 = (3 * j + k - lam0) / 2;
    Rat lam2 = (k - lam0 - 3 * j) / 2;
    auto parts = decompose(lv, {lam0, lam1, lam2});
    if (!parts) continue;
    AffineWeight w{parts->first, parts->second, lv};
    if (!is_surviving(w)) continue;
    res.status = WeightSolution::Status::found;
    res.weight = w;
    break;
  }
  return res;
}

}  // namespace bpatlas
