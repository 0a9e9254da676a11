#include "bpatlas/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace bpatlas {

AtlasCounts closed_form_counts(const LevelParams& lv) {
  long long u = lv.u, v = lv.v;
  AtlasCounts c;
  c.untwistedHW = (u - 1) * (u - 2) * v * (v - 1) / 4;
  c.twistedHWFiniteTop = (u - 1) * (u - 2) * (v - 1) / 2;
  c.twistedHWInfiniteTop = (u - 1) * (u - 2) * (v - 1) * (v - 2) / 4;
  c.relaxedFamilies = (u - 1) * (u - 2) * (v - 1) * (v - 2) / 12;
  return c;
}

AffineWeight nonss_partner(const AffineWeight& w) {
  if (!in_relaxed_support(w)) throw DomainError(Errc::NotRelaxedSupport);
  return make_weight(w.level, {w.lambdaI[0], w.lambdaI[2], w.lambdaI[1]},
                     {w.lambdaF[0], w.lambdaF[2] + 1, w.lambdaF[1] - 1});
}

namespace {

template <typename Fn>
void for_each_index(ExecutionPolicy policy, std::size_t n, Fn&& fn) {
  if (policy == ExecutionPolicy::parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(n); ++i)
      fn(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) fn(i);
  }
}

ModuleLabel untwisted_label(const AffineWeight& w) {
  HwData d = untwisted_data(w);
  ModuleLabel m;
  m.sector = Sector::untwisted;
  m.cls = ModuleClass::highestWeight;
  m.j = d.j;
  m.Delta = d.Delta;
  m.topDim = 1;
  m.source = w;
  return m;
}

ModuleLabel twisted_label(const AffineWeight& w) {
  HwData d = twisted_data(w);
  ModuleLabel m;
  m.sector = Sector::twisted;
  m.cls = ModuleClass::highestWeight;
  m.j = d.j;
  m.Delta = d.Delta;
  m.topDim = top_space_dim(w);
  if (m.topDim == kInfiniteDim) m.omega = family_omega(w);
  m.source = w;
  return m;
}

FamilyRecord family_record(const AffineWeight& key) {
  FamilyRecord r;
  r.orbitKey = key;
  r.members = {key, z3_act(key), z3_act(z3_act(key))};
  ExcludedCosets ec = excluded_cosets(key);
  r.Delta = twisted_data(key).Delta;
  r.omega = family_omega(key);
  r.rawCharges = ec.raw;
  r.excluded = ec.canonical;
  return r;
}

ExactSeqRecord seq_record(const AffineWeight& w, FamilyKind kind) {
  ExactSeqRecord r;
  r.kind = kind;
  r.source = w;
  r.partner = nonss_partner(w);
  HwData d = twisted_data(w);
  HwData pd = twisted_data(r.partner);
  r.j = d.j;
  r.Delta = d.Delta;
  r.omega = family_omega(w);
  if (!(pd.j == -d.j - 1 && pd.Delta == d.Delta))
    throw std::logic_error("partner charge mismatch");

  ModuleLabel hw;
  hw.sector = Sector::twisted;
  hw.cls = ModuleClass::highestWeight;
  hw.j = d.j;
  hw.Delta = d.Delta;
  hw.topDim = kInfiniteDim;
  hw.source = w;

  ModuleLabel cj;
  cj.sector = Sector::twisted;
  cj.cls = ModuleClass::conjugateHighestWeight;
  cj.j = pd.j;
  cj.Delta = pd.Delta;
  cj.topDim = kInfiniteDim;
  cj.source = r.partner;

  if (kind == FamilyKind::plus) {
    r.submodule = cj;
    r.quotient = hw;
  } else {
    r.submodule = hw;
    r.quotient = cj;
  }
  return r;
}

}  // namespace

Atlas build_atlas(const LevelParams& lv, ExecutionPolicy policy) {
  Atlas atlas;
  atlas.level = lv;
  atlas.categoryOSemisimple = true;

  std::vector<AffineWeight> sigma = enumerate_surviving(lv);
  std::vector<AffineWeight> relaxed = enumerate_relaxed_support(lv);

  atlas.untwistedHW.resize(sigma.size());
  atlas.twistedHW.resize(sigma.size());
  for_each_index(policy, sigma.size(), [&](std::size_t i) {
    atlas.untwistedHW[i] = untwisted_label(sigma[i]);
    atlas.twistedHW[i] = twisted_label(sigma[i]);
  });

  std::vector<char> is_key(relaxed.size(), 0);
  for_each_index(policy, relaxed.size(), [&](std::size_t i) {
    const AffineWeight& w = relaxed[i];
    AffineWeight a = z3_act(w);
    AffineWeight b = z3_act(a);
    is_key[i] = (w < a || w == a) && (w < b || w == b);
  });
  std::vector<AffineWeight> keys;
  for (std::size_t i = 0; i < relaxed.size(); ++i)
    if (is_key[i]) keys.push_back(relaxed[i]);

  atlas.families.resize(keys.size());
  for_each_index(policy, keys.size(),
                 [&](std::size_t i) { atlas.families[i] = family_record(keys[i]); });

  atlas.nonsemisimple.resize(2 * relaxed.size());
  for_each_index(policy, relaxed.size(), [&](std::size_t i) {
    atlas.nonsemisimple[2 * i] = seq_record(relaxed[i], FamilyKind::plus);
    atlas.nonsemisimple[2 * i + 1] = seq_record(relaxed[i], FamilyKind::minus);
  });

  long long fin = 0;
  for (const ModuleLabel& m : atlas.twistedHW)
    if (m.topDim != kInfiniteDim) ++fin;
  atlas.counts.untwistedHW = static_cast<long long>(atlas.untwistedHW.size());
  atlas.counts.twistedHWFiniteTop = fin;
  atlas.counts.twistedHWInfiniteTop =
      static_cast<long long>(atlas.twistedHW.size()) - fin;
  atlas.counts.relaxedFamilies = static_cast<long long>(atlas.families.size());

  if (!(atlas.counts == closed_form_counts(lv)))
    throw std::logic_error("classification counts disagree with closed forms");
  return atlas;
}

}  // namespace bpatlas
