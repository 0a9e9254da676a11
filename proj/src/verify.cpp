#include "bpatlas/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bpatlas {

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

struct Runner {
  ExecutionPolicy policy;
  VerifyReport& report;

  // body(i) returns true on success; exceptions count as failures.
  template <typename Fn>
  void run(const std::string& name, std::size_t n, std::size_t stride, Fn&& body) {
    long fails = 0;
    long first_bad = -1;
    std::size_t items = n == 0 ? 0 : (n + stride - 1) / stride;
    auto probe = [&](std::size_t slot) {
      std::size_t i = slot * stride;
      bool ok = false;
      try {
        ok = body(i);
      } catch (...) {
        ok = false;
      }
      return ok;
    };
    if (policy == ExecutionPolicy::parallel) {
#pragma omp parallel for schedule(static) reduction(+ : fails)
      for (long s = 0; s < static_cast<long>(items); ++s) {
        if (!probe(static_cast<std::size_t>(s))) {
          ++fails;
#pragma omp critical
          {
            if (first_bad < 0 || s < first_bad) first_bad = s;
          }
        }
      }
    } else {
      for (std::size_t s = 0; s < items; ++s) {
        if (!probe(s)) {
          ++fails;
          if (first_bad < 0) first_bad = static_cast<long>(s);
        }
      }
    }
    std::ostringstream detail;
    detail << items << " of " << n << " items";
    if (fails > 0) detail << "; " << fails << " failed, first at item " << first_bad * static_cast<long>(stride);
    report.checks.push_back({name, fails == 0, detail.str()});
  }
};

std::size_t stride_for(std::size_t n, std::size_t cap) {
  return n <= cap || cap == 0 ? 1 : (n + cap - 1) / cap;
}

Rat fresh_coset(const std::array<Rat, 3>& excluded) {
  for (int d : {7, 11, 13}) {
    Rat c = mod1(excluded[0] + Rat(1, d));
    if (c != excluded[0] && c != excluded[1] && c != excluded[2]) return c;
  }
  throw std::logic_error("no fresh coset found");
}

}  // namespace

VerifyReport verify_level(const LevelParams& lv, long depth,
                          ExecutionPolicy policy, std::size_t oracle_item_cap) {
  VerifyReport report;
  Runner r{policy, report};

  const std::vector<AffineWeight> sigma = enumerate_surviving(lv);
  const std::vector<AffineWeight> relaxed = enumerate_relaxed_support(lv);

  {
    AtlasCounts cf = closed_form_counts(lv);
    long long fin = 0;
    for (const auto& w : sigma)
      if (top_space_dim(w) != kInfiniteDim) ++fin;
    bool ok = static_cast<long long>(sigma.size()) == cf.untwistedHW &&
              fin == cf.twistedHWFiniteTop &&
              static_cast<long long>(sigma.size()) - fin == cf.twistedHWInfiniteTop &&
              static_cast<long long>(relaxed.size()) ==
                  cf.twistedHWInfiniteTop &&
              (relaxed.size() % 3 == 0) &&
              static_cast<long long>(relaxed.size()) / 3 == cf.relaxedFamilies;
    report.checks.push_back(
        {"counts-closed-form", ok,
         "sigma=" + std::to_string(sigma.size()) +
             " relaxed=" + std::to_string(relaxed.size())});
  }

  r.run("twisted-is-half-flow", sigma.size(), 1, [&](std::size_t i) {
    HwData u = untwisted_data(sigma[i]);
    return twisted_data(sigma[i]) == sf_weight(lv, u, FlowAmount{1});
  });

  r.run("untwisted-conjugation-data", sigma.size(), 1, [&](std::size_t i) {
    HwData d = untwisted_data(sigma[i]);
    HwData cd = untwisted_data(conj_untwisted(sigma[i]));
    return cd == conj_weight(d);
  });

  r.run("solve-weight-roundtrip", sigma.size(), 1, [&](std::size_t i) {
    HwData d = untwisted_data(sigma[i]);
    WeightSolution s = solve_weight(lv, d.j, d.Delta);
    return s.status == WeightSolution::Status::found && *s.weight == sigma[i];
  });

  {
    std::map<std::pair<Rat, Rat>, int> seen_u, seen_t;
    for (const auto& w : sigma) {
      HwData u = untwisted_data(w);
      HwData t = twisted_data(w);
      ++seen_u[{u.j, u.Delta}];
      ++seen_t[{t.j, t.Delta}];
    }
    bool ok = seen_u.size() == sigma.size() && seen_t.size() == sigma.size();
    report.checks.push_back({"sector-data-injective", ok,
                             std::to_string(sigma.size()) + " weights"});
  }

  r.run("top-dim-minimal-h-root", sigma.size(), 1, [&](std::size_t i) {
    long dim = top_space_dim(sigma[i]);
    HwData t = twisted_data(sigma[i]);
    if (dim == kInfiniteDim) {
      for (long n = 1; n <= depth; ++n)
        if (h_k_n(lv, t.j, t.Delta, n) == 0) return false;
      return true;
    }
    for (long n = 1; n < dim; ++n)
      if (h_k_n(lv, t.j, t.Delta, n) == 0) return false;
    return h_k_n(lv, t.j, t.Delta, dim) == 0;
  });

  r.run("h-closed-vs-telescoped", sigma.size(),
        stride_for(sigma.size(), oracle_item_cap), [&](std::size_t i) {
          HwData t = twisted_data(sigma[i]);
          for (long n = 1; n <= depth; ++n)
            if (h_k_n(lv, t.j, t.Delta, n) != h_k_n_sum(lv, t.j, t.Delta, n))
              return false;
          return true;
        });

  r.run("family-omega-consistency", relaxed.size(), 1, [&](std::size_t i) {
    const AffineWeight& w = relaxed[i];
    HwData t = twisted_data(w);
    Rat om = family_omega(w);
    if (om != omega_pm(lv, Sign::plus, t.j, t.Delta)) return false;
    AffineWeight w3 = z3_act(w);
    AffineWeight w2 = z2_act(w);
    if (family_omega(w3) != om || twisted_data(w3).Delta != t.Delta) return false;
    if (family_omega(w2) != -om || twisted_data(w2).Delta != t.Delta) return false;
    auto orbit = s3_orbit(w);
    return orbit.size() == (om == 0 ? 3u : 6u);
  });

  r.run("cubic-factorization", relaxed.size(), 1, [&](std::size_t i) {
    ExcludedCosets ec = excluded_cosets(relaxed[i]);
    return ec.canonical[0] != ec.canonical[1] &&
           ec.canonical[1] != ec.canonical[2] &&
           ec.canonical[0] != ec.canonical[2];
  });

  r.run("partner-involution", relaxed.size(), 1, [&](std::size_t i) {
    const AffineWeight& w = relaxed[i];
    AffineWeight p = nonss_partner(w);
    if (!(nonss_partner(p) == w)) return false;
    HwData t = twisted_data(w);
    HwData pt = twisted_data(p);
    return pt.j == -t.j - 1 && pt.Delta == t.Delta;
  });

  std::size_t ostride = stride_for(sigma.size(), oracle_item_cap);
  r.run("oracle-hw-reduction", sigma.size(), ostride, [&](std::size_t i) {
    HwData t = twisted_data(sigma[i]);
    OracleModule m;
    m.level = lv;
    m.j = t.j;
    m.Delta = t.Delta;
    m.kind = OracleModule::Kind::highestWeight;
    OracleVector top = basis_vector(m, 0);
    OracleVector om = oracle_apply(Gen::Omega, top);
    if (!(om == top * omega_pm(lv, Sign::plus, t.j, t.Delta))) return false;
    for (long n = 1; n <= depth; ++n) {
      OracleVector lowered = basis_vector(m, -n);
      OracleVector back = oracle_apply(Gen::Gp, lowered);
      if (!(back == basis_vector(m, -n + 1) * h_k_n(lv, t.j, t.Delta, n)))
        return false;
    }
    return true;
  });

  std::size_t fstride = stride_for(relaxed.size(), oracle_item_cap);
  r.run("oracle-singular-vectors", relaxed.size(), fstride, [&](std::size_t i) {
    HwData t = twisted_data(relaxed[i]);
    for (long n = 0; n < depth; ++n) {
      Rat tuned = omega_pm(lv, Sign::plus, t.j - n - 1, t.Delta);
      OracleModule m;
      m.level = lv;
      m.j = t.j;
      m.Delta = t.Delta;
      m.kind = OracleModule::Kind::dense;
      m.omega = tuned;
      OracleVector hit = oracle_apply(Gen::Gp, basis_vector(m, -(n + 1)));
      if (!hit.is_zero()) return false;
      m.omega = tuned + 1;
      OracleVector miss = oracle_apply(Gen::Gp, basis_vector(m, -(n + 1)));
      if (miss.is_zero()) return false;
    }
    return true;
  });

  r.run("oracle-centrality", relaxed.size(), fstride, [&](std::size_t i) {
    HwData t = twisted_data(relaxed[i]);
    OracleModule m;
    m.level = lv;
    m.j = t.j;
    m.Delta = t.Delta;
    m.kind = OracleModule::Kind::dense;
    m.omega = family_omega(relaxed[i]);
    std::vector<long> exps{-depth, -1, 0, 1, depth};
    for (long e : exps) {
      OracleVector x = basis_vector(m, e);
      if (!(oracle_apply(Gen::Omega, x) == x * m.omega)) return false;
      for (Gen g : {Gen::J, Gen::Gp, Gen::Gm, Gen::L}) {
        OracleVector a = oracle_apply(Gen::Omega, oracle_apply(g, x));
        OracleVector b = oracle_apply(g, oracle_apply(Gen::Omega, x));
        if (!(a == b)) return false;
      }
    }
    return true;
  });

  std::size_t kstride = stride_for(relaxed.size(), oracle_item_cap / 4 + 1);
  r.run("dense-simplicity-excluded", relaxed.size(), kstride, [&](std::size_t i) {
    ExcludedCosets ec = excluded_cosets(relaxed[i]);
    Rat Delta = twisted_data(relaxed[i]).Delta;
    Rat om = family_omega(relaxed[i]);
    for (const Rat& c : ec.canonical)
      if (dense_is_simple(lv, {c, Delta, om})) return false;
    return dense_is_simple(lv, {fresh_coset(ec.canonical), Delta, om});
  });

  r.run("sf-orbit-clauses", sigma.size(), stride_for(sigma.size(), oracle_item_cap),
        [&](std::size_t i) {
          const AffineWeight& w = sigma[i];
          OrbitTable t = sf_orbit(w, FlowAmount{-6}, FlowAmount{6});
          auto hw_at = [&](long twiceEll) {
            return t.entries[static_cast<std::size_t>(twiceEll + 6)].status ==
                   OrbitStatus::hw;
          };
          const auto& lf = w.lambdaF;
          int v = lv.v;
          if (hw_at(2) != (lf[1] == 0)) return false;
          if (hw_at(-2) != (lf[2] == 0)) return false;
          bool plus2 = lf[0] == 1 && lf[1] == 0 && lf[2] == v - 2;
          bool minus2 = lf[0] == 1 && lf[1] == v - 2 && lf[2] == 0;
          if (hw_at(4) != plus2 || hw_at(-4) != minus2) return false;
          if (v == 2) {
            if (!hw_at(6) || !hw_at(-6)) return false;
            const auto& e3 = t.entries[12];
            if (!(e3.source && *e3.source == w)) return false;
          } else {
            if (hw_at(6) || hw_at(-6)) return false;
          }
          // One-step flow data: the image top sits lambdaI[1] (resp.
          // lambdaI[2]) charge steps below the flowed top vector.
          HwData base = untwisted_data(w);
          if (auto n = sf_untwisted(w)) {
            HwData got = untwisted_data(*n);
            HwData moved = sf_weight(lv, base, FlowAmount{2});
            if (moved.j - got.j != w.lambdaI[1]) return false;
            if (2 * (moved.Delta - got.Delta) != w.lambdaI[1]) return false;
          }
          if (auto p = sf_untwisted_inv(w)) {
            HwData got = untwisted_data(*p);
            HwData moved = sf_weight(lv, base, FlowAmount{-2});
            if (got.j - moved.j != w.lambdaI[2]) return false;
            if (2 * (got.Delta - moved.Delta) != -w.lambdaI[2]) return false;
          }
          return true;
        });

  return report;
}

}  // namespace bpatlas
