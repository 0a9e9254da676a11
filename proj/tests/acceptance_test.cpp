#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include "bpatlas/serialize.hpp"
#include "bpatlas/verify.hpp"

using namespace bpatlas;

namespace {

using clk = std::chrono::steady_clock;

int g_failures = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto t0 = clk::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(clk::now() - t0).count();
  std::ostringstream line;
  line << (ok ? "[PASS] " : "[FAIL] ") << name;
  if (!detail.empty()) line << " — " << detail;
  line.precision(2);
  line << " (" << std::fixed << secs << " s)";
  std::cout << line.str() << "\n";
  if (!ok) ++g_failures;
}

Rat R(const char* s) { return parse_rat(s); }

using UnSet = std::multiset<std::pair<Rat, Rat>>;
using TwSet = std::multiset<std::tuple<Rat, Rat, long>>;

UnSet un_set(const Atlas& a) {
  UnSet s;
  for (const auto& m : a.untwistedHW) s.insert({m.j, m.Delta});
  return s;
}

TwSet tw_set(const Atlas& a) {
  TwSet s;
  for (const auto& m : a.twistedHW) s.insert({m.j, m.Delta, m.topDim});
  return s;
}

UnSet mk_un(std::initializer_list<std::pair<const char*, const char*>> xs) {
  UnSet s;
  for (auto& [j, d] : xs) s.insert({R(j), R(d)});
  return s;
}

TwSet mk_tw(std::initializer_list<std::tuple<const char*, const char*, long>> xs) {
  TwSet s;
  for (auto& [j, d, t] : xs) s.insert({R(j), R(d), t});
  return s;
}

constexpr long kInf = kInfiniteDim;

struct FigureData {
  int u, v;
  UnSet un;
  TwSet tw;
};

std::vector<FigureData> figure_data() {
  std::vector<FigureData> fd;

  fd.push_back({3, 2, mk_un({{"0", "0"}}), mk_tw({{"0", "0", 1}})});

  fd.push_back({5, 2,
                mk_un({{"0", "0"},
                       {"1/3", "1/30"},
                       {"2/3", "1/3"},
                       {"-1/3", "1/30"},
                       {"-2/3", "1/3"},
                       {"0", "1/5"}}),
                mk_tw({{"1/3", "1/12", 1},
                       {"2/3", "17/60", 2},
                       {"1", "3/4", 3},
                       {"0", "-1/20", 1},
                       {"-1/3", "1/12", 1},
                       {"1/3", "17/60", 2}})});

  fd.push_back({3, 4,
                mk_un({{"0", "0"},
                       {"-1/4", "-3/8"},
                       {"-1/2", "-1/4"},
                       {"1/4", "-3/8"},
                       {"1/2", "-1/4"},
                       {"0", "-1/2"}}),
                mk_tw({{"-1/4", "-1/16", 1},
                       {"-1/2", "-9/16", kInf},
                       {"-3/4", "-9/16", kInf},
                       {"0", "-5/16", 1},
                       {"1/4", "-1/16", 1},
                       {"-1/4", "-9/16", kInf}})});

  fd.push_back({4, 3,
                mk_un({{"0", "0"},
                       {"1/3", "1/2"},
                       {"-1/3", "1/2"},
                       {"-4/9", "1/9"},
                       {"-1/9", "-1/18"},
                       {"-7/9", "5/18"},
                       {"4/9", "1/9"},
                       {"7/9", "5/18"},
                       {"1/9", "-1/18"}}),
                mk_tw({{"-1/18", "-1/72", 1},
                       {"5/18", "47/72", 2},
                       {"-7/18", "23/72", 1},
                       {"7/18", "23/72", 1},
                       {"13/18", "47/72", 2},
                       {"1/18", "-1/72", 1},
                       {"-1/2", "-1/8", kInf},
                       {"-1/6", "-1/8", kInf},
                       {"-5/6", "-1/8", kInf}})});

  fd.push_back({5, 3,
                mk_un({{"0", "0"},
                       {"1/3", "3/10"},
                       {"2/3", "1"},
                       {"-1/3", "3/10"},
                       {"-2/3", "1"},
                       {"0", "4/5"},
                       {"-5/9", "7/18"},
                       {"-2/9", "1/45"},
                       {"1/9", "1/18"},
                       {"-8/9", "16/45"},
                       {"-11/9", "13/18"},
                       {"-5/9", "17/90"},
                       {"5/9", "7/18"},
                       {"8/9", "16/45"},
                       {"11/9", "13/18"},
                       {"2/9", "1/45"},
                       {"-1/9", "1/18"},
                       {"5/9", "17/90"}}),
                mk_tw({{"1/18", "1/72", 1},
                       {"7/18", "173/360", 2},
                       {"13/18", "97/72", 3},
                       {"-5/18", "53/360", 1},
                       {"-11/18", "49/72", 1},
                       {"1/18", "293/360", 2},
                       {"-1/2", "1/8", kInf},
                       {"-1/6", "-3/40", kInf},
                       {"1/6", "1/8", kInf},
                       {"-5/6", "-3/40", kInf},
                       {"-7/6", "1/8", kInf},
                       {"-1/2", "-3/40", kInf},
                       {"11/18", "49/72", 1},
                       {"17/18", "293/360", 2},
                       {"23/18", "97/72", 3},
                       {"5/18", "53/360", 1},
                       {"-1/18", "1/72", 1},
                       {"11/18", "173/360", 2}})});
  return fd;
}

bool c1_figures(std::string& detail) {
  for (const auto& fd : figure_data()) {
    auto t0 = clk::now();
    Atlas a = build_atlas(make_level(fd.u, fd.v), ExecutionPolicy::parallel);
    bool ok = un_set(a) == fd.un && tw_set(a) == fd.tw;
    double secs = std::chrono::duration<double>(clk::now() - t0).count();
    if (!ok || secs >= 1.0) {
      std::ostringstream os;
      os << "(" << fd.u << "," << fd.v << ") "
         << (ok ? "exceeded 1 s" : "data mismatch");
      detail = os.str();
      return false;
    }
  }
  detail = "5 models, exact multiset match";
  return true;
}

bool c2_counts(std::string& detail) {
  auto t0 = clk::now();
  int models = 0;
  for (int u = 3; u <= 12; ++u)
    for (int v = 2; v <= 9; ++v) {
      if (std::gcd(u, v) != 1) continue;
      LevelParams lv = make_level(u, v);
      AtlasCounts cf = closed_form_counts(lv);
      auto sigma = enumerate_surviving(lv);
      long long fin = 0;
      for (const auto& w : sigma)
        if (top_space_dim(w) != kInfiniteDim) ++fin;
      long long inf = static_cast<long long>(sigma.size()) - fin;
      long long fams = static_cast<long long>(
          enumerate_relaxed_support(lv).size() / 3);
      if (static_cast<long long>(sigma.size()) != cf.untwistedHW ||
          fin != cf.twistedHWFiniteTop || inf != cf.twistedHWInfiniteTop ||
          fams != cf.relaxedFamilies) {
        detail = "closed form mismatch at (" + std::to_string(u) + "," +
                 std::to_string(v) + ")";
        return false;
      }
      ++models;
    }

  bool spots =
      closed_form_counts(make_level(5, 2)) == AtlasCounts{6, 6, 0, 0} &&
      closed_form_counts(make_level(3, 4)) == AtlasCounts{6, 3, 3, 1} &&
      closed_form_counts(make_level(4, 3)) == AtlasCounts{9, 6, 3, 1} &&
      closed_form_counts(make_level(5, 3)) == AtlasCounts{18, 12, 6, 2};
  if (!spots) {
    detail = "spot tuples mismatch";
    return false;
  }
  double secs = std::chrono::duration<double>(clk::now() - t0).count();
  if (secs >= 5.0) {
    detail = "exceeded 5 s";
    return false;
  }
  detail = std::to_string(models) + " coprime levels";
  return true;
}

bool family_matches(const FamilyRecord& f, const char* Delta,
                    std::initializer_list<const char*> raw) {
  if (f.Delta != R(Delta) || f.omega != 0) return false;
  std::multiset<Rat> got(f.rawCharges.begin(), f.rawCharges.end());
  std::multiset<Rat> want;
  for (const char* s : raw) want.insert(R(s));
  return got == want;
}

bool c3_families(std::string& detail) {
  Atlas a34 = build_atlas(make_level(3, 4));
  if (a34.families.size() != 1 ||
      !family_matches(a34.families[0], "-9/16", {"-1/4", "-1/2", "-3/4"})) {
    detail = "(3,4) family data mismatch";
    return false;
  }
  LevelParams lv34 = make_level(3, 4);
  for (int m = 0; m <= 3; ++m) {
    Rat i(m);
    Rat lhs = omega_pm(lv34, Sign::plus, i, R("-9/16")) - a34.families[0].omega;
    Rat rhs = 2 * (i + R("1/4")) * (i + R("1/2")) * (i + R("3/4"));
    if (lhs != rhs) {
      detail = "(3,4) cubic identity fails";
      return false;
    }
  }

  Atlas a43 = build_atlas(make_level(4, 3));
  if (a43.families.size() != 1 ||
      !family_matches(a43.families[0], "-1/8", {"-1/6", "-1/2", "-5/6"})) {
    detail = "(4,3) family data mismatch";
    return false;
  }

  Atlas a53 = build_atlas(make_level(5, 3));
  bool ok53 =
      a53.families.size() == 2 &&
      family_matches(a53.families[0], "1/8", {"-7/6", "-1/2", "1/6"}) &&
      family_matches(a53.families[1], "-3/40", {"-5/6", "-1/2", "-1/6"});
  if (!ok53) {
    detail = "(5,3) family data mismatch";
    return false;
  }
  detail = "4 families across 3 models";
  return true;
}

bool c4_oracle(std::string& detail) {
  auto t0 = clk::now();
  std::mt19937 rng(20260826u);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 50);
  std::vector<LevelParams> pool{
      make_level(3, 2), make_level(5, 2), make_level(9, 2), make_level(3, 4),
      make_level(4, 3), make_level(5, 3), make_level(7, 5), make_level(8, 5)};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);

  auto rand_rat = [&]() {
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };

  for (int trial = 0; trial < 100; ++trial) {
    LevelParams lv = pool[pick(rng)];
    Rat j = rand_rat();
    Rat Delta = rand_rat();

    OracleModule hw;
    hw.level = lv;
    hw.j = j;
    hw.Delta = Delta;
    hw.kind = OracleModule::Kind::highestWeight;
    for (long n = 1; n <= 12; ++n) {
      OracleVector got = oracle_apply(Gen::Gp, basis_vector(hw, -n));
      OracleVector want = basis_vector(hw, -n + 1) * h_k_n(lv, j, Delta, n);
      if (!(got == want)) {
        detail = "reduction mismatch at trial " + std::to_string(trial);
        return false;
      }
    }

    OracleModule dense;
    dense.level = lv;
    dense.j = j;
    dense.Delta = Delta;
    dense.kind = OracleModule::Kind::dense;
    dense.omega = rand_rat();
    for (long e : {-10L, -5L, -1L, 0L, 1L, 5L, 10L}) {
      OracleVector x = basis_vector(dense, e);
      if (!(oracle_apply(Gen::Omega, x) == x * dense.omega)) {
        detail = "casimir eigenvalue mismatch at trial " + std::to_string(trial);
        return false;
      }
      for (Gen g : {Gen::J, Gen::Gp, Gen::Gm, Gen::L}) {
        OracleVector a = oracle_apply(Gen::Omega, oracle_apply(g, x));
        OracleVector b = oracle_apply(g, oracle_apply(Gen::Omega, x));
        if (!(a == b)) {
          detail = "centrality mismatch at trial " + std::to_string(trial);
          return false;
        }
      }
    }
  }
  double secs = std::chrono::duration<double>(clk::now() - t0).count();
  if (secs >= 30.0) {
    detail = "exceeded 30 s";
    return false;
  }
  detail = "100 randomized weights";
  return true;
}

bool c5_consistency(std::string& detail) {
  int models = 0;
  for (int u = 3; u <= 8; ++u)
    for (int v = 2; v <= 8; ++v) {
      if (std::gcd(u, v) != 1) continue;
      VerifyReport r = verify_level(make_level(u, v), 8,
                                    ExecutionPolicy::parallel);
      if (!r.all_pass()) {
        for (const auto& c : r.checks)
          if (!c.pass) {
            detail = "(" + std::to_string(u) + "," + std::to_string(v) +
                     ") check " + c.name + ": " + c.detail;
            return false;
          }
      }
      ++models;
    }
  detail = std::to_string(models) + " levels, full sweeps";
  return true;
}

struct OrbitExpect {
  OrbitStatus status;
  Sector sector;
  const char* j;
  const char* Delta;
};

bool orbit_matches(const AffineWeight& base, long lo, long hi,
                   const std::vector<OrbitExpect>& expect) {
  OrbitTable t = sf_orbit(base, FlowAmount{lo}, FlowAmount{hi});
  if (t.entries.size() != expect.size()) return false;
  for (std::size_t i = 0; i < expect.size(); ++i) {
    const OrbitEntry& e = t.entries[i];
    const OrbitExpect& x = expect[i];
    if (e.status != x.status || e.sector != x.sector) return false;
    if (e.j != R(x.j) || e.Delta != R(x.Delta)) return false;
  }
  return true;
}

bool c6_spectral_flow(std::string& detail) {
  auto lv92 = make_level(9, 2);
  auto vac92 = make_weight(lv92, {6, 0, 0}, {1, 0, 0});
  OrbitTable t92 = sf_orbit(vac92, {0}, {6});
  bool ok92 = t92.entries.size() == 7;
  for (const auto& e : t92.entries) ok92 = ok92 && e.status == OrbitStatus::hw;
  ok92 = ok92 && t92.entries[2].j == 2 && t92.entries[2].Delta == 1 &&
         t92.entries[4].j == -2 && t92.entries[4].Delta == 1 &&
         t92.entries[6].source.has_value() && *t92.entries[6].source == vac92 &&
         t92.entries[6].j == 0 && t92.entries[6].Delta == 0;
  if (!ok92) {
    detail = "(9,2) vacuum orbit mismatch";
    return false;
  }

  auto lv34 = make_level(3, 4);
  const auto hw = OrbitStatus::hw;
  const auto non = OrbitStatus::nonRelaxed;
  const auto U = Sector::untwisted;
  const auto T = Sector::twisted;

  bool okA = orbit_matches(make_weight(lv34, {0, 0, 0}, {1, 1, 1}), -1, 2,
                           {{non, T, "1/4", "-9/16"},
                            {hw, U, "0", "-1/2"},
                            {hw, T, "-1/4", "-9/16"},
                            {non, U, "-1/2", "-3/4"}});
  bool okB = orbit_matches(make_weight(lv34, {0, 0, 0}, {2, 0, 1}), -1, 4,
                           {{non, T, "1/2", "-9/16"},
                            {hw, U, "1/4", "-3/8"},
                            {hw, T, "0", "-5/16"},
                            {hw, U, "-1/4", "-3/8"},
                            {hw, T, "-1/2", "-9/16"},
                            {non, U, "-3/4", "-7/8"}});
  bool okC = orbit_matches(make_weight(lv34, {0, 0, 0}, {1, 0, 2}), -1, 6,
                           {{non, T, "3/4", "-9/16"},
                            {hw, U, "1/2", "-1/4"},
                            {hw, T, "1/4", "-1/16"},
                            {hw, U, "0", "0"},
                            {hw, T, "-1/4", "-1/16"},
                            {hw, U, "-1/2", "-1/4"},
                            {hw, T, "-3/4", "-9/16"},
                            {non, U, "-1", "-1"}});
  if (!okA || !okB || !okC) {
    detail = "(3,4) orbit tables mismatch";
    return false;
  }
  detail = "(9,2) closure and three (3,4) orbits";
  return true;
}

bool c7_scale(std::string& detail) {
  auto t0 = clk::now();
  LevelParams lv = make_level(20, 19);
  Atlas a = build_atlas(lv, ExecutionPolicy::parallel);
  VerifyReport r = verify_level(lv, 8, ExecutionPolicy::parallel);
  double secs = std::chrono::duration<double>(clk::now() - t0).count();

  AtlasCounts cf = closed_form_counts(lv);
  bool sized = a.untwistedHW.size() == std::size_t(cf.untwistedHW) &&
               a.twistedHW.size() == std::size_t(cf.untwistedHW) &&
               a.families.size() == std::size_t(cf.relaxedFamilies) &&
               a.nonsemisimple.size() ==
                   2 * std::size_t(cf.twistedHWInfiniteTop);
  if (!sized) {
    detail = "atlas sizes disagree with closed forms";
    return false;
  }
  if (!r.all_pass()) {
    detail = "verification failures at (20,19)";
    return false;
  }
  if (secs >= 10.0) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << "exceeded 10 s budget: " << secs << " s";
    detail = os.str();
    return false;
  }
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << "|Sigma| = " << cf.untwistedHW << ", " << secs << " s";
  detail = os.str();
  return true;
}

}  // namespace

int main() {
  criterion("C1 figure reproduction, exact multisets", c1_figures);
  criterion("C2 count formulas over the coprime grid", c2_counts);
  criterion("C3 family data and cubic identity", c3_families);
  criterion("C4 oracle equivalence on random weights", c4_oracle);
  criterion("C5 consistency lattice for u,v <= 8", c5_consistency);
  criterion("C6 spectral-flow orbits", c6_spectral_flow);
  criterion("C7 scale run at (20,19)", c7_scale);

  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
