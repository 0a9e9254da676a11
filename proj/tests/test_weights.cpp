#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "bpatlas/weights.hpp"

using namespace bpatlas;

TEST_SUITE_BEGIN("weights");

TEST_CASE("dominant triples") {
  auto t0 = enumerate_dominant(0);
  REQUIRE(t0.size() == 1);
  CHECK(t0[0] == DynkinTriple{0, 0, 0});

  auto t2 = enumerate_dominant(2);
  REQUIRE(t2.size() == 6);
  CHECK(t2.front() == DynkinTriple{0, 0, 2});
  CHECK(t2.back() == DynkinTriple{2, 0, 0});
  CHECK(std::is_sorted(t2.begin(), t2.end()));
  for (auto& t : t2) CHECK(t[0] + t[1] + t[2] == 2);

  CHECK(enumerate_dominant(7).size() == 36);
}

TEST_CASE("surviving set sizes and order") {
  auto check_size = [](int u, int v) {
    auto lv = make_level(u, v);
    auto sigma = enumerate_surviving(lv);
    CHECK(sigma.size() ==
          std::size_t((u - 1) * (u - 2) * v * (v - 1) / 4));
    CHECK(std::is_sorted(sigma.begin(), sigma.end()));
    for (auto& w : sigma) {
      CHECK(is_surviving(w));
      CHECK(w.lambdaF[0] >= 1);
    }
    auto rel = enumerate_relaxed_support(lv);
    CHECK(rel.size() ==
          std::size_t((u - 1) * (u - 2) * (v - 1) * (v - 2) / 4));
    for (auto& w : rel) CHECK(in_relaxed_support(w));
  };
  check_size(3, 2);
  check_size(5, 2);
  check_size(3, 4);
  check_size(4, 3);
  check_size(5, 3);
  check_size(7, 5);
}

TEST_CASE("vacuum is the sole (3,2) weight") {
  auto lv = make_level(3, 2);
  auto sigma = enumerate_surviving(lv);
  REQUIRE(sigma.size() == 1);
  CHECK(sigma[0].lambdaI == DynkinTriple{0, 0, 0});
  CHECK(sigma[0].lambdaF == DynkinTriple{1, 0, 0});
}

TEST_CASE("labels sum to the level") {
  for (auto [u, v] : {std::pair{5, 2}, {3, 4}, {5, 3}}) {
    auto lv = make_level(u, v);
    for (auto& w : enumerate_surviving(lv)) {
      auto lb = w.labels();
      CHECK(lb[0] + lb[1] + lb[2] == lv.k);
      for (int i = 0; i < 3; ++i)
        CHECK(lb[i] == Rat(w.lambdaI[i]) - Rat(u, v) * w.lambdaF[i]);
    }
  }
}

TEST_CASE("make_weight validation") {
  auto lv = make_level(3, 4);
  CHECK_NOTHROW(make_weight(lv, {0, 0, 0}, {1, 1, 1}));
  CHECK_THROWS_AS(make_weight(lv, {1, 0, 0}, {1, 1, 1}), DomainError);
  CHECK_THROWS_AS(make_weight(lv, {0, 0, 0}, {0, 2, 1}), DomainError);
  CHECK_THROWS_AS(make_weight(lv, {0, 0, 0}, {1, 1, 0}), DomainError);
  try {
    make_weight(lv, {0, 0, 0}, {2, 2, 2});
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::NotSurviving);
  }
}

TEST_CASE("z3 action") {
  for (auto [u, v] : {std::pair{3, 4}, {4, 3}, {5, 3}, {4, 5}}) {
    auto lv = make_level(u, v);
    for (auto& w : enumerate_relaxed_support(lv)) {
      auto w1 = z3_act(w);
      CHECK(in_relaxed_support(w1));
      CHECK(w1 != w);
      auto w2 = z3_act(w1);
      CHECK(w2 != w);
      CHECK(z3_act(w2) == w);
    }
  }
}

TEST_CASE("z2 action") {
  for (auto [u, v] : {std::pair{3, 4}, {4, 3}, {5, 3}}) {
    auto lv = make_level(u, v);
    for (auto& w : enumerate_relaxed_support(lv)) {
      auto w1 = z2_act(w);
      CHECK(in_relaxed_support(w1));
      CHECK(z2_act(w1) == w);
    }
  }
}

TEST_CASE("action guards") {
  auto lv = make_level(5, 2);
  auto w = make_weight(lv, {0, 1, 1}, {1, 0, 0});
  CHECK_THROWS_AS(z3_act(w), DomainError);
  try {
    z3_act(w);
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::NotRelaxedSupport);
  }
}

TEST_CASE("s3 orbits partition the relaxed support") {
  for (auto [u, v] : {std::pair{3, 4}, {4, 3}, {5, 3}, {4, 5}}) {
    auto lv = make_level(u, v);
    auto rel = enumerate_relaxed_support(lv);
    std::set<AffineWeight> seen;
    for (auto& w : rel) {
      auto orb = s3_orbit(w);
      CHECK((orb.size() == 3 || orb.size() == 6));
      CHECK(std::is_sorted(orb.begin(), orb.end()));
      for (auto& x : orb) {
        CHECK(s3_orbit(x) == orb);
        seen.insert(x);
      }
    }
    CHECK(seen.size() == rel.size());
  }
}

TEST_CASE("a size-six orbit exists at (4,5)") {
  auto lv = make_level(4, 5);
  auto w = make_weight(lv, {1, 0, 0}, {1, 1, 2});
  CHECK(s3_orbit(w).size() == 6);
}

TEST_SUITE_END();
