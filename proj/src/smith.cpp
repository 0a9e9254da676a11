#include "bpatlas/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace bpatlas {

SmithScalars smith_scalars(const LevelParams& lv) {
  const Rat k = lv.k;
  return {k + 3, (k + 1) * (2 * k + 3) / 8};
}

static Rat q_term(const LevelParams& lv, const Rat& Delta) {
  SmithScalars s = smith_scalars(lv);
  return s.casimirShift * Delta + s.constTerm;
}

Rat f_k(const LevelParams& lv, const Rat& j, const Rat& Delta) {
  return 3 * j * j - q_term(lv, Delta);
}

Rat h_k_n(const LevelParams& lv, const Rat& j, const Rat& Delta, long n) {
  Rat nn(n);
  return nn * (nn * nn - Rat(3, 2) * nn * (2 * j + 1) +
               Rat(1, 2) * (6 * j * j + 6 * j + 1) - q_term(lv, Delta));
}

Rat h_k_n_sum(const LevelParams& lv, const Rat& j, const Rat& Delta, long n) {
  Rat acc(0);
  for (long m = 0; m < n; ++m) acc += f_k(lv, j - m, Delta);
  return acc;
}

Rat omega_pm(const LevelParams& lv, Sign s, const Rat& j, const Rat& Delta) {
  int e = s == Sign::plus ? 1 : -1;
  return (2 * j + e) * (j * (j + e) - q_term(lv, Delta));
}

Rat casimir_p(const LevelParams& lv, const Rat& j, const Rat& Delta) {
  return 2 * j * j * j + j - 2 * j * q_term(lv, Delta);
}

namespace {

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  mpz_class a = abs(n);
  for (mpz_class i = 1; i * i <= a; ++i) {
    if (a % i == 0) {
      out.push_back(i);
      if (i * i != a) out.push_back(a / i);
    }
  }
  return out;
}

Rat eval_cubic(const std::array<Rat, 4>& c, const Rat& x) {
  return ((c[3] * x + c[2]) * x + c[1]) * x + c[0];
}

}  // namespace

std::vector<Rat> casimir_cubic_roots(const LevelParams& lv, const Rat& Delta,
                                     const Rat& omega) {
  Rat q = q_term(lv, Delta);
  // p(i) = 2 i^3 + 3 i^2 + (1 - 2q) i - (q + omega), constant coefficient first.
  std::array<Rat, 4> c{-(q + omega), 1 - 2 * q, Rat(3), Rat(2)};

  std::vector<Rat> roots;
  if (c[0] == 0) {
    roots.push_back(0);
    // Remaining factor 2 x^2 + 3 x + (1 - 2q).
    Rat disc = c[2] * c[2] - 4 * c[3] * c[1];
    if (auto r = rat_sqrt(disc)) {
      roots.push_back((-c[2] + *r) / (2 * c[3]));
      roots.push_back((-c[2] - *r) / (2 * c[3]));
    }
  } else {
    mpz_class scale = lcm(c[0].get_den(), c[1].get_den());
    std::array<mpz_class, 4> a;
    for (int i = 0; i < 4; ++i) a[i] = mpz_class(Rat(c[i] * Rat(scale)).get_num());
    mpz_class content = gcd(gcd(a[0], a[1]), gcd(a[2], a[3]));
    if (content > 1)
      for (auto& x : a) x /= content;

    for (const auto& p : divisors(a[0])) {
      for (const auto& den : divisors(a[3])) {
        if (gcd(p, den) != 1) continue;
        for (int s : {1, -1}) {
          Rat cand(s > 0 ? p : mpz_class(-p), den);
          cand.canonicalize();
          if (eval_cubic(c, cand) == 0) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

bool dense_is_simple(const LevelParams& lv, const DenseLabel& d) {
  for (const Rat& r : casimir_cubic_roots(lv, d.Delta, d.omega))
    if (mod1(r) == mod1(d.cosetRep)) return false;
  return true;
}

ExcludedCosets excluded_cosets(const AffineWeight& w) {
  if (!in_relaxed_support(w)) throw DomainError(Errc::NotRelaxedSupport);
  const LevelParams& lv = w.level;
  AffineWeight w1 = z3_act(w);
  AffineWeight w2 = z3_act(w1);

  ExcludedCosets ec;
  Rat Delta = twisted_data(w).Delta;
  Rat omega = family_omega(w);
  const AffineWeight* orbit[3] = {&w, &w1, &w2};
  for (int i = 0; i < 3; ++i) {
    HwData d = twisted_data(*orbit[i]);
    if (d.Delta != Delta || family_omega(*orbit[i]) != omega)
      throw std::logic_error("family data not constant on z3 orbit");
    ec.raw[i] = d.j;
    ec.canonical[i] = mod1(d.j);
  }
  std::sort(ec.canonical.begin(), ec.canonical.end());

  // omega^+(i, Delta) - omega = 2 (i - j1)(i - j2)(i - j3), coefficientwise.
  Rat q = q_term(lv, Delta);
  Rat e1 = ec.raw[0] + ec.raw[1] + ec.raw[2];
  Rat e2 = ec.raw[0] * ec.raw[1] + ec.raw[0] * ec.raw[2] + ec.raw[1] * ec.raw[2];
  Rat e3 = ec.raw[0] * ec.raw[1] * ec.raw[2];
  if (-2 * e1 != 3 || 2 * e2 != 1 - 2 * q || -2 * e3 != -(q + omega))
    throw std::logic_error("casimir cubic does not factor over the orbit charges");
  return ec;
}

FamilyDescription coherent_family(const AffineWeight& w, FamilyKind kind) {
  ExcludedCosets ec = excluded_cosets(w);
  FamilyDescription fd;
  fd.kind = kind;
  fd.Delta = twisted_data(w).Delta;
  fd.omega = family_omega(w);
  fd.rawCharges = ec.raw;
  fd.excluded = ec.canonical;
  for (int i = 0; i < 3; ++i) {
    const Rat& j = ec.raw[i];
    CompositionFactor hw{false, j, fd.Delta};
    CompositionFactor cj{true, -j - 1, fd.Delta};
    auto& seq = fd.sequences[i];
    seq.rawCharge = j;
    if (kind == FamilyKind::plus) {
      seq.sub = cj;
      seq.quot = hw;
    } else {
      seq.sub = hw;
      seq.quot = cj;
    }
  }
  return fd;
}

}  // namespace bpatlas
