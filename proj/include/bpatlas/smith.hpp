#pragma once

#include <vector>

#include "bpatlas/module_data.hpp"

namespace bpatlas {

// Scalars entering every Smith-algebra formula at level k.
struct SmithScalars {
  Rat casimirShift;  // k + 3
  Rat constTerm;     // (1/8)(k+1)(2k+3)
};

SmithScalars smith_scalars(const LevelParams& lv);

// f_k(j, Delta) = 3 j^2 - (k+3) Delta - (1/8)(k+1)(2k+3).
Rat f_k(const LevelParams& lv, const Rat& j, const Rat& Delta);

// h_k^n = sum_{m=0}^{n-1} f_k(j - m, Delta), closed cubic form in n.
Rat h_k_n(const LevelParams& lv, const Rat& j, const Rat& Delta, long n);

// Telescoped reference evaluation of the same sum.
Rat h_k_n_sum(const LevelParams& lv, const Rat& j, const Rat& Delta, long n);

enum class Sign { plus, minus };

// Casimir eigenvalue omega^{+/-}_{j,Delta} = (2j +/- 1)(j(j +/- 1) - (k+3)Delta - constTerm).
Rat omega_pm(const LevelParams& lv, Sign s, const Rat& j, const Rat& Delta);

// Non-quadratic part of the Casimir: 2j^3 + j - 2j((k+3)Delta + constTerm).
Rat casimir_p(const LevelParams& lv, const Rat& j, const Rat& Delta);

// Dense-module label: charge coset representative in [0,1), conformal weight,
// Casimir parameter.
struct DenseLabel {
  Rat cosetRep;
  Rat Delta;
  Rat omega;
  bool operator==(const DenseLabel& o) const {
    return cosetRep == o.cosetRep && Delta == o.Delta && omega == o.omega;
  }
};

// Rational roots of omega^+(i, Delta) - omega, a cubic in i with leading
// coefficient 2. At most three.
std::vector<Rat> casimir_cubic_roots(const LevelParams& lv, const Rat& Delta,
                                     const Rat& omega);

// Simple iff no rational root of the Casimir cubic lies in the coset.
bool dense_is_simple(const LevelParams& lv, const DenseLabel& d);

// The three charge cosets removed from the coherent family through w.
struct ExcludedCosets {
  std::array<Rat, 3> raw;        // twisted charges of the z3 orbit, orbit order
  std::array<Rat, 3> canonical;  // mod-1 representatives, ascending
};

// Requires w in I(u,v). Also checks the factorization
// omega^+(i, Delta) - omega = 2 (i - j1)(i - j2)(i - j3) coefficientwise.
ExcludedCosets excluded_cosets(const AffineWeight& w);

enum class FamilyKind { semisimple, plus, minus };

// Composition-factor head recorded as underlying highest-weight data plus a
// conjugation flag.
struct CompositionFactor {
  bool conjugate = false;
  Rat j;
  Rat Delta;
  bool operator==(const CompositionFactor& o) const {
    return conjugate == o.conjugate && j == o.j && Delta == o.Delta;
  }
};

struct FamilyDescription {
  FamilyKind kind = FamilyKind::semisimple;
  Rat Delta;
  Rat omega;
  std::array<Rat, 3> rawCharges;
  std::array<Rat, 3> excluded;

  // One entry per distinguished coset. For plus: sub then quot; for minus the
  // same two heads swap roles; for semisimple they are the two simple factors.
  struct Sequence {
    Rat rawCharge;
    CompositionFactor sub;
    CompositionFactor quot;
    bool operator==(const Sequence& o) const {
      return rawCharge == o.rawCharge && sub == o.sub && quot == o.quot;
    }
  };
  std::array<Sequence, 3> sequences;
};

// Coherent family through the z3 orbit of w; requires w in I(u,v).
FamilyDescription coherent_family(const AffineWeight& w, FamilyKind kind);

}  // namespace bpatlas
