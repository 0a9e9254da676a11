#pragma once

#include <map>

#include "bpatlas/smith.hpp"

namespace bpatlas {

enum class Gen { J, Gp, Gm, L, Omega };

// Weight-module context the oracle rewrites against: base weight (j, Delta)
// plus a boundary condition. Dense keeps both ladder directions free and needs
// the Casimir parameter omega; highestWeight imposes G+ v = 0.
struct OracleModule {
  enum class Kind { dense, highestWeight };
  LevelParams level;
  Rat j;
  Rat Delta;
  Kind kind = Kind::dense;
  Rat omega;

  bool operator==(const OracleModule& o) const {
    return level == o.level && j == o.j && Delta == o.Delta && kind == o.kind &&
           (kind == Kind::highestWeight || omega == o.omega);
  }
};

// Formal linear combination of basis symbols indexed by exponent:
// m < 0 is (G-)^{|m|} v, m > 0 is (G+)^m v, m = 0 is v.
struct OracleVector {
  OracleModule ctx;
  std::map<long, Rat> coeff;

  bool is_zero() const;
  OracleVector& operator+=(const OracleVector& o);
  OracleVector operator*(const Rat& s) const;
  bool operator==(const OracleVector& o) const;
};

OracleVector basis_vector(const OracleModule& m, long exponent);

// Applies a generator, rewriting mixed words into the basis with the
// commutation relation [G+, G-] = f_k(J, L); Omega is applied through its
// defining expression in the other four generators.
OracleVector oracle_apply(Gen g, const OracleVector& x);

}  // namespace bpatlas
