#include "bpatlas/oracle.hpp"

#include <stdexcept>

namespace bpatlas {

bool OracleVector::is_zero() const {
  for (const auto& [m, c] : coeff)
    if (c != 0) return false;
  return true;
}

OracleVector& OracleVector::operator+=(const OracleVector& o) {
  if (!(ctx == o.ctx)) throw std::logic_error("oracle context mismatch");
  for (const auto& [m, c] : o.coeff) {
    Rat& slot = coeff[m];
    slot += c;
    if (slot == 0) coeff.erase(m);
  }
  return *this;
}

OracleVector OracleVector::operator*(const Rat& s) const {
  OracleVector r{ctx, {}};
  if (s == 0) return r;
  for (const auto& [m, c] : coeff) r.coeff[m] = c * s;
  return r;
}

bool OracleVector::operator==(const OracleVector& o) const {
  return ctx == o.ctx && coeff == o.coeff;
}

OracleVector basis_vector(const OracleModule& m, long exponent) {
  if (m.kind == OracleModule::Kind::highestWeight && exponent > 0)
    throw std::logic_error("no raising basis in a highest-weight module");
  OracleVector v{m, {}};
  v.coeff[exponent] = 1;
  return v;
}

namespace {

// G- G+ v in the dense module, fixed by Omega v = omega v and the commutator.
Rat gminus_gplus_on_v(const OracleModule& m) {
  Rat p = casimir_p(m.level, m.j, m.Delta);
  Rat f = f_k(m.level, m.j, m.Delta);
  return (m.omega - p - f) / 2;
}

// G+ (G-)^n v = A_n (G-)^{n-1} v, accumulated one commutation at a time.
Rat lowering_return(const OracleModule& m, long n) {
  Rat acc = m.kind == OracleModule::Kind::highestWeight
                ? f_k(m.level, m.j, m.Delta)
                : gminus_gplus_on_v(m) + f_k(m.level, m.j, m.Delta);
  for (long i = 1; i < n; ++i) acc += f_k(m.level, m.j - i, m.Delta);
  return acc;
}

// G- (G+)^n v = B_n (G+)^{n-1} v.
Rat raising_return(const OracleModule& m, long n) {
  Rat acc = gminus_gplus_on_v(m);
  for (long i = 1; i < n; ++i) acc -= f_k(m.level, m.j + i, m.Delta);
  return acc;
}

void add_term(OracleVector& out, long exponent, const Rat& c) {
  if (c == 0) return;
  Rat& slot = out.coeff[exponent];
  slot += c;
  if (slot == 0) out.coeff.erase(exponent);
}

}  // namespace

OracleVector oracle_apply(Gen g, const OracleVector& x) {
  const OracleModule& m = x.ctx;
  const bool hw = m.kind == OracleModule::Kind::highestWeight;
  OracleVector out{m, {}};

  switch (g) {
    case Gen::J:
      for (const auto& [e, c] : x.coeff) add_term(out, e, c * (m.j + e));
      return out;
    case Gen::L:
      for (const auto& [e, c] : x.coeff) add_term(out, e, c * m.Delta);
      return out;
    case Gen::Gm:
      for (const auto& [e, c] : x.coeff) {
        if (e <= 0)
          add_term(out, e - 1, c);
        else
          add_term(out, e - 1, c * raising_return(m, e));
      }
      return out;
    case Gen::Gp:
      for (const auto& [e, c] : x.coeff) {
        if (e >= 0) {
          if (!hw) add_term(out, e + 1, c);
        } else {
          add_term(out, e + 1, c * lowering_return(m, -e));
        }
      }
      return out;
    case Gen::Omega: {
      SmithScalars s = smith_scalars(m.level);
      OracleVector acc = oracle_apply(Gen::Gp, oracle_apply(Gen::Gm, x));
      acc += oracle_apply(Gen::Gm, oracle_apply(Gen::Gp, x));
      OracleVector jx = oracle_apply(Gen::J, x);
      acc += oracle_apply(Gen::J, oracle_apply(Gen::J, jx)) * 2;
      acc += jx;
      acc += oracle_apply(Gen::J, oracle_apply(Gen::L, x)) * (-2 * s.casimirShift);
      acc += jx * (-2 * s.constTerm);
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace bpatlas
