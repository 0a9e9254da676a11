#include "bpatlas/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bpatlas {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bad rational: " + s);
  bool seen_slash = false;
  for (std::size_t p = i; p < s.size(); ++p) {
    if (s[p] == '/') {
      if (seen_slash || p == i || p + 1 == s.size())
        throw std::invalid_argument("bad rational: " + s);
      seen_slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[p])))
      throw std::invalid_argument("bad rational: " + s);
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

mpz_class rat_floor(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rat mod1(const Rat& r) { return r - Rat(rat_floor(r)); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

std::optional<Rat> rat_sqrt(const Rat& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) ||
      !mpz_perfect_square_p(r.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
  return Rat(n, d);
}

long rat_long(const Rat& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p())
    throw std::domain_error("not a small integer: " + rat_str(r));
  return r.get_num().get_si();
}

}  // namespace bpatlas
