#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>

namespace bpatlas {

using Rat = mpq_class;

// "p/q" or "p", sign on the numerator; canonicalizes leniently, rejects q == 0.
Rat parse_rat(const std::string& s);

// Reduced form, positive denominator, "p" when integral.
std::string rat_str(const Rat& r);

mpz_class rat_floor(const Rat& r);

// r - floor(r), in [0, 1).
Rat mod1(const Rat& r);

bool is_integer(const Rat& r);

// Exact nonnegative square root when r is a perfect rational square.
std::optional<Rat> rat_sqrt(const Rat& r);

// Narrowing extraction for values known to be small integers.
long rat_long(const Rat& r);

using RatTriple = std::array<Rat, 3>;

}  // namespace bpatlas
