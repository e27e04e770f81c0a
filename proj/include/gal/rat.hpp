#ifndef GAL_RAT_HPP
#define GAL_RAT_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gal {

// Exact arbitrary-precision integers and rationals. mpq_class keeps values
// canonical (gcd(|num|,den)=1, den>=1), which is exactly the invariant the
// rest of the library relies on.
using Int = mpz_class;
using Rat = mpq_class;

// Parses "n" or "n/d" (d > 0 after canonicalization). Throws BadInput on junk.
Rat rat_from_string(std::string_view s);

// Canonical text form: "num/den", den omitted when 1.
std::string rat_to_string(const Rat& r);

inline int sgn(const Rat& r) { return mpq_sgn(r.get_mpq_t()); }
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

bool is_perfect_square(const Int& n);

// True iff r is the square of a rational. With num/den coprime this holds
// iff num*den is a perfect integer square (and num >= 0).
bool is_square(const Rat& r);

// Exact square root when r is a perfect square.
std::optional<Rat> exact_sqrt(const Rat& r);

Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, long e);

// Ordering used to pick a deterministic "smallest" witness value:
// by |num|+den, then sign (nonnegative first), then value.
bool witness_value_less(const Rat& a, const Rat& b);
bool witness_tuple_less(const std::vector<Rat>& a, const std::vector<Rat>& b);

// Complete factorization of |n| (n != 0): trial division up to 10^6 followed
// by Brent-Pollard rho. Returns (prime, exponent) pairs, primes ascending.
std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n);

// All positive divisors of |n|, ascending. n != 0.
std::vector<Int> divisors(const Int& n);

}  // namespace gal

#endif
