#include "gal/rat.hpp"

#include <algorithm>
#include <cctype>

#include "gal/error.hpp"

namespace gal {

Rat rat_from_string(std::string_view s) {
  // strip spaces
  std::string t;
  t.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) fail(Errc::BadInput, "empty rational literal");
  for (char c : t)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      fail(Errc::BadInput, "bad rational literal '" + std::string(s) + "'");
  try {
    Rat r(t, 10);
    if (r.get_den() == 0) fail(Errc::BadInput, "zero denominator in '" + std::string(s) + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    fail(Errc::BadInput, "bad rational literal '" + std::string(s) + "'");
  }
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

bool is_perfect_square(const Int& n) {
  if (sgn(n) < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_square(const Rat& r) {
  if (sgn(r) < 0) return false;
  return is_perfect_square(Int(r.get_num())) && is_perfect_square(Int(r.get_den()));
}

std::optional<Rat> exact_sqrt(const Rat& r) {
  if (!is_square(r)) return std::nullopt;
  Int n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den().get_mpz_t());
  Rat out(n, d);
  out.canonicalize();
  return out;
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  bool invert = e < 0;
  unsigned long ue = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rat r(pow_int(Int(base.get_num()), ue), pow_int(Int(base.get_den()), ue));
  r.canonicalize();
  if (invert) return Rat(1) / r;
  return r;
}

bool witness_value_less(const Rat& a, const Rat& b) {
  Int ha = abs(Int(a.get_num())) + a.get_den();
  Int hb = abs(Int(b.get_num())) + b.get_den();
  if (ha != hb) return ha < hb;
  int sa = sgn(a) < 0 ? 1 : 0, sb = sgn(b) < 0 ? 1 : 0;
  if (sa != sb) return sa < sb;
  return a < b;
}

bool witness_tuple_less(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i]) return witness_value_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> ps = [] {
    const unsigned long limit = 1000000;
    std::vector<bool> comp(limit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= limit; ++i) {
      if (!comp[i]) {
        out.push_back(i);
        for (unsigned long j = i * i; j <= limit; j += i) comp[j] = true;
      }
    }
    return out;
  }();
  return ps;
}

Int brent_rho(const Int& n) {
  // n composite, odd, no factors <= 10^6. Deterministic parameter sweep.
  for (unsigned long c = 1;; ++c) {
    Int x(2), y(2), d(1), diff;
    Int saved_x;
    unsigned long power = 1, lam = 0;
    while (d == 1) {
      if (lam == power) {
        saved_x = x;
        power *= 2;
        lam = 0;
      }
      // x -> x^2 + c mod n
      x = (x * x + c) % n;
      ++lam;
      diff = x - saved_x;
      if (sgn(diff) == 0) break;  // cycle without factor: retry with next c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n && sgn(d) != 0) return d;
  }
}

void factor_rec(const Int& n, std::vector<std::pair<Int, unsigned>>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    out.emplace_back(n, 1);
    return;
  }
  Int d = brent_rho(n);
  factor_rec(d, out);
  factor_rec(Int(n / d), out);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n_in) {
  if (sgn(n_in) == 0) fail(Errc::BadInput, "factor_integer(0)");
  Int n = abs(n_in);
  std::vector<std::pair<Int, unsigned>> out;
  for (unsigned long p : small_primes()) {
    if (n == 1) break;
    if (Int(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        n /= p;
        ++e;
      }
      out.emplace_back(Int(p), e);
    }
  }
  if (n > 1) {
    std::vector<std::pair<Int, unsigned>> rest;
    factor_rec(n, rest);
    std::sort(rest.begin(), rest.end());
    for (size_t i = 0; i < rest.size();) {
      size_t j = i;
      unsigned e = 0;
      while (j < rest.size() && rest[j].first == rest[i].first) e += rest[j++].second;
      out.emplace_back(rest[i].first, e);
      i = j;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> divisors(const Int& n) {
  auto fac = factor_integer(n);
  std::vector<Int> out{Int(1)};
  for (const auto& [p, e] : fac) {
    size_t base = out.size();
    Int pk(1);
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::AmbiguousDT: return "AmbiguousDT";
    case Errc::NoConsistentDT: return "NoConsistentDT";
    case Errc::NonSeparable: return "NonSeparable";
    case Errc::ExcludedParameter: return "ExcludedParameter";
    case Errc::EqualParams: return "EqualParams";
    case Errc::DegenerateDenominator: return "DegenerateDenominator";
    case Errc::NotD4: return "NotD4";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::RhoCacheInvalid: return "RhoCacheInvalid";
    case Errc::ConfigEnumerationFailed: return "ConfigEnumerationFailed";
    case Errc::NotInD5Class: return "NotInD5Class";
    case Errc::UnexpectedPattern: return "UnexpectedPattern";
    case Errc::NoTableRow: return "NoTableRow";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::IllConditioned: return "IllConditioned";
    case Errc::BadInput: return "BadInput";
  }
  return "UnknownError";
}

}  // namespace gal
