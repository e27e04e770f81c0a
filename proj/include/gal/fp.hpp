#ifndef GAL_FP_HPP
#define GAL_FP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gal/qpoly.hpp"
#include "gal/rat.hpp"

namespace gal {

// Prime field Z/p for odd word-sized primes (p < 2^62).
struct Fp {
  uint64_t p;

  explicit Fp(uint64_t prime) : p(prime) {}

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t neg(uint64_t a) const { return a ? p - a : 0; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const { return pow(a, p - 2); }

  uint64_t from_long(long v) const {
    long m = static_cast<long>(v % static_cast<long>(p));
    if (m < 0) m += static_cast<long>(p);
    return static_cast<uint64_t>(m);
  }
  uint64_t from_int(const Int& v) const { return mpz_fdiv_ui(v.get_mpz_t(), p); }
  // num/den mod p; nullopt when p divides den.
  std::optional<uint64_t> from_rat(const Rat& r) const {
    uint64_t d = from_int(Int(r.get_den()));
    if (d == 0) return std::nullopt;
    return mul(from_int(Int(r.get_num())), inv(d));
  }

  // Legendre symbol: 0, 1 or -1.
  int legendre(uint64_t a) const {
    if (a == 0) return 0;
    return pow(a, (p - 1) / 2) == 1 ? 1 : -1;
  }
};

// Field element carrying its context; lets the closed-form coefficient
// formulas run unchanged over Q and over Z/p.
struct ZpE {
  uint64_t v = 0;
  const Fp* F = nullptr;

  ZpE() = default;
  ZpE(uint64_t value, const Fp& f) : v(value), F(&f) {}
  static ZpE of(long value, const Fp& f) { return ZpE(f.from_long(value), f); }

  ZpE operator+(const ZpE& o) const { return ZpE(F->add(v, o.v), *F); }
  ZpE operator-(const ZpE& o) const { return ZpE(F->sub(v, o.v), *F); }
  ZpE operator*(const ZpE& o) const { return ZpE(F->mul(v, o.v), *F); }
  ZpE operator/(const ZpE& o) const { return ZpE(F->mul(v, F->inv(o.v)), *F); }
  ZpE operator-() const { return ZpE(F->neg(v), *F); }
  bool operator==(const ZpE& o) const { return v == o.v; }
};

// Dense polynomials over Fp, ascending coefficients, no trailing zeros.
namespace fpx {

using Poly = std::vector<uint64_t>;

void normalize(Poly& f);
int deg(const Poly& f);
Poly add(const Fp& F, const Poly& a, const Poly& b);
Poly sub(const Fp& F, const Poly& a, const Poly& b);
Poly mul(const Fp& F, const Poly& a, const Poly& b);
Poly scale(const Fp& F, const Poly& a, uint64_t c);
Poly make_monic(const Fp& F, const Poly& a);
std::pair<Poly, Poly> divrem(const Fp& F, const Poly& a, const Poly& b);
Poly gcd(const Fp& F, Poly a, Poly b);  // monic
// g, plus s,t with s*a + t*b = g (g monic gcd)
void xgcd(const Fp& F, const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t);
Poly powmod(const Fp& F, Poly base, const Int& e, const Poly& mod);
Poly derivative(const Fp& F, const Poly& a);
uint64_t eval(const Fp& F, const Poly& a, uint64_t x);

Poly from_zpoly(const Fp& F, const zpoly::ZPoly& f);
// Reduction of a rational-coefficient polynomial; nullopt when p divides a
// denominator (bad prime for this input).
std::optional<Poly> from_qpoly(const Fp& F, const QPoly& f);

bool is_squarefree(const Fp& F, const Poly& f);
bool has_root(const Fp& F, const Poly& f);  // scans all residues; p small

}  // namespace fpx

}  // namespace gal

#endif
