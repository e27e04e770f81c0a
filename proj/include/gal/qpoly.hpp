#ifndef GAL_QPOLY_HPP
#define GAL_QPOLY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gal/rat.hpp"

namespace gal {

// Dense univariate polynomial over Q, coefficients stored in ascending
// degree order with no trailing zero. The zero polynomial is the empty
// coefficient vector and reports degree -1.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(const Rat& c) : c_{c} { normalize(); }
  explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
  QPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { normalize(); }

  static QPoly zero() { return QPoly(); }
  static QPoly one() { return QPoly(Rat(1)); }
  static QPoly x() { return QPoly({Rat(0), Rat(1)}); }
  // c * X^k
  static QPoly monomial(int k, const Rat& c = Rat(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  // Coefficient of X^i; zero beyond the degree.
  const Rat& coeff(int i) const;
  const Rat& operator[](int i) const { return coeff(i); }
  const std::vector<Rat>& coeffs() const { return c_; }

  const Rat& lc() const;  // leading coefficient; polynomial must be nonzero
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return c_ != o.c_; }

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rat& s) const;

  // Exact Euclidean division: *this = q*d + r with deg r < deg d.
  // Throws DivisionByZeroPoly when d = 0.
  std::pair<QPoly, QPoly> divrem(const QPoly& d) const;
  QPoly operator/(const QPoly& d) const { return divrem(d).first; }
  QPoly operator%(const QPoly& d) const { return divrem(d).second; }

  QPoly derivative() const;
  QPoly monic() const;          // nonzero input
  QPoly mul_xk(int k) const;    // multiply by X^k

  Rat eval(const Rat& x) const;  // exact Horner

  // p(alpha*X + beta); used to depress cubics and undo monic scalings.
  QPoly compose_linear(const Rat& alpha, const Rat& beta) const;

  // X^deg * p(1/X) -- coefficient reversal.
  QPoly reversed() const;

  // Canonical text form: comma-separated coefficients ascending, each in
  // "num/den" form. Zero polynomial prints "0".
  std::string to_string() const;
  static QPoly from_string(std::string_view s);

  // Human form, e.g. "X^5 - 625*X^2 - 9375".
  std::string pretty(const std::string& var = "X") const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

inline QPoly operator*(const Rat& s, const QPoly& p) { return p * s; }

// Monic gcd via the subresultant PRS over Z (denominators cleared first).
// Not both arguments may be zero.
QPoly poly_gcd(const QPoly& p, const QPoly& q);

// Yun decomposition: lc * prod parts[i].first^{parts[i].second} = p, parts
// monic squarefree and pairwise coprime, multiplicities ascending. p != 0.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);

QPoly squarefree_part(const QPoly& p);

// Resultant of p and q via the subresultant chain.
Rat resultant(const QPoly& p, const QPoly& q);

// (-1)^{n(n-1)/2} * Res(p, p') / lc(p), n = deg p >= 2.
Rat discriminant(const QPoly& p);

// All rational roots with multiplicities, ascending by value. Candidates come
// from the primitive integer model (p | constant term, q | leading
// coefficient). p != 0.
std::vector<std::pair<Rat, int>> rational_roots(const QPoly& p);

bool has_rational_root(const QPoly& p);

// ---- integer-polynomial layer (shared with the factorization engine) ----
namespace zpoly {

using ZPoly = std::vector<Int>;  // ascending, no trailing zeros

void normalize(ZPoly& f);
int deg(const ZPoly& f);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
Int content(const ZPoly& f);             // gcd of coefficients, >= 0
ZPoly primitive_part(const ZPoly& f);     // positive leading coefficient
Int eval(const ZPoly& f, const Int& x);
Int max_abs_coeff(const ZPoly& f);

// Clears denominators: den * p has integer coefficients given by the result.
std::pair<ZPoly, Int> from_qpoly(const QPoly& p);
QPoly to_qpoly(const ZPoly& f, const Int& den = 1);

// Pseudo-remainder: lc(b)^{deg a - deg b + 1} * a mod b.
ZPoly prem(const ZPoly& a, const ZPoly& b);

}  // namespace zpoly

}  // namespace gal

#endif
