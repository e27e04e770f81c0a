#ifndef GAL_NUMRES_HPP
#define GAL_NUMRES_HPP

#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gal/families.hpp"
#include "gal/qpoly.hpp"

namespace gal {

// working decimal precision is clamped to this range
inline constexpr int kMinDigits = 50;
inline constexpr int kMaxDigits = 4096;

mpfr_prec_t digits_to_bits(int digits);

// Arbitrary-precision binary float (MPFR), precision fixed per value;
// binary operations produce the larger operand precision.
class BigFloat {
 public:
  BigFloat() { mpfr_init2(v_, 64), mpfr_set_zero(v_, 1); }
  explicit BigFloat(mpfr_prec_t bits) { mpfr_init2(v_, bits), mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat from_long(long x, mpfr_prec_t bits);
  static BigFloat from_rat(const Rat& x, mpfr_prec_t bits);
  static BigFloat pow10(long e, mpfr_prec_t bits);  // 10^e
  static BigFloat pi(mpfr_prec_t bits);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  BigFloat abs() const;
  BigFloat sqrt() const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
  bool operator>(const BigFloat& o) const { return cmp(o) > 0; }
  bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // exact dyadic value as a rational
  Rat to_rat_exact() const;
  std::string str(size_t ndigits = 25) const;

 private:
  mpfr_t v_;
};

struct CF {
  BigFloat re, im;

  CF() = default;
  CF(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  static CF of(long x, mpfr_prec_t bits) { return {BigFloat::from_long(x, bits), BigFloat(bits)}; }
  static CF from_rat(const Rat& x, mpfr_prec_t bits) {
    return {BigFloat::from_rat(x, bits), BigFloat(bits)};
  }

  CF operator+(const CF& o) const { return {re + o.re, im + o.im}; }
  CF operator-(const CF& o) const { return {re - o.re, im - o.im}; }
  CF operator*(const CF& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CF operator/(const CF& o) const;
  CF operator-() const { return {-re, -im}; }

  BigFloat abs() const;
  std::string str(size_t ndigits = 15) const;
};

// All roots of a separable polynomial (deg >= 1) by simultaneous iteration
// from deterministic starting points; escalates precision x2 internally until
// every residual |p(r)| < 10^(10-digits) * ||p||_1. Roots are returned sorted
// by (real, imaginary). Throws PrecisionExhausted past the digit ceiling.
std::vector<CF> find_roots(const QPoly& p, int digits);

// Coefficients u with beta_i = sum_j u_j alpha_i^j (Vandermonde solve).
// Throws IllConditioned when the reconstruction residual exceeds
// 10^(-digits/2).
std::vector<CF> tschirnhausen_coefficients(const std::vector<CF>& alpha,
                                           const std::vector<CF>& beta, int digits);

// Valid cross-ratio configurations (x, y) = (r_i, r_j) of a quintic's roots:
// those whose induced five-orbit reproduces the root multiset within
// 10^(-digits/2). A separable member of the quintic family has exactly 10.
std::vector<std::pair<CF, CF>> enumerate_configs(const std::vector<CF>& roots, int digits);

enum class ResolventKind { S3Theta, D5P, D5RhoP };

struct NumericPoly {
  std::vector<CF> coeffs;  // ascending
  int digits = 0;          // working precision that produced them
};

// Numeric multi-resolvent construction from root data; the independent oracle
// for the closed forms. Escalates precision internally. fix_b_config selects
// which of the second polynomial's valid configurations anchors the coset
// sweep (the result is independent of the choice; exposed for that test).
NumericPoly numeric_resolvent(FamilyId fam, const ParamPoint& a, const ParamPoint& b,
                              ResolventKind kind, int digits, int fix_b_config = 0);

// Continued-fraction recovery of a rational from a float: accepts the first
// convergent p/q with |x - p/q| < 10^(-digits/2), q < 10^(digits/4) and
// approximation quality q^2 |x - p/q| < 10^(-digits/2) (rejects generic
// irrationals that merely have a lucky convergent in range).
std::optional<Rat> rationalize(const BigFloat& x, int digits);
std::optional<Rat> rationalize(const CF& x, int digits);
std::optional<QPoly> rationalize_poly(const NumericPoly& np);

// Exact reconstruction of the parameter transform behind the second
// resolvent, by sampling rational root configurations and interpolating
// bivariate rational functions of escalating degree. The result satisfies
// the involution law and reproduces the built-in check pair exactly.
RhoCache derive_rho_map(int sample_budget = 400, int degree_cap = 8);

}  // namespace gal

#endif
