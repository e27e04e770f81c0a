#ifndef GAL_FAMILIES_HPP
#define GAL_FAMILIES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gal/qpoly.hpp"

namespace gal {

// The four parametric families plus the derived input formats that convert
// into the quintic family.
enum class FamilyId { C3, S3, D4, D5, Lehmer, HTC5 };

int family_arity(FamilyId fam);
const char* family_name(FamilyId fam);
std::optional<FamilyId> family_from_string(std::string_view s);

using ParamPoint = std::vector<Rat>;

std::string param_to_string(const ParamPoint& a);
ParamPoint param_from_string(std::string_view csv, FamilyId fam);

struct Witness {
  enum class Kind { C3Branch1, C3Branch2, S3U, D4BranchI, D4BranchII };
  Kind kind;
  std::vector<Rat> values;
};

const char* witness_kind_name(Witness::Kind k);

enum class Certification { Exact, Numeric };

// Specialized polynomial of the family at a. Throws NonSeparable when the
// discriminant vanishes and ExcludedParameter on pole parameters (HTC5).
QPoly family_poly(FamilyId fam, const ParamPoint& a);

// True iff the specialization is separable (no error).
bool family_separable(FamilyId fam, const ParamPoint& a);

// Degree-6 multi-resolvent for the cubic family, leading coefficient a-b.
// Requires a != b and a*b*(4a+27)*(4b+27) != 0.
QPoly s3_resolvent(const Rat& a, const Rat& b);

// The quantity whose square root generates the quadratic subfield for the
// quintic family.
Rat d5_d_squared(const ParamPoint& a);

// Exact degree-10 first resolvent; symmetric in its two parameter points.
QPoly d5_resolvent_kind1(const ParamPoint& a, const ParamPoint& b);

// ---- bivariate rational-function cache for the second resolvent ----

struct BiPoly {
  int deg_s = 0, deg_t = 0;
  std::vector<Rat> c;  // (deg_s+1)*(deg_t+1) row-major: c[i*(deg_t+1)+j] * s^i t^j

  Rat eval(const Rat& s, const Rat& t) const;
  bool is_zero() const;
};

struct BiRational {
  BiPoly num, den;
  // nullopt at poles of the map
  std::optional<Rat> eval(const Rat& s, const Rat& t) const;
};

struct RhoCache {
  BiRational rho_s, rho_t;

  std::optional<std::pair<Rat, Rat>> apply(const Rat& s, const Rat& t) const;

  // JSON serialization; load() revalidates against the built-in check pair
  // and throws RhoCacheInvalid on mismatch.
  std::string to_json() const;
  static RhoCache from_json(const std::string& text);
  void save(const std::string& path) const;
  static RhoCache load(const std::string& path);
  void validate() const;

  // built-in verification data: the exact kind-2 resolvent of the pair
  // ((0,3),(10,3)), as a product of two explicit quintics
  static const ParamPoint& check_a();
  static const ParamPoint& check_b();
  static const QPoly& check_value();
};

struct ResolventResult {
  QPoly poly;
  Certification cert;
};

// kind 1: exact closed form. Kind 2: exact via the cache when provided,
// otherwise numeric construction, rationalization and double-precision
// cross-check (tagged Numeric).
ResolventResult d5_resolvent(const ParamPoint& a, const ParamPoint& b, int kind,
                             const RhoCache* cache = nullptr, int digits = 128);

// ---- witness solvers ----

std::optional<Witness> c3_isom_witness(const Rat& m, const Rat& n);
std::optional<Witness> s3_isom_witness(const Rat& a, const Rat& b);
std::optional<Witness> d4_isom_witness(const Rat& a, const Rat& b, const Rat& a2, const Rat& b2);

// forward maps, used by the witness round-trip tests and the classifiers
Rat c3_image(const Rat& m, const Rat& z, int branch);           // branch 1 or 2
Rat s3_image(const Rat& a, const Rat& u);                       // b from (a,u)
std::pair<Rat, Rat> d4_image(const Rat& a, const Rat& b, const Rat& p, const Rat& q, int branch);

// ---- conversions into the quintic family ----

std::pair<Rat, Rat> lehmer_brumer_params(const Rat& n);

struct BrumerConversion {
  ParamPoint st;
  Certification cert;
};

// Lehmer input is exact; HTC5 and general quintics go through the numeric
// root-configuration search (NotInD5Class when no ordering rationalizes).
BrumerConversion to_brumer(FamilyId fam, const ParamPoint& a, int digits = 128);
BrumerConversion to_brumer_quintic(const QPoly& f, int digits = 128);

// S3-form parameter of a cubic-family specialization: depress, then scale to
// X^3+aX+a. Defined when the depressed cubic X^3+pX+q has p*q != 0.
std::optional<Rat> c3_as_s3_param(const Rat& m);

}  // namespace gal

#endif
