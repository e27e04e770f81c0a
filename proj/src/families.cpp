#include "gal/families.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "gal/error.hpp"
#include "gal/formulas.hpp"
#include "gal/numres.hpp"
#include "gal/zfactor.hpp"

namespace gal {

namespace {

struct RatCtx {
  using Elem = Rat;
  Rat of(long v) const { return Rat(v); }
};

const RatCtx kQ;

}  // namespace

int family_arity(FamilyId fam) {
  switch (fam) {
    case FamilyId::C3:
    case FamilyId::S3:
    case FamilyId::Lehmer: return 1;
    case FamilyId::D4:
    case FamilyId::D5:
    case FamilyId::HTC5: return 2;
  }
  return 0;
}

const char* family_name(FamilyId fam) {
  switch (fam) {
    case FamilyId::C3: return "c3";
    case FamilyId::S3: return "s3";
    case FamilyId::D4: return "d4";
    case FamilyId::D5: return "d5";
    case FamilyId::Lehmer: return "lehmer";
    case FamilyId::HTC5: return "htc5";
  }
  return "?";
}

std::optional<FamilyId> family_from_string(std::string_view s) {
  if (s == "c3") return FamilyId::C3;
  if (s == "s3") return FamilyId::S3;
  if (s == "d4") return FamilyId::D4;
  if (s == "d5") return FamilyId::D5;
  if (s == "lehmer") return FamilyId::Lehmer;
  if (s == "htc5") return FamilyId::HTC5;
  return std::nullopt;
}

std::string param_to_string(const ParamPoint& a) {
  std::string out;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += rat_to_string(a[i]);
  }
  return out;
}

ParamPoint param_from_string(std::string_view csv, FamilyId fam) {
  ParamPoint out;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    std::string_view tok =
        csv.substr(pos, comma == std::string_view::npos ? csv.size() - pos : comma - pos);
    out.push_back(rat_from_string(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(out.size()) != family_arity(fam))
    fail(Errc::BadInput, std::string("family ") + family_name(fam) + " takes " +
                             std::to_string(family_arity(fam)) + " parameter(s)");
  return out;
}

const char* witness_kind_name(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::C3Branch1: return "C3-z-branch1";
    case Witness::Kind::C3Branch2: return "C3-z-branch2";
    case Witness::Kind::S3U: return "S3-u";
    case Witness::Kind::D4BranchI: return "D4-pq-i";
    case Witness::Kind::D4BranchII: return "D4-pq-ii";
  }
  return "?";
}

QPoly family_poly(FamilyId fam, const ParamPoint& a) {
  if (static_cast<int>(a.size()) != family_arity(fam))
    fail(Errc::BadInput, "parameter arity mismatch");
  QPoly f;
  switch (fam) {
    case FamilyId::C3: f = QPoly(formulas::c3_poly(kQ, a[0])); break;
    case FamilyId::S3: f = QPoly(formulas::s3_poly(kQ, a[0])); break;
    case FamilyId::D4: f = QPoly(formulas::d4_poly(kQ, a[0], a[1])); break;
    case FamilyId::D5: f = QPoly(formulas::d5_poly(kQ, a[0], a[1])); break;
    case FamilyId::Lehmer: f = QPoly(formulas::lehmer_poly(kQ, a[0])); break;
    case FamilyId::HTC5: {
      Rat Q = (a[0] + 7) * a[1] * a[1] - a[0] + 1;
      if (sgn(Q) == 0)
        fail(Errc::ExcludedParameter, "(A+7)B^2 - A + 1 = 0");
      f = QPoly(formulas::htc5_poly(kQ, a[0], a[1]));
      break;
    }
  }
  if (sgn(discriminant(f)) == 0)
    fail(Errc::NonSeparable, "discriminant vanishes at (" + param_to_string(a) + ")");
  return f;
}

bool family_separable(FamilyId fam, const ParamPoint& a) {
  try {
    family_poly(fam, a);
    return true;
  } catch (const GalError&) {
    return false;
  }
}

QPoly s3_resolvent(const Rat& a, const Rat& b) {
  if (a == b) fail(Errc::EqualParams, "resolvent needs distinct parameters");
  if (sgn(a) == 0 || sgn(b) == 0 || sgn(4 * a + 27) == 0 || sgn(4 * b + 27) == 0)
    fail(Errc::ExcludedParameter, "a*b*(4a+27)*(4b+27) = 0");
  return QPoly(formulas::s3_resolvent_coeffs(kQ, a, b));
}

Rat d5_d_squared(const ParamPoint& a) {
  if (a.size() != 2) fail(Errc::BadInput, "d_squared takes (s,t)");
  return formulas::d_squared(kQ, a[0], a[1]);
}

QPoly d5_resolvent_kind1(const ParamPoint& a, const ParamPoint& b) {
  family_poly(FamilyId::D5, a);
  family_poly(FamilyId::D5, b);
  return QPoly(formulas::resolvent1_coeffs(kQ, a[0], a[1], b[0], b[1]));
}

// ---------------------------------------------------------------------------
// bivariate rational cache

Rat BiPoly::eval(const Rat& s, const Rat& t) const {
  Rat acc(0);
  Rat spow(1);
  for (int i = 0; i <= deg_s; ++i) {
    Rat tpow(1);
    for (int j = 0; j <= deg_t; ++j) {
      const Rat& cij = c[static_cast<size_t>(i * (deg_t + 1) + j)];
      if (sgn(cij) != 0) acc += cij * spow * tpow;
      tpow *= t;
    }
    spow *= s;
  }
  return acc;
}

bool BiPoly::is_zero() const {
  for (const Rat& x : c)
    if (sgn(x) != 0) return false;
  return true;
}

std::optional<Rat> BiRational::eval(const Rat& s, const Rat& t) const {
  Rat d = den.eval(s, t);
  if (sgn(d) == 0) return std::nullopt;
  return num.eval(s, t) / d;
}

std::optional<std::pair<Rat, Rat>> RhoCache::apply(const Rat& s, const Rat& t) const {
  auto rs = rho_s.eval(s, t);
  auto rt = rho_t.eval(s, t);
  if (!rs || !rt) return std::nullopt;
  return std::pair{*rs, *rt};
}

const ParamPoint& RhoCache::check_a() {
  static const ParamPoint a = {Rat(0), Rat(3)};
  return a;
}

const ParamPoint& RhoCache::check_b() {
  static const ParamPoint b = {Rat(10), Rat(3)};
  return b;
}

const QPoly& RhoCache::check_value() {
  static const QPoly v = [] {
    QPoly f1({Rat(-3125, 27), Rat(6250, 81), Rat(0), Rat(-125, 9), Rat(0), Rat(1)});
    QPoly f2({Rat(15625, 27), Rat(15625, 81), Rat(625, 9), Rat(-125, 9), Rat(0), Rat(1)});
    QPoly p = f1 * f2;
    return p;
  }();
  return v;
}

namespace {

nlohmann::json bipoly_to_json(const BiPoly& p) {
  nlohmann::json j;
  j["deg_s"] = p.deg_s;
  j["deg_t"] = p.deg_t;
  std::vector<std::string> cs;
  cs.reserve(p.c.size());
  for (const Rat& x : p.c) cs.push_back(rat_to_string(x));
  j["coeffs"] = cs;
  return j;
}

BiPoly bipoly_from_json(const nlohmann::json& j) {
  BiPoly p;
  p.deg_s = j.at("deg_s").get<int>();
  p.deg_t = j.at("deg_t").get<int>();
  for (const auto& s : j.at("coeffs")) p.c.push_back(rat_from_string(s.get<std::string>()));
  if (static_cast<int>(p.c.size()) != (p.deg_s + 1) * (p.deg_t + 1))
    fail(Errc::RhoCacheInvalid, "coefficient table size mismatch");
  return p;
}

}  // namespace

std::string RhoCache::to_json() const {
  nlohmann::json j;
  j["version"] = 1;
  j["rho_s"] = {{"num", bipoly_to_json(rho_s.num)}, {"den", bipoly_to_json(rho_s.den)}};
  j["rho_t"] = {{"num", bipoly_to_json(rho_t.num)}, {"den", bipoly_to_json(rho_t.den)}};
  std::vector<std::string> pc;
  for (const Rat& c : check_value().coeffs()) pc.push_back(rat_to_string(c));
  j["self_check"] = {{"a", param_to_string(check_a())},
                     {"b", param_to_string(check_b())},
                     {"resolvent2", pc}};
  return j.dump(1);
}

RhoCache RhoCache::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::RhoCacheInvalid, std::string("bad JSON: ") + e.what());
  }
  try {
    if (j.at("version").get<int>() != 1) fail(Errc::RhoCacheInvalid, "unsupported version");
    RhoCache c;
    c.rho_s.num = bipoly_from_json(j.at("rho_s").at("num"));
    c.rho_s.den = bipoly_from_json(j.at("rho_s").at("den"));
    c.rho_t.num = bipoly_from_json(j.at("rho_t").at("num"));
    c.rho_t.den = bipoly_from_json(j.at("rho_t").at("den"));
    return c;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::RhoCacheInvalid, std::string("missing field: ") + e.what());
  }
}

void RhoCache::save(const std::string& path) const {
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp);
    if (!os) fail(Errc::BadInput, "cannot write " + tmp);
    os << to_json() << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    fail(Errc::BadInput, "cannot move cache into place at " + path);
}

RhoCache RhoCache::load(const std::string& path) {
  std::ifstream is(path);
  if (!is) fail(Errc::RhoCacheInvalid, "cannot open " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  RhoCache c = from_json(ss.str());
  c.validate();
  return c;
}

void RhoCache::validate() const {
  // involution law at deterministic sample points
  std::mt19937_64 rng(0xabcdef12ULL);
  int checked = 0, attempts = 0;
  while (checked < 50 && attempts < 4000) {
    ++attempts;
    Rat s(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1);
    Rat t(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1);
    s.canonicalize();
    t.canonicalize();
    if (sgn(t) == 0) continue;
    auto once = apply(s, t);
    if (!once) continue;
    auto twice = apply(once->first, once->second);
    if (!twice) continue;
    if (twice->first != s || twice->second != t)
      fail(Errc::RhoCacheInvalid, "involution law fails at (" + rat_to_string(s) + "," +
                                      rat_to_string(t) + ")");
    ++checked;
  }
  if (checked < 50) fail(Errc::RhoCacheInvalid, "could not verify the involution law");

  auto rho = apply(check_a()[0], check_a()[1]);
  if (!rho) fail(Errc::RhoCacheInvalid, "cache has a pole at the check point");
  QPoly f2 = QPoly(formulas::resolvent1_coeffs(kQ, rho->first, rho->second, check_b()[0],
                                               check_b()[1]));
  if (f2 != check_value())
    fail(Errc::RhoCacheInvalid, "cache does not reproduce the built-in check resolvent");
}

ResolventResult d5_resolvent(const ParamPoint& a, const ParamPoint& b, int kind,
                             const RhoCache* cache, int digits) {
  if (kind != 1 && kind != 2) fail(Errc::BadInput, "resolvent kind must be 1 or 2");
  if (kind == 1) return {d5_resolvent_kind1(a, b), Certification::Exact};

  family_poly(FamilyId::D5, a);
  family_poly(FamilyId::D5, b);
  if (cache) {
    auto rho = cache->apply(a[0], a[1]);
    if (rho)
      return {QPoly(formulas::resolvent1_coeffs(kQ, rho->first, rho->second, b[0], b[1])),
              Certification::Exact};
    // pole of the cached map: fall through to the numeric path
  }
  int d = std::max(kMinDigits, digits);
  while (2 * d <= kMaxDigits) {
    NumericPoly lo = numeric_resolvent(FamilyId::D5, a, b, ResolventKind::D5RhoP, d);
    NumericPoly hi = numeric_resolvent(FamilyId::D5, a, b, ResolventKind::D5RhoP, 2 * d);
    auto qlo = rationalize_poly(lo);
    auto qhi = rationalize_poly(hi);
    if (qlo && qhi && *qlo == *qhi) return {*qlo, Certification::Numeric};
    d *= 2;
  }
  fail(Errc::PrecisionExhausted, "kind-2 resolvent rationalization did not stabilize");
}

// ---------------------------------------------------------------------------
// witness solvers

Rat c3_image(const Rat& m, const Rat& z, int branch) {
  Rat den = m * z * (z + 1) + z * z * z + 3 * z * z - 1;
  if (sgn(den) == 0) fail(Errc::DegenerateDenominator, "pole of the parameter map");
  if (branch == 1) return (m * (z * z * z - 3 * z - 1) - 9 * z * (z + 1)) / den;
  return -(m * (z * z * z + 3 * z * z - 1) + 3 * (z * z * z - 3 * z - 1)) / den;
}

namespace {

// rationals ordered by |num|+den, nonnegative first
std::vector<Rat> small_rationals(int count) {
  std::vector<Rat> out;
  for (long h = 1; static_cast<int>(out.size()) < count; ++h) {
    std::vector<Rat> layer;
    for (long den = 1; den <= h; ++den) {
      long num = h - den;
      Rat r(num, den);
      r.canonicalize();
      if (abs(Int(r.get_num())) + r.get_den() != h) continue;  // not in lowest terms at this height
      layer.push_back(r);
      if (num != 0) layer.push_back(-r);
    }
    std::sort(layer.begin(), layer.end(), witness_value_less);
    for (const Rat& r : layer) out.push_back(r);
  }
  out.resize(static_cast<size_t>(count));
  return out;
}

}  // namespace

std::optional<Witness> c3_isom_witness(const Rat& m, const Rat& n) {
  family_poly(FamilyId::C3, {m});
  family_poly(FamilyId::C3, {n});
  // common denominator of both branch maps, as a polynomial in z
  QPoly den({Rat(-1), m, m + 3, Rat(1)});
  QPoly num1({-m, -3 * m - 9, Rat(-9), m});
  QPoly num2({-m - 3, Rat(-9), 3 * m, m + 3});

  std::vector<Witness> found;
  for (int branch = 1; branch <= 2; ++branch) {
    QPoly cleared = branch == 1 ? num1 - den * n : num2 + den * n;
    if (cleared.is_zero()) {
      for (const Rat& z : small_rationals(64)) {
        if (sgn(den.eval(z)) != 0)
          return Witness{branch == 1 ? Witness::Kind::C3Branch1 : Witness::Kind::C3Branch2, {z}};
      }
      fail(Errc::DegenerateDenominator, "branch map degenerate with no usable point");
    }
    for (const auto& [z, mult] : rational_roots(cleared)) {
      (void)mult;
      if (sgn(den.eval(z)) == 0) continue;
      if (c3_image(m, z, branch) != n) continue;
      found.push_back(
          Witness{branch == 1 ? Witness::Kind::C3Branch1 : Witness::Kind::C3Branch2, {z}});
    }
  }
  if (found.empty()) return std::nullopt;
  std::sort(found.begin(), found.end(), [](const Witness& a, const Witness& b) {
    if (a.values[0] != b.values[0]) return witness_value_less(a.values[0], b.values[0]);
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  });
  return found.front();
}

Rat s3_image(const Rat& a, const Rat& u) {
  Rat den = u * u * u - 2 * a * u * u - 9 * a * u - 2 * a * a - 27 * a;
  if (sgn(den) == 0) fail(Errc::DegenerateDenominator, "pole of the parameter map");
  Rat num = u * u + 9 * u - 3 * a;
  return a * num * num * num / (den * den);
}

std::optional<Witness> s3_isom_witness(const Rat& a, const Rat& b) {
  QPoly res = s3_resolvent(a, b);  // throws EqualParams / ExcludedParameter
  std::vector<Rat> us;
  for (const auto& [u, mult] : rational_roots(res)) {
    (void)mult;
    Rat den = u * u * u - 2 * a * u * u - 9 * a * u - 2 * a * a - 27 * a;
    if (sgn(den) == 0) continue;
    if (s3_image(a, u) != b) continue;
    us.push_back(u);
  }
  if (us.empty()) return std::nullopt;
  std::sort(us.begin(), us.end(), witness_value_less);
  return Witness{Witness::Kind::S3U, {us.front()}};
}

std::pair<Rat, Rat> d4_image(const Rat& a, const Rat& b, const Rat& p, const Rat& q, int branch) {
  Rat q1 = a * p * p - 4 * b * p * q + a * b * q * q;
  if (branch == 1) {
    Rat g = p * p - a * p * q + b * q * q;
    return {q1, b * g * g};
  }
  Rat g = p * p - b * q * q;
  return {2 * q1, (a * a - 4 * b) * g * g};
}

namespace {

bool d4_group_is_d4(const Rat& a, const Rat& b) {
  if (sgn(b) == 0 || sgn(a * a - 4 * b) == 0) fail(Errc::NonSeparable, "degenerate biquadratic");
  QPoly f = QPoly(formulas::d4_poly(kQ, a, b));
  if (!factor_over_Q(f).irreducible()) return false;
  if (is_square(b)) return false;                  // V4
  if (is_square(b * (a * a - 4 * b))) return false;  // C4
  return true;
}

void canonical_pq(Rat& p, Rat& q) {
  if (sgn(p) < 0 || (sgn(p) == 0 && sgn(q) < 0)) {
    p = -p;
    q = -q;
  }
}

// all rational solutions (up to simultaneous sign) of
//   F(p,q) = u, G(p,q) = v,   F = f2 p^2 + f1 pq + f0 q^2, G monic in p^2
void solve_form_pair(const std::array<Rat, 3>& F, const Rat& u, const std::array<Rat, 3>& G,
                     const Rat& v, std::vector<std::pair<Rat, Rat>>& out) {
  // q = 0: p^2 = v, F = f2 v
  if (auto p = exact_sqrt(v); p && sgn(*p) != 0) {
    if (F[0] * v == u) {
      Rat pp = *p, qq(0);
      canonical_pq(pp, qq);
      out.emplace_back(pp, qq);
    }
  }
  // q != 0: lambda = p/q solves A l^2 + B l + C = 0 with the combination u*G - v*F
  Rat A = u - v * F[0];
  Rat B = u * G[1] - v * F[1];
  Rat C = u * G[2] - v * F[2];
  std::vector<Rat> lambdas;
  if (sgn(A) == 0 && sgn(B) == 0 && sgn(C) == 0) {
    return;  // forms proportional; cannot happen for a separable biquadratic
  }
  if (sgn(A) == 0) {
    if (sgn(B) != 0) lambdas.push_back(-C / B);
  } else {
    Rat disc = B * B - 4 * A * C;
    if (auto rd = exact_sqrt(disc)) {
      lambdas.push_back((-B + *rd) / (2 * A));
      if (sgn(*rd) != 0) lambdas.push_back((-B - *rd) / (2 * A));
    }
  }
  for (const Rat& l : lambdas) {
    Rat g = l * l + G[1] * l + G[2];
    if (sgn(g) == 0) continue;
    Rat q2 = v / g;
    auto q = exact_sqrt(q2);
    if (!q || sgn(*q) == 0) continue;
    Rat pp = l * *q, qq = *q;
    if (F[0] * pp * pp + F[1] * pp * qq + F[2] * qq * qq != u) continue;
    Rat gg = pp * pp + G[1] * pp * qq + G[2] * qq * qq;
    if (gg != v) continue;
    canonical_pq(pp, qq);
    out.emplace_back(pp, qq);
  }
}

}  // namespace

std::optional<Witness> d4_isom_witness(const Rat& a, const Rat& b, const Rat& a2, const Rat& b2) {
  if (sgn(b2) == 0 || sgn(a2 * a2 - 4 * b2) == 0)
    fail(Errc::NonSeparable, "degenerate target biquadratic");
  if (!d4_group_is_d4(a, b)) fail(Errc::NotD4, "source group is not the full dihedral group");

  std::vector<Witness> found;
  std::array<Rat, 3> Q1 = {a, -4 * b, a * b};

  // branch (i): b' = b (p^2 - apq + bq^2)^2
  if (auto r = exact_sqrt(b2 / b)) {
    std::array<Rat, 3> G = {Rat(1), -a, b};
    for (int sign = 0; sign < 2; ++sign) {
      Rat rv = sign ? -*r : *r;
      if (sgn(rv) == 0 && sign == 1) continue;
      std::vector<std::pair<Rat, Rat>> sols;
      solve_form_pair(Q1, a2, G, rv, sols);
      for (auto& [p, q] : sols) found.push_back(Witness{Witness::Kind::D4BranchI, {p, q}});
    }
  }
  // branch (ii): a' = 2 Q1, b' = (a^2-4b)(p^2 - bq^2)^2
  if (auto r = exact_sqrt(b2 / (a * a - 4 * b))) {
    std::array<Rat, 3> G = {Rat(1), Rat(0), -b};
    for (int sign = 0; sign < 2; ++sign) {
      Rat rv = sign ? -*r : *r;
      if (sgn(rv) == 0 && sign == 1) continue;
      std::vector<std::pair<Rat, Rat>> sols;
      solve_form_pair(Q1, a2 / 2, G, rv, sols);
      for (auto& [p, q] : sols) found.push_back(Witness{Witness::Kind::D4BranchII, {p, q}});
    }
  }
  if (found.empty()) return std::nullopt;
  std::sort(found.begin(), found.end(), [](const Witness& x, const Witness& y) {
    if (x.values != y.values) return witness_tuple_less(x.values, y.values);
    return static_cast<int>(x.kind) < static_cast<int>(y.kind);
  });
  found.erase(std::unique(found.begin(), found.end(),
                          [](const Witness& x, const Witness& y) {
                            return x.kind == y.kind && x.values == y.values;
                          }),
              found.end());
  return found.front();
}

// ---------------------------------------------------------------------------
// conversions into the quintic family

std::pair<Rat, Rat> lehmer_brumer_params(const Rat& n) {
  auto [s, t] = formulas::lehmer_params(kQ, n);
  return {s, t};
}

namespace {

// quick group size marker for ranking candidate parameter points:
// 3 = full dihedral, 2 = cyclic, 1 = involution, 0 = split
int d5_group_rank(const ParamPoint& st) {
  QPoly f = family_poly(FamilyId::D5, st);
  Factorization fact = factor_over_Q(f);
  if (fact.irreducible())
    return is_square(d5_d_squared(st)) ? 2 : 3;
  std::vector<int> pat = fact.degree_pattern();
  if (pat == std::vector<int>{2, 2, 1}) return 1;
  if (pat == std::vector<int>{1, 1, 1, 1, 1}) return 0;
  fail(Errc::UnexpectedPattern, "factor pattern outside the dihedral family");
}

}  // namespace

BrumerConversion to_brumer_quintic(const QPoly& f, int digits) {
  if (f.degree() != 5) fail(Errc::BadInput, "conversion expects a quintic");
  QPoly g = f.monic();
  if (sgn(discriminant(g)) == 0) fail(Errc::NonSeparable, "input is not separable");
  if (!is_square(discriminant(g)))
    fail(Errc::NotInD5Class, "discriminant is not a square");

  int d = std::max(kMinDigits, digits);
  for (; d <= kMaxDigits; d *= 2) {
    std::vector<CF> roots = find_roots(g, d);
    mpfr_prec_t bits = roots[0].re.prec();
    CF one = CF::of(1, bits);
    BigFloat tiny = BigFloat::pow10(-d / 2, bits);

    std::vector<ParamPoint> candidates;
    std::array<int, 5> perm = {0, 1, 2, 3, 4};
    do {
      const CF& r1 = roots[static_cast<size_t>(perm[0])];
      const CF& r2 = roots[static_cast<size_t>(perm[1])];
      const CF& r3 = roots[static_cast<size_t>(perm[2])];
      const CF& r4 = roots[static_cast<size_t>(perm[3])];
      const CF& r5 = roots[static_cast<size_t>(perm[4])];
      CF d13 = r1 - r3, d24 = r2 - r4, d35 = r3 - r5, d34 = r3 - r4;
      if (d13.abs() < tiny || d24.abs() < tiny || d35.abs() < tiny || d34.abs() < tiny) continue;
      CF x = ((r1 - r4) * (r2 - r3)) / (d13 * d24);
      CF y = ((r2 - r5) * d34) / (d24 * d35);
      if (x.abs() < tiny || y.abs() < tiny) continue;
      // orbit of the cross-ratio pair
      std::vector<CF> orb = {x, y, (one - y) / x, (x + y - one) / (x * y), (one - x) / y};
      std::vector<CF> poly = {one};
      for (const CF& o : orb) {
        std::vector<CF> next(poly.size() + 1, CF::of(0, bits));
        for (size_t i = 0; i < poly.size(); ++i) {
          next[i + 1] = next[i + 1] + poly[i];
          next[i] = next[i] - poly[i] * o;
        }
        poly = std::move(next);
      }
      auto t = rationalize(poly[0], d);
      auto s = rationalize(poly[1], d);
      if (!t || !s) continue;
      auto c2 = rationalize(poly[2], d);
      auto c3 = rationalize(poly[3], d);
      auto c4 = rationalize(poly[4], d);
      if (!c2 || !c3 || !c4) continue;
      if (*c4 != *t - 3 || *c3 != *s - *t + 3 || *c2 != *t * *t - *t - 2 * *s - 1) continue;
      candidates.push_back({*s, *t});
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (!candidates.empty()) {
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      int best_rank = -1;
      std::vector<ParamPoint> best;
      for (const ParamPoint& st : candidates) {
        if (!family_separable(FamilyId::D5, st)) continue;
        int rank;
        try {
          rank = d5_group_rank(st);
        } catch (const GalError&) {
          continue;
        }
        if (rank > best_rank) {
          best_rank = rank;
          best.clear();
        }
        if (rank == best_rank) best.push_back(st);
      }
      if (!best.empty()) {
        std::sort(best.begin(), best.end(), [](const ParamPoint& x, const ParamPoint& y) {
          return witness_tuple_less(x, y);
        });
        return {best.front(), Certification::Numeric};
      }
    }
  }
  fail(Errc::NotInD5Class, "no root ordering produced a rational parameter point");
}

BrumerConversion to_brumer(FamilyId fam, const ParamPoint& a, int digits) {
  switch (fam) {
    case FamilyId::Lehmer: {
      if (a.size() != 1) fail(Errc::BadInput, "expected one parameter");
      auto [s, t] = lehmer_brumer_params(a[0]);
      ParamPoint st = {s, t};
      family_poly(FamilyId::D5, st);  // separability check
      return {st, Certification::Exact};
    }
    case FamilyId::D5:
      family_poly(FamilyId::D5, a);
      return {a, Certification::Exact};
    case FamilyId::HTC5:
      return to_brumer_quintic(family_poly(FamilyId::HTC5, a), digits);
    default:
      fail(Errc::BadInput, "no conversion from this family");
  }
}

std::optional<Rat> c3_as_s3_param(const Rat& m) {
  QPoly f = family_poly(FamilyId::C3, {m});
  QPoly dep = f.compose_linear(Rat(1), m / 3);  // kills the quadratic term
  Rat p = dep.coeff(1), q = dep.coeff(0);
  if (sgn(p) == 0 || sgn(q) == 0) return std::nullopt;
  return p * p * p / (q * q);
}

}  // namespace gal
