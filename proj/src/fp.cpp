#include "gal/fp.hpp"

#include <algorithm>

#include "gal/error.hpp"

namespace gal::fpx {

void normalize(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Fp& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  normalize(r);
  return r;
}

Poly sub(const Fp& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  normalize(r);
  return r;
}

Poly mul(const Fp& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  normalize(r);
  return r;
}

Poly scale(const Fp& F, const Poly& a, uint64_t c) {
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  normalize(r);
  return r;
}

Poly make_monic(const Fp& F, const Poly& a) {
  if (a.empty() || a.back() == 1) return a;
  return scale(F, a, F.inv(a.back()));
}

std::pair<Poly, Poly> divrem(const Fp& F, const Poly& a, const Poly& b) {
  if (b.empty()) fail(Errc::DivisionByZeroPoly, "mod-p divrem by zero");
  if (deg(a) < deg(b)) return {{}, a};
  Poly rem = a;
  Poly quot(a.size() - b.size() + 1, 0);
  uint64_t binv = F.inv(b.back());
  for (int i = deg(a); i >= deg(b); --i) {
    uint64_t q = F.mul(rem[static_cast<size_t>(i)], binv);
    if (q == 0) continue;
    quot[static_cast<size_t>(i - deg(b))] = q;
    for (int j = 0; j <= deg(b); ++j)
      rem[static_cast<size_t>(i - deg(b) + j)] =
          F.sub(rem[static_cast<size_t>(i - deg(b) + j)], F.mul(q, b[static_cast<size_t>(j)]));
  }
  normalize(rem);
  normalize(quot);
  return {quot, rem};
}

Poly gcd(const Fp& F, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = divrem(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(F, a);
}

void xgcd(const Fp& F, const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b;
  Poly s0 = {1}, s1 = {};
  Poly t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = divrem(F, r0, r1);
    Poly s2 = sub(F, s0, mul(F, q, s1));
    Poly t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  uint64_t lead = r0.empty() ? 1 : r0.back();
  uint64_t linv = F.inv(lead);
  g = scale(F, r0, linv);
  s = scale(F, s0, linv);
  t = scale(F, t0, linv);
}

Poly powmod(const Fp& F, Poly base, const Int& e, const Poly& mod) {
  Poly result{1};
  base = divrem(F, base, mod).second;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return result;
  for (size_t i = bits; i-- > 0;) {
    result = divrem(F, mul(F, result, result), mod).second;
    if (mpz_tstbit(e.get_mpz_t(), i))
      result = divrem(F, mul(F, result, base), mod).second;
  }
  return result;
}

Poly derivative(const Fp& F, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], F.from_long(static_cast<long>(i)));
  normalize(r);
  return r;
}

uint64_t eval(const Fp& F, const Poly& a, uint64_t x) {
  uint64_t acc = 0;
  for (size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a[i]);
  return acc;
}

Poly from_zpoly(const Fp& F, const zpoly::ZPoly& f) {
  Poly r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = F.from_int(f[i]);
  normalize(r);
  return r;
}

std::optional<Poly> from_qpoly(const Fp& F, const QPoly& f) {
  Poly r(f.coeffs().size());
  for (size_t i = 0; i < r.size(); ++i) {
    auto c = F.from_rat(f.coeffs()[i]);
    if (!c) return std::nullopt;
    r[i] = *c;
  }
  normalize(r);
  return r;
}

bool is_squarefree(const Fp& F, const Poly& f) {
  if (deg(f) <= 0) return true;
  return deg(gcd(F, f, derivative(F, f))) == 0;
}

bool has_root(const Fp& F, const Poly& f) {
  if (f.empty()) return true;
  for (uint64_t x = 0; x < F.p; ++x)
    if (eval(F, f, x) == 0) return true;
  return false;
}

}  // namespace gal::fpx
