#include "gal/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "gal/error.hpp"

namespace gal {

void QPoly::normalize() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

QPoly QPoly::monomial(int k, const Rat& c) {
  if (k < 0) fail(Errc::BadInput, "monomial with negative degree");
  std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
  v.back() = c;
  return QPoly(std::move(v));
}

const Rat& QPoly::coeff(int i) const {
  static const Rat kZero(0);
  if (i < 0 || static_cast<size_t>(i) >= c_.size()) return kZero;
  return c_[static_cast<size_t>(i)];
}

const Rat& QPoly::lc() const {
  if (c_.empty()) fail(Errc::BadInput, "leading coefficient of zero polynomial");
  return c_.back();
}

QPoly QPoly::operator-() const {
  QPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(v));
}

QPoly QPoly::operator*(const Rat& s) const {
  if (sgn(s) == 0) return QPoly();
  QPoly r(*this);
  for (auto& c : r.c_) c *= s;
  return r;
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& d) const {
  if (d.is_zero()) fail(Errc::DivisionByZeroPoly, "divrem by zero polynomial");
  if (degree() < d.degree()) return {QPoly(), *this};
  std::vector<Rat> rem = c_;
  std::vector<Rat> quot(static_cast<size_t>(degree() - d.degree()) + 1, Rat(0));
  const Rat& dl = d.lc();
  for (int i = degree(); i >= d.degree(); --i) {
    Rat q = rem[static_cast<size_t>(i)] / dl;
    if (sgn(q) == 0) continue;
    quot[static_cast<size_t>(i - d.degree())] = q;
    for (int j = 0; j <= d.degree(); ++j)
      rem[static_cast<size_t>(i - d.degree() + j)] -= q * d.c_[static_cast<size_t>(j)];
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return QPoly();
  std::vector<Rat> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return QPoly(std::move(v));
}

QPoly QPoly::monic() const {
  if (is_zero()) fail(Errc::BadInput, "monic of zero polynomial");
  return *this * (Rat(1) / lc());
}

QPoly QPoly::mul_xk(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rat> v(static_cast<size_t>(k), Rat(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return QPoly(std::move(v));
}

Rat QPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

QPoly QPoly::compose_linear(const Rat& alpha, const Rat& beta) const {
  QPoly lin({beta, alpha});
  QPoly acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + QPoly(c_[i]);
  return acc;
}

QPoly QPoly::reversed() const {
  std::vector<Rat> v(c_.rbegin(), c_.rend());
  return QPoly(std::move(v));
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << rat_to_string(c_[i]);
  }
  return os.str();
}

QPoly QPoly::from_string(std::string_view s) {
  std::vector<Rat> v;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string_view tok = s.substr(pos, comma == std::string_view::npos ? s.size() - pos : comma - pos);
    v.push_back(rat_from_string(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return QPoly(std::move(v));
}

std::string QPoly::pretty(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[static_cast<size_t>(i)];
    if (sgn(c) == 0) continue;
    Rat a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    bool unit = (a == 1);
    if (i == 0) {
      os << rat_to_string(a);
    } else {
      if (!unit) os << rat_to_string(a) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// integer-polynomial layer

namespace zpoly {

void normalize(ZPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

int deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  normalize(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  normalize(r);
  return r;
}

Int content(const ZPoly& f) {
  Int g(0);
  for (const Int& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.empty()) return {};
  Int c = content(f);
  if (sgn(f.back()) < 0) c = -c;
  ZPoly r(f.size());
  for (size_t i = 0; i < f.size(); ++i) mpz_divexact(r[i].get_mpz_t(), f[i].get_mpz_t(), c.get_mpz_t());
  return r;
}

Int eval(const ZPoly& f, const Int& x) {
  Int acc(0);
  for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

Int max_abs_coeff(const ZPoly& f) {
  Int m(0);
  for (const Int& c : f) {
    Int a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

std::pair<ZPoly, Int> from_qpoly(const QPoly& p) {
  Int den(1);
  for (const Rat& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly f(p.coeffs().size());
  for (size_t i = 0; i < f.size(); ++i) {
    Rat scaled = p.coeffs()[i] * Rat(den);
    f[i] = scaled.get_num();
  }
  normalize(f);
  return {f, den};
}

QPoly to_qpoly(const ZPoly& f, const Int& den) {
  std::vector<Rat> v(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    v[i] = Rat(f[i], den);
    v[i].canonicalize();
  }
  return QPoly(std::move(v));
}

ZPoly prem(const ZPoly& a, const ZPoly& b) {
  int da = deg(a), db = deg(b);
  if (db < 0) fail(Errc::DivisionByZeroPoly, "prem by zero");
  if (da < db) return a;
  ZPoly r = a;
  const Int lb = b.back();
  int e = da - db + 1;
  while (!r.empty() && deg(r) >= db) {
    int dr = deg(r);
    Int top = r.back();
    for (Int& c : r) c *= lb;
    for (int j = 0; j <= db; ++j)
      r[static_cast<size_t>(dr - db + j)] -= top * b[static_cast<size_t>(j)];
    normalize(r);
    --e;
  }
  if (e > 0 && !r.empty()) {
    Int f = pow_int(lb, static_cast<unsigned long>(e));
    for (Int& c : r) c *= f;
  }
  return r;
}

}  // namespace zpoly

// ---------------------------------------------------------------------------

using zpoly::ZPoly;

QPoly poly_gcd(const QPoly& p, const QPoly& q) {
  if (p.is_zero() && q.is_zero()) fail(Errc::BadInput, "gcd(0, 0)");
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  ZPoly a = zpoly::primitive_part(zpoly::from_qpoly(p).first);
  ZPoly b = zpoly::primitive_part(zpoly::from_qpoly(q).first);
  if (zpoly::deg(a) < zpoly::deg(b)) std::swap(a, b);
  Int g(1), h(1);
  while (true) {
    int delta = zpoly::deg(a) - zpoly::deg(b);
    ZPoly r = zpoly::prem(a, b);
    if (r.empty()) break;
    if (zpoly::deg(r) == 0) return QPoly::one();
    a = std::move(b);
    b.assign(r.size(), Int(0));
    Int div = g * pow_int(h, static_cast<unsigned long>(delta));
    for (size_t i = 0; i < r.size(); ++i) mpz_divexact(b[i].get_mpz_t(), r[i].get_mpz_t(), div.get_mpz_t());
    g = a.back();
    if (delta > 0) {
      Int num = pow_int(g, static_cast<unsigned long>(delta));
      Int den = pow_int(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  return zpoly::to_qpoly(zpoly::primitive_part(b)).monic();
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
  if (p.is_zero()) fail(Errc::BadInput, "squarefree decomposition of zero");
  std::vector<std::pair<QPoly, int>> out;
  QPoly f = p.monic();
  if (f.degree() == 0) return out;
  QPoly fd = f.derivative();
  QPoly a0 = poly_gcd(f, fd);
  if (a0.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  QPoly b = f / a0;
  QPoly c = fd / a0;
  QPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    QPoly a = poly_gcd(b, d);  // gcd(b, 0) = monic(b)
    if (a.degree() > 0) out.emplace_back(a, i);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

QPoly squarefree_part(const QPoly& p) {
  QPoly r = QPoly::one();
  for (const auto& [part, mult] : squarefree_decomposition(p)) r = r * part;
  return r;
}

namespace {

// Subresultant chain resultant for primitive integer polynomials,
// deg a >= deg b >= 1.
Int resultant_prs(ZPoly a, ZPoly b) {
  Int g(1), h(1), s(1);
  while (true) {
    int da = zpoly::deg(a), db = zpoly::deg(b);
    int delta = da - db;
    if ((da & 1) && (db & 1)) s = -s;
    ZPoly r = zpoly::prem(a, b);
    a = std::move(b);
    if (r.empty()) return Int(0);  // common factor of positive degree
    Int div = g * pow_int(h, static_cast<unsigned long>(delta));
    b.assign(r.size(), Int(0));
    for (size_t i = 0; i < r.size(); ++i) mpz_divexact(b[i].get_mpz_t(), r[i].get_mpz_t(), div.get_mpz_t());
    g = a.back();
    if (delta > 0) {
      Int num = pow_int(g, static_cast<unsigned long>(delta));
      Int den = pow_int(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (zpoly::deg(b) == 0) {
      int da2 = zpoly::deg(a);
      Int num = pow_int(b.back(), static_cast<unsigned long>(da2));
      Int den = pow_int(h, static_cast<unsigned long>(da2 - 1));
      Int res;
      mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return s * res;
    }
  }
}

}  // namespace

Rat resultant(const QPoly& p, const QPoly& q) {
  if (p.is_zero() || q.is_zero()) return Rat(0);
  int dp = p.degree(), dq = q.degree();
  if (dp == 0) return pow_rat(p.lc(), dq);
  if (dq == 0) return pow_rat(q.lc(), dp);

  auto [pa, pda] = zpoly::from_qpoly(p);
  auto [pb, pdb] = zpoly::from_qpoly(q);
  // Res scales by lc factors: Res(p, q) = Res(pa, pb) / (pda^dq * pdb^dp)
  Int ca = zpoly::content(pa), cb = zpoly::content(pb);
  if (sgn(pa.back()) < 0) ca = -ca;
  if (sgn(pb.back()) < 0) cb = -cb;
  ZPoly a = zpoly::primitive_part(pa), b = zpoly::primitive_part(pb);

  Int sign(1);
  if (zpoly::deg(a) < zpoly::deg(b)) {
    std::swap(a, b);
    if ((dp & 1) && (dq & 1)) sign = -sign;
  }
  Int core = resultant_prs(a, b);
  Rat res = Rat(sign * core) * Rat(pow_int(ca, static_cast<unsigned long>(dq)) *
                                   pow_int(cb, static_cast<unsigned long>(dp)));
  Rat scale(pow_int(pda, static_cast<unsigned long>(dq)) * pow_int(pdb, static_cast<unsigned long>(dp)));
  res /= scale;
  return res;
}

Rat discriminant(const QPoly& p) {
  int n = p.degree();
  if (n < 2) fail(Errc::BadInput, "discriminant needs degree >= 2");
  Rat res = resultant(p, p.derivative());
  Rat d = res / p.lc();
  long sw = static_cast<long>(n) * (n - 1) / 2;
  if (sw & 1) d = -d;
  return d;
}

std::vector<std::pair<Rat, int>> rational_roots(const QPoly& p) {
  if (p.is_zero()) fail(Errc::BadInput, "rational_roots of zero polynomial");
  std::vector<std::pair<Rat, int>> out;

  // split off roots at zero
  size_t val = 0;
  while (val < p.coeffs().size() && sgn(p.coeffs()[val]) == 0) ++val;
  QPoly f = p;
  if (val > 0) {
    out.emplace_back(Rat(0), static_cast<int>(val));
    std::vector<Rat> v(p.coeffs().begin() + static_cast<long>(val), p.coeffs().end());
    f = QPoly(std::move(v));
  }
  if (f.degree() <= 0) return out;

  ZPoly z = zpoly::primitive_part(zpoly::from_qpoly(f).first);
  if (zpoly::deg(z) == 1) {
    Rat r(-z[0], z[1]);
    r.canonicalize();
    out.emplace_back(r, 1);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Int> num_div = divisors(z.front());
  std::vector<Int> den_div = divisors(z.back());
  std::vector<Rat> cands;
  for (const Int& u : num_div) {
    for (const Int& v : den_div) {
      Int g;
      mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
      if (g != 1) continue;
      Rat r(u, v);
      r.canonicalize();
      cands.push_back(r);
      cands.push_back(-r);
    }
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  QPoly cur = zpoly::to_qpoly(z);
  for (const Rat& r : cands) {
    if (cur.degree() == 0) break;
    if (sgn(cur.eval(r)) != 0) continue;
    int mult = 0;
    QPoly lin({-r, Rat(1)});
    while (true) {
      auto [q, rem] = cur.divrem(lin);
      if (!rem.is_zero()) break;
      cur = q;
      ++mult;
      if (cur.degree() == 0) break;
    }
    out.emplace_back(r, mult);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_rational_root(const QPoly& p) { return !rational_roots(p).empty(); }

}  // namespace gal
