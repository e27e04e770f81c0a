#include "gal/numres.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "gal/error.hpp"
#include "gal/formulas.hpp"

namespace gal {

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(digits * 3.3219280948873626 + 32);
}

namespace {

int clamp_digits(int digits) { return std::max(kMinDigits, std::min(kMaxDigits, digits)); }

struct RatCtx {
  using Elem = Rat;
  Rat of(long v) const { return Rat(v); }
};

}  // namespace

// ---------------------------------------------------------------------------
// BigFloat / CF

BigFloat BigFloat::from_long(long x, mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_set_si(r.v_, x, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_rat(const Rat& x, mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow10(long e, mpfr_prec_t bits) {
  BigFloat r(bits);
  if (e >= 0) {
    mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(e), MPFR_RNDN);
  } else {
    mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(-e), MPFR_RNDN);
    mpfr_ui_div(r.v_, 1, r.v_, MPFR_RNDN);
  }
  return r;
}

BigFloat BigFloat::pi(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.prec(), b.prec()));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.prec(), b.prec()));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.prec(), b.prec()));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.prec(), b.prec()));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(prec());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  BigFloat r(prec());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

Rat BigFloat::to_rat_exact() const {
  if (is_zero()) return Rat(0);
  Int m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  Rat q(m);
  if (e >= 0) {
    mpz_mul_2exp(q.get_num().get_mpz_t(), q.get_num().get_mpz_t(),
                 static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(q.get_den().get_mpz_t(), q.get_den().get_mpz_t(),
                 static_cast<mp_bitcnt_t>(-e));
  }
  q.canonicalize();
  return q;
}

std::string BigFloat::str(size_t ndigits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", static_cast<int>(ndigits), v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

CF CF::operator/(const CF& o) const {
  BigFloat d = o.re * o.re + o.im * o.im;
  return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

BigFloat CF::abs() const {
  BigFloat r(std::max(re.prec(), im.prec()));
  mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
  return r;
}

std::string CF::str(size_t nd) const { return re.str(nd) + (im.sign() < 0 ? " - " : " + ") + im.abs().str(nd) + "i"; }

// ---------------------------------------------------------------------------
// root finding

namespace {

// one fixed-precision attempt; empty result means "did not converge"
std::vector<CF> roots_attempt(const QPoly& p, int work_digits, int target_digits) {
  const int n = p.degree();
  const mpfr_prec_t bits = digits_to_bits(work_digits);

  std::vector<CF> c(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    Rat ci = p.coeff(i) / p.lc();
    c[static_cast<size_t>(i)] = CF::from_rat(ci, bits);
  }

  BigFloat norm1(bits);
  for (const CF& ci : c) norm1 = norm1 + ci.abs();
  BigFloat target = BigFloat::pow10(10 - target_digits, bits) * norm1;

  BigFloat radius = BigFloat::from_long(1, bits);
  for (int i = 0; i < n; ++i) {
    BigFloat a = c[static_cast<size_t>(i)].abs();
    if (radius < a) radius = a;
  }
  radius = radius + BigFloat::from_long(1, bits);

  std::vector<CF> z(static_cast<size_t>(n));
  BigFloat two_pi = BigFloat::from_long(2, bits) * BigFloat::pi(bits);
  for (int k = 0; k < n; ++k) {
    BigFloat theta = two_pi * BigFloat::from_long(k, bits) / BigFloat::from_long(n, bits) +
                     BigFloat::from_rat(Rat(2, 5), bits);
    BigFloat sn(bits), cs(bits);
    mpfr_sin_cos(sn.raw(), cs.raw(), theta.raw(), MPFR_RNDN);
    z[static_cast<size_t>(k)] = CF{radius * cs, radius * sn};
  }

  auto eval_both = [&](const CF& x, CF& pv, CF& pd) {
    pv = c.back();
    pd = CF::of(0, bits);
    for (int i = n - 1; i >= 0; --i) {
      pd = pd * x + pv;
      pv = pv * x + c[static_cast<size_t>(i)];
    }
  };

  const int maxit = 120 + 40 * n;
  for (int iter = 0; iter < maxit; ++iter) {
    bool done = true;
    for (int i = 0; i < n; ++i) {
      CF pv, pd;
      eval_both(z[static_cast<size_t>(i)], pv, pd);
      if (target < pv.abs()) done = false;
      if (pd.abs().is_zero()) {
        // stationary start; nudge deterministically
        z[static_cast<size_t>(i)].re = z[static_cast<size_t>(i)].re +
                                       radius * BigFloat::pow10(-3 - iter, bits);
        continue;
      }
      CF w = pv / pd;
      CF s = CF::of(0, bits);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        CF diff = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
        s = s + CF::of(1, bits) / diff;
      }
      CF den = CF::of(1, bits) - w * s;
      CF delta = den.abs().is_zero() ? w : w / den;
      z[static_cast<size_t>(i)] = z[static_cast<size_t>(i)] - delta;
    }
    if (done) {
      std::sort(z.begin(), z.end(), [](const CF& a, const CF& b) {
        int cr = a.re.cmp(b.re);
        if (cr != 0) return cr < 0;
        return a.im.cmp(b.im) < 0;
      });
      return z;
    }
  }
  return {};
}

}  // namespace

std::vector<CF> find_roots(const QPoly& p, int digits) {
  if (p.degree() < 1) fail(Errc::BadInput, "find_roots needs degree >= 1");
  int d0 = clamp_digits(digits);
  for (int d = d0; d <= kMaxDigits; d *= 2) {
    auto z = roots_attempt(p, d, d0);
    if (!z.empty()) return z;
  }
  fail(Errc::PrecisionExhausted, "root finding did not converge by " +
                                     std::to_string(kMaxDigits) + " digits");
}

// ---------------------------------------------------------------------------
// Vandermonde solve

std::vector<CF> tschirnhausen_coefficients(const std::vector<CF>& alpha,
                                           const std::vector<CF>& beta, int digits) {
  const size_t n = alpha.size();
  if (n == 0 || beta.size() != n) fail(Errc::BadInput, "Vandermonde solve needs |alpha| = |beta| > 0");
  mpfr_prec_t bits = 64;
  for (const CF& a : alpha) bits = std::max(bits, a.re.prec());
  BigFloat tol = BigFloat::pow10(-digits / 2, bits);

  std::vector<std::vector<CF>> m(n, std::vector<CF>(n + 1, CF::of(0, bits)));
  for (size_t i = 0; i < n; ++i) {
    CF pw = CF::of(1, bits);
    for (size_t j = 0; j < n; ++j) {
      m[i][j] = pw;
      pw = pw * alpha[i];
    }
    m[i][n] = beta[i];
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (m[piv][col].abs() < m[r][col].abs()) piv = r;
    if (m[piv][col].abs().is_zero()) fail(Errc::IllConditioned, "singular Vandermonde system");
    std::swap(m[piv], m[col]);
    for (size_t r = col + 1; r < n; ++r) {
      CF f = m[r][col] / m[col][col];
      for (size_t c2 = col; c2 <= n; ++c2) m[r][c2] = m[r][c2] - f * m[col][c2];
    }
  }
  std::vector<CF> u(n, CF::of(0, bits));
  for (size_t i = n; i-- > 0;) {
    CF acc = m[i][n];
    for (size_t j = i + 1; j < n; ++j) acc = acc - m[i][j] * u[j];
    u[i] = acc / m[i][i];
  }

  BigFloat scale = BigFloat::from_long(1, bits);
  for (const CF& b : beta)
    if (scale < b.abs()) scale = b.abs();
  for (size_t i = 0; i < n; ++i) {
    CF acc = CF::of(0, bits);
    CF pw = CF::of(1, bits);
    for (size_t j = 0; j < n; ++j) {
      acc = acc + u[j] * pw;
      pw = pw * alpha[i];
    }
    BigFloat resid = (acc - beta[i]).abs();
    if (tol * scale < resid)
      fail(Errc::IllConditioned, "Vandermonde reconstruction residual too large");
  }
  return u;
}

// ---------------------------------------------------------------------------
// cross-ratio configurations

std::vector<std::pair<CF, CF>> enumerate_configs(const std::vector<CF>& roots, int digits) {
  if (roots.size() != 5) fail(Errc::BadInput, "config enumeration needs 5 roots");
  mpfr_prec_t bits = roots[0].re.prec();
  BigFloat tol = BigFloat::pow10(-digits / 2, bits);
  CF one = CF::of(1, bits);

  std::vector<std::pair<CF, CF>> out;
  for (size_t i = 0; i < 5; ++i) {
    for (size_t j = 0; j < 5; ++j) {
      if (i == j) continue;
      const CF& x = roots[i];
      const CF& y = roots[j];
      if (x.abs() < tol || y.abs() < tol) continue;
      std::array<CF, 3> rest = {(one - y) / x, (x + y - one) / (x * y), (one - x) / y};
      bool used[5] = {false, false, false, false, false};
      used[i] = used[j] = true;
      bool ok = true;
      for (const CF& e : rest) {
        int best = -1;
        BigFloat bestd(bits);
        for (int k = 0; k < 5; ++k) {
          if (used[k]) continue;
          BigFloat d2 = (e - roots[static_cast<size_t>(k)]).abs();
          if (best < 0 || d2 < bestd) {
            best = k;
            bestd = d2;
          }
        }
        if (best < 0 || tol < bestd) {
          ok = false;
          break;
        }
        used[best] = true;
      }
      if (ok) out.emplace_back(x, y);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// numeric resolvents

namespace {

QPoly specialized_poly(FamilyId fam, const ParamPoint& a) {
  RatCtx ctx;
  switch (fam) {
    case FamilyId::S3: return QPoly(formulas::s3_poly(ctx, a.at(0)));
    case FamilyId::D5: return QPoly(formulas::d5_poly(ctx, a.at(0), a.at(1)));
    default: fail(Errc::BadInput, "numeric resolvent supports the cubic and quintic families");
  }
}

std::vector<CF> product_from_values(const std::vector<CF>& vals, mpfr_prec_t bits) {
  std::vector<CF> poly = {CF::of(1, bits)};
  for (const CF& v : vals) {
    std::vector<CF> next(poly.size() + 1, CF::of(0, bits));
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = next[i + 1] + poly[i];
      next[i] = next[i] - poly[i] * v;
    }
    poly = std::move(next);
  }
  return poly;
}

NumericPoly resolvent_attempt(FamilyId fam, const ParamPoint& a, const ParamPoint& b,
                              ResolventKind kind, int digits, int fix_b_config) {
  mpfr_prec_t bits = digits_to_bits(digits);
  QPoly fa = specialized_poly(fam, a);
  QPoly fb = specialized_poly(fam, b);
  if (sgn(discriminant(fa)) == 0 || sgn(discriminant(fb)) == 0)
    fail(Errc::NonSeparable, "numeric resolvent of a non-separable specialization");

  if (kind == ResolventKind::S3Theta) {
    if (a.at(0) == b.at(0)) fail(Errc::EqualParams, "equal parameters");
    std::vector<CF> alpha = find_roots(fa, digits);
    std::vector<CF> beta0 = find_roots(fb, digits);
    BigFloat tiny = BigFloat::pow10(-digits / 2, bits);
    std::vector<CF> thetas;
    std::array<int, 3> perm = {0, 1, 2};
    do {
      std::vector<CF> beta = {beta0[static_cast<size_t>(perm[0])],
                              beta0[static_cast<size_t>(perm[1])],
                              beta0[static_cast<size_t>(perm[2])]};
      std::vector<CF> u = tschirnhausen_coefficients(alpha, beta, digits);
      if (u[2].abs() < tiny)
        fail(Errc::IllConditioned, "degenerate transformation (u2 ~ 0)");
      thetas.push_back(CF::of(3, bits) * u[1] / u[2]);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<CF> poly = product_from_values(thetas, bits);
    CF lead = CF::from_rat(a.at(0) - b.at(0), bits);
    for (CF& c : poly) c = c * lead;
    return {std::move(poly), digits};
  }

  std::vector<CF> ra = find_roots(fa, digits);
  std::vector<CF> rb = find_roots(fb, digits);
  auto ca = enumerate_configs(ra, digits);
  auto cb = enumerate_configs(rb, digits);
  if (ca.size() != 10 || cb.size() != 10)
    fail(Errc::ConfigEnumerationFailed,
         "expected 10 valid configurations, found " + std::to_string(ca.size()) + " and " +
             std::to_string(cb.size()));
  CF one = CF::of(1, bits);
  size_t anchor = static_cast<size_t>(fix_b_config) % cb.size();
  const CF& x2 = cb[anchor].first;
  const CF& y2 = cb[anchor].second;
  std::vector<CF> pvals;
  for (auto& [x0, y0] : ca) {
    CF x = x0, y = y0;
    if (kind == ResolventKind::D5RhoP) {
      CF xr = x / (x - one);
      CF yr = (y - one) / (x + y - one);
      x = xr;
      y = yr;
    }
    CF p = x * x2 + y * y2 + ((y - one) * (y2 - one)) / (x * x2) +
           ((x + y - one) * (x2 + y2 - one)) / (x * x2 * y * y2) +
           ((x - one) * (x2 - one)) / (y * y2);
    pvals.push_back(p);
  }
  return {product_from_values(pvals, bits), digits};
}

}  // namespace

NumericPoly numeric_resolvent(FamilyId fam, const ParamPoint& a, const ParamPoint& b,
                              ResolventKind kind, int digits, int fix_b_config) {
  int d0 = clamp_digits(digits);
  const GalError* last = nullptr;
  GalError saved(Errc::PrecisionExhausted, "");
  for (int d = d0; d <= kMaxDigits; d *= 2) {
    try {
      return resolvent_attempt(fam, a, b, kind, d, fix_b_config);
    } catch (const GalError& e) {
      if (e.code() != Errc::IllConditioned && e.code() != Errc::ConfigEnumerationFailed &&
          e.code() != Errc::PrecisionExhausted)
        throw;
      saved = e;
      last = &saved;
    }
  }
  if (last && last->code() == Errc::ConfigEnumerationFailed) throw saved;
  fail(Errc::PrecisionExhausted, "numeric resolvent did not stabilize");
}

// ---------------------------------------------------------------------------
// rationalization

std::optional<Rat> rationalize(const BigFloat& x, int digits) {
  if (x.is_zero()) return Rat(0);
  Rat exact = x.to_rat_exact();
  Rat tol(Int(1), pow_int(Int(10), static_cast<unsigned long>(digits / 2)));
  Int qmax = pow_int(Int(10), static_cast<unsigned long>(digits / 4));

  Int h0(1), k0(0);  // convergent p_{-1}/q_{-1}
  Int h1, k1(1);     // current convergent
  Rat rest = exact;
  mpz_fdiv_q(h1.get_mpz_t(), rest.get_num().get_mpz_t(), rest.get_den().get_mpz_t());
  rest -= Rat(h1);

  while (true) {
    Rat conv(h1, k1);
    conv.canonicalize();
    Rat err = abs(exact - conv);
    if (err < tol) {
      if (k1 >= qmax) return std::nullopt;
      if (!(err * Rat(k1 * k1) < tol)) return std::nullopt;  // generic convergent, not a hit
      return conv;
    }
    if (sgn(rest) == 0) return std::nullopt;  // exhausted exactly without meeting tol
    if (k1 > qmax) return std::nullopt;
    rest = Rat(1) / rest;
    Int a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num().get_mpz_t(), rest.get_den().get_mpz_t());
    rest -= Rat(a);
    Int h2 = a * h1 + h0;
    Int k2 = a * k1 + k0;
    h0 = h1;
    k0 = k1;
    h1 = h2;
    k1 = k2;
  }
}

std::optional<Rat> rationalize(const CF& x, int digits) {
  BigFloat tol = BigFloat::pow10(-digits / 2, x.re.prec());
  BigFloat scale = x.re.abs();
  BigFloat one = BigFloat::from_long(1, x.re.prec());
  if (scale < one) scale = one;
  if (tol * scale < x.im.abs()) return std::nullopt;
  return rationalize(x.re, digits);
}

std::optional<QPoly> rationalize_poly(const NumericPoly& np) {
  std::vector<Rat> c(np.coeffs.size());
  for (size_t i = 0; i < c.size(); ++i) {
    auto r = rationalize(np.coeffs[i], np.digits);
    if (!r) return std::nullopt;
    c[i] = *r;
  }
  return QPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// exact reconstruction of the second-resolvent parameter transform

namespace {

struct RhoSample {
  Rat s, t, s2, t2;
};

std::optional<std::pair<Rat, Rat>> orbit_coeffs(const Rat& x, const Rat& y) {
  if (sgn(x) == 0 || sgn(y) == 0) return std::nullopt;
  std::array<Rat, 5> orb = {x, y, (Rat(1) - y) / x, (x + y - Rat(1)) / (x * y),
                            (Rat(1) - x) / y};
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = i + 1; j < 5; ++j)
      if (orb[i] == orb[j]) return std::nullopt;
  QPoly f = QPoly::one();
  for (const Rat& o : orb) f = f * QPoly({-o, Rat(1)});
  Rat t = f.coeff(0), s = f.coeff(1);
  // structural self-check of the orbit expansion
  if (f.coeff(4) != t - 3 || f.coeff(3) != s - t + 3 ||
      f.coeff(2) != t * t - t - 2 * s - 1)
    fail(Errc::VerificationFailed, "orbit expansion violated the family shape");
  return std::pair{s, t};
}

std::optional<RhoSample> rho_sample(const Rat& x, const Rat& y) {
  if (x == 1 || sgn(x + y - Rat(1)) == 0) return std::nullopt;
  auto base = orbit_coeffs(x, y);
  if (!base) return std::nullopt;
  Rat xr = x / (x - Rat(1));
  Rat yr = (y - Rat(1)) / (x + y - Rat(1));
  auto img = orbit_coeffs(xr, yr);
  if (!img) return std::nullopt;
  return RhoSample{base->first, base->second, img->first, img->second};
}

// RREF nullspace basis vectors of a k x u rational matrix
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> m, size_t u) {
  std::vector<int> pivot_of_col(u, -1);
  size_t row = 0;
  for (size_t col = 0; col < u && row < m.size(); ++col) {
    size_t piv = row;
    while (piv < m.size() && sgn(m[piv][col]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    Rat inv = Rat(1) / m[row][col];
    for (size_t c = col; c < u; ++c) m[row][c] *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      Rat f = m[r][col];
      for (size_t c = col; c < u; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_of_col[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<std::vector<Rat>> basis;
  for (size_t fc = 0; fc < u; ++fc) {
    if (pivot_of_col[fc] >= 0) continue;
    std::vector<Rat> v(u, Rat(0));
    v[fc] = 1;
    for (size_t c = 0; c < u; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -m[static_cast<size_t>(pivot_of_col[c])][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::pair<int, int>> monomials_upto(int d) {
  std::vector<std::pair<int, int>> m;
  for (int tot = 0; tot <= d; ++tot)
    for (int i = tot; i >= 0; --i) m.emplace_back(i, tot - i);
  return m;
}

std::optional<BiRational> fit_rational(const std::vector<RhoSample>& pool, bool want_s, int d) {
  auto monos = monomials_upto(d);
  size_t m = monos.size();
  size_t need = 2 * m + 8;
  if (pool.size() < need + 16) return std::nullopt;

  std::vector<std::vector<Rat>> rows;
  for (size_t k = 0; k < need; ++k) {
    const RhoSample& smp = pool[k];
    Rat val = want_s ? smp.s2 : smp.t2;
    std::vector<Rat> row(2 * m);
    for (size_t j = 0; j < m; ++j) {
      Rat mono = pow_rat(smp.s, monos[j].first) * pow_rat(smp.t, monos[j].second);
      row[j] = mono;
      row[m + j] = -val * mono;
    }
    rows.push_back(std::move(row));
  }
  auto basis = nullspace(std::move(rows), 2 * m);
  for (const auto& v : basis) {
    BiPoly num, den;
    num.deg_s = num.deg_t = den.deg_s = den.deg_t = d;
    num.c.assign(static_cast<size_t>((d + 1) * (d + 1)), Rat(0));
    den.c.assign(static_cast<size_t>((d + 1) * (d + 1)), Rat(0));
    for (size_t j = 0; j < m; ++j) {
      size_t idx = static_cast<size_t>(monos[j].first * (d + 1) + monos[j].second);
      num.c[idx] = v[j];
      den.c[idx] = v[m + j];
    }
    if (den.is_zero()) continue;
    BiRational cand{num, den};
    bool ok = true;
    for (const RhoSample& smp : pool) {
      auto got = cand.eval(smp.s, smp.t);
      if (!got || *got != (want_s ? smp.s2 : smp.t2)) {
        ok = false;
        break;
      }
    }
    if (ok) return cand;
  }
  return std::nullopt;
}

}  // namespace

RhoCache derive_rho_map(int sample_budget, int degree_cap) {
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<RhoSample> pool;
  std::vector<std::pair<Rat, Rat>> seen;
  int draws = 0;
  while (static_cast<int>(pool.size()) < sample_budget && draws < 40 * sample_budget) {
    ++draws;
    long xn = static_cast<long>(rng() % 41) - 20;
    long xd = static_cast<long>(rng() % 11) + 1;
    long yn = static_cast<long>(rng() % 41) - 20;
    long yd = static_cast<long>(rng() % 11) + 1;
    if (xn == 0 || yn == 0) continue;
    Rat x(xn, xd), y(yn, yd);
    x.canonicalize();
    y.canonicalize();
    auto smp = rho_sample(x, y);
    if (!smp) continue;
    bool dup = false;
    for (const auto& [s, t] : seen)
      if (s == smp->s && t == smp->t) {
        dup = true;
        break;
      }
    if (dup) continue;
    seen.emplace_back(smp->s, smp->t);
    pool.push_back(*smp);
  }
  if (pool.size() < 60) fail(Errc::VerificationFailed, "not enough usable samples");

  std::optional<BiRational> rs, rt;
  for (int d = 1; d <= degree_cap && !rs; ++d) rs = fit_rational(pool, true, d);
  for (int d = 1; d <= degree_cap && !rt; ++d) rt = fit_rational(pool, false, d);
  if (!rs || !rt) fail(Errc::DegreeCapExceeded, "no rational map within the degree cap");

  RhoCache cache{*rs, *rt};
  cache.validate();
  return cache;
}

}  // namespace gal
