#include "gal/zfactor.hpp"

#include <algorithm>
#include <bitset>
#include <cassert>
#include <map>
#include <mutex>
#include <random>
#include <shared_mutex>

#include "gal/error.hpp"
#include "gal/fp.hpp"

namespace gal {

using zpoly::ZPoly;

QPoly Factorization::reassemble() const {
  QPoly r(unit);
  for (const auto& [f, m] : factors)
    for (int i = 0; i < m; ++i) r = r * f;
  return r;
}

bool Factorization::is_squarefree() const {
  for (const auto& [f, m] : factors)
    if (m > 1) return false;
  return true;
}

std::vector<int> Factorization::degree_pattern() const {
  std::vector<int> out;
  for (const auto& [f, m] : factors)
    for (int i = 0; i < m; ++i) out.push_back(f.degree());
  std::sort(out.rbegin(), out.rend());
  return out;
}

namespace {

// ---- arithmetic on integer polynomials mod m (coefficients in [0, m)) ----

ZPoly mreduce(const ZPoly& f, const Int& m) {
  ZPoly r(f.size());
  for (size_t i = 0; i < f.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
  zpoly::normalize(r);
  return r;
}

ZPoly madd(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return mreduce(r, m);
}

ZPoly msub(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return mreduce(r, m);
}

ZPoly mmul(const ZPoly& a, const ZPoly& b, const Int& m) {
  return mreduce(zpoly::mul(a, b), m);
}

// division by a monic divisor, coefficients mod m
std::pair<ZPoly, ZPoly> mdivrem_monic(const ZPoly& a, const ZPoly& b, const Int& m) {
  assert(!b.empty() && b.back() == 1);
  if (zpoly::deg(a) < zpoly::deg(b)) return {{}, a};
  ZPoly rem = a;
  ZPoly quot(a.size() - b.size() + 1, Int(0));
  for (int i = zpoly::deg(a); i >= zpoly::deg(b); --i) {
    Int q = rem[static_cast<size_t>(i)];
    if (sgn(q) == 0) continue;
    quot[static_cast<size_t>(i - zpoly::deg(b))] = q;
    for (int j = 0; j <= zpoly::deg(b); ++j) {
      size_t k = static_cast<size_t>(i - zpoly::deg(b) + j);
      rem[k] -= q * b[static_cast<size_t>(j)];
      mpz_fdiv_r(rem[k].get_mpz_t(), rem[k].get_mpz_t(), m.get_mpz_t());
    }
  }
  zpoly::normalize(rem);
  zpoly::normalize(quot);
  return {quot, rem};
}

ZPoly sym_rep(const ZPoly& f, const Int& P) {
  Int half = P / 2;
  ZPoly r = f;
  for (Int& c : r)
    if (c > half) c -= P;
  zpoly::normalize(r);
  return r;
}

ZPoly lift_fp(const fpx::Poly& f) {
  ZPoly r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = Int(static_cast<unsigned long>(f[i]));
  return r;
}

// ---- factorization mod p (distinct-degree + equal-degree splitting) ----

std::vector<std::pair<fpx::Poly, int>> ddf(const Fp& F, fpx::Poly v) {
  std::vector<std::pair<fpx::Poly, int>> out;
  v = fpx::make_monic(F, v);
  fpx::Poly X = {0, 1};
  if (fpx::deg(v) <= 1) {
    if (fpx::deg(v) == 1) out.emplace_back(v, 1);
    return out;
  }
  fpx::Poly h = X;
  for (int d = 1; 2 * d <= fpx::deg(v); ++d) {
    h = fpx::powmod(F, h, Int(static_cast<unsigned long>(F.p)), v);
    fpx::Poly g = fpx::gcd(F, fpx::sub(F, h, X), v);
    if (fpx::deg(g) > 0) {
      out.emplace_back(g, d);
      v = fpx::divrem(F, v, g).first;
      if (fpx::deg(v) == 0) break;
      h = fpx::divrem(F, h, v).second;
    }
  }
  if (fpx::deg(v) > 0) out.emplace_back(v, fpx::deg(v));
  return out;
}

void edf(const Fp& F, const fpx::Poly& g, int d, std::mt19937_64& rng,
         std::vector<fpx::Poly>& out) {
  if (fpx::deg(g) == d) {
    out.push_back(fpx::make_monic(F, g));
    return;
  }
  Int e = (pow_int(Int(static_cast<unsigned long>(F.p)), static_cast<unsigned long>(d)) - 1) / 2;
  while (true) {
    fpx::Poly r(static_cast<size_t>(fpx::deg(g)), 0);
    for (auto& c : r) c = rng() % F.p;
    fpx::normalize(r);
    if (fpx::deg(r) < 1) continue;
    fpx::Poly w = fpx::powmod(F, r, e, g);
    if (w.empty()) continue;
    w = fpx::sub(F, w, {1});
    fpx::Poly h = fpx::gcd(F, w, g);
    if (fpx::deg(h) > 0 && fpx::deg(h) < fpx::deg(g)) {
      edf(F, h, d, rng, out);
      edf(F, fpx::divrem(F, g, h).first, d, rng, out);
      return;
    }
  }
}

std::vector<fpx::Poly> factor_mod_p(const Fp& F, const fpx::Poly& f, std::mt19937_64& rng) {
  std::vector<fpx::Poly> out;
  for (const auto& [g, d] : ddf(F, f)) {
    if (fpx::deg(g) == d)
      out.push_back(fpx::make_monic(F, g));
    else
      edf(F, g, d, rng, out);
  }
  std::sort(out.begin(), out.end(), [](const fpx::Poly& a, const fpx::Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

// ---- quadratic Hensel lifting (monic everything) ----

struct LiftPair {
  ZPoly g, h;
};

LiftPair lift_pair(const ZPoly& f, const fpx::Poly& g0, const fpx::Poly& h0, const Fp& F,
                   const Int& P) {
  fpx::Poly gg, s0, t0;
  fpx::xgcd(F, g0, h0, gg, s0, t0);
  assert(fpx::deg(gg) == 0);
  Int m(static_cast<unsigned long>(F.p));
  ZPoly g = lift_fp(g0), h = lift_fp(h0), s = lift_fp(s0), t = lift_fp(t0);
  while (m < P) {
    Int m2 = m * m;
    ZPoly fr = mreduce(f, m2);
    ZPoly e = msub(fr, mmul(g, h, m2), m2);
    auto [q, r] = mdivrem_monic(mmul(s, e, m2), h, m2);
    g = madd(g, madd(mmul(t, e, m2), mmul(q, g, m2), m2), m2);
    h = madd(h, r, m2);
    ZPoly b = msub(madd(mmul(s, g, m2), mmul(t, h, m2), m2), ZPoly{Int(1)}, m2);
    auto [c, d] = mdivrem_monic(mmul(s, b, m2), h, m2);
    s = msub(s, d, m2);
    t = msub(t, madd(mmul(t, b, m2), mmul(c, g, m2), m2), m2);
    m = m2;
    assert(!g.empty() && g.back() == 1);
    assert(!h.empty() && h.back() == 1);
  }
  return {mreduce(g, P), mreduce(h, P)};
}

std::vector<ZPoly> hensel_lift_all(const ZPoly& f, const std::vector<fpx::Poly>& fs, size_t lo,
                                   size_t hi, const Fp& F, const Int& P) {
  if (hi - lo == 1) return {mreduce(f, P)};
  size_t mid = lo + (hi - lo) / 2;
  fpx::Poly g0 = {1}, h0 = {1};
  for (size_t i = lo; i < mid; ++i) g0 = fpx::mul(F, g0, fs[i]);
  for (size_t i = mid; i < hi; ++i) h0 = fpx::mul(F, h0, fs[i]);
  LiftPair gh = lift_pair(f, g0, h0, F, P);
  auto left = hensel_lift_all(gh.g, fs, lo, mid, F, P);
  auto right = hensel_lift_all(gh.h, fs, mid, hi, F, P);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

// ---- recombination ----

using DegMask = std::bitset<64>;

DegMask subset_sum_mask(const std::vector<int>& degs, int n) {
  DegMask m;
  m.set(0);
  for (int d : degs) m |= (m << d);
  DegMask full;
  for (int i = 0; i <= n; ++i) full.set(i);
  return m & full;
}

// exact division of monic integer polys; nullopt when it fails
std::optional<ZPoly> try_divide_monic(const ZPoly& f, const ZPoly& g) {
  if (zpoly::deg(f) < zpoly::deg(g)) return std::nullopt;
  ZPoly rem = f;
  ZPoly quot(f.size() - g.size() + 1, Int(0));
  for (int i = zpoly::deg(f); i >= zpoly::deg(g); --i) {
    Int q = rem[static_cast<size_t>(i)];
    if (sgn(q) != 0) {
      quot[static_cast<size_t>(i - zpoly::deg(g))] = q;
      for (int j = 0; j <= zpoly::deg(g); ++j)
        rem[static_cast<size_t>(i - zpoly::deg(g) + j)] -= q * g[static_cast<size_t>(j)];
    }
  }
  zpoly::normalize(rem);
  if (!rem.empty()) return std::nullopt;
  zpoly::normalize(quot);
  return quot;
}

std::vector<ZPoly> recombine(ZPoly f, std::vector<ZPoly> lifted, const Int& P,
                             const DegMask& allowed) {
  std::vector<ZPoly> out;
  std::vector<size_t> pool(lifted.size());
  for (size_t i = 0; i < pool.size(); ++i) pool[i] = i;

  size_t csize = 1;
  while (pool.size() >= 2 * csize) {
    bool found = false;
    std::vector<size_t> comb(csize);
    // enumerate index combinations of the current pool in lex order
    std::vector<size_t> sel(csize);
    for (size_t i = 0; i < csize; ++i) sel[i] = i;
    while (true) {
      int dsum = 0;
      for (size_t i = 0; i < csize; ++i) dsum += zpoly::deg(lifted[pool[sel[i]]]);
      int dleft = zpoly::deg(f) - dsum;
      if (allowed.test(static_cast<size_t>(dsum)) && dleft >= 0 &&
          allowed.test(static_cast<size_t>(dleft))) {
        // constant-term screen, then full trial division
        bool quick_ok = true;
        if (sgn(f.front()) != 0) {
          Int c0(1);
          for (size_t i = 0; i < csize; ++i) {
            c0 *= lifted[pool[sel[i]]].front();
            mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), P.get_mpz_t());
          }
          Int half = P / 2;
          if (c0 > half) c0 -= P;
          quick_ok = sgn(c0) != 0 && mpz_divisible_p(f.front().get_mpz_t(), c0.get_mpz_t());
        }
        if (quick_ok) {
          ZPoly g = {Int(1)};
          for (size_t i = 0; i < csize; ++i) g = mmul(g, lifted[pool[sel[i]]], P);
          g = sym_rep(g, P);
          if (auto quot = try_divide_monic(f, g)) {
            out.push_back(g);
            f = *quot;
            std::vector<size_t> np;
            for (size_t i = 0, k = 0; i < pool.size(); ++i) {
              if (k < csize && sel[k] == i) {
                ++k;
                continue;
              }
              np.push_back(pool[i]);
            }
            pool = std::move(np);
            found = true;
            break;
          }
        }
      }
      // next combination
      size_t i = csize;
      while (i > 0) {
        --i;
        if (sel[i] != i + pool.size() - csize) break;
        if (i == 0) {
          i = csize;
          break;
        }
      }
      if (i == csize) break;  // exhausted
      ++sel[i];
      for (size_t j = i + 1; j < csize; ++j) sel[j] = sel[j - 1] + 1;
    }
    if (!found) ++csize;
  }
  if (zpoly::deg(f) > 0) out.push_back(f);
  return out;
}

// ---- prime selection and driver ----

const std::vector<uint64_t>& factoring_primes() {
  static const std::vector<uint64_t> ps = [] {
    std::vector<uint64_t> out;
    for (uint64_t n = 3; n < 100000 && out.size() < 2000; n += 2) {
      bool prime = true;
      for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) {
          prime = false;
          break;
        }
      if (prime) out.push_back(n);
    }
    return out;
  }();
  return ps;
}

uint64_t coeff_hash(const ZPoly& f) {
  uint64_t h = 1469598103934665603ull;
  for (const Int& c : f) {
    std::string s = c.get_str();
    for (char ch : s) {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ull;
    }
    h ^= ',';
    h *= 1099511628211ull;
  }
  return h;
}

// monic squarefree integer polynomial -> monic irreducible integer factors
std::vector<ZPoly> zassenhaus_monic(const ZPoly& M, uint64_t seed) {
  int n = zpoly::deg(M);
  if (n <= 1) return {M};

  struct PrimeInfo {
    uint64_t p;
    std::vector<int> degs;  // irreducible degrees with multiplicity (from ddf)
  };
  std::vector<PrimeInfo> good;
  for (uint64_t p : factoring_primes()) {
    Fp F(p);
    fpx::Poly fm = fpx::from_zpoly(F, M);
    if (fpx::deg(fm) != n) continue;  // cannot happen for monic input
    if (!fpx::is_squarefree(F, fm)) continue;
    PrimeInfo info{p, {}};
    for (const auto& [g, d] : ddf(F, fm)) {
      int cnt = fpx::deg(g) / d;
      for (int i = 0; i < cnt; ++i) info.degs.push_back(d);
    }
    good.push_back(std::move(info));
    if (good.size() == 4) break;
  }
  if (good.empty()) fail(Errc::BadInput, "no suitable reduction prime found");

  DegMask allowed;
  allowed.set();
  for (const auto& info : good) allowed &= subset_sum_mask(info.degs, n);

  bool only_trivial = true;
  for (int d = 1; d < n; ++d)
    if (allowed.test(static_cast<size_t>(d))) only_trivial = false;
  if (only_trivial) return {M};

  size_t best = 0;
  for (size_t i = 1; i < good.size(); ++i)
    if (good[i].degs.size() < good[best].degs.size()) best = i;
  if (good[best].degs.size() == 1) return {M};

  Fp F(good[best].p);
  std::mt19937_64 rng(coeff_hash(M) ^ seed ^ (good[best].p * 0x9e3779b97f4a7c15ull));
  std::vector<fpx::Poly> fs = factor_mod_p(F, fpx::from_zpoly(F, M), rng);
  if (fs.size() == 1) return {M};

  // Mignotte-style bound for coefficients of any monic factor
  Int maxc = zpoly::max_abs_coeff(M);
  Int bound = (Int(static_cast<long>(n)) + 1) * pow_int(Int(2), static_cast<unsigned long>(2 * n)) * maxc;
  Int P(static_cast<unsigned long>(F.p));
  while (P <= 2 * bound) P *= P;

  std::vector<ZPoly> lifted = hensel_lift_all(mreduce(M, P), fs, 0, fs.size(), F, P);
  std::sort(lifted.begin(), lifted.end(), [](const ZPoly& a, const ZPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Int& x, const Int& y) { return x < y; });
  });
  return recombine(M, std::move(lifted), P, allowed);
}

// process-wide memo, keyed by the monic primitive integer coefficient vector
class FactorCache {
 public:
  std::optional<std::vector<ZPoly>> get(const std::string& key) {
    std::shared_lock lk(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void put(const std::string& key, const std::vector<ZPoly>& val) {
    std::unique_lock lk(mu_);
    map_.emplace(key, val);
  }

 private:
  std::shared_mutex mu_;
  std::map<std::string, std::vector<ZPoly>> map_;
};

FactorCache& cache() {
  static FactorCache c;
  return c;
}

std::string cache_key(const ZPoly& f) {
  std::string k;
  for (const Int& c : f) {
    k += c.get_str();
    k += ',';
  }
  return k;
}

// monic squarefree rational polynomial -> monic irreducible rational factors
std::vector<QPoly> factor_monic_squarefree(const QPoly& part, const FactorOptions& opts) {
  if (part.degree() == 1) return {part};
  auto [z, den] = zpoly::from_qpoly(part);
  (void)den;
  ZPoly g = zpoly::primitive_part(z);
  Int L = g.back();
  int m = zpoly::deg(g);
  // monicize: M(X) = L^{m-1} g(X/L)
  ZPoly M(g.size());
  for (int i = 0; i < m; ++i)
    M[static_cast<size_t>(i)] =
        g[static_cast<size_t>(i)] * pow_int(L, static_cast<unsigned long>(m - 1 - i));
  M[static_cast<size_t>(m)] = 1;
  zpoly::normalize(M);

  std::vector<ZPoly> hs;
  std::string key = cache_key(M);
  if (opts.use_cache) {
    if (auto hit = cache().get(key)) hs = *hit;
  }
  if (hs.empty()) {
    hs = zassenhaus_monic(M, opts.seed);
    if (opts.use_cache) cache().put(key, hs);
  }

  std::vector<QPoly> out;
  for (const ZPoly& h : hs) {
    int dh = zpoly::deg(h);
    std::vector<Rat> c(h.size());
    for (int j = 0; j <= dh; ++j) {
      c[static_cast<size_t>(j)] =
          Rat(h[static_cast<size_t>(j)], pow_int(L, static_cast<unsigned long>(dh - j)));
      c[static_cast<size_t>(j)].canonicalize();
    }
    out.emplace_back(std::move(c));
  }
  return out;
}

}  // namespace

Factorization factor_over_Q(const QPoly& p, const FactorOptions& opts) {
  if (p.is_zero()) fail(Errc::BadInput, "factor_over_Q(0)");
  if (p.degree() > opts.degree_cap)
    fail(Errc::DegreeTooLarge, "degree " + std::to_string(p.degree()) + " exceeds cap " +
                                   std::to_string(opts.degree_cap));
  Factorization out;
  out.unit = p.lc();
  if (p.degree() == 0) return out;

  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    for (QPoly& f : factor_monic_squarefree(part, opts)) out.factors.emplace_back(std::move(f), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    const auto& ca = a.first.coeffs();
    const auto& cb = b.first.coeffs();
    for (size_t i = 0; i < ca.size(); ++i)
      if (ca[i] != cb[i]) return ca[i] < cb[i];
    return a.second < b.second;
  });
  return out;
}

namespace {

const std::vector<std::vector<int>>& int_partitions(int m) {
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<int>>> memo;
  std::lock_guard lk(mu);
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // descending partitions of m
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, m, m);
  return memo.emplace(m, std::move(out)).first->second;
}

}  // namespace

std::vector<std::vector<int>> dt_candidates(const Factorization& f, size_t max_cands) {
  size_t total = 1;
  for (const auto& [poly, mult] : f.factors) {
    total *= int_partitions(mult).size();
    if (total > max_cands)
      fail(Errc::AmbiguousDT, "block-assignment candidate count exceeds bound");
  }
  std::vector<std::vector<int>> cands;
  std::vector<int> cur;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == f.factors.size()) {
      std::vector<int> part = cur;
      std::sort(part.rbegin(), part.rend());
      cands.push_back(std::move(part));
      return;
    }
    int d = f.factors[idx].first.degree();
    for (const auto& split : int_partitions(f.factors[idx].second)) {
      size_t added = split.size();
      for (int e : split) cur.push_back(e * d);
      self(self, idx + 1);
      cur.resize(cur.size() - added);
    }
  };
  rec(rec, 0);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  return cands;
}

DecompType decomposition_type(const QPoly& p, const std::vector<std::vector<int>>* context,
                              const FactorOptions& opts) {
  if (p.is_zero() || p.degree() < 1)
    fail(Errc::BadInput, "decomposition type needs positive degree");
  Factorization fact = factor_over_Q(p, opts);

  DecompType dt;
  for (const auto& [f, m] : fact.factors) dt.power_profile.emplace_back(f.degree(), m);
  std::sort(dt.power_profile.begin(), dt.power_profile.end());

  if (fact.is_squarefree()) {
    dt.partition = fact.degree_pattern();
    dt.squarefree = true;
    return dt;
  }

  dt.squarefree = false;
  std::vector<std::vector<int>> cands = dt_candidates(fact);
  if (context) {
    std::vector<std::vector<int>> rows;
    for (auto row : *context) {
      std::sort(row.rbegin(), row.rend());
      rows.push_back(std::move(row));
    }
    std::vector<std::vector<int>> kept;
    for (const auto& c : cands)
      if (std::find(rows.begin(), rows.end(), c) != rows.end()) kept.push_back(c);
    cands = std::move(kept);
  }
  if (cands.empty()) fail(Errc::NoConsistentDT, "no block partition matches the context");
  if (cands.size() > 1) fail(Errc::AmbiguousDT, "several block partitions are consistent");
  dt.partition = cands[0];
  return dt;
}

}  // namespace gal
