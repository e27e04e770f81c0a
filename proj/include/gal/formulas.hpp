#ifndef GAL_FORMULAS_HPP
#define GAL_FORMULAS_HPP

// Closed-form coefficient formulas for the parametric families and their
// resolvents, written once as monomial tables and evaluated over any field K
// (exact rationals, prime fields for the search filters). A context object
// supplies construction from machine integers:
//
//   struct Ctx { using Elem = ...; Elem of(long) const; };

#include <array>
#include <cstddef>
#include <vector>

namespace gal::formulas {

struct Mono4 {
  long c;
  int es, et, eS, eT;  // exponents of s, t, s', t'
};

struct Mono2 {
  long c;
  int es, et;
};

// d^2 = s^2 - 4s^3 + 4t - 14st - 30s^2t - 91t^2 - 34st^2 + s^2t^2
//       + 40t^3 + 24st^3 + 4t^4 - 4t^5
inline constexpr Mono2 kDSquared[] = {
    {1, 2, 0}, {-4, 3, 0}, {4, 0, 1},  {-14, 1, 1}, {-30, 2, 1}, {-91, 0, 2},
    {-34, 1, 2}, {1, 2, 2}, {40, 0, 3}, {24, 1, 3},  {4, 0, 4},   {-4, 0, 5},
};

// bracketed parts are symmetrized: value + value with (s,t) and (s',t') swapped
inline constexpr Mono4 kC3Bracket[] = {
    {2, 1, 0, 0, 0}, {-21, 0, 1, 0, 0}, {3, 0, 2, 0, 0},
    {-2, 0, 1, 1, 0}, {1, 0, 2, 1, 0},  {-1, 0, 2, 0, 1},
};
inline constexpr Mono4 kC3Tail[] = {
    {31, 0, 0, 0, 0}, {-3, 1, 0, 1, 0}, {5, 0, 1, 0, 1},
};

inline constexpr Mono4 kC2Bracket[] = {
    {-20, 1, 0, 0, 0}, {112, 0, 1, 0, 0}, {8, 1, 1, 0, 0},  {-32, 0, 2, 0, 0},
    {2, 0, 3, 0, 0},   {5, 0, 1, 1, 0},   {-13, 1, 1, 1, 0}, {-12, 0, 2, 1, 0},
    {4, 0, 3, 1, 0},   {-15, 1, 1, 0, 1}, {14, 0, 2, 0, 1},  {2, 0, 3, 0, 1},
    {8, 0, 2, 1, 1},   {-2, 0, 3, 0, 2},
};
inline constexpr Mono4 kC2Tail[] = {
    {-102, 0, 0, 0, 0}, {27, 1, 0, 1, 0}, {-119, 0, 1, 0, 1},
    {-1, 1, 1, 1, 1},   {6, 0, 2, 0, 2},
};

inline constexpr Mono4 kC1Bracket[] = {
    {32, 1, 0, 0, 0},  {2, 2, 0, 0, 0},   {-128, 0, 1, 0, 0}, {-26, 1, 1, 0, 0},
    {60, 0, 2, 0, 0},  {4, 1, 2, 0, 0},   {-8, 0, 3, 0, 0},   {-6, 2, 0, 1, 0},
    {-7, 0, 1, 1, 0},  {38, 1, 1, 1, 0},  {9, 0, 2, 1, 0},    {-5, 1, 2, 1, 0},
    {-12, 0, 3, 1, 0}, {2, 0, 4, 1, 0},   {-20, 0, 1, 2, 0},  {-8, 1, 1, 2, 0},
    {6, 0, 2, 2, 0},   {2, 0, 3, 2, 0},   {2, 1, 1, 0, 1},    {-77, 0, 2, 0, 1},
    {3, 1, 2, 0, 1},   {8, 0, 3, 0, 1},   {-29, 0, 2, 1, 1},  {1, 1, 2, 1, 1},
    {18, 0, 3, 1, 1},  {-2, 1, 2, 0, 2},  {10, 0, 3, 0, 2},
};
inline constexpr Mono4 kC1Tail[] = {
    {80, 0, 0, 0, 0}, {-37, 1, 0, 1, 0}, {145, 0, 1, 0, 1},
    {-45, 1, 1, 1, 1}, {24, 0, 2, 0, 2}, {-8, 0, 3, 0, 3},
};

inline constexpr Mono4 kC0Bracket[] = {
    {-16, 1, 0, 0, 0},  {-2, 2, 0, 0, 0},  {56, 0, 1, 0, 0},   {24, 1, 1, 0, 0},
    {2, 2, 1, 0, 0},    {-38, 0, 2, 0, 0}, {-8, 1, 2, 0, 0},   {8, 0, 3, 0, 0},
    {5, 2, 0, 1, 0},    {-2, 0, 1, 1, 0},  {-38, 1, 1, 1, 0},  {-7, 2, 1, 1, 0},
    {5, 0, 2, 1, 0},    {13, 1, 2, 1, 0},  {8, 0, 3, 1, 0},    {2, 1, 3, 1, 0},
    {-4, 0, 4, 1, 0},   {-21, 0, 1, 2, 0}, {-11, 1, 1, 2, 0},  {-2, 0, 2, 2, 0},
    {2, 1, 2, 2, 0},    {4, 0, 3, 2, 0},   {-104, 1, 1, 0, 1}, {-33, 2, 1, 0, 1},
    {105, 0, 2, 0, 1},  {35, 1, 2, 0, 1},  {4, 0, 3, 0, 1},    {16, 1, 3, 0, 1},
    {-6, 0, 4, 0, 1},   {-2, 0, 5, 0, 1},  {-1, 2, 1, 1, 1},   {36, 0, 2, 1, 1},
    {-14, 1, 2, 1, 1},  {-6, 0, 3, 1, 1},  {6, 0, 4, 1, 1},    {8, 0, 2, 2, 1},
    {-37, 1, 2, 0, 2},  {22, 0, 3, 0, 2},  {-2, 1, 3, 0, 2},   {8, 0, 4, 0, 2},
    {8, 0, 3, 1, 2},    {-2, 0, 4, 0, 3},
};
inline constexpr Mono4 kC0Tail[] = {
    {-24, 0, 0, 0, 0}, {14, 1, 0, 1, 0},   {-8, 2, 0, 2, 0}, {-224, 0, 1, 0, 1},
    {1, 1, 1, 1, 1},   {-101, 0, 2, 0, 2}, {-1, 1, 2, 1, 2}, {-8, 0, 3, 0, 3},
};

namespace detail {

template <class C, class E, size_t N>
E eval_monomials(const C& ctx, const Mono4 (&table)[N], const std::array<std::vector<E>, 4>& pw) {
  E acc = ctx.of(0);
  for (const Mono4& m : table) {
    E term = ctx.of(m.c) * pw[0][static_cast<size_t>(m.es)] * pw[1][static_cast<size_t>(m.et)] *
             pw[2][static_cast<size_t>(m.eS)] * pw[3][static_cast<size_t>(m.eT)];
    acc = acc + term;
  }
  return acc;
}

template <class C, class E>
std::vector<E> powers(const C& ctx, const E& v, int upto) {
  std::vector<E> p;
  p.reserve(static_cast<size_t>(upto) + 1);
  p.push_back(ctx.of(1));
  for (int i = 1; i <= upto; ++i) p.push_back(p.back() * v);
  return p;
}

template <class C, class E>
std::vector<E> poly_mul(const C& ctx, const std::vector<E>& a, const std::vector<E>& b) {
  std::vector<E> r(a.size() + b.size() - 1, ctx.of(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

}  // namespace detail

template <class C>
typename C::Elem d_squared(const C& ctx, const typename C::Elem& s, const typename C::Elem& t) {
  using E = typename C::Elem;
  auto ps = detail::powers(ctx, s, 3);
  auto pt = detail::powers(ctx, t, 5);
  E acc = ctx.of(0);
  for (const Mono2& m : kDSquared)
    acc = acc + ctx.of(m.c) * ps[static_cast<size_t>(m.es)] * pt[static_cast<size_t>(m.et)];
  return acc;
}

// c3, c2, c1, c0 of the first quintic-family resolvent
template <class C>
std::array<typename C::Elem, 4> resolvent_c_coeffs(const C& ctx, const typename C::Elem& s,
                                                   const typename C::Elem& t,
                                                   const typename C::Elem& s2,
                                                   const typename C::Elem& t2) {
  using E = typename C::Elem;
  std::array<std::vector<E>, 4> fwd = {detail::powers(ctx, s, 5), detail::powers(ctx, t, 5),
                                       detail::powers(ctx, s2, 5), detail::powers(ctx, t2, 5)};
  std::array<std::vector<E>, 4> swp = {fwd[2], fwd[3], fwd[0], fwd[1]};
  auto sym = [&](const auto& table) -> E {
    E a = detail::eval_monomials(ctx, table, fwd);
    E b = detail::eval_monomials(ctx, table, swp);
    return a + b;
  };
  E c3 = sym(kC3Bracket) + detail::eval_monomials(ctx, kC3Tail, fwd);
  E c2 = sym(kC2Bracket) + detail::eval_monomials(ctx, kC2Tail, fwd);
  E c1 = sym(kC1Bracket) + detail::eval_monomials(ctx, kC1Tail, fwd);
  E c0 = sym(kC0Bracket) + detail::eval_monomials(ctx, kC0Tail, fwd);
  return {c3, c2, c1, c0};
}

// degree-10 coefficient vector (ascending) of the first resolvent:
// (X^5 - (t-3)(t'-3) X^4 + c3 X^3 + c2/2 X^2 + c1/2 X + c0/2)^2
//   - (d^2 d'^2 / 4) (X^2 + (t+t'-1) X + (s-t+s'-t'+tt'+2))^2
template <class C>
std::vector<typename C::Elem> resolvent1_coeffs(const C& ctx, const typename C::Elem& s,
                                                const typename C::Elem& t,
                                                const typename C::Elem& s2,
                                                const typename C::Elem& t2) {
  using E = typename C::Elem;
  auto [c3, c2, c1, c0] = resolvent_c_coeffs(ctx, s, t, s2, t2);
  E half = ctx.of(1) / ctx.of(2);
  E quarter = half * half;
  E three = ctx.of(3);
  std::vector<E> inner = {c0 * half, c1 * half,
                          c2 * half, c3,
                          -((t - three) * (t2 - three)), ctx.of(1)};
  std::vector<E> quad = {s - t + s2 - t2 + t * t2 + ctx.of(2), t + t2 - ctx.of(1), ctx.of(1)};
  E dd = d_squared(ctx, s, t) * d_squared(ctx, s2, t2) * quarter;
  auto inner2 = detail::poly_mul(ctx, inner, inner);
  auto quad2 = detail::poly_mul(ctx, quad, quad);
  std::vector<E> out(11, ctx.of(0));
  for (size_t i = 0; i < inner2.size(); ++i) out[i] = inner2[i];
  for (size_t i = 0; i < quad2.size(); ++i) out[i] = out[i] - dd * quad2[i];
  return out;
}

// f^{C3}_m = X^3 - m X^2 - (m+3) X - 1
template <class C>
std::vector<typename C::Elem> c3_poly(const C& ctx, const typename C::Elem& m) {
  return {-ctx.of(1), -(m + ctx.of(3)), -m, ctx.of(1)};
}

// f^{S3}_t = X^3 + t X + t
template <class C>
std::vector<typename C::Elem> s3_poly(const C& ctx, const typename C::Elem& t) {
  return {t, t, ctx.of(0), ctx.of(1)};
}

// f^{D4}_{s,t} = X^4 + s X^2 + t
template <class C>
std::vector<typename C::Elem> d4_poly(const C& ctx, const typename C::Elem& s,
                                      const typename C::Elem& t) {
  return {t, ctx.of(0), s, ctx.of(0), ctx.of(1)};
}

// f^{D5}_{s,t} = X^5 + (t-3)X^4 + (s-t+3)X^3 + (t^2-t-2s-1)X^2 + sX + t
template <class C>
std::vector<typename C::Elem> d5_poly(const C& ctx, const typename C::Elem& s,
                                      const typename C::Elem& t) {
  typename C::Elem three = ctx.of(3);
  return {t,
          s,
          t * t - t - ctx.of(2) * s - ctx.of(1),
          s - t + three,
          t - three,
          ctx.of(1)};
}

// degree-6 resolvent of the cubic family:
// a (X^2+9X-3a)^3 - b (X^3-2aX^2-9aX-2a^2-27a)^2, leading coefficient a-b
template <class C>
std::vector<typename C::Elem> s3_resolvent_coeffs(const C& ctx, const typename C::Elem& a,
                                                  const typename C::Elem& b) {
  using E = typename C::Elem;
  std::vector<E> p = {-ctx.of(3) * a, ctx.of(9), ctx.of(1)};
  std::vector<E> q = {-ctx.of(2) * a * a - ctx.of(27) * a, -ctx.of(9) * a, -ctx.of(2) * a,
                      ctx.of(1)};
  auto p3 = detail::poly_mul(ctx, detail::poly_mul(ctx, p, p), p);
  auto q2 = detail::poly_mul(ctx, q, q);
  std::vector<E> out(7, ctx.of(0));
  for (size_t i = 0; i < p3.size(); ++i) out[i] = out[i] + a * p3[i];
  for (size_t i = 0; i < q2.size(); ++i) out[i] = out[i] - b * q2[i];
  return out;
}

// Lehmer parameter map into the quintic family
template <class C>
std::pair<typename C::Elem, typename C::Elem> lehmer_params(const C& ctx,
                                                            const typename C::Elem& n) {
  using E = typename C::Elem;
  auto pn = detail::powers(ctx, n, 5);
  E s = ctx.of(-20) + ctx.of(-5) * n + ctx.of(10) * pn[2] + ctx.of(12) * pn[3] +
        ctx.of(5) * pn[4] + pn[5];
  E t = ctx.of(-7) + ctx.of(-10) * n + ctx.of(-5) * pn[2] + ctx.of(-1) * pn[3];
  return {s, t};
}

// Lehmer's quintic h_n
template <class C>
std::vector<typename C::Elem> lehmer_poly(const C& ctx, const typename C::Elem& n) {
  auto pn = detail::powers(ctx, n, 4);
  return {ctx.of(1),
          pn[3] + ctx.of(4) * pn[2] + ctx.of(10) * n + ctx.of(10),
          pn[4] + ctx.of(5) * pn[3] + ctx.of(11) * pn[2] + ctx.of(15) * n + ctx.of(5),
          -(ctx.of(2) * pn[3] + ctx.of(6) * pn[2] + ctx.of(10) * n + ctx.of(10)),
          pn[2],
          ctx.of(1)};
}

// the cyclic-quintic family g_{A,B}; caller must ensure the denominator
// (A+7)B^2 - A + 1 is nonzero
template <class C>
std::vector<typename C::Elem> htc5_poly(const C& ctx, const typename C::Elem& A,
                                        const typename C::Elem& B) {
  using E = typename C::Elem;
  E one = ctx.of(1);
  E P = (A * A - A - one) * (A * A - A - one) + ctx.of(25) * (A * A + one) * B * B +
        ctx.of(125) * B * B * B * B;
  E Q = (A + ctx.of(7)) * B * B - A + one;
  E pq2 = P / (Q * Q);
  E p2q3 = P * P / (Q * Q * Q);
  return {-p2q3 * ctx.of(2) * B,
          -p2q3 * (A - one),
          p2q3 * ctx.of(2) * B,
          -pq2 * (A * A - ctx.of(2) * A + ctx.of(15) * B * B + ctx.of(2)),
          ctx.of(0),
          one};
}

}  // namespace gal::formulas

#endif
