#pragma once

// Brute-force reference implementations used by the tests. None of these
// call into the library's arithmetic shortcuts (tables, Ben-Or, the additive
// solver, canonical reduction or the translation route for valuations).

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "gpk/criterion.hpp"

namespace oracle {

using Poly = std::vector<std::uint32_t>;  // little-endian coefficients over GF(p)

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  // m is monic
  while (a.size() >= m.size()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + p - (lead * m[i]) % p) % p;
    trim(a);
  }
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

/// Schoolbook product in GF(p)[t]/(modulus) on base-p encodings.
inline std::uint64_t naive_mul(std::uint32_t p, const std::vector<std::uint32_t>& modulus, std::uint64_t a,
                               std::uint64_t b) {
  auto digits = [p](std::uint64_t v) {
    Poly d;
    while (v) {
      d.push_back(static_cast<std::uint32_t>(v % p));
      v /= p;
    }
    return d;
  };
  Poly r = poly_mod(poly_mul(digits(a), digits(b), p), Poly(modulus.begin(), modulus.end()), p);
  std::uint64_t out = 0, scale = 1;
  for (auto c : r) {
    out += c * scale;
    scale *= p;
  }
  return out;
}

/// Irreducibility by trial division against every monic polynomial of degree
/// 1..deg/2.
inline bool trial_division_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly g(d + 1, 0);
      std::uint64_t t = v;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

/// Curve points by scanning every affine pair plus the line at infinity.
inline std::set<gpk::ProjPoint> brute_points(const gpk::HermitianCurve& c, const gpk::Field& f) {
  std::set<gpk::ProjPoint> out;
  const gpk::Elem one = f.one(), zero = f.zero();
  for (std::uint64_t a = 0; a < f.size(); ++a)
    for (std::uint64_t b = 0; b < f.size(); ++b)
      if (c.form(f(a), f(b), one).is_zero()) out.emplace(f(a), f(b), one);
  for (std::uint64_t a = 0; a < f.size(); ++a) {
    if (c.form(f(a), one, zero).is_zero()) out.emplace(f(a), one, zero);
  }
  if (c.form(one, zero, zero).is_zero()) out.emplace(one, zero, zero);
  return out;
}

/// Raw bivariate polynomial, no reduction: (i, j) -> coefficient.
using Raw = std::map<std::pair<std::uint32_t, std::uint32_t>, gpk::Elem>;

inline gpk::Elem eval_raw(const Raw& r, const gpk::Elem& x, const gpk::Elem& y) {
  gpk::Elem acc = x.field().zero();
  for (const auto& [e, c] : r) acc += c * x.pow(e.first) * y.pow(e.second);
  return acc;
}

inline gpk::Elem eval_poly(const gpk::CurvePoly& p, const gpk::Elem& x, const gpk::Elem& y) {
  gpk::Elem acc = x.field().zero();
  for (const auto& t : p.terms()) acc += t.c * x.pow(t.i) * y.pow(t.j);
  return acc;
}

/// Dense truncated power series over f.
using Series = std::vector<gpk::Elem>;

inline Series series_mul(const Series& a, const Series& b) {
  Series r(a.size(), a[0].field().zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

/// Order of vanishing of a polynomial at the affine curve point (x0, y0),
/// computed by expanding x = x0 + u(t), y = y0 + t where u solves
/// u + u^q = y0^q t + y0 t^q + t^(q+1) coefficient by coefficient.
inline std::int64_t series_valuation(const gpk::CurvePoly& poly, const gpk::Elem& x0, const gpk::Elem& y0,
                                     std::size_t precision) {
  const gpk::Field& f = x0.field();
  const std::uint64_t q = poly.q();
  const std::size_t n = precision;
  Series rhs(n, f.zero());
  if (n > 1) rhs[1] += y0.pow(q);
  if (q < n) rhs[q] += y0;
  if (q + 1 < n) rhs[q + 1] += f.one();
  // u_k = rhs_k - (u^q)_k and (u^q)_k = u_{k/q}^q when q | k; u_0 = 0.
  Series u(n, f.zero());
  for (std::size_t k = 1; k < n; ++k) {
    gpk::Elem v = rhs[k];
    if (k % q == 0) v -= u[k / q].pow(q);
    u[k] = v;
  }
  Series xs = u, ys(n, f.zero());
  xs[0] = x0;
  ys[0] = y0;
  if (n > 1) ys[1] = f.one();
  Series total(n, f.zero());
  for (const auto& t : poly.terms()) {
    Series term(n, f.zero());
    term[0] = t.c;
    for (std::uint32_t a = 0; a < t.i; ++a) term = series_mul(term, xs);
    for (std::uint32_t b = 0; b < t.j; ++b) term = series_mul(term, ys);
    for (std::size_t k = 0; k < n; ++k) total[k] += term[k];
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!total[k].is_zero()) return static_cast<std::int64_t>(k);
  return -1;  // precision exhausted
}

inline std::vector<gpk::ProjPoint> brute_orbit(const gpk::MatrixGroup& g, const gpk::ProjPoint& p) {
  std::set<gpk::ProjPoint> s;
  for (const auto& m : g.elements()) s.insert(gpk::apply(m, p));
  return {s.begin(), s.end()};
}

inline std::size_t brute_stabilizer_order(const gpk::MatrixGroup& g, const gpk::ProjPoint& p) {
  return static_cast<std::size_t>(std::count_if(g.elements().begin(), g.elements().end(),
                                                [&](const gpk::ProjMatrix& m) { return gpk::apply(m, p) == p; }));
}

/// Random canonical polynomial with up to `terms` terms of x-degree < max_i.
inline gpk::CurvePoly random_poly(std::mt19937_64& rng, const gpk::Field& f, std::uint64_t q, int terms,
                                  std::uint32_t max_i) {
  std::vector<gpk::CurvePoly::Term> t;
  std::uniform_int_distribution<std::uint64_t> val(1, f.size() - 1);
  std::uniform_int_distribution<std::uint32_t> ei(0, max_i - 1), ej(0, static_cast<std::uint32_t>(q));
  for (int k = 0; k < terms; ++k) t.push_back({ei(rng), ej(rng), f(val(rng))});
  return gpk::CurvePoly::reduce(f, q, t);
}

/// Random element of the full automorphism group generated by sigma, eta and the swap.
inline gpk::ProjMatrix random_automorphism(std::mt19937_64& rng, const gpk::HermitianCurve& c) {
  const gpk::Field& f = c.base_field();
  std::uniform_int_distribution<std::uint64_t> val(0, f.size() - 1);
  std::vector<std::pair<gpk::Elem, gpk::Elem>> pairs;
  for (std::uint64_t a = 0; a < f.size(); ++a)
    for (std::uint64_t b = 0; b < f.size(); ++b)
      if (gpk::hermitian_pair_check(f(a), f(b), c.q())) pairs.emplace_back(f(a), f(b));
  std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
  gpk::ProjMatrix m = gpk::ProjMatrix::identity(f);
  for (int k = 0; k < 3; ++k) {
    const auto& [a, b] = pairs[pick(rng)];
    m = m * gpk::sigma(c, a, b);
    gpk::Elem s = f(val(rng));
    if (s.is_zero()) s = f.one();
    m = m * gpk::eta(c, s);
    if (rng() % 2) m = m * gpk::swap_xz(f);
  }
  return m;
}

}  // namespace oracle
