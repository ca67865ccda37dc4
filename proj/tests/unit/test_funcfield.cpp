#include <gtest/gtest.h>

#include <random>

#include "gpk/criterion.hpp"
#include "oracles/oracles.hpp"

using gpk::CurveFunction;
using gpk::CurvePoly;
using gpk::Elem;
using gpk::Field;
using gpk::HermitianCurve;
using gpk::ProjMatrix;
using gpk::ProjPoint;

namespace {

std::vector<std::pair<Elem, Elem>> affine_points(const HermitianCurve& c, const Field& f) {
  std::vector<std::pair<Elem, Elem>> out;
  for (const auto& p : gpk::rational_points(c, f))
    if (p.is_affine()) out.push_back(p.affine());
  return out;
}

// Equality oracle: agreement at every affine point over two tower levels.
bool agree_everywhere(const HermitianCurve& c, const CurvePoly& a, const oracle::Raw& raw) {
  for (std::uint32_t level : {1u, 2u, 3u}) {
    const Field& big = c.tower_field(level);
    const auto& emb = c.embedding_into(big);
    const CurvePoly ab = a.embed(emb);
    oracle::Raw rb;
    for (const auto& [e, v] : raw) rb.emplace(e, emb(v));
    for (const auto& [x, y] : affine_points(c, big))
      if (oracle::eval_poly(ab, x, y) != oracle::eval_raw(rb, x, y)) return false;
  }
  return true;
}

CurveFunction xf(const HermitianCurve& c) { return CurveFunction::x(c.base_field(), c.q()); }
CurveFunction yf(const HermitianCurve& c) { return CurveFunction::y(c.base_field(), c.q()); }

}  // namespace

TEST(CurvePoly, ReductionExamples) {
  const HermitianCurve c(2, 1);
  const Field& f = c.base_field();
  const auto y4 = CurvePoly::reduce(f, 2, {{0, 4, f.one()}});
  const auto expected = CurvePoly::reduce(f, 2, {{2, 1, f.one()}, {1, 1, f.one()}});
  EXPECT_EQ(y4, expected);
  EXPECT_TRUE(agree_everywhere(c, y4, {{{0, 4}, f.one()}}));
  const auto y3 = CurvePoly::reduce(f, 2, {{0, 3, f.one()}});
  EXPECT_EQ(y3, CurvePoly::reduce(f, 2, {{2, 0, f.one()}, {1, 0, f.one()}}));
  const auto x3 = CurvePoly::reduce(f, 2, {{3, 0, f.one()}});
  EXPECT_EQ(x3.terms().size(), 1u);
  EXPECT_EQ(x3.terms()[0].i, 3u);
}

TEST(CurvePoly, CanonicalFormAgreesWithRawEvaluation) {
  std::mt19937_64 rng(5);
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}}) {
    const HermitianCurve c(p, e);
    const Field& f = c.base_field();
    std::uniform_int_distribution<std::uint64_t> val(1, f.size() - 1);
    std::uniform_int_distribution<std::uint32_t> ex(0, 9);
    for (int k = 0; k < 20; ++k) {
      oracle::Raw raw;
      std::vector<CurvePoly::Term> terms;
      for (int t = 0; t < 5; ++t) {
        const std::uint32_t i = ex(rng), j = ex(rng);
        const Elem v = f(val(rng));
        terms.push_back({i, j, v});
        auto [it, ins] = raw.try_emplace({i, j}, v);
        if (!ins) it->second += v;
      }
      const auto r = CurvePoly::reduce(f, c.q(), terms);
      for (const auto& t : r.terms()) EXPECT_LE(t.j, c.q());
      EXPECT_TRUE(agree_everywhere(c, r, raw));
      // Idempotent.
      std::vector<CurvePoly::Term> again;
      for (const auto& t : r.terms()) again.push_back(t);
      EXPECT_EQ(CurvePoly::reduce(f, c.q(), again), r);
    }
  }
}

TEST(CurvePoly, RingHomomorphism) {
  std::mt19937_64 rng(8);
  const HermitianCurve c(3, 1);
  const Field& f = c.base_field();
  for (int k = 0; k < 30; ++k) {
    const auto a = oracle::random_poly(rng, f, c.q(), 4, 6);
    const auto b = oracle::random_poly(rng, f, c.q(), 4, 6);
    const auto prod = a * b;
    for (const auto& [x, y] : affine_points(c, c.tower_field(2))) {
      const auto& emb = c.embedding_into(c.tower_field(2));
      ASSERT_EQ(prod.embed(emb).eval(x, y), a.embed(emb).eval(x, y) * b.embed(emb).eval(x, y));
      ASSERT_EQ((a + b).embed(emb).eval(x, y), a.embed(emb).eval(x, y) + b.embed(emb).eval(x, y));
    }
  }
}

TEST(CurvePoly, PoleOrdersOfCanonicalMonomialsAreDistinct) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    std::set<std::uint64_t> at_p1, at_p2;
    for (std::uint64_t i = 0; i < 200; ++i) {
      for (std::uint64_t j = 0; j <= q; ++j) {
        EXPECT_TRUE(at_p1.insert((q + 1) * i + q * j).second) << q << ' ' << i << ' ' << j;
        EXPECT_TRUE(at_p2.insert((q + 1) * i + j).second) << q << ' ' << i << ' ' << j;
      }
    }
  }
}

TEST(CurveFunction, EqualityAndErrors) {
  const HermitianCurve c(2, 1);
  const Field& f = c.base_field();
  const auto x = xf(c), y = yf(c);
  EXPECT_EQ(x * y / y, x);
  EXPECT_EQ((x + y) * (x + y), x * x + y * y);  // characteristic 2
  EXPECT_EQ(y.pow(3), x.pow(2) + x);
  EXPECT_EQ(y.pow(-1) * y, CurveFunction::constant(f.one(), 2));
  EXPECT_THROW(CurveFunction(CurvePoly::x(f, 2), CurvePoly(f, 2)), gpk::FunctionFieldError);
  EXPECT_THROW(CurveFunction(CurvePoly(f, 2)).inverse(), gpk::FunctionFieldError);
  EXPECT_TRUE(x.eval(f.zero(), f.zero()).is_zero());
  EXPECT_THROW(y.pow(-1).eval(f.zero(), f.zero()), gpk::FunctionFieldError);
}

TEST(Pullback, GeneratorActions) {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}}) {
    const HermitianCurve c(p, e);
    const Field& f = c.base_field();
    const std::uint64_t q = c.q();
    const auto x = xf(c), y = yf(c);
    EXPECT_EQ(gpk::pullback(ProjMatrix::identity(f), x * y + y), x * y + y);
    const Elem g = f(f.primitive());
    // eta_c on y gives c y.
    EXPECT_EQ(gpk::pullback(gpk::eta(c, g), y), CurveFunction::constant(g, q) * y);
    for (std::uint64_t av = 0; av < f.size(); ++av) {
      for (std::uint64_t bv = 0; bv < f.size(); ++bv) {
        const Elem a = f(av), b = f(bv);
        if (!gpk::hermitian_pair_check(a, b, q)) continue;
        const auto s = gpk::sigma(c, a, b);
        EXPECT_EQ(gpk::pullback(s, y), y + CurveFunction::constant(a, q));
        // (s^-1 eta_c s)^* y = c y + a (c - 1).
        const auto conj = s.inverse() * gpk::eta(c, g) * s;
        EXPECT_EQ(gpk::pullback(conj, y),
                  CurveFunction::constant(g, q) * y + CurveFunction::constant(a * (g - f.one()), q));
      }
    }
  }
}

TEST(Pullback, HomomorphismAndContravariance) {
  std::mt19937_64 rng(2024);
  const HermitianCurve c(2, 1);
  const Field& f = c.base_field();
  for (int k = 0; k < 100; ++k) {
    const auto s = oracle::random_automorphism(rng, c);
    const auto t = oracle::random_automorphism(rng, c);
    const CurveFunction a(oracle::random_poly(rng, f, 2, 3, 5), oracle::random_poly(rng, f, 2, 2, 4) +
                                                                   CurvePoly::constant(f.one(), 2));
    const CurveFunction b(oracle::random_poly(rng, f, 2, 3, 5));
    if (a.den().is_zero() || b.is_zero()) continue;
    ASSERT_TRUE(gpk::preserves_curve(s, 2));
    EXPECT_EQ(gpk::pullback(s, a + b), gpk::pullback(s, a) + gpk::pullback(s, b));
    EXPECT_EQ(gpk::pullback(s, a * b), gpk::pullback(s, a) * gpk::pullback(s, b));
    EXPECT_EQ(gpk::pullback(s * t, a), gpk::pullback(t, gpk::pullback(s, a)));
    EXPECT_EQ(gpk::pullback(s.inverse(), gpk::pullback(s, a)), a);
  }
}

TEST(Pullback, PointwiseMeaning) {
  // (F o s)(P) = F(s(P)) wherever both sides are defined.
  std::mt19937_64 rng(77);
  const HermitianCurve c(3, 1);
  const Field& f = c.base_field();
  const auto pts = gpk::rational_points(c, f);
  for (int k = 0; k < 10; ++k) {
    const auto s = oracle::random_automorphism(rng, c);
    const CurveFunction a(oracle::random_poly(rng, f, 3, 4, 5));
    const auto pa = gpk::pullback(s, a);
    for (const auto& p : pts) {
      const auto img = gpk::apply(s, p);
      if (!p.is_affine() || !img.is_affine()) continue;
      const auto [x0, y0] = p.affine();
      const auto [x1, y1] = img.affine();
      if (pa.den().eval(x0, y0).is_zero()) continue;
      EXPECT_EQ(pa.eval(x0, y0), a.eval(x1, y1));
    }
  }
}

TEST(Pullback, RejectsNonAutomorphisms) {
  const HermitianCurve c(2, 1);
  const Field& f = c.base_field();
  const Elem g = f(f.primitive());
  const Elem o = f.one(), z = f.zero();
  const ProjMatrix bad({g, z, z, z, g.pow(3), z, z, z, o});  // diag(c, c^(q+1), 1)
  EXPECT_FALSE(gpk::preserves_curve(bad, 2));
  EXPECT_THROW(gpk::pullback(bad, yf(c)), gpk::FunctionFieldError);
  EXPECT_TRUE(gpk::preserves_curve(gpk::eta(c, g), 2));
  EXPECT_TRUE(gpk::preserves_curve(gpk::swap_xz(f), 2));
}

TEST(Valuation, AtP1) {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}}) {
    const HermitianCurve c(p, e);
    const Field& f = c.base_field();
    const auto q = static_cast<std::int64_t>(c.q());
    EXPECT_EQ(gpk::valuation_at_p1(xf(c)), -(q + 1));
    EXPECT_EQ(gpk::valuation_at_p1(yf(c)), -q);
    EXPECT_EQ(gpk::valuation_at_p1(gpk::witness_t1(c, f)), -q * q * q);
    EXPECT_EQ(gpk::valuation_at_point(xf(c), c.p1(f)), -(q + 1));
    EXPECT_THROW(gpk::valuation_at_p1(CurveFunction(CurvePoly(f, c.q()))), gpk::FunctionFieldError);
  }
}

TEST(Valuation, PrincipalDivisorsHaveDegreeZero) {
  // x, y and t1 have all their zeros on rational points, so their rational
  // divisor is the full divisor.
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}}) {
    const HermitianCurve c(p, e);
    const Field& f = c.base_field();
    for (const auto& fn : {xf(c), yf(c), gpk::witness_t1(c, f), gpk::witness_t2(c, f)}) {
      std::int64_t total = 0;
      for (const auto& pt : gpk::rational_points(c, f)) total += gpk::valuation_at_point(fn, pt);
      EXPECT_EQ(total, 0);
    }
  }
}

TEST(Valuation, AtOrigin) {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}}) {
    const HermitianCurve c(p, e);
    const Field& f = c.base_field();
    const auto q = static_cast<std::int64_t>(c.q());
    const ProjPoint p2 = c.p2(f);
    EXPECT_EQ(gpk::valuation_at_point(yf(c), p2), 1);
    EXPECT_EQ(gpk::valuation_at_point(xf(c), p2), q + 1);
    EXPECT_EQ(gpk::valuation_at_point(yf(c) / xf(c), p2), -q);
    EXPECT_EQ(oracle::series_valuation(CurvePoly::y(f, c.q()), f.zero(), f.zero(), 20), 1);
    EXPECT_EQ(oracle::series_valuation(CurvePoly::x(f, c.q()), f.zero(), f.zero(), 20), q + 1);
  }
}

TEST(Valuation, TranslationRouteMatchesSeriesOracle) {
  std::mt19937_64 rng(99);
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}}) {
    const HermitianCurve c(p, e);
    const Field& f = c.base_field();
    for (int k = 0; k < 20; ++k) {
      const auto poly = oracle::random_poly(rng, f, c.q(), 3, 4) *
                        CurvePoly::linear(f.one(), f.zero(), f.from_int_elem(-1), c.q()).pow(k % 3);
      if (poly.is_zero()) continue;
      const CurveFunction fn(poly);
      for (const auto& pt : gpk::rational_points(c, f)) {
        if (!pt.is_affine()) continue;
        const auto [x0, y0] = pt.affine();
        const auto prec = static_cast<std::size_t>(poly.pole_order() + 2);
        ASSERT_EQ(gpk::valuation_at_point(fn, pt), oracle::series_valuation(poly, x0, y0, prec));
        ASSERT_EQ(gpk::series_order(poly, x0, y0), oracle::series_valuation(poly, x0, y0, prec));
      }
    }
  }
}

TEST(Valuation, NonRationalPointsUseSeries) {
  std::mt19937_64 rng(4);
  const HermitianCurve c(2, 1);
  const Field& big = c.tower_field(2);
  const auto& emb = c.embedding_into(big);
  std::size_t checked = 0;
  for (const auto& pt : gpk::rational_points(c, big)) {
    if (!pt.is_affine()) continue;
    const auto [x0, y0] = pt.affine();
    if (gpk::in_subfield(y0, 4)) continue;
    for (int k = 0; k < 5; ++k) {
      const auto poly = oracle::random_poly(rng, c.base_field(), 2, 3, 4).embed(emb);
      if (poly.is_zero()) continue;
      const auto prec = static_cast<std::size_t>(poly.pole_order() + 2);
      EXPECT_EQ(gpk::valuation_at_point(CurveFunction(poly), pt), oracle::series_valuation(poly, x0, y0, prec));
      ++checked;
    }
  }
  // Over GF(16) every point has y in GF(4); use GF(64) if nothing was found.
  if (checked == 0) {
    const Field& f64 = c.tower_field(3);
    const auto& e64 = c.embedding_into(f64);
    for (const auto& pt : gpk::rational_points(c, f64)) {
      if (!pt.is_affine()) continue;
      const auto [x0, y0] = pt.affine();
      if (gpk::in_subfield(y0, 4)) continue;
      const auto poly = oracle::random_poly(rng, c.base_field(), 2, 3, 4).embed(e64);
      if (poly.is_zero()) continue;
      const auto prec = static_cast<std::size_t>(poly.pole_order() + 2);
      EXPECT_EQ(gpk::valuation_at_point(CurveFunction(poly), pt), oracle::series_valuation(poly, x0, y0, prec));
      ++checked;
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(Valuation, Additivity) {
  std::mt19937_64 rng(31337);
  const HermitianCurve c(2, 1);
  const Field& f = c.base_field();
  const auto pts = gpk::rational_points(c, f);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  for (int k = 0; k < 100; ++k) {
    const CurveFunction a(oracle::random_poly(rng, f, 2, 3, 5), oracle::random_poly(rng, f, 2, 2, 3) +
                                                                   CurvePoly::constant(f.one(), 2));
    const CurveFunction b(oracle::random_poly(rng, f, 2, 3, 5));
    if (a.is_zero() || b.is_zero() || a.den().is_zero()) continue;
    const auto& pt = pts[pick(rng)];
    EXPECT_EQ(gpk::valuation_at_point(a * b, pt), gpk::valuation_at_point(a, pt) + gpk::valuation_at_point(b, pt));
    EXPECT_EQ(gpk::valuation_at_point(a / b, pt), gpk::valuation_at_point(a, pt) - gpk::valuation_at_point(b, pt));
  }
}

TEST(Valuation, LeadingTermsMultiply) {
  std::mt19937_64 rng(12);
  const HermitianCurve c(3, 1);
  const Field& f = c.base_field();
  for (int k = 0; k < 20; ++k) {
    const CurveFunction a(oracle::random_poly(rng, f, 3, 3, 4));
    const CurveFunction b(oracle::random_poly(rng, f, 3, 3, 4));
    if (a.is_zero() || b.is_zero()) continue;
    for (const auto& pt : gpk::rational_points(c, f)) {
      const auto la = gpk::leading_term(a, pt), lb = gpk::leading_term(b, pt), lab = gpk::leading_term(a * b, pt);
      EXPECT_EQ(lab.order, la.order + lb.order);
      EXPECT_EQ(lab.coeff, la.coeff * lb.coeff);
      EXPECT_EQ(la.order, gpk::valuation_at_point(a, pt));
    }
  }
}

TEST(Invariance, Examples) {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}}) {
    const HermitianCurve c(p, e);
    const Field& f = c.base_field();
    const auto cm = gpk::cyclic_subgroup(c, c.q() + 1);
    EXPECT_TRUE(gpk::is_invariant(xf(c), cm));
    const auto n1 = gpk::n1_subgroup(c);
    EXPECT_TRUE(gpk::is_invariant_all(gpk::witness_t1(c, f), n1));
    EXPECT_FALSE(gpk::is_invariant(gpk::witness_t1(c, f), cm));
    EXPECT_TRUE(gpk::is_invariant(gpk::witness_t1(c, f).pow(static_cast<std::int64_t>(c.q() + 1)), cm));
  }
}

TEST(Rationality, BuiltInWitnesses) {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}}) {
    const HermitianCurve c(p, e);
    const Field& f = c.base_field();
    const auto q3 = static_cast<std::int64_t>(c.q() * c.q() * c.q());
    const auto n1 = gpk::n1_subgroup(c), n2 = gpk::n2_subgroup(c);
    const auto a = gpk::rationality_witness(c, n1, gpk::witness_t1(c, f), c.p1(f));
    EXPECT_TRUE(a.valid) << a.failed_clause;
    EXPECT_EQ(a.pole_order_at_point, q3);
    const auto b = gpk::rationality_witness(c, n2, gpk::witness_t2(c, f), c.p2(f));
    EXPECT_TRUE(b.valid) << b.failed_clause;
    // t2 is the swap pullback of t1.
    EXPECT_EQ(gpk::pullback(gpk::swap_xz(f), gpk::witness_t1(c, f)), gpk::witness_t2(c, f));
    const auto inst = gpk::make_hermitian_instance(c, c.q() + 1);
    const auto g = gpk::rationality_witness(c, inst.g1, inst.w1.function, c.p1(f));
    EXPECT_TRUE(g.valid);
    EXPECT_EQ(g.pole_order_at_point, q3 * static_cast<std::int64_t>(c.q() + 1));
  }
}

TEST(Rationality, FailingClausesAreNamed) {
  const HermitianCurve c(2, 1);
  const Field& f = c.base_field();
  const auto triv = gpk::trivial_group(f);
  const auto r = gpk::rationality_witness(c, triv, yf(c), c.p1(f));
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.failed_clause, "pole order at marked point");
  const auto cm = gpk::cyclic_subgroup(c, 3);
  const auto s = gpk::rationality_witness(c, cm, gpk::witness_t1(c, f), c.p1(f));
  EXPECT_FALSE(s.valid);
  EXPECT_EQ(s.failed_clause, "invariance");
  // x + 1/(y + 1) has a pole at points with y = 1: a non-monomial denominator.
  const auto w = xf(c) + CurveFunction(CurvePoly::constant(f.one(), 2),
                                       CurvePoly::linear(f.zero(), f.one(), f.one(), 2));
  const auto t = gpk::rationality_witness(c, triv, w, c.p1(f));
  EXPECT_FALSE(t.valid);
}
