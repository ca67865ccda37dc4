#include <gtest/gtest.h>

#include "gpk/criterion.hpp"
#include "oracles/oracles.hpp"

using gpk::Divisor;
using gpk::Elem;
using gpk::Field;
using gpk::HermitianCurve;
using gpk::MatrixGroup;
using gpk::ProjMatrix;
using gpk::ProjPoint;

namespace {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// orbit_sum by definition: one copy of g(P) per group element.
Divisor brute_orbit_sum(const MatrixGroup& g, const ProjPoint& p) {
  Divisor d;
  for (const auto& m : g.elements()) d.add(gpk::apply(m, p), 1);
  return d;
}

}  // namespace

TEST(Divisor, Arithmetic) {
  const Field& f = Field::get(2, 2);
  const ProjPoint a(f.one(), f.zero(), f.zero()), b(f.zero(), f.zero(), f.one());
  Divisor d = Divisor::point(a, 3) + Divisor::point(b, -2);
  EXPECT_EQ(d.degree(), 1);
  EXPECT_EQ(d.multiplicity(a), 3);
  EXPECT_EQ(d.multiplicity(b), -2);
  EXPECT_EQ(d.positive_part(), Divisor::point(a, 3));
  EXPECT_EQ(d.negative_part(), Divisor::point(b, 2));
  EXPECT_EQ(d.scaled(2).degree(), 2);
  EXPECT_TRUE((d - d).is_zero());
  d.add(b, 2);
  EXPECT_EQ(d.support().size(), 1u);
  EXPECT_EQ(Divisor::point(a, 0), Divisor());
}

TEST(Divisor, OrbitSums) {
  const HermitianCurve c(2, 1);
  const Field& f = c.base_field();
  const auto inst = gpk::make_hermitian_instance(c, 3);
  EXPECT_EQ(gpk::orbit_sum(inst.g1, inst.p2).degree(), 24);
  EXPECT_EQ(gpk::orbit_sum(inst.g1, inst.p2), brute_orbit_sum(inst.g1, inst.p2));
  EXPECT_EQ(gpk::orbit_sum(inst.g1, inst.p1), Divisor::point(inst.p1, 24));
  EXPECT_EQ(gpk::orbit_sum(inst.h, inst.p1), Divisor::point(inst.p1, 3));
  for (const auto& p : gpk::rational_points(c, f)) {
    EXPECT_EQ(gpk::orbit_sum(inst.g2, p), brute_orbit_sum(inst.g2, p));
    EXPECT_EQ(gpk::orbit_sum(inst.h, p), brute_orbit_sum(inst.h, p));
  }
}

TEST(Divisor, PolesOfWitness) {
  const HermitianCurve c(3, 1);
  const Field& f = c.base_field();
  const auto pts = gpk::rational_points(c, f);
  const auto poles = gpk::pole_divisor_on(gpk::witness_t1(c, f), pts);
  EXPECT_EQ(poles, Divisor::point(c.p1(f), 27));
  const auto inv = gpk::pole_divisor_on(gpk::witness_t1(c, f).inverse(), pts);
  EXPECT_EQ(inv.degree(), 27);
  EXPECT_EQ(inv.support().size(), 27u);
}

class CriterionByCurve : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(CriterionByCurve, HoldsForEveryDivisor) {
  const HermitianCurve c(GetParam().first, GetParam().second);
  const std::uint64_t q = c.q();
  for (std::uint64_t m : divisors(q * q - 1)) {
    const auto inst = gpk::make_hermitian_instance(c, m);
    const auto r = gpk::verify_tuple(gpk::to_tuple(inst));
    ASSERT_TRUE(r.overall) << "m=" << m << " failed " << r.first_failure();
    EXPECT_TRUE(r.first_failure().empty());
    // (d): both sides equal m times the sum over Q in Ω.
    Divisor expected;
    for (const auto& p : gpk::rational_points(c, c.base_field())) expected.add(p, static_cast<std::int64_t>(m));
    EXPECT_EQ(r.d->lhs, expected);
    EXPECT_EQ(r.d->rhs, expected);
    EXPECT_EQ(r.b->intersection_order, m);
    ASSERT_TRUE(r.galois.has_value());
    EXPECT_EQ(r.galois->projection_degree, q * q * q);
    EXPECT_EQ(r.galois->degree, q * q * q + 1);
    EXPECT_TRUE(r.galois->closure_is_function_field);
    EXPECT_EQ(r.galois->semidirect1, std::optional<bool>(true));
    const auto s = gpk::verify_tuple(gpk::swapped(gpk::to_tuple(inst)));
    EXPECT_TRUE(s.overall) << s.first_failure();
  }
}

TEST_P(CriterionByCurve, OuterPoints) {
  const HermitianCurve c(GetParam().first, GetParam().second);
  const Field& f = c.base_field();
  const auto inst = gpk::make_hermitian_instance(c, c.q() + 1);
  // With G1 = G2 every point trivially satisfies the identity.
  EXPECT_TRUE(gpk::check_outer_point(c, inst.g1, inst.g1, c.p2(f)).holds);
  EXPECT_FALSE(gpk::check_outer_point(c, inst.g1, inst.g2, c.p1(f)).holds);
  for (const auto& p : gpk::rational_points(c, f)) {
    if (p == c.p1(f) || p == c.p2(f)) continue;
    const auto v = gpk::check_outer_point(c, inst.g1, inst.g2, p);
    EXPECT_FALSE(v.holds) << p.to_string();
    EXPECT_EQ(v.lhs, brute_orbit_sum(inst.g1, p));
  }
  EXPECT_THROW(gpk::check_outer_point(c, inst.g1, inst.g2, ProjPoint(f.one(), f.one(), f.one())),
               gpk::CriterionError);
}

INSTANTIATE_TEST_SUITE_P(SmallQ, CriterionByCurve,
                         ::testing::Values(std::make_pair(2u, 1u), std::make_pair(3u, 1u)));

TEST(CriterionNegative, HNotInsideG) {
  const HermitianCurve c(3, 1);
  const auto inst = gpk::make_hermitian_instance(c, 2);
  auto t = gpk::to_tuple(inst);
  t.h = gpk::cyclic_subgroup(c, 8);
  const auto r = gpk::verify_tuple(t);
  EXPECT_FALSE(r.overall);
  EXPECT_FALSE(r.preconditions_hold);
  EXPECT_EQ(r.first_failure(), "H subset of G1");
  EXPECT_FALSE(r.a.has_value());
}

TEST(CriterionNegative, SecondPointOverExtension) {
  const HermitianCurve c(2, 1);
  const auto inst = gpk::make_hermitian_instance(c, 3);
  const Field& big = c.tower_field(3);
  const auto& emb = c.embedding_into(big);
  auto t = gpk::to_tuple(inst);
  t.kernel1 = t.kernel1.embed(emb);
  t.kernel2 = t.kernel2.embed(emb);
  t.h = t.h.embed(emb);
  t.g1 = t.g1.embed(emb);
  t.g2 = t.g2.embed(emb);
  t.unipotent1.reset();
  t.unipotent2.reset();
  t.p1 = t.p1.embed(emb);
  t.w1.function = t.w1.function.embed(emb);
  t.w2.function = t.w2.function.embed(emb);
  t.w1.pole = t.w1.pole.embed(emb);
  t.w2.pole = t.w2.pole.embed(emb);
  // An affine point over GF(64) with y outside GF(4).
  std::optional<ProjPoint> outer;
  for (const auto& p : gpk::rational_points(c, big)) {
    if (p.is_affine() && !gpk::in_subfield(p.affine().second, 4)) {
      outer = p;
      break;
    }
  }
  ASSERT_TRUE(outer.has_value());
  t.p2 = *outer;
  const auto r = gpk::verify_tuple(t);
  ASSERT_TRUE(r.preconditions_hold) << r.first_failure();
  EXPECT_FALSE(r.overall);
  ASSERT_TRUE(r.d.has_value());
  EXPECT_FALSE(r.d->holds);
}

TEST(CriterionNegative, CentreInsteadOfUnipotentGroup) {
  const HermitianCurve c(2, 1);
  const Field& f = c.base_field();
  const auto inst = gpk::make_hermitian_instance(c, 3);
  std::vector<ProjMatrix> gens;
  for (std::uint64_t bv = 1; bv < f.size(); ++bv) {
    const Elem b = f(bv);
    if (gpk::hermitian_pair_check(f.zero(), b, c.q())) gens.push_back(gpk::sigma(c, f.zero(), b));
  }
  gens.push_back(gpk::eta(c, gpk::cyclic_scale(c, 3)));
  auto t = gpk::to_tuple(inst);
  t.g1 = gpk::closure(f, gens);
  t.unipotent1.reset();
  EXPECT_EQ(t.g1.order(), 2u * 3u);
  const auto r = gpk::verify_tuple(t);
  ASSERT_TRUE(r.preconditions_hold) << r.first_failure();
  EXPECT_FALSE(r.overall);
  EXPECT_FALSE(r.a->holds);
  EXPECT_FALSE(r.d->holds);
  EXPECT_EQ(r.first_failure(), "a");
}

TEST(CriterionNegative, WrongDiagonalDoesNotPreserveCurve) {
  const HermitianCurve c(2, 1);
  const Field& f = c.base_field();
  const auto inst = gpk::make_hermitian_instance(c, 3);
  const Elem g = gpk::cyclic_scale(c, 3);
  const ProjMatrix bad({g, f.zero(), f.zero(), f.zero(), g.pow(3), f.zero(), f.zero(), f.zero(), f.one()});
  auto gens = inst.u1.generators();
  gens.push_back(bad);
  auto t = gpk::to_tuple(inst);
  t.g1 = gpk::closure(f, gens);
  const auto r = gpk::verify_tuple(t);
  EXPECT_FALSE(r.overall);
  EXPECT_EQ(r.first_failure(), "G1 preserves curve");
}

TEST(CriterionNegative, NonDivisorOrder) {
  const HermitianCurve c(3, 1);
  EXPECT_THROW(gpk::make_hermitian_instance(c, 3), gpk::GroupError);
  EXPECT_THROW(gpk::make_hermitian_instance(c, 16), gpk::GroupError);
}

TEST(CriterionNegative, SmallerGroupsFailIntersection) {
  // G_i = C_3 only, H trivial: the intersection is C_3, not H.
  const HermitianCurve c(2, 1);
  const Field& f = c.base_field();
  const auto inst = gpk::make_hermitian_instance(c, 3);
  auto t = gpk::to_tuple(inst);
  t.g1 = inst.h;
  t.g2 = inst.h;
  t.h = gpk::trivial_group(f);
  t.kernel1 = t.h;
  t.kernel2 = t.h;
  t.unipotent1.reset();
  t.unipotent2.reset();
  const auto r = gpk::verify_tuple(t);
  ASSERT_TRUE(r.preconditions_hold);
  EXPECT_FALSE(r.b->holds);
  EXPECT_EQ(r.b->intersection_order, 3u);
  EXPECT_FALSE(r.overall);
}

TEST(CriterionNegative, MixedFieldsRejected) {
  const HermitianCurve c(2, 1);
  const auto inst = gpk::make_hermitian_instance(c, 3);
  auto t = gpk::to_tuple(inst);
  t.p2 = t.p2.embed(c.embedding_into(c.tower_field(2)));
  const auto r = gpk::verify_tuple(t);
  EXPECT_EQ(r.first_failure(), "common field");
}

TEST(ConditionC, KernelsAndBounds) {
  const HermitianCurve c(3, 1);
  const Field& f = c.base_field();
  const auto inst = gpk::make_hermitian_instance(c, 8);
  std::vector<std::size_t> surviving;
  EXPECT_TRUE(gpk::condition_c(gpk::trivial_group(f), inst.h, inst.g1, &surviving));
  EXPECT_EQ(surviving, std::vector<std::size_t>{1});
  EXPECT_THROW(gpk::condition_c(inst.h, gpk::trivial_group(f), inst.g1), gpk::CriterionError);
  EXPECT_THROW(gpk::condition_b(inst.g1, inst.h, inst.g2), gpk::CriterionError);
}

TEST(ConditionE, DistinctOrbits) {
  const HermitianCurve c(2, 1);
  const auto inst = gpk::make_hermitian_instance(c, 3);
  EXPECT_TRUE(gpk::condition_e(inst.h, inst.p1, inst.p2).holds);
  EXPECT_FALSE(gpk::condition_e(inst.h, inst.p1, inst.p1).holds);
}
