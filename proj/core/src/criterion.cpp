#include "gpk/criterion.hpp"

#include <algorithm>
#include <sstream>

namespace gpk {

// ---- Divisor ------------------------------------------------------------------

Divisor Divisor::point(const ProjPoint& p, std::int64_t mult) {
  Divisor d;
  d.add(p, mult);
  return d;
}

void Divisor::add(const ProjPoint& p, std::int64_t mult) {
  if (mult == 0) return;
  auto [it, inserted] = support_.try_emplace(p, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) support_.erase(it);
  }
}

std::int64_t Divisor::multiplicity(const ProjPoint& p) const {
  const auto it = support_.find(p);
  return it == support_.end() ? 0 : it->second;
}

std::int64_t Divisor::degree() const {
  std::int64_t d = 0;
  for (const auto& [p, m] : support_) d += m;
  return d;
}

Divisor Divisor::positive_part() const {
  Divisor out;
  for (const auto& [p, m] : support_)
    if (m > 0) out.support_.emplace(p, m);
  return out;
}

Divisor Divisor::negative_part() const {
  Divisor out;
  for (const auto& [p, m] : support_)
    if (m < 0) out.support_.emplace(p, -m);
  return out;
}

Divisor Divisor::scaled(std::int64_t k) const {
  Divisor out;
  if (k == 0) return out;
  for (const auto& [p, m] : support_) out.support_.emplace(p, m * k);
  return out;
}

std::string Divisor::to_string() const {
  if (support_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, m] : support_) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m << '*';
    os << p.to_string();
  }
  return os.str();
}

Divisor& Divisor::operator+=(const Divisor& o) {
  for (const auto& [p, m] : o.support_) add(p, m);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  for (const auto& [p, m] : o.support_) add(p, -m);
  return *this;
}

Divisor orbit_sum(const MatrixGroup& g, const ProjPoint& p) {
  if (&g.field() != &p.field()) throw CriterionError("orbit sum: group and point over different fields");
  Divisor d;
  for (const auto& m : g.elements()) d.add(apply(m, p), 1);
  return d;
}

Divisor pole_divisor_on(const CurveFunction& f, const std::vector<ProjPoint>& points) {
  Divisor d;
  for (const auto& p : points) {
    const std::int64_t v = valuation_at_point(f, p);
    if (v < 0) d.add(p, -v);
  }
  return d;
}

// ---- conditions ---------------------------------------------------------------

RationalityCertificate condition_a(const HermitianCurve& c, const MatrixGroup& g, const Witness& w) {
  return rationality_witness(c, g, w.function, w.pole);
}

ConditionB condition_b(const MatrixGroup& g1, const MatrixGroup& g2, const MatrixGroup& h) {
  if (!h.is_subset_of(g1) || !h.is_subset_of(g2)) throw CriterionError("condition (b): H is not contained in G1 and G2");
  const MatrixGroup inter = intersect(g1, g2);
  ConditionB out;
  out.intersection_order = inter.order();
  out.h_order = h.order();
  out.intersection_generators = inter.generators();
  out.holds = inter == h;
  return out;
}

bool condition_c(const MatrixGroup& n, const MatrixGroup& h, const MatrixGroup& g, std::vector<std::size_t>* surviving) {
  if (!n.is_subset_of(h) || !h.is_subset_of(g)) throw CriterionError("condition (c): requires N <= H <= G");
  const auto subs = normal_subgroups_between(n, h, g);
  if (surviving) {
    surviving->clear();
    for (const auto& s : subs) surviving->push_back(s.order());
  }
  return subs.size() == 1 && subs.front() == n;
}

ConditionD condition_d(const MatrixGroup& h, const MatrixGroup& g1, const MatrixGroup& g2, const ProjPoint& p1,
                       const ProjPoint& p2) {
  ConditionD out;
  out.lhs = orbit_sum(h, p1) + orbit_sum(g1, p2);
  out.rhs = orbit_sum(h, p2) + orbit_sum(g2, p1);
  out.holds = out.lhs == out.rhs;
  return out;
}

ConditionE condition_e(const MatrixGroup& h, const ProjPoint& p1, const ProjPoint& p2) {
  ConditionE out;
  out.orbit1 = orbit(h, p1);
  out.orbit2 = orbit(h, p2);
  out.holds = out.orbit1 != out.orbit2;
  return out;
}

OuterVerdict check_outer_point(const HermitianCurve& c, const MatrixGroup& g1, const MatrixGroup& g2,
                               const ProjPoint& q) {
  if (!on_curve(c, q)) throw CriterionError("point " + q.to_string() + " is not on the curve");
  OuterVerdict out;
  out.lhs = orbit_sum(g1, q);
  out.rhs = orbit_sum(g2, q);
  out.holds = out.lhs == out.rhs;
  return out;
}

// ---- tuple ----------------------------------------------------------------------

TupleInput swapped(const TupleInput& t) {
  return TupleInput{t.curve, t.kernel2, t.kernel1, t.h,  t.g2, t.g1, t.p2, t.p1, t.w2, t.w1, t.unipotent2,
                    t.unipotent1};
}

std::string CriterionReport::first_failure() const {
  for (const auto& p : preconditions)
    if (!p.holds) return p.name;
  if (a && !a->holds) return "a";
  if (b && !b->holds) return "b";
  if (c && !c->holds) return "c";
  if (d && !d->holds) return "d";
  if (e && !e->holds) return "e";
  return {};
}

namespace {

void require(std::vector<Precondition>& out, std::string name, bool holds, std::string detail = {}) {
  out.push_back({std::move(name), holds, holds ? std::string{} : std::move(detail)});
}

bool all_preserve(const MatrixGroup& g, std::uint64_t q, std::string& bad) {
  const auto& gens = g.generators().empty() ? g.elements() : g.generators();
  for (const auto& m : gens) {
    if (!preserves_curve(m, q)) {
      bad = m.to_string();
      return false;
    }
  }
  return true;
}

}  // namespace

CriterionReport verify_tuple(const TupleInput& t) {
  CriterionReport r;
  auto& pre = r.preconditions;
  const Field& f = t.g1.field();
  const std::uint64_t q = t.curve.q();

  const bool same_field = &t.g2.field() == &f && &t.h.field() == &f && &t.kernel1.field() == &f &&
                          &t.kernel2.field() == &f && &t.p1.field() == &f && &t.p2.field() == &f &&
                          &t.w1.function.field() == &f && &t.w2.function.field() == &f;
  require(pre, "common field", same_field, "groups, points and witnesses must share one field");
  if (!same_field) return r;

  require(pre, "P1 on curve", on_curve(t.curve, t.p1), t.p1.to_string());
  require(pre, "P2 on curve", on_curve(t.curve, t.p2), t.p2.to_string());
  std::string bad;
  require(pre, "G1 preserves curve", all_preserve(t.g1, q, bad), bad);
  require(pre, "G2 preserves curve", all_preserve(t.g2, q, bad), bad);
  require(pre, "H subset of G1", t.h.is_subset_of(t.g1));
  require(pre, "H subset of G2", t.h.is_subset_of(t.g2));
  require(pre, "N1 subset of H", t.kernel1.is_subset_of(t.h));
  require(pre, "N2 subset of H", t.kernel2.is_subset_of(t.h));
  r.preconditions_hold = std::all_of(pre.begin(), pre.end(), [](const Precondition& p) { return p.holds; });
  if (!r.preconditions_hold) return r;
  require(pre, "N1 normal in G1", is_normal(t.kernel1, t.g1));
  require(pre, "N2 normal in G2", is_normal(t.kernel2, t.g2));
  r.preconditions_hold = pre[pre.size() - 1].holds && pre[pre.size() - 2].holds;
  if (!r.preconditions_hold) return r;

  ConditionA a;
  a.cert1 = condition_a(t.curve, t.g1, t.w1);
  a.cert2 = condition_a(t.curve, t.g2, t.w2);
  a.witness1 = t.w1.label;
  a.witness2 = t.w2.label;
  a.holds = a.cert1.valid && a.cert2.valid;
  r.a = std::move(a);

  r.b = condition_b(t.g1, t.g2, t.h);

  ConditionC c;
  const bool c1 = condition_c(t.kernel1, t.h, t.g1, &c.surviving1);
  const bool c2 = condition_c(t.kernel2, t.h, t.g2, &c.surviving2);
  c.holds = c1 && c2;
  r.c = std::move(c);

  r.d = condition_d(t.h, t.g1, t.g2, t.p1, t.p2);
  r.e = condition_e(t.h, t.p1, t.p2);
  r.overall = r.a->holds && r.b->holds && r.c->holds && r.d->holds && r.e->holds;

  if (r.overall) {
    GaloisData g;
    g.projection_degree = t.g1.order() / t.h.order();
    g.degree = g.projection_degree + 1;
    g.galois_order1 = t.g1.order() / t.kernel1.order();
    g.galois_order2 = t.g2.order() / t.kernel2.order();
    g.closure_is_function_field = t.kernel1.is_trivial() && t.kernel2.is_trivial();
    if (t.unipotent1) g.semidirect1 = check_semidirect(t.g1, *t.unipotent1, t.h);
    if (t.unipotent2) g.semidirect2 = check_semidirect(t.g2, *t.unipotent2, t.h);
    r.galois = g;
  }
  return r;
}

HermitianInstance make_hermitian_instance(const HermitianCurve& c, std::uint64_t m) {
  const Field& f = c.base_field();
  MatrixGroup h = cyclic_subgroup(c, m);
  MatrixGroup u1 = n1_subgroup(c);
  MatrixGroup u2 = n2_subgroup(c);
  auto gens1 = u1.generators();
  auto gens2 = u2.generators();
  if (m > 1) {
    const ProjMatrix e = eta(c, cyclic_scale(c, m));
    gens1.push_back(e);
    gens2.push_back(e);
  }
  MatrixGroup g1 = closure(f, gens1);
  MatrixGroup g2 = closure(f, gens2);
  const auto me = static_cast<std::int64_t>(m);
  Witness w1{witness_t1(c, f).pow(me), c.p1(f), m == 1 ? "t1" : "t1^" + std::to_string(m)};
  Witness w2{witness_t2(c, f).pow(me), c.p2(f), m == 1 ? "t2" : "t2^" + std::to_string(m)};
  return HermitianInstance{c,  m,        std::move(u1), std::move(u2), std::move(h), std::move(g1),
                           std::move(g2), c.p1(f), c.p2(f), std::move(w1), std::move(w2)};
}

TupleInput to_tuple(const HermitianInstance& inst) {
  const Field& f = inst.curve.base_field();
  return TupleInput{inst.curve, trivial_group(f), trivial_group(f), inst.h,  inst.g1, inst.g2,
                    inst.p1,    inst.p2,          inst.w1,          inst.w2, inst.u1, inst.u2};
}

}  // namespace gpk
