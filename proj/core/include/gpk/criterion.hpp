#pragma once

// Divisors on curve points and the tuple criterion (a)-(e) for a pair of
// projections from two points of a quotient X/H.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpk/funcfield.hpp"

namespace gpk {

class Divisor {
 public:
  using Support = std::map<ProjPoint, std::int64_t>;

  Divisor() = default;
  static Divisor point(const ProjPoint& p, std::int64_t mult = 1);

  void add(const ProjPoint& p, std::int64_t mult);
  std::int64_t multiplicity(const ProjPoint& p) const;
  std::int64_t degree() const;
  bool is_zero() const noexcept { return support_.empty(); }
  const Support& support() const noexcept { return support_; }

  Divisor positive_part() const;
  Divisor negative_part() const;  // returned with positive multiplicities
  Divisor scaled(std::int64_t k) const;
  std::string to_string() const;

  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  Support support_;  // no zero entries
};

/// sum over g in G of g(P); each orbit point carries the stabilizer order.
Divisor orbit_sum(const MatrixGroup& g, const ProjPoint& p);

/// Pole divisor of F restricted to the given points.
Divisor pole_divisor_on(const CurveFunction& f, const std::vector<ProjPoint>& points);

struct Witness {
  CurveFunction function;
  ProjPoint pole;
  std::string label;
};

struct ConditionA {
  bool holds = false;
  RationalityCertificate cert1;
  RationalityCertificate cert2;
  std::string witness1;
  std::string witness2;
};

struct ConditionB {
  bool holds = false;
  std::size_t intersection_order = 0;
  std::size_t h_order = 0;
  std::vector<ProjMatrix> intersection_generators;
};

struct ConditionC {
  bool holds = false;
  // Orders of the normal subgroups of G_i lying between N_i and H.
  std::vector<std::size_t> surviving1;
  std::vector<std::size_t> surviving2;
};

struct ConditionD {
  bool holds = false;
  Divisor lhs;
  Divisor rhs;
};

struct ConditionE {
  bool holds = false;
  std::vector<ProjPoint> orbit1;
  std::vector<ProjPoint> orbit2;
};

/// Single-group rationality verdict.
RationalityCertificate condition_a(const HermitianCurve& c, const MatrixGroup& g, const Witness& w);
/// Throws CriterionError unless H is contained in G1 and G2.
ConditionB condition_b(const MatrixGroup& g1, const MatrixGroup& g2, const MatrixGroup& h);
/// Normal subgroups of G between N and H; holds iff N is the only one.
/// Throws CriterionError unless N <= H <= G.
bool condition_c(const MatrixGroup& n, const MatrixGroup& h, const MatrixGroup& g,
                 std::vector<std::size_t>* surviving = nullptr);
ConditionD condition_d(const MatrixGroup& h, const MatrixGroup& g1, const MatrixGroup& g2, const ProjPoint& p1,
                       const ProjPoint& p2);
ConditionE condition_e(const MatrixGroup& h, const ProjPoint& p1, const ProjPoint& p2);

struct OuterVerdict {
  bool holds = false;
  Divisor lhs;
  Divisor rhs;
};
/// sum_{G1} s(Q) == sum_{G2} t(Q). Throws CriterionError if Q is off the curve.
OuterVerdict check_outer_point(const HermitianCurve& c, const MatrixGroup& g1, const MatrixGroup& g2,
                               const ProjPoint& q);

struct TupleInput {
  HermitianCurve curve;
  MatrixGroup kernel1;  // N_i; trivial for the basic criterion
  MatrixGroup kernel2;
  MatrixGroup h;
  MatrixGroup g1;
  MatrixGroup g2;
  ProjPoint p1;
  ProjPoint p2;
  Witness w1;  // for G1
  Witness w2;  // for G2
  // Optional unipotent parts U_i with G_i = U_i x| H, recorded in the Galois data.
  std::optional<MatrixGroup> unipotent1;
  std::optional<MatrixGroup> unipotent2;
};

/// Exchanges the roles of the two points.
TupleInput swapped(const TupleInput& t);

struct Precondition {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct GaloisData {
  std::uint64_t degree = 0;             // (G1:H) + 1
  std::uint64_t projection_degree = 0;  // (G1:H)
  std::uint64_t galois_order1 = 0;      // |G1 / N1|
  std::uint64_t galois_order2 = 0;
  bool closure_is_function_field = false;  // both N_i trivial
  std::optional<bool> semidirect1;
  std::optional<bool> semidirect2;
};

struct CriterionReport {
  std::vector<Precondition> preconditions;
  bool preconditions_hold = false;
  std::optional<ConditionA> a;
  std::optional<ConditionB> b;
  std::optional<ConditionC> c;
  std::optional<ConditionD> d;
  std::optional<ConditionE> e;
  bool overall = false;
  std::optional<GaloisData> galois;

  /// First failed precondition or condition letter, empty if overall.
  std::string first_failure() const;
};

CriterionReport verify_tuple(const TupleInput& t);

/// The standard instance: U1 = {sigma_{a,b}}, U2 = its conjugate by (X:Y:Z) -> (Z:Y:X),
/// H = C_m, G_i = U_i x| C_m, P1 = (1:0:0), P2 = (0:0:1), witnesses t1^m, t2^m.
struct HermitianInstance {
  HermitianCurve curve;
  std::uint64_t m;
  MatrixGroup u1;
  MatrixGroup u2;
  MatrixGroup h;
  MatrixGroup g1;
  MatrixGroup g2;
  ProjPoint p1;
  ProjPoint p2;
  Witness w1;
  Witness w2;
};

/// Throws GroupError if m does not divide q^2 - 1.
HermitianInstance make_hermitian_instance(const HermitianCurve& c, std::uint64_t m);
/// Tuple with trivial kernels.
TupleInput to_tuple(const HermitianInstance& inst);

}  // namespace gpk
