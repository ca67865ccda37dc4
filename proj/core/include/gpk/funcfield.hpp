#pragma once

// The Hermitian function field k(x, y), x^q + x = y^(q+1).
//
// Polynomials are kept in the canonical form sum c_ij x^i y^j with j <= q,
// obtained by rewriting y^(q+1) -> x^q + x. Monomials of this form have
// pairwise distinct pole orders (q+1) i + q j at P1 = (1:0:0) and pairwise
// distinct vanishing orders (q+1) i + j at P2 = (0:0:1), which makes
// valuations at both points a minimum over the support.

#include <cstdint>
#include <string>
#include <vector>

#include "gpk/groups.hpp"

namespace gpk {

class CurvePoly {
 public:
  struct Term {
    std::uint32_t i;  // x exponent
    std::uint32_t j;  // y exponent
    Elem c;
  };

  CurvePoly(const Field& f, std::uint64_t q);

  /// Canonical form of sum c x^i y^j; any y exponent is accepted.
  static CurvePoly reduce(const Field& f, std::uint64_t q, const std::vector<Term>& terms);
  static CurvePoly constant(const Elem& c, std::uint64_t q);
  static CurvePoly x(const Field& f, std::uint64_t q);
  static CurvePoly y(const Field& f, std::uint64_t q);
  /// a x + b y + c.
  static CurvePoly linear(const Elem& a, const Elem& b, const Elem& c, std::uint64_t q);

  const Field& field() const noexcept { return *field_; }
  std::uint64_t q() const noexcept { return q_; }
  bool is_zero() const noexcept { return rows_.empty(); }
  bool is_constant() const noexcept;
  /// Single term c x^i y^j.
  bool is_monomial() const noexcept;
  std::size_t term_count() const noexcept;
  /// Terms ordered by (i, j).
  std::vector<Term> terms() const;
  Elem coeff(std::uint32_t i, std::uint32_t j) const;

  std::uint32_t total_degree() const;
  /// -v_P1 of the polynomial: max (q+1) i + q j over the support.
  std::int64_t pole_order() const;
  /// v_P2 of the polynomial: min (q+1) i + j over the support.
  std::int64_t origin_order() const;
  /// Coefficient of the support monomial realizing origin_order.
  Elem origin_leading_coeff() const;
  /// Coefficient of the support monomial realizing pole_order.
  Elem pole_leading_coeff() const;

  Elem eval(const Elem& x, const Elem& y) const;
  CurvePoly embed(const FieldEmbedding& emb) const;
  CurvePoly pow(std::uint64_t e) const;
  CurvePoly scaled(const Elem& c) const;

  CurvePoly& operator+=(const CurvePoly& o);
  CurvePoly& operator-=(const CurvePoly& o);
  friend CurvePoly operator+(CurvePoly a, const CurvePoly& b) { return a += b; }
  friend CurvePoly operator-(CurvePoly a, const CurvePoly& b) { return a -= b; }
  friend CurvePoly operator*(const CurvePoly& a, const CurvePoly& b);
  CurvePoly operator-() const;
  friend bool operator==(const CurvePoly& a, const CurvePoly& b);

 private:
  using Row = std::vector<Field::Value>;
  friend class PolyKernel;

  const Field* field_;
  std::uint64_t q_;
  std::vector<Row> rows_;  // rows_[j][i], j <= q, trimmed
};

/// Element of k(X) as num/den. Equality is tested by cross multiplication.
class CurveFunction {
 public:
  explicit CurveFunction(CurvePoly num);
  /// Throws FunctionFieldError if den is zero.
  CurveFunction(CurvePoly num, CurvePoly den);

  static CurveFunction x(const Field& f, std::uint64_t q);
  static CurveFunction y(const Field& f, std::uint64_t q);
  static CurveFunction constant(const Elem& c, std::uint64_t q);

  const CurvePoly& num() const noexcept { return num_; }
  const CurvePoly& den() const noexcept { return den_; }
  const Field& field() const noexcept { return num_.field(); }
  std::uint64_t q() const noexcept { return num_.q(); }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// Value at an affine point; throws FunctionFieldError at a zero of den.
  Elem eval(const Elem& x, const Elem& y) const;
  CurveFunction embed(const FieldEmbedding& emb) const;
  /// Negative exponents invert.
  CurveFunction pow(std::int64_t e) const;
  CurveFunction inverse() const;

  friend CurveFunction operator+(const CurveFunction& a, const CurveFunction& b);
  friend CurveFunction operator-(const CurveFunction& a, const CurveFunction& b);
  friend CurveFunction operator*(const CurveFunction& a, const CurveFunction& b);
  friend CurveFunction operator/(const CurveFunction& a, const CurveFunction& b);
  friend bool operator==(const CurveFunction& a, const CurveFunction& b);

 private:
  CurvePoly num_;
  CurvePoly den_;
};

/// True iff the matrix maps the curve onto itself.
bool preserves_curve(const ProjMatrix& m, std::uint64_t q);

/// F o sigma. Contravariant: pullback(s t, F) = pullback(t, pullback(s, F)).
/// Throws FunctionFieldError if sigma does not preserve the curve.
CurveFunction pullback(const ProjMatrix& sigma, const CurveFunction& f);

/// Throws FunctionFieldError for the zero function.
std::int64_t valuation_at_p1(const CurveFunction& f);

/// v_P(F) for any point P of the curve over F's field. Points with
/// y-coordinate in GF(q^2) are moved to P2 by sigma_{y0,x0}; other affine
/// points use a power series in the uniformizer y - y0.
std::int64_t valuation_at_point(const CurveFunction& f, const ProjPoint& p);

/// Leading term of F in a local parameter at P (order and coefficient).
/// The parameter is fixed per point, so leading coefficients of different
/// functions at the same point are comparable.
struct LaurentLead {
  std::int64_t order;
  Elem coeff;
};
LaurentLead leading_term(const CurveFunction& f, const ProjPoint& p);

/// Order of vanishing of a polynomial at an affine point via the truncated
/// expansion x = x0 + u(t), y = y0 + t. Independent of the translation path.
std::int64_t series_order(const CurvePoly& poly, const Elem& x0, const Elem& y0);

/// pullback(g, F) == F for every generator g.
bool is_invariant(const CurveFunction& f, const MatrixGroup& g);
/// Same, against every element.
bool is_invariant_all(const CurveFunction& f, const MatrixGroup& g);

/// Certificate that k(X)^G = k(F): (i) F is G-invariant, (ii) v_pole(F) = -|G|,
/// (iii) the pole divisor is supported on rational points (monomial
/// denominator) and has total degree |G|.
struct RationalityCertificate {
  bool invariant = false;
  std::int64_t pole_order_at_point = 0;
  std::int64_t group_order = 0;
  bool pole_support_certified = false;
  std::int64_t rational_pole_degree = 0;
  bool valid = false;
  std::string failed_clause;  // empty when valid
};

RationalityCertificate rationality_witness(const HermitianCurve& c, const MatrixGroup& g, const CurveFunction& f,
                                           const ProjPoint& pole);

/// y^(q^2) - y over f, the N1 witness.
CurveFunction witness_t1(const HermitianCurve& c, const Field& f);
/// (y/x)^(q^2) - y/x over f, the N2 witness.
CurveFunction witness_t2(const HermitianCurve& c, const Field& f);

}  // namespace gpk
