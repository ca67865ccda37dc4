#pragma once

// Generators f, g of the two fixed fields, the map (f : g : 1) and the plane
// model of its image, plus the quotient model of X/C_m.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpk/criterion.hpp"

namespace gpk {

struct GeneratorPair {
  CurveFunction f;  // generator of k(X)^{G1}, poles on the G1-orbit of P2
  CurveFunction g;  // generator of k(X)^{G2}, poles on the G2-orbit of P1
  Divisor f_poles;
  Divisor g_poles;
  std::string f_label;
  std::string g_label;

  GeneratorPair swapped() const;
};

/// f = 1/t1^m, g = 1/t2^m with certified pole divisors. Throws ConstructError
/// if a witness certificate or pole divisor check fails.
GeneratorPair build_f_g(const HermitianInstance& inst);

/// Image of a curve point under (f : g : 1). Poles are cleared projectively;
/// leading terms are used where all cleared components vanish.
ProjPoint phi_at(const GeneratorPair& fg, const ProjPoint& p);

struct PlaneModel {
  struct Monomial {
    std::uint32_t i;  // X exponent
    std::uint32_t j;  // Y exponent
    std::uint32_t k;  // Z exponent
    Elem c;
  };

  const Field* field = nullptr;  // GF(q^2)
  std::uint32_t degree = 0;
  std::vector<Monomial> monomials;  // nonzero, lexicographically descending
  std::vector<ProjPoint> marked_points;
  std::uint32_t p = 0, e = 0;
  std::uint64_t m = 0;
  std::uint32_t sampling_level = 0;
  std::size_t samples_used = 0;
  std::size_t nullity = 0;
  std::string f_label, g_label;

  /// Value at a point over any field containing GF(q^2).
  Elem eval(const ProjPoint& pt) const;
  Elem coeff(std::uint32_t i, std::uint32_t j, std::uint32_t k) const;
  std::uint32_t degree_in_x() const;
  std::uint32_t degree_in_y() const;
  std::uint32_t degree_in_z() const;
  /// e.g. "X^8*Y + (01)*X^3*Y^2*Z^4 + ..."
  std::string to_string() const;
};

/// Interpolates the unique form of degree (G1:H)+1 through the images of
/// curve points over GF(q^(2k)). Without a level, k is raised until one level
/// yields 3 * binom(d+2, 2) distinct images. Throws ConstructError if the
/// nullspace is not one-dimensional or a coefficient lies outside GF(q^2).
PlaneModel plane_model(const HermitianInstance& inst, const GeneratorPair& fg,
                       std::optional<std::uint32_t> sampling_level = std::nullopt);

/// Point images used for sampling at level k, distinct, in enumeration order.
std::vector<ProjPoint> sample_images(const HermitianInstance& inst, const GeneratorPair& fg, std::uint32_t level);

struct ModelCertificate {
  bool degree_ok = false;          // (i)
  std::uint32_t expected_degree = 0;
  bool smooth1 = false;            // (ii)
  bool smooth2 = false;
  bool line_divisor_ok = false;    // (iii)
  std::uint32_t line_divisor_degree = 0;
  std::uint32_t projection_degree1 = 0;  // (iv)
  std::uint32_t projection_degree2 = 0;
  bool projection_ok = false;
  bool valid = false;
  std::string failed_clause;
};

/// (i) degree, (ii) smooth marked points, (iii) F restricted to the line
/// through the marked points equals the image of D^H, (iv) projection degree
/// from each marked point is (G1:H).
ModelCertificate certify_model(const PlaneModel& model, const HermitianInstance& inst, const GeneratorPair& fg);

struct QuotientModel {
  std::uint64_t q = 0, m = 0, s = 0;
  CurveFunction x;
  CurveFunction u;  // y^m
  bool x_invariant = false;
  bool u_invariant = false;
  bool relation_holds = false;   // x^q + x = u^s in k(X)
  bool degree_certified = false; // y has m distinct conjugates, roots of T^m - u
  bool valid = false;
  std::string relation;
};

/// Throws ConstructError unless m divides q + 1.
QuotientModel quotient_plane_model(const HermitianCurve& c, std::uint64_t m);

}  // namespace gpk
