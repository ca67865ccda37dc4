#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gpk/ffield.hpp"

namespace gpk {

/// Point of P^2 normalized so that its first nonzero coordinate is 1.
class ProjPoint {
 public:
  ProjPoint() = default;
  /// Throws GeometryError if all coordinates vanish or fields differ.
  ProjPoint(const Elem& x, const Elem& y, const Elem& z);

  const Elem& operator[](std::size_t i) const { return c_[i]; }
  const Elem& x() const { return c_[0]; }
  const Elem& y() const { return c_[1]; }
  const Elem& z() const { return c_[2]; }
  const Field& field() const { return c_[0].field(); }
  bool is_affine() const { return !c_[2].is_zero(); }
  /// (X/Z, Y/Z); throws for points at infinity.
  std::pair<Elem, Elem> affine() const;
  ProjPoint embed(const FieldEmbedding& emb) const;
  std::string to_string() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint& a, const ProjPoint& b) { return a.c_ <=> b.c_; }

 private:
  std::array<Elem, 3> c_{};
};

/// Invertible 3x3 matrix modulo scalars, normalized so that the first nonzero
/// entry in row-major order is 1.
class ProjMatrix {
 public:
  ProjMatrix() = default;
  /// Row-major entries. Throws GeometryError if singular.
  explicit ProjMatrix(const std::array<Elem, 9>& entries);

  static ProjMatrix identity(const Field& f);

  const Elem& operator()(std::size_t r, std::size_t c) const { return e_[3 * r + c]; }
  const std::array<Elem, 9>& entries() const { return e_; }
  const Field& field() const { return e_[0].field(); }
  bool is_identity() const;

  ProjMatrix inverse() const;
  ProjMatrix embed(const FieldEmbedding& emb) const;
  std::string to_string() const;

  friend ProjMatrix operator*(const ProjMatrix& a, const ProjMatrix& b);
  friend bool operator==(const ProjMatrix&, const ProjMatrix&) = default;
  friend auto operator<=>(const ProjMatrix& a, const ProjMatrix& b) { return a.e_ <=> b.e_; }

 private:
  std::array<Elem, 9> e_{};
};

/// M . P followed by normalization.
ProjPoint apply(const ProjMatrix& m, const ProjPoint& p);

/// The Hermitian curve X^q Z + X Z^q - Y^(q+1) = 0 over GF(q^2), q = p^e.
class HermitianCurve {
 public:
  HermitianCurve(std::uint32_t p, std::uint32_t e);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint64_t q() const noexcept { return q_; }
  /// GF(q^2).
  const Field& base_field() const noexcept { return *base_; }
  /// GF(q^(2k)); level 1 is the base field.
  const Field& tower_field(std::uint32_t k) const;
  /// Embedding of the base field into f (f must contain GF(q^2)).
  const FieldEmbedding& embedding_into(const Field& f) const;

  /// (1:0:0), the unique point at infinity.
  ProjPoint p1(const Field& f) const;
  /// (0:0:1), the origin.
  ProjPoint p2(const Field& f) const;
  ProjPoint p1() const { return p1(*base_); }
  ProjPoint p2() const { return p2(*base_); }

  /// Value of the defining form at raw coordinates.
  Elem form(const Elem& x, const Elem& y, const Elem& z) const;

 private:
  std::uint32_t p_;
  std::uint32_t e_;
  std::uint64_t q_;
  const Field* base_;
};

bool on_curve(const HermitianCurve& c, const ProjPoint& p);

/// Points of the curve over f: P1 first, then affine points ordered by the
/// encodings of (y, x).
std::vector<ProjPoint> rational_points(const HermitianCurve& c, const Field& f);

}  // namespace gpk

template <>
struct std::hash<gpk::ProjPoint> {
  std::size_t operator()(const gpk::ProjPoint& p) const noexcept {
    std::size_t h = 0;
    for (std::size_t i = 0; i < 3; ++i) h = h * 1000003u ^ std::hash<gpk::Elem>{}(p[i]);
    return h;
  }
};

template <>
struct std::hash<gpk::ProjMatrix> {
  std::size_t operator()(const gpk::ProjMatrix& m) const noexcept {
    std::size_t h = 0;
    for (const auto& e : m.entries()) h = h * 1000003u ^ std::hash<gpk::Elem>{}(e);
    return h;
  }
};
