#include "gpk/projective.hpp"

#include <algorithm>
#include <sstream>

namespace gpk {

ProjPoint::ProjPoint(const Elem& x, const Elem& y, const Elem& z) : c_{x, y, z} {
  const Field& f = x.field();
  if (&y.field() != &f || &z.field() != &f) throw GeometryError("point coordinates in different fields");
  std::size_t lead = 0;
  while (lead < 3 && c_[lead].is_zero()) ++lead;
  if (lead == 3) throw GeometryError("(0:0:0) is not a projective point");
  const Elem s = c_[lead].inv();
  for (auto& v : c_) v *= s;
}

std::pair<Elem, Elem> ProjPoint::affine() const {
  if (!is_affine()) throw GeometryError("point at infinity has no affine coordinates");
  const Elem zi = c_[2].inv();
  return {c_[0] * zi, c_[1] * zi};
}

ProjPoint ProjPoint::embed(const FieldEmbedding& emb) const { return {emb(c_[0]), emb(c_[1]), emb(c_[2])}; }

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  os << '(' << c_[0].to_string() << ':' << c_[1].to_string() << ':' << c_[2].to_string() << ')';
  return os.str();
}

ProjMatrix::ProjMatrix(const std::array<Elem, 9>& entries) : e_(entries) {
  const Field& f = e_[0].field();
  for (const auto& v : e_)
    if (&v.field() != &f) throw GeometryError("matrix entries in different fields");
  const Elem det = e_[0] * (e_[4] * e_[8] - e_[5] * e_[7]) - e_[1] * (e_[3] * e_[8] - e_[5] * e_[6]) +
                   e_[2] * (e_[3] * e_[7] - e_[4] * e_[6]);
  if (det.is_zero()) throw GeometryError("singular matrix");
  std::size_t lead = 0;
  while (e_[lead].is_zero()) ++lead;
  const Elem s = e_[lead].inv();
  for (auto& v : e_) v *= s;
}

ProjMatrix ProjMatrix::identity(const Field& f) {
  const Elem o = f.one(), z = f.zero();
  return ProjMatrix({o, z, z, z, o, z, z, z, o});
}

bool ProjMatrix::is_identity() const { return *this == identity(field()); }

ProjMatrix operator*(const ProjMatrix& a, const ProjMatrix& b) {
  const Field& f = a.field();
  if (&b.field() != &f) throw GeometryError("matrix product across fields");
  std::array<Elem, 9> r;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Elem acc = f.zero();
      for (std::size_t k = 0; k < 3; ++k) acc += a(i, k) * b(k, j);
      r[3 * i + j] = acc;
    }
  }
  return ProjMatrix(r);
}

ProjMatrix ProjMatrix::inverse() const {
  // Adjugate; the determinant is a scalar and drops out projectively.
  const auto& m = e_;
  std::array<Elem, 9> adj{
      m[4] * m[8] - m[5] * m[7], m[2] * m[7] - m[1] * m[8], m[1] * m[5] - m[2] * m[4],
      m[5] * m[6] - m[3] * m[8], m[0] * m[8] - m[2] * m[6], m[2] * m[3] - m[0] * m[5],
      m[3] * m[7] - m[4] * m[6], m[1] * m[6] - m[0] * m[7], m[0] * m[4] - m[1] * m[3]};
  return ProjMatrix(adj);
}

ProjMatrix ProjMatrix::embed(const FieldEmbedding& emb) const {
  std::array<Elem, 9> r;
  for (std::size_t i = 0; i < 9; ++i) r[i] = emb(e_[i]);
  return ProjMatrix(r);
}

std::string ProjMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < 9; ++i) os << (i ? (i % 3 == 0 ? "; " : " ") : "") << e_[i].to_string();
  os << ']';
  return os.str();
}

ProjPoint apply(const ProjMatrix& m, const ProjPoint& p) {
  const Field& f = m.field();
  if (&p.field() != &f) throw GeometryError("matrix and point in different fields");
  std::array<Elem, 3> r;
  for (std::size_t i = 0; i < 3; ++i) r[i] = m(i, 0) * p[0] + m(i, 1) * p[1] + m(i, 2) * p[2];
  return {r[0], r[1], r[2]};
}

HermitianCurve::HermitianCurve(std::uint32_t p, std::uint32_t e) : p_(p), e_(e), q_(1) {
  if (e == 0) throw GeometryError("exponent e must be positive");
  for (std::uint32_t i = 0; i < e; ++i) q_ *= p;
  base_ = &Field::get(p, 2 * e);
}

const Field& HermitianCurve::tower_field(std::uint32_t k) const {
  if (k == 0) throw GeometryError("tower level must be positive");
  return Field::get(p_, 2 * e_ * k);
}

const FieldEmbedding& HermitianCurve::embedding_into(const Field& f) const { return FieldEmbedding::get(*base_, f); }

ProjPoint HermitianCurve::p1(const Field& f) const { return {f.one(), f.zero(), f.zero()}; }
ProjPoint HermitianCurve::p2(const Field& f) const { return {f.zero(), f.zero(), f.one()}; }

Elem HermitianCurve::form(const Elem& x, const Elem& y, const Elem& z) const {
  return x.pow(q_) * z + x * z.pow(q_) - y.pow(q_ + 1);
}

bool on_curve(const HermitianCurve& c, const ProjPoint& p) {
  if (p.field().characteristic() != c.p()) throw GeometryError("point over a field of the wrong characteristic");
  return c.form(p.x(), p.y(), p.z()).is_zero();
}

std::vector<ProjPoint> rational_points(const HermitianCurve& c, const Field& f) {
  const AdditiveSolver solver(f, c.q());
  std::vector<ProjPoint> out;
  out.push_back(c.p1(f));
  const Elem one = f.one();
  for (Field::Value yv = 0; yv < f.size(); ++yv) {
    const Elem y = f(yv);
    for (const Elem& x : solver.solve(y.pow(c.q() + 1))) out.emplace_back(x, y, one);
  }
  return out;
}

}  // namespace gpk
