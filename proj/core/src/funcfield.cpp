#include "gpk/funcfield.hpp"

#include <algorithm>
#include <limits>

namespace gpk {

using Value = Field::Value;
using Row = std::vector<Value>;
using Rows = std::vector<Row>;

class PolyKernel {
 public:
  static void trim(Rows& rows) {
    for (auto& r : rows)
      while (!r.empty() && r.back() == 0) r.pop_back();
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
  }

  // dst[i + shift] += scale * src[i]
  static void add_scaled(const Field& f, Row& dst, std::size_t shift, const Row& src, Value scale) {
    if (scale == 0 || src.empty()) return;
    if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, 0);
    if (scale == 1) {
      for (std::size_t i = 0; i < src.size(); ++i)
        if (src[i]) dst[i + shift] = f.add(dst[i + shift], src[i]);
    } else {
      for (std::size_t i = 0; i < src.size(); ++i)
        if (src[i]) dst[i + shift] = f.add(dst[i + shift], f.mul(src[i], scale));
    }
  }

  // Rewrites y^(q+1) -> x^q + x until every row index is <= q.
  static void reduce(const Field& f, std::uint64_t q, Rows& rows) {
    while (rows.size() > q + 1) {
      const std::size_t j = rows.size() - 1;
      Row top = std::move(rows[j]);
      rows.pop_back();
      Row& target = rows[j - q - 1];
      add_scaled(f, target, q, top, 1);
      add_scaled(f, target, 1, top, 1);
    }
    trim(rows);
  }

  static Rows& rows(CurvePoly& p) { return p.rows_; }
  static const Rows& rows(const CurvePoly& p) { return p.rows_; }

  static CurvePoly from_rows(const Field& f, std::uint64_t q, Rows rows) {
    reduce(f, q, rows);
    CurvePoly out(f, q);
    out.rows_ = std::move(rows);
    return out;
  }

  static CurvePoly multiply(const CurvePoly& a, const CurvePoly& b) {
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return CurvePoly(f, a.q());
    const Rows& ra = a.rows_;
    const Rows& rb = b.rows_;
    Rows raw(ra.size() + rb.size() - 1);
    for (std::size_t ja = 0; ja < ra.size(); ++ja) {
      for (std::size_t jb = 0; jb < rb.size(); ++jb) {
        const Row& x = ra[ja];
        const Row& y = rb[jb];
        if (x.empty() || y.empty()) continue;
        Row& dst = raw[ja + jb];
        if (dst.size() < x.size() + y.size() - 1) dst.resize(x.size() + y.size() - 1, 0);
        for (std::size_t i = 0; i < x.size(); ++i) {
          if (!x[i]) continue;
          for (std::size_t k = 0; k < y.size(); ++k)
            if (y[k]) dst[i + k] = f.add(dst[i + k], f.mul(x[i], y[k]));
        }
      }
    }
    return from_rows(f, a.q(), std::move(raw));
  }
};

// ---- CurvePoly --------------------------------------------------------------

CurvePoly::CurvePoly(const Field& f, std::uint64_t q) : field_(&f), q_(q) {
  if (q < 2) throw FunctionFieldError("q must be at least 2");
}

CurvePoly CurvePoly::reduce(const Field& f, std::uint64_t q, const std::vector<Term>& terms) {
  Rows rows;
  for (const auto& t : terms) {
    if (&t.c.field() != &f) throw FunctionFieldError("term coefficient over a different field");
    if (t.c.is_zero()) continue;
    if (rows.size() <= t.j) rows.resize(t.j + 1);
    Row& r = rows[t.j];
    if (r.size() <= t.i) r.resize(t.i + 1, 0);
    r[t.i] = f.add(r[t.i], t.c.value());
  }
  return PolyKernel::from_rows(f, q, std::move(rows));
}

CurvePoly CurvePoly::constant(const Elem& c, std::uint64_t q) { return reduce(c.field(), q, {{0, 0, c}}); }
CurvePoly CurvePoly::x(const Field& f, std::uint64_t q) { return reduce(f, q, {{1, 0, f.one()}}); }
CurvePoly CurvePoly::y(const Field& f, std::uint64_t q) { return reduce(f, q, {{0, 1, f.one()}}); }
CurvePoly CurvePoly::linear(const Elem& a, const Elem& b, const Elem& c, std::uint64_t q) {
  return reduce(a.field(), q, {{1, 0, a}, {0, 1, b}, {0, 0, c}});
}

bool CurvePoly::is_constant() const noexcept { return rows_.empty() || (rows_.size() == 1 && rows_[0].size() == 1); }

bool CurvePoly::is_monomial() const noexcept { return term_count() == 1; }

std::size_t CurvePoly::term_count() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows_)
    for (auto v : r) n += v != 0;
  return n;
}

std::vector<CurvePoly::Term> CurvePoly::terms() const {
  std::vector<Term> out;
  for (std::size_t j = 0; j < rows_.size(); ++j)
    for (std::size_t i = 0; i < rows_[j].size(); ++i)
      if (rows_[j][i]) out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), (*field_)(rows_[j][i])});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
  return out;
}

Elem CurvePoly::coeff(std::uint32_t i, std::uint32_t j) const {
  if (j >= rows_.size() || i >= rows_[j].size()) return field_->zero();
  return (*field_)(rows_[j][i]);
}

std::uint32_t CurvePoly::total_degree() const {
  std::uint32_t d = 0;
  for (std::size_t j = 0; j < rows_.size(); ++j)
    if (!rows_[j].empty()) d = std::max<std::uint32_t>(d, static_cast<std::uint32_t>(rows_[j].size() - 1 + j));
  return d;
}

std::int64_t CurvePoly::pole_order() const {
  if (is_zero()) throw FunctionFieldError("pole order of the zero polynomial");
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  const auto q = static_cast<std::int64_t>(q_);
  for (std::size_t j = 0; j < rows_.size(); ++j)
    if (!rows_[j].empty())
      best = std::max(best, (q + 1) * static_cast<std::int64_t>(rows_[j].size() - 1) + q * static_cast<std::int64_t>(j));
  return best;
}

Elem CurvePoly::pole_leading_coeff() const {
  const std::int64_t target = pole_order();
  const auto q = static_cast<std::int64_t>(q_);
  for (std::size_t j = 0; j < rows_.size(); ++j)
    if (!rows_[j].empty() &&
        (q + 1) * static_cast<std::int64_t>(rows_[j].size() - 1) + q * static_cast<std::int64_t>(j) == target)
      return (*field_)(rows_[j].back());
  throw FunctionFieldError("inconsistent pole order");
}

std::int64_t CurvePoly::origin_order() const {
  if (is_zero()) throw FunctionFieldError("vanishing order of the zero polynomial");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  const auto q = static_cast<std::int64_t>(q_);
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const Row& r = rows_[j];
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (!r[i]) continue;
      best = std::min(best, (q + 1) * static_cast<std::int64_t>(i) + static_cast<std::int64_t>(j));
      break;
    }
  }
  return best;
}

Elem CurvePoly::origin_leading_coeff() const {
  const std::int64_t target = origin_order();
  const auto q = static_cast<std::int64_t>(q_);
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const Row& r = rows_[j];
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] && (q + 1) * static_cast<std::int64_t>(i) + static_cast<std::int64_t>(j) == target) return (*field_)(r[i]);
  }
  throw FunctionFieldError("inconsistent vanishing order");
}

Elem CurvePoly::eval(const Elem& x, const Elem& y) const {
  const Field& f = *field_;
  if (&x.field() != &f || &y.field() != &f) throw FunctionFieldError("evaluation point over a different field");
  Value acc = 0;
  for (std::size_t j = rows_.size(); j-- > 0;) {
    Value row = 0;
    const Row& r = rows_[j];
    for (std::size_t i = r.size(); i-- > 0;) row = f.add(f.mul(row, x.value()), r[i]);
    acc = f.add(f.mul(acc, y.value()), row);
  }
  return f(acc);
}

CurvePoly CurvePoly::embed(const FieldEmbedding& emb) const {
  if (&emb.source() != field_) throw FunctionFieldError("embedding from the wrong field");
  CurvePoly out(emb.target(), q_);
  out.rows_ = rows_;
  for (auto& r : out.rows_)
    for (auto& v : r) v = emb((*field_)(v)).value();
  return out;
}

CurvePoly CurvePoly::pow(std::uint64_t e) const {
  CurvePoly result = constant(field_->one(), q_);
  CurvePoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

CurvePoly CurvePoly::scaled(const Elem& c) const {
  if (&c.field() != field_) throw FunctionFieldError("scalar over a different field");
  CurvePoly out(*field_, q_);
  if (c.is_zero()) return out;
  out.rows_ = rows_;
  for (auto& r : out.rows_)
    for (auto& v : r) v = field_->mul(v, c.value());
  return out;
}

CurvePoly& CurvePoly::operator+=(const CurvePoly& o) {
  if (o.field_ != field_ || o.q_ != q_) throw FunctionFieldError("polynomial arithmetic across contexts");
  if (rows_.size() < o.rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t j = 0; j < o.rows_.size(); ++j) PolyKernel::add_scaled(*field_, rows_[j], 0, o.rows_[j], 1);
  PolyKernel::trim(rows_);
  return *this;
}

CurvePoly CurvePoly::operator-() const { return scaled(field_->from_int_elem(-1)); }

CurvePoly& CurvePoly::operator-=(const CurvePoly& o) { return *this += -o; }

CurvePoly operator*(const CurvePoly& a, const CurvePoly& b) {
  if (a.field_ != b.field_ || a.q_ != b.q_) throw FunctionFieldError("polynomial arithmetic across contexts");
  return PolyKernel::multiply(a, b);
}

bool operator==(const CurvePoly& a, const CurvePoly& b) {
  return a.field_ == b.field_ && a.q_ == b.q_ && a.rows_ == b.rows_;
}

// ---- CurveFunction ----------------------------------------------------------

CurveFunction::CurveFunction(CurvePoly num) : num_(std::move(num)), den_(CurvePoly::constant(num_.field().one(), num_.q())) {}

CurveFunction::CurveFunction(CurvePoly num, CurvePoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (&num_.field() != &den_.field() || num_.q() != den_.q())
    throw FunctionFieldError("numerator and denominator in different contexts");
  if (den_.is_zero()) throw FunctionFieldError("zero denominator");
  if (den_.is_constant() && !den_.coeff(0, 0).is_one()) {
    num_ = num_.scaled(den_.coeff(0, 0).inv());
    den_ = CurvePoly::constant(num_.field().one(), num_.q());
  }
}

CurveFunction CurveFunction::x(const Field& f, std::uint64_t q) { return CurveFunction(CurvePoly::x(f, q)); }
CurveFunction CurveFunction::y(const Field& f, std::uint64_t q) { return CurveFunction(CurvePoly::y(f, q)); }
CurveFunction CurveFunction::constant(const Elem& c, std::uint64_t q) { return CurveFunction(CurvePoly::constant(c, q)); }

Elem CurveFunction::eval(const Elem& x, const Elem& y) const {
  const Elem d = den_.eval(x, y);
  if (d.is_zero()) throw FunctionFieldError("evaluation at a zero of the denominator");
  return num_.eval(x, y) / d;
}

CurveFunction CurveFunction::embed(const FieldEmbedding& emb) const { return {num_.embed(emb), den_.embed(emb)}; }

CurveFunction CurveFunction::inverse() const {
  if (num_.is_zero()) throw FunctionFieldError("inverse of the zero function");
  return {den_, num_};
}

CurveFunction CurveFunction::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  return {num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e))};
}

CurveFunction operator+(const CurveFunction& a, const CurveFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

CurveFunction operator-(const CurveFunction& a, const CurveFunction& b) {
  if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

CurveFunction operator*(const CurveFunction& a, const CurveFunction& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

CurveFunction operator/(const CurveFunction& a, const CurveFunction& b) {
  if (b.is_zero()) throw FunctionFieldError("division by the zero function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

bool operator==(const CurveFunction& a, const CurveFunction& b) {
  if (&a.field() != &b.field() || a.q() != b.q()) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

// ---- pullback -----------------------------------------------------------------

namespace {

struct LinearImages {
  CurvePoly x1, y1, l;
};

LinearImages images_of(const ProjMatrix& m, std::uint64_t q) {
  return {CurvePoly::linear(m(0, 0), m(0, 1), m(0, 2), q), CurvePoly::linear(m(1, 0), m(1, 1), m(1, 2), q),
          CurvePoly::linear(m(2, 0), m(2, 1), m(2, 2), q)};
}

std::vector<CurvePoly> powers(const CurvePoly& base, std::size_t n) {
  std::vector<CurvePoly> out;
  out.reserve(n + 1);
  out.push_back(CurvePoly::constant(base.field().one(), base.q()));
  for (std::size_t k = 1; k <= n; ++k) out.push_back(out.back() * base);
  return out;
}

// sum c_ij X1^i Y1^j L^(D - i - j), by homogeneous Horner in X1 per y-row.
CurvePoly homogeneous_substitute(const CurvePoly& p, std::uint32_t degree, const LinearImages& img,
                                 const std::vector<CurvePoly>& lpow) {
  const Field& f = p.field();
  CurvePoly total(f, p.q());
  CurvePoly ypow = CurvePoly::constant(f.one(), p.q());
  const auto& rows = PolyKernel::rows(p);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (j > 0) ypow = ypow * img.y1;
    const Row& r = rows[j];
    if (r.empty()) continue;
    const std::size_t top = r.size() - 1;
    const std::size_t e = degree - j;
    // T_i = T_{i+1} X1 + c_i L^(e - i), starting from T_top = c_top L^(e - top).
    CurvePoly acc = lpow[e - top].scaled(f(r[top]));
    for (std::size_t i = top; i-- > 0;) {
      acc = acc * img.x1;
      if (r[i]) acc += lpow[e - i].scaled(f(r[i]));
    }
    total += acc * ypow;
  }
  return total;
}

}  // namespace

bool preserves_curve(const ProjMatrix& m, std::uint64_t q) {
  const auto img = images_of(m, q);
  const CurvePoly rel = img.x1.pow(q) * img.l + img.x1 * img.l.pow(q) - img.y1.pow(q + 1);
  return rel.is_zero();
}

CurveFunction pullback(const ProjMatrix& sigma, const CurveFunction& fn) {
  const std::uint64_t q = fn.q();
  if (&sigma.field() != &fn.field()) throw FunctionFieldError("automorphism and function over different fields");
  if (!preserves_curve(sigma, q)) throw FunctionFieldError("matrix " + sigma.to_string() + " does not preserve the curve");
  const auto img = images_of(sigma, q);
  const std::uint32_t dn = fn.num().total_degree();
  const std::uint32_t dd = fn.den().total_degree();
  const auto lpow = powers(img.l, std::max(dn, dd));
  CurvePoly num = homogeneous_substitute(fn.num(), dn, img, lpow);
  CurvePoly den = homogeneous_substitute(fn.den(), dd, img, lpow);
  if (dn >= dd)
    den = den * lpow[dn - dd];
  else
    num = num * lpow[dd - dn];
  return {std::move(num), std::move(den)};
}

// ---- valuations ---------------------------------------------------------------

std::int64_t valuation_at_p1(const CurveFunction& fn) {
  if (fn.is_zero()) throw FunctionFieldError("valuation of the zero function");
  return fn.den().pole_order() - fn.num().pole_order();
}

namespace {

constexpr std::int64_t kSeriesCap = std::int64_t{1} << 16;

using Series = std::vector<Value>;

Series series_mul(const Field& f, const Series& a, const Series& b, std::size_t n) {
  Series out(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (!a[i]) continue;
    for (std::size_t k = 0; k < b.size() && i + k < n; ++k)
      if (b[k]) out[i + k] = f.add(out[i + k], f.mul(a[i], b[k]));
  }
  return out;
}

// x(t) with x(0) = x0 on the curve through (x0, y0), y = y0 + t.
Series x_expansion(const Field& f, std::uint64_t q, const Elem& x0, const Elem& y0, std::size_t n) {
  Series r(n, 0);
  auto put = [&](std::size_t k, Value v) {
    if (k < n) r[k] = f.add(r[k], v);
  };
  put(1, y0.pow(q).value());
  put(q, y0.value());
  put(q + 1, 1);
  // u + u^q = r(t); iterate u <- r - u^q, which gains precision each round.
  Series u(n, 0);
  while (true) {
    Series next = r;
    for (std::size_t k = 1; k * q < n; ++k)
      if (u[k]) next[k * q] = f.sub(next[k * q], f.pow(u[k], q));
    if (next == u) break;
    u = std::move(next);
  }
  u[0] = x0.value();
  return u;
}

Series poly_expansion(const CurvePoly& p, const Elem& x0, const Elem& y0, std::size_t n) {
  const Field& f = p.field();
  const Series xs = x_expansion(f, p.q(), x0, y0, n);
  Series ys(n, 0);
  ys[0] = y0.value();
  if (n > 1) ys[1] = 1;
  Series total(n, 0), ypow(n, 0);
  ypow[0] = 1;
  const auto& rows = PolyKernel::rows(p);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (j > 0) ypow = series_mul(f, ypow, ys, n);
    const Row& r = rows[j];
    if (r.empty()) continue;
    Series acc(n, 0);
    for (std::size_t i = r.size(); i-- > 0;) {
      acc = series_mul(f, acc, xs, n);
      acc[0] = f.add(acc[0], r[i]);
    }
    const Series term = series_mul(f, acc, ypow, n);
    for (std::size_t k = 0; k < n; ++k) total[k] = f.add(total[k], term[k]);
  }
  return total;
}

struct SeriesLead {
  std::int64_t order;
  Value coeff;
};

SeriesLead series_lead(const CurvePoly& p, const Elem& x0, const Elem& y0) {
  if (p.is_zero()) throw FunctionFieldError("expansion of the zero polynomial");
  // The vanishing order at an affine point is bounded by the pole order at P1.
  const std::int64_t bound = p.pole_order() + 1;
  if (bound > kSeriesCap) throw FunctionFieldError("series precision cap exhausted");
  const Series s = poly_expansion(p, x0, y0, static_cast<std::size_t>(bound));
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s[k]) return {static_cast<std::int64_t>(k), s[k]};
  throw FunctionFieldError("series precision exhausted before a nonzero term");
}

void require_on_curve(const CurveFunction& fn, const ProjPoint& p) {
  if (&p.field() != &fn.field()) throw FunctionFieldError("point and function over different fields");
  const std::uint64_t q = fn.q();
  const Elem v = p.x().pow(q) * p.z() + p.x() * p.z().pow(q) - p.y().pow(q + 1);
  if (!v.is_zero()) throw FunctionFieldError("point " + p.to_string() + " is not on the curve");
}

bool is_p1(const ProjPoint& p) { return p.z().is_zero(); }

ProjMatrix translation_to(const Elem& x0, const Elem& y0, std::uint64_t q) {
  const Field& f = x0.field();
  const Elem o = f.one(), z = f.zero();
  return ProjMatrix({o, y0.pow(q), x0, z, o, y0, z, z, o});
}

LaurentLead origin_lead(const CurveFunction& g) {
  return {g.num().origin_order() - g.den().origin_order(), g.num().origin_leading_coeff() / g.den().origin_leading_coeff()};
}

}  // namespace

std::int64_t series_order(const CurvePoly& poly, const Elem& x0, const Elem& y0) {
  return series_lead(poly, x0, y0).order;
}

LaurentLead leading_term(const CurveFunction& fn, const ProjPoint& p) {
  if (fn.is_zero()) throw FunctionFieldError("leading term of the zero function");
  require_on_curve(fn, p);
  const std::uint64_t q = fn.q();
  if (is_p1(p)) return origin_lead(pullback(swap_xz(fn.field()), fn));
  const auto [x0, y0] = p.affine();
  if (y0.pow(q * q) == y0) return origin_lead(pullback(translation_to(x0, y0, q), fn));
  const SeriesLead n = series_lead(fn.num(), x0, y0);
  const SeriesLead d = series_lead(fn.den(), x0, y0);
  const Field& f = fn.field();
  return {n.order - d.order, f(f.mul(n.coeff, f.inv(d.coeff)))};
}

std::int64_t valuation_at_point(const CurveFunction& fn, const ProjPoint& p) {
  if (fn.is_zero()) throw FunctionFieldError("valuation of the zero function");
  require_on_curve(fn, p);
  if (is_p1(p)) return valuation_at_p1(fn);
  const std::uint64_t q = fn.q();
  const auto [x0, y0] = p.affine();
  if (y0.pow(q * q) == y0) {
    const CurveFunction g = pullback(translation_to(x0, y0, q), fn);
    return g.num().origin_order() - g.den().origin_order();
  }
  return series_order(fn.num(), x0, y0) - series_order(fn.den(), x0, y0);
}

// ---- invariance and witnesses -------------------------------------------------

bool is_invariant(const CurveFunction& fn, const MatrixGroup& g) {
  const auto& gens = g.generators().empty() ? g.elements() : g.generators();
  return std::all_of(gens.begin(), gens.end(), [&](const ProjMatrix& m) { return pullback(m, fn) == fn; });
}

bool is_invariant_all(const CurveFunction& fn, const MatrixGroup& g) {
  return std::all_of(g.elements().begin(), g.elements().end(),
                     [&](const ProjMatrix& m) { return pullback(m, fn) == fn; });
}

RationalityCertificate rationality_witness(const HermitianCurve& c, const MatrixGroup& g, const CurveFunction& fn,
                                           const ProjPoint& pole) {
  if (&g.field() != &fn.field()) throw FunctionFieldError("witness and group over different fields");
  if (fn.q() != c.q()) throw FunctionFieldError("witness built for a different curve");
  RationalityCertificate cert;
  cert.group_order = static_cast<std::int64_t>(g.order());
  cert.invariant = is_invariant(fn, g);
  cert.pole_order_at_point = -valuation_at_point(fn, pole);
  // A monomial denominator c x^i y^j vanishes only where x = 0 or y = 0; those
  // points (and P1) are rational over GF(q^2), so every pole is enumerated.
  cert.pole_support_certified = fn.den().is_monomial();
  const Field& f = fn.field();
  std::vector<ProjPoint> candidates;
  if (cert.pole_support_certified) {
    candidates.push_back(c.p1(f));
    for (const Elem& x : AdditiveSolver(f, c.q()).solve(f.zero())) candidates.emplace_back(x, f.zero(), f.one());
  } else {
    candidates = rational_points(c, f);
  }
  for (const auto& pt : candidates) {
    if (pt.is_affine()) {
      const auto [x, y] = pt.affine();
      if (!fn.den().eval(x, y).is_zero()) continue;
    }
    const std::int64_t v = valuation_at_point(fn, pt);
    if (v < 0) cert.rational_pole_degree += -v;
  }
  if (!cert.invariant)
    cert.failed_clause = "invariance";
  else if (cert.pole_order_at_point != cert.group_order)
    cert.failed_clause = "pole order at marked point";
  else if (!cert.pole_support_certified)
    cert.failed_clause = "pole support";
  else if (cert.rational_pole_degree != cert.group_order)
    cert.failed_clause = "total pole degree";
  cert.valid = cert.failed_clause.empty();
  return cert;
}

CurveFunction witness_t1(const HermitianCurve& c, const Field& f) {
  const std::uint64_t q = c.q();
  const auto qq = static_cast<std::uint32_t>(q * q);
  return CurveFunction(CurvePoly::reduce(f, q, {{0, qq, f.one()}, {0, 1, f.from_int_elem(-1)}}));
}

CurveFunction witness_t2(const HermitianCurve& c, const Field& f) {
  const std::uint64_t q = c.q();
  const auto qq = static_cast<std::uint32_t>(q * q);
  CurvePoly num = CurvePoly::reduce(f, q, {{0, qq, f.one()}, {qq - 1, 1, f.from_int_elem(-1)}});
  CurvePoly den = CurvePoly::reduce(f, q, {{qq, 0, f.one()}});
  return {std::move(num), std::move(den)};
}

}  // namespace gpk
