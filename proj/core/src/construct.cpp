#include "gpk/construct.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gpk {

GeneratorPair GeneratorPair::swapped() const { return {g, f, g_poles, f_poles, g_label, f_label}; }

namespace {

void check_poles(const char* name, const Divisor& got, const Divisor& expected, std::int64_t full_degree) {
  if (got != expected)
    throw ConstructError(std::string("pole divisor of ") + name + " differs from the expected orbit sum: got " +
                         got.to_string() + ", expected " + expected.to_string());
  if (got.degree() != full_degree)
    throw ConstructError(std::string("pole divisor of ") + name + " has rational degree " +
                         std::to_string(got.degree()) + " but total degree " + std::to_string(full_degree));
}

ProjPoint phi_impl(const CurveFunction& f, const CurveFunction& g, const ProjPoint& p) {
  const Field& fld = f.field();
  if (p.is_affine()) {
    const auto [x, y] = p.affine();
    const Elem nf = f.num().eval(x, y), df = f.den().eval(x, y);
    const Elem ng = g.num().eval(x, y), dg = g.den().eval(x, y);
    const Elem a = nf * dg, b = ng * df, c = df * dg;
    if (!a.is_zero() || !b.is_zero() || !c.is_zero()) return {a, b, c};
  }
  // Compare orders in a common local parameter: the smallest order wins.
  const LaurentLead lf = leading_term(f, p);
  const LaurentLead lg = leading_term(g, p);
  const std::int64_t low = std::min({lf.order, lg.order, std::int64_t{0}});
  return {lf.order == low ? lf.coeff : fld.zero(), lg.order == low ? lg.coeff : fld.zero(),
          low == 0 ? fld.one() : fld.zero()};
}

std::uint64_t binom2(std::uint64_t n) { return (n + 2) * (n + 1) / 2; }

// All (i, j, k) with i + j + k = d, lexicographically descending.
std::vector<std::array<std::uint32_t, 3>> monomial_basis(std::uint32_t d) {
  std::vector<std::array<std::uint32_t, 3>> out;
  for (std::uint32_t i = d + 1; i-- > 0;)
    for (std::uint32_t j = d - i + 1; j-- > 0;) out.push_back({i, j, d - i - j});
  return out;
}

// Nullspace basis of a row-major matrix over f.
std::vector<std::vector<Field::Value>> nullspace(const Field& f, std::vector<std::vector<Field::Value>> a,
                                                 std::size_t cols) {
  std::vector<int> pivot_of_row;
  std::vector<bool> is_pivot(cols, false);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[row]);
    const Field::Value inv = f.inv(a[row][col]);
    for (auto& v : a[row]) v = f.mul(v, inv);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Field::Value s = a[r][col];
      for (std::size_t k = col; k < cols; ++k)
        if (a[row][k]) a[r][k] = f.sub(a[r][k], f.mul(s, a[row][k]));
    }
    pivot_of_row.push_back(static_cast<int>(col));
    is_pivot[col] = true;
    ++row;
  }
  std::vector<std::vector<Field::Value>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Field::Value> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_of_row.size(); ++r) v[pivot_of_row[r]] = f.neg(a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

Field::Value monomial_value(const Field& f, const ProjPoint& pt, const std::array<std::uint32_t, 3>& e) {
  return f.mul(f.mul(f.pow(pt.x().value(), e[0]), f.pow(pt.y().value(), e[1])), f.pow(pt.z().value(), e[2]));
}

}  // namespace

GeneratorPair build_f_g(const HermitianInstance& inst) {
  const HermitianCurve& c = inst.curve;
  const auto cert1 = rationality_witness(c, inst.g1, inst.w1.function, inst.w1.pole);
  if (!cert1.valid) throw ConstructError("witness " + inst.w1.label + " failed clause: " + cert1.failed_clause);
  const auto cert2 = rationality_witness(c, inst.g2, inst.w2.function, inst.w2.pole);
  if (!cert2.valid) throw ConstructError("witness " + inst.w2.label + " failed clause: " + cert2.failed_clause);

  GeneratorPair out{inst.w1.function.inverse(), inst.w2.function.inverse(), {}, {}, "1/" + inst.w1.label,
                    "1/" + inst.w2.label};
  const auto pts = rational_points(c, c.base_field());
  out.f_poles = pole_divisor_on(out.f, pts);
  out.g_poles = pole_divisor_on(out.g, pts);
  // deg (f)_inf = deg (t)_0 = deg (t)_inf = |G1|, so a full match on rational
  // points leaves no room for further poles.
  check_poles("f", out.f_poles, orbit_sum(inst.g1, inst.p2), cert1.pole_order_at_point);
  check_poles("g", out.g_poles, orbit_sum(inst.g2, inst.p1), cert2.pole_order_at_point);
  return out;
}

ProjPoint phi_at(const GeneratorPair& fg, const ProjPoint& p) {
  if (&p.field() != &fg.f.field()) throw ConstructError("phi: point over a different field than f, g");
  return phi_impl(fg.f, fg.g, p);
}

std::vector<ProjPoint> sample_images(const HermitianInstance& inst, const GeneratorPair& fg, std::uint32_t level) {
  const HermitianCurve& c = inst.curve;
  const Field& big = c.tower_field(level);
  const FieldEmbedding& emb = c.embedding_into(big);
  const CurveFunction f = fg.f.embed(emb), g = fg.g.embed(emb);
  std::vector<ProjPoint> out;
  std::set<ProjPoint> seen;
  for (const auto& pt : rational_points(c, big)) {
    ProjPoint img = phi_impl(f, g, pt);
    if (seen.insert(img).second) out.push_back(img);
  }
  return out;
}

PlaneModel plane_model(const HermitianInstance& inst, const GeneratorPair& fg,
                       std::optional<std::uint32_t> sampling_level) {
  const HermitianCurve& c = inst.curve;
  const Field& base = c.base_field();
  const auto d = static_cast<std::uint32_t>(inst.g1.order() / inst.h.order() + 1);
  const auto basis = monomial_basis(d);
  const std::size_t wanted = 3 * binom2(d);

  std::uint32_t level = sampling_level.value_or(1);
  std::vector<ProjPoint> images;
  while (true) {
    images = sample_images(inst, fg, level);
    if (images.size() >= wanted) break;
    if (sampling_level)
      throw ConstructError("sampling level " + std::to_string(level) + " gives " + std::to_string(images.size()) +
                           " distinct images, need " + std::to_string(wanted));
    ++level;
    if (2ull * c.e() * level > Field::kMaxDegree) throw ConstructError("no tower level gives enough samples");
  }
  images.resize(wanted);

  const Field& big = c.tower_field(level);
  std::vector<std::vector<Field::Value>> rows;
  rows.reserve(images.size());
  for (const auto& pt : images) {
    std::vector<Field::Value> r;
    r.reserve(basis.size());
    for (const auto& mono : basis) r.push_back(monomial_value(big, pt, mono));
    rows.push_back(std::move(r));
  }
  const auto null = nullspace(big, std::move(rows), basis.size());
  if (null.size() != 1)
    throw ConstructError("interpolation nullspace has dimension " + std::to_string(null.size()) + ", expected 1");

  std::vector<Field::Value> sol = null.front();
  const auto lead = std::find_if(sol.begin(), sol.end(), [](Field::Value v) { return v != 0; });
  const Field::Value scale = big.inv(*lead);
  for (auto& v : sol) v = big.mul(v, scale);

  const FieldEmbedding& emb = c.embedding_into(big);
  PlaneModel model;
  model.field = &base;
  model.degree = d;
  model.p = c.p();
  model.e = c.e();
  model.m = inst.m;
  model.sampling_level = level;
  model.samples_used = images.size();
  model.nullity = null.size();
  model.f_label = fg.f_label;
  model.g_label = fg.g_label;
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    if (sol[idx] == 0) continue;
    const Elem v = big(sol[idx]);
    if (!emb.in_image(v)) throw ConstructError("model coefficient " + v.to_string() + " is not in GF(q^2)");
    model.monomials.push_back({basis[idx][0], basis[idx][1], basis[idx][2], emb.preimage(v)});
  }
  model.marked_points = {phi_at(fg, inst.p1), phi_at(fg, inst.p2)};
  return model;
}

// ---- PlaneModel -----------------------------------------------------------------

Elem PlaneModel::eval(const ProjPoint& pt) const {
  const Field& f = pt.field();
  const FieldEmbedding& emb = FieldEmbedding::get(*field, f);
  Field::Value acc = 0;
  for (const auto& mo : monomials)
    acc = f.add(acc, f.mul(emb(mo.c).value(), monomial_value(f, pt, {mo.i, mo.j, mo.k})));
  return f(acc);
}

Elem PlaneModel::coeff(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
  for (const auto& mo : monomials)
    if (mo.i == i && mo.j == j && mo.k == k) return mo.c;
  return field->zero();
}

std::uint32_t PlaneModel::degree_in_x() const {
  std::uint32_t d = 0;
  for (const auto& mo : monomials) d = std::max(d, mo.i);
  return d;
}

std::uint32_t PlaneModel::degree_in_y() const {
  std::uint32_t d = 0;
  for (const auto& mo : monomials) d = std::max(d, mo.j);
  return d;
}

std::uint32_t PlaneModel::degree_in_z() const {
  std::uint32_t d = 0;
  for (const auto& mo : monomials) d = std::max(d, mo.k);
  return d;
}

std::string PlaneModel::to_string() const {
  if (monomials.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& mo : monomials) {
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> parts;
    if (!mo.c.is_one()) parts.push_back("(" + mo.c.to_string() + ")");
    const char* names[3] = {"X", "Y", "Z"};
    const std::uint32_t ex[3] = {mo.i, mo.j, mo.k};
    for (int v = 0; v < 3; ++v) {
      if (ex[v] == 0) continue;
      parts.push_back(ex[v] == 1 ? names[v] : std::string(names[v]) + "^" + std::to_string(ex[v]));
    }
    if (parts.empty()) parts.push_back("1");
    for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "*" : "") << parts[k];
  }
  return os.str();
}

// ---- certification ----------------------------------------------------------------

namespace {

bool smooth_at(const PlaneModel& model, const ProjPoint& pt) {
  const Field& f = pt.field();
  if (!model.eval(pt).is_zero()) return false;
  // Gradient test: some partial derivative is nonzero at pt.
  for (int v = 0; v < 3; ++v) {
    Elem acc = f.zero();
    for (const auto& mo : model.monomials) {
      std::uint32_t ex[3] = {mo.i, mo.j, mo.k};
      if (ex[v] == 0) continue;
      const Elem k = f.from_int_elem(static_cast<std::int64_t>(ex[v]));
      if (k.is_zero()) continue;
      --ex[v];
      acc += k * mo.c * pt.x().pow(ex[0]) * pt.y().pow(ex[1]) * pt.z().pow(ex[2]);
    }
    if (!acc.is_zero()) return true;
  }
  return false;
}

using BinaryForm = std::vector<Elem>;  // index = X exponent, Y exponent = degree - index

BinaryForm times_linear(const BinaryForm& a, const Elem& cx, const Elem& cy) {
  const Field& f = cx.field();
  BinaryForm out(a.size() + 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i + 1] += a[i] * cx;
    out[i] += a[i] * cy;
  }
  return out;
}

bool proportional(const BinaryForm& a, const BinaryForm& b) {
  if (a.size() != b.size()) return false;
  std::size_t lead = 0;
  while (lead < a.size() && a[lead].is_zero()) ++lead;
  if (lead == a.size() || b[lead].is_zero()) return false;
  const Elem s = b[lead] / a[lead];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] * s != b[i]) return false;
  return true;
}

}  // namespace

ModelCertificate certify_model(const PlaneModel& model, const HermitianInstance& inst, const GeneratorPair& fg) {
  ModelCertificate cert;
  const Field& f = *model.field;
  const std::uint32_t d = model.degree;
  const std::uint32_t index = static_cast<std::uint32_t>(inst.g1.order() / inst.h.order());
  cert.expected_degree = index + 1;

  // (i)
  bool homogeneous = !model.monomials.empty();
  for (const auto& mo : model.monomials) homogeneous = homogeneous && mo.i + mo.j + mo.k == d;
  cert.degree_ok = homogeneous && d == cert.expected_degree;

  // (ii)
  const ProjPoint y_pt(f.zero(), f.one(), f.zero());
  const ProjPoint x_pt(f.one(), f.zero(), f.zero());
  if (model.marked_points.size() != 2) throw ConstructError("model must carry two marked points");
  const ProjPoint& m1 = model.marked_points[0];
  const ProjPoint& m2 = model.marked_points[1];
  cert.smooth1 = smooth_at(model, m1);
  cert.smooth2 = smooth_at(model, m2);

  // (iii) F(X, Y, 0) against prod over H-orbits of the images of D = H.P1 + G1.P2.
  const bool coordinate_pair = (m1 == y_pt && m2 == x_pt) || (m1 == x_pt && m2 == y_pt);
  if (coordinate_pair) {
    const Divisor big = orbit_sum(inst.h, inst.p1) + orbit_sum(inst.g1, inst.p2);
    BinaryForm expected{f.one()};
    std::set<ProjPoint> done;
    bool on_line = true;
    for (const auto& [q, mult] : big.support()) {
      if (done.count(q)) continue;
      const auto orb = orbit(inst.h, q);
      done.insert(orb.begin(), orb.end());
      const std::int64_t stab = static_cast<std::int64_t>(inst.h.order() / orb.size());
      if (mult % stab != 0) on_line = false;
      const ProjPoint img = phi_at(fg, q);
      if (!img.z().is_zero()) on_line = false;
      for (std::int64_t k = 0; k < mult / stab; ++k) expected = times_linear(expected, img.y(), -img.x());
    }
    BinaryForm actual(d + 1, f.zero());
    for (const auto& mo : model.monomials)
      if (mo.k == 0) actual[mo.i] = mo.c;
    cert.line_divisor_degree = static_cast<std::uint32_t>(expected.size() - 1);
    cert.line_divisor_ok = on_line && expected.size() == d + 1 && proportional(expected, actual);
  }

  // (iv) projection from (0:1:0) has degree deg_Y F, from (1:0:0) deg_X F.
  if (coordinate_pair) {
    const bool y_first = m1 == y_pt;
    cert.projection_degree1 = y_first ? model.degree_in_y() : model.degree_in_x();
    cert.projection_degree2 = y_first ? model.degree_in_x() : model.degree_in_y();
    cert.projection_ok = cert.projection_degree1 == index && cert.projection_degree2 == index;
  }

  if (!cert.degree_ok)
    cert.failed_clause = "degree";
  else if (!cert.smooth1 || !cert.smooth2)
    cert.failed_clause = "smooth marked points";
  else if (!cert.line_divisor_ok)
    cert.failed_clause = "line divisor";
  else if (!cert.projection_ok)
    cert.failed_clause = "projection degree";
  cert.valid = cert.failed_clause.empty();
  return cert;
}

// ---- quotient -----------------------------------------------------------------------

QuotientModel quotient_plane_model(const HermitianCurve& c, std::uint64_t m) {
  const std::uint64_t q = c.q();
  if (m == 0 || (q + 1) % m != 0)
    throw ConstructError("quotient model needs m | q + 1; got m = " + std::to_string(m) + ", q = " + std::to_string(q));
  const Field& f = c.base_field();
  const std::uint64_t s = (q + 1) / m;
  const MatrixGroup cm = cyclic_subgroup(c, m);
  const CurveFunction x = CurveFunction::x(f, q);
  const CurveFunction y = CurveFunction::y(f, q);
  const CurveFunction u = y.pow(static_cast<std::int64_t>(m));

  QuotientModel out{.q = q, .m = m, .s = s, .x = x, .u = u, .relation = {}};
  out.x_invariant = is_invariant(x, cm);
  out.u_invariant = is_invariant(u, cm);
  out.relation_holds = (x.pow(static_cast<std::int64_t>(q)) + x - u.pow(static_cast<std::int64_t>(s))).is_zero();

  // The conjugates h*(y), h in C_m, are m distinct roots of T^m - u.
  std::vector<CurveFunction> conj;
  bool ok = true;
  for (const auto& h : cm.elements()) {
    CurveFunction img = pullback(h, y);
    ok = ok && img.pow(static_cast<std::int64_t>(m)) == u;
    for (const auto& other : conj) ok = ok && !(other == img);
    conj.push_back(std::move(img));
  }
  out.degree_certified = ok && conj.size() == m;
  out.valid = out.x_invariant && out.u_invariant && out.relation_holds && out.degree_certified;

  std::ostringstream rel;
  rel << "x^" << q << " + x = u";
  if (s != 1) rel << '^' << s;
  out.relation = rel.str();
  return out;
}

}  // namespace gpk
