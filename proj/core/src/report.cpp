#include "gpk/report.hpp"

#include <sstream>

namespace gpk {

json to_json(const Field& f) { return {{"p", f.characteristic()}, {"n", f.degree()}, {"modulus", f.modulus()}}; }

json to_json(const Elem& e) { return e.coeffs(); }

json to_json(const ProjPoint& p) { return json::array({to_json(p.x()), to_json(p.y()), to_json(p.z())}); }

json to_json(const ProjMatrix& m) {
  json out = json::array();
  for (const auto& e : m.entries()) out.push_back(to_json(e));
  return out;
}

json to_json(const MatrixGroup& g, bool with_elements) {
  json gens = json::array();
  for (const auto& m : g.generators()) gens.push_back(to_json(m));
  json out{{"order", g.order()}, {"generators", std::move(gens)}};
  if (with_elements) {
    json el = json::array();
    for (const auto& m : g.elements()) el.push_back(to_json(m));
    out["elements"] = std::move(el);
  }
  return out;
}

json to_json(const CurvePoly& p) {
  json out = json::array();
  for (const auto& t : p.terms()) out.push_back({t.i, t.j, to_json(t.c)});
  return out;
}

json to_json(const CurveFunction& f) {
  return {{"field", to_json(f.field())}, {"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

json to_json(const Divisor& d) {
  json out = json::array();
  for (const auto& [p, m] : d.support()) out.push_back({to_json(p), m});
  return out;
}

json to_json(const RationalityCertificate& c) {
  return {{"valid", c.valid},
          {"invariant", c.invariant},
          {"pole_order_at_point", c.pole_order_at_point},
          {"group_order", c.group_order},
          {"pole_support_certified", c.pole_support_certified},
          {"rational_pole_degree", c.rational_pole_degree},
          {"failed_clause", c.failed_clause}};
}

namespace {

json points_json(const std::vector<ProjPoint>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

}  // namespace

json to_json(const CriterionReport& r) {
  json pre = json::array();
  for (const auto& p : r.preconditions) pre.push_back({{"name", p.name}, {"holds", p.holds}, {"detail", p.detail}});
  json cond = json::object();
  if (r.a)
    cond["a"] = {{"holds", r.a->holds},
                 {"witness1", {{"label", r.a->witness1}, {"certificate", to_json(r.a->cert1)}}},
                 {"witness2", {{"label", r.a->witness2}, {"certificate", to_json(r.a->cert2)}}}};
  if (r.b) {
    json gens = json::array();
    for (const auto& m : r.b->intersection_generators) gens.push_back(to_json(m));
    cond["b"] = {{"holds", r.b->holds},
                 {"intersection_order", r.b->intersection_order},
                 {"h_order", r.b->h_order},
                 {"intersection_generators", std::move(gens)}};
  }
  if (r.c) cond["c"] = {{"holds", r.c->holds}, {"surviving1", r.c->surviving1}, {"surviving2", r.c->surviving2}};
  if (r.d) cond["d"] = {{"holds", r.d->holds}, {"lhs", to_json(r.d->lhs)}, {"rhs", to_json(r.d->rhs)}};
  if (r.e)
    cond["e"] = {{"holds", r.e->holds}, {"orbit1", points_json(r.e->orbit1)}, {"orbit2", points_json(r.e->orbit2)}};
  json out{{"preconditions", std::move(pre)},
           {"preconditions_hold", r.preconditions_hold},
           {"conditions", std::move(cond)},
           {"overall", r.overall},
           {"first_failure", r.first_failure()}};
  if (r.galois) {
    const auto& g = *r.galois;
    json gd{{"degree", g.degree},
            {"projection_degree", g.projection_degree},
            {"galois_group_order1", g.galois_order1},
            {"galois_group_order2", g.galois_order2},
            {"closure_is_function_field", g.closure_is_function_field}};
    gd["semidirect1"] = g.semidirect1 ? json(*g.semidirect1) : json(nullptr);
    gd["semidirect2"] = g.semidirect2 ? json(*g.semidirect2) : json(nullptr);
    out["galois"] = std::move(gd);
  }
  return out;
}

json to_json(const PlaneModel& m) {
  json monos = json::array();
  for (const auto& mo : m.monomials) monos.push_back({mo.i, mo.j, mo.k, to_json(mo.c)});
  return {{"degree", m.degree},
          {"field", to_json(*m.field)},
          {"monomials", std::move(monos)},
          {"marked_points", points_json(m.marked_points)},
          {"instance", {{"p", m.p}, {"e", m.e}, {"m", m.m}}},
          {"f", m.f_label},
          {"g", m.g_label},
          {"sampling_level", m.sampling_level},
          {"samples_used", m.samples_used},
          {"nullity", m.nullity},
          {"polynomial", m.to_string()}};
}

json to_json(const ModelCertificate& c) {
  return {{"valid", c.valid},
          {"failed_clause", c.failed_clause},
          {"degree_ok", c.degree_ok},
          {"expected_degree", c.expected_degree},
          {"smooth1", c.smooth1},
          {"smooth2", c.smooth2},
          {"line_divisor_ok", c.line_divisor_ok},
          {"line_divisor_degree", c.line_divisor_degree},
          {"projection_degree1", c.projection_degree1},
          {"projection_degree2", c.projection_degree2},
          {"projection_ok", c.projection_ok}};
}

json to_json(const QuotientModel& q) {
  return {{"q", q.q},
          {"m", q.m},
          {"s", q.s},
          {"relation", q.relation},
          {"x", to_json(q.x)},
          {"u", to_json(q.u)},
          {"x_invariant", q.x_invariant},
          {"u_invariant", q.u_invariant},
          {"relation_holds", q.relation_holds},
          {"degree_certified", q.degree_certified},
          {"valid", q.valid}};
}

json to_json(const OuterVerdict& v) {
  return {{"holds", v.holds}, {"lhs", to_json(v.lhs)}, {"rhs", to_json(v.rhs)}};
}

Elem elem_from_json(const Field& f, const json& j) {
  const auto c = j.get<std::vector<Coeff>>();
  for (auto d : c)
    if (d >= f.characteristic()) throw FieldError("coefficient out of range in element list");
  return f(f.from_coeffs(c));
}

ProjPoint point_from_json(const Field& f, const json& j) {
  if (!j.is_array() || j.size() != 3) throw GeometryError("point must be a list of three coordinates");
  return {elem_from_json(f, j[0]), elem_from_json(f, j[1]), elem_from_json(f, j[2])};
}

PlaneModel plane_model_from_json(const json& j) {
  PlaneModel m;
  const auto& fj = j.at("field");
  m.field = &Field::get(fj.at("p").get<std::uint32_t>(), fj.at("n").get<std::uint32_t>());
  m.degree = j.at("degree").get<std::uint32_t>();
  for (const auto& mo : j.at("monomials"))
    m.monomials.push_back({mo.at(0).get<std::uint32_t>(), mo.at(1).get<std::uint32_t>(), mo.at(2).get<std::uint32_t>(),
                           elem_from_json(*m.field, mo.at(3))});
  for (const auto& p : j.at("marked_points")) m.marked_points.push_back(point_from_json(*m.field, p));
  const auto& inst = j.at("instance");
  m.p = inst.at("p").get<std::uint32_t>();
  m.e = inst.at("e").get<std::uint32_t>();
  m.m = inst.at("m").get<std::uint64_t>();
  m.f_label = j.value("f", "");
  m.g_label = j.value("g", "");
  m.sampling_level = j.value("sampling_level", 0u);
  m.samples_used = j.value("samples_used", std::size_t{0});
  m.nullity = j.value("nullity", std::size_t{0});
  return m;
}

json envelope(const std::string& command, const json& instance, json result) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"instance", instance}, {"result", std::move(result)}};
}

namespace {

std::string yes(const json& b) { return b.get<bool>() ? "true" : "false"; }

std::string instance_line(const json& inst) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : inst.items()) {
    os << (first ? "" : " ") << k << '=' << v.dump();
    first = false;
  }
  return os.str();
}

// Same digit strings as Elem::to_string.
std::string point_text(const json& pt) {
  std::string out = "(";
  for (std::size_t k = 0; k < pt.size(); ++k) {
    if (k) out += ':';
    for (const auto& d : pt[k]) out += std::to_string(d.get<std::uint64_t>());
  }
  return out + ')';
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  const std::string cmd = report.at("command").get<std::string>();
  const json& r = report.at("result");
  os << cmd << ' ' << instance_line(report.at("instance")) << '\n';
  if (cmd == "verify") {
    for (const auto& p : r.at("preconditions"))
      if (!p.at("holds").get<bool>()) os << "precondition failed: " << p.at("name").get<std::string>() << ' '
                                          << p.at("detail").get<std::string>() << '\n';
    for (const auto& [k, v] : r.at("conditions").items()) os << "condition (" << k << "): " << yes(v.at("holds")) << '\n';
    os << "overall: " << yes(r.at("overall")) << '\n';
    if (r.contains("galois")) {
      const auto& g = r.at("galois");
      os << "degree: " << g.at("degree").dump() << '\n';
      os << "projection degree: " << g.at("projection_degree").dump() << '\n';
      os << "Galois group orders: " << g.at("galois_group_order1").dump() << ", "
         << g.at("galois_group_order2").dump() << '\n';
      if (g.at("closure_is_function_field").get<bool>()) os << "Galois closures: both equal k(X)\n";
    }
  } else if (cmd == "construct") {
    const auto& m = r.at("model");
    os << "degree: " << m.at("degree").dump() << '\n';
    os << "F = " << m.at("polynomial").get<std::string>() << '\n';
    os << "certificate: " << yes(r.at("certificate").at("valid")) << '\n';
  } else if (cmd == "quotient") {
    os << r.at("relation").get<std::string>() << '\n';
    os << "certified: " << yes(r.at("valid")) << '\n';
  } else if (cmd == "outer") {
    os << "holds: " << yes(r.at("holds")) << '\n';
  } else if (cmd == "points") {
    os << "count: " << r.at("count").dump() << '\n';
    for (const auto& p : r.at("points")) os << point_text(p) << '\n';
  } else {
    os << r.dump(1) << '\n';
  }
  return os.str();
}

}  // namespace gpk
