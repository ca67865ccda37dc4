// gpk: command line front end for the criterion checker and plane models.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gpk/report.hpp"

namespace {

enum Exit : int { kOk = 0, kFalse = 1, kUsage = 2, kCertification = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::uint64_t m = 1;
  std::string out;
  std::optional<std::uint32_t> sampling_level;
  bool dump_elements = false;
  bool print_json = false;
  std::string point;
};

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    os << text;
    os.flush();
    if (!os) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  fs::rename(tmp, target);
}

gpk::HermitianCurve curve_of(const RunConfig& cfg) {
  if (!gpk::is_prime(cfg.p)) throw UsageError("p = " + std::to_string(cfg.p) + " is not prime");
  if (cfg.e == 0) throw UsageError("e must be positive");
  if (2ull * cfg.e > gpk::Field::kMaxDegree) throw UsageError("e is too large");
  try {
    return gpk::HermitianCurve(cfg.p, cfg.e);
  } catch (const gpk::FieldError& err) {
    throw UsageError(err.what());
  }
}

void require_divides(std::uint64_t m, std::uint64_t n, const std::string& what) {
  if (m == 0 || n % m != 0)
    throw UsageError("m = " + std::to_string(m) + " does not divide " + what + " = " + std::to_string(n));
}

gpk::json instance_json(const RunConfig& cfg, bool with_m) {
  gpk::json j{{"p", cfg.p}, {"e", cfg.e}};
  if (with_m) j["m"] = cfg.m;
  return j;
}

gpk::ProjPoint parse_point(const gpk::Field& f, const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) throw UsageError("--point expects X,Y,Z");
  try {
    return {gpk::parse_elem(f, parts[0]), gpk::parse_elem(f, parts[1]), gpk::parse_elem(f, parts[2])};
  } catch (const gpk::Error& err) {
    throw UsageError(std::string("bad --point: ") + err.what());
  }
}

int cmd_verify(const RunConfig& cfg, gpk::json& out) {
  const auto c = curve_of(cfg);
  require_divides(cfg.m, c.q() * c.q() - 1, "q^2 - 1");
  const auto inst = gpk::make_hermitian_instance(c, cfg.m);
  const auto report = gpk::verify_tuple(gpk::to_tuple(inst));
  gpk::json result = gpk::to_json(report);
  result["groups"] = {{"N1", gpk::to_json(inst.u1, cfg.dump_elements)},
                      {"N2", gpk::to_json(inst.u2, cfg.dump_elements)},
                      {"H", gpk::to_json(inst.h, cfg.dump_elements)},
                      {"G1", gpk::to_json(inst.g1, cfg.dump_elements)},
                      {"G2", gpk::to_json(inst.g2, cfg.dump_elements)}};
  out = gpk::envelope("verify", instance_json(cfg, true), std::move(result));
  return report.overall ? kOk : kFalse;
}

int cmd_construct(const RunConfig& cfg, gpk::json& out) {
  const auto c = curve_of(cfg);
  require_divides(cfg.m, c.q() * c.q() - 1, "q^2 - 1");
  const auto inst = gpk::make_hermitian_instance(c, cfg.m);
  const auto fg = gpk::build_f_g(inst);
  const auto model = gpk::plane_model(inst, fg, cfg.sampling_level);
  const auto cert = gpk::certify_model(model, inst, fg);
  gpk::json result{{"model", gpk::to_json(model)},
                   {"certificate", gpk::to_json(cert)},
                   {"f", gpk::to_json(fg.f)},
                   {"g", gpk::to_json(fg.g)},
                   {"f_poles", gpk::to_json(fg.f_poles)},
                   {"g_poles", gpk::to_json(fg.g_poles)}};
  out = gpk::envelope("construct", instance_json(cfg, true), std::move(result));
  return cert.valid ? kOk : kCertification;
}

int cmd_quotient(const RunConfig& cfg, gpk::json& out) {
  const auto c = curve_of(cfg);
  require_divides(cfg.m, c.q() + 1, "q + 1");
  const auto qm = gpk::quotient_plane_model(c, cfg.m);
  out = gpk::envelope("quotient", instance_json(cfg, true), gpk::to_json(qm));
  return qm.valid ? kOk : kCertification;
}

int cmd_outer(const RunConfig& cfg, gpk::json& out) {
  const auto c = curve_of(cfg);
  require_divides(cfg.m, c.q() * c.q() - 1, "q^2 - 1");
  if (cfg.point.empty()) throw UsageError("outer requires --point X,Y,Z");
  const auto q = parse_point(c.base_field(), cfg.point);
  if (!gpk::on_curve(c, q)) throw UsageError("point " + q.to_string() + " is not on the curve");
  const auto inst = gpk::make_hermitian_instance(c, cfg.m);
  const auto v = gpk::check_outer_point(c, inst.g1, inst.g2, q);
  gpk::json result = gpk::to_json(v);
  result["point"] = gpk::to_json(q);
  out = gpk::envelope("outer", instance_json(cfg, true), std::move(result));
  return v.holds ? kOk : kFalse;
}

int cmd_points(const RunConfig& cfg, gpk::json& out) {
  const auto c = curve_of(cfg);
  const auto pts = gpk::rational_points(c, c.base_field());
  gpk::json list = gpk::json::array();
  for (const auto& p : pts) list.push_back(gpk::to_json(p));
  gpk::json result{{"field", gpk::to_json(c.base_field())}, {"count", pts.size()}, {"points", std::move(list)}};
  out = gpk::envelope("points", instance_json(cfg, false), std::move(result));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois points and plane models of quotients of the Hermitian curve"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool with_m) {
    sub->add_option("--p", cfg.p, "characteristic")->required();
    sub->add_option("--e", cfg.e, "q = p^e")->capture_default_str();
    if (with_m) sub->add_option("--m", cfg.m, "order of the cyclic group H")->capture_default_str();
    sub->add_option("--out", cfg.out, "write the JSON report to this path");
    sub->add_flag("--json", cfg.print_json, "print JSON instead of text");
  };

  auto* verify = app.add_subcommand("verify", "check the criterion for the standard tuple");
  add_common(verify, true);
  verify->add_flag("--dump-elements", cfg.dump_elements, "include all group elements in the report");
  auto* construct = app.add_subcommand("construct", "build and certify the plane model");
  add_common(construct, true);
  construct->add_option("--sampling-level", cfg.sampling_level, "sample points over GF(q^(2k)) for this k");
  auto* quotient = app.add_subcommand("quotient", "plane model of X/C_m for m | q + 1");
  add_common(quotient, true);
  auto* outer = app.add_subcommand("outer", "orbit sum test at a single point");
  add_common(outer, true);
  outer->add_option("--point", cfg.point, "coordinates X,Y,Z as little-endian digit strings");
  auto* points = app.add_subcommand("points", "list the rational points over GF(q^2)");
  add_common(points, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  gpk::json report;
  int rc = kOk;
  try {
    if (*verify)
      rc = cmd_verify(cfg, report);
    else if (*construct)
      rc = cmd_construct(cfg, report);
    else if (*quotient)
      rc = cmd_quotient(cfg, report);
    else if (*outer)
      rc = cmd_outer(cfg, report);
    else
      rc = cmd_points(cfg, report);
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.what() << '\n';
    return kUsage;
  } catch (const gpk::Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kCertification;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kCertification;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string text = report.dump(1) + "\n";
  try {
    if (!cfg.out.empty()) write_atomically(cfg.out, text);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kCertification;
  }
  std::cout << (cfg.print_json ? text : gpk::render_text(report));
  std::fprintf(stderr, "elapsed: %.3f s\n", secs);
  return rc;
}
