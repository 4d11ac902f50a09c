// Command-line front end: ingest JSON problem files, run analyses
// (invariants, central axis, classification, equilibrium, reduction to
// sliding vectors, power against a twist), and emit human-readable or
// machine-readable reports.
//
// Exit codes: 0 success / equilibrium, 1 analysis-negative, 2 parse error,
// 3 validation error.

#include "screwalg/duality.hpp"
#include "screwalg/json_io.hpp"
#include "screwalg/screw.hpp"
#include "screwalg/statics.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::json;
using namespace screwalg;

constexpr int kExitNegative = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;

struct CliError {
  int code;
  std::string message;
};

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw CliError{kExitParse, "cannot open '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw CliError{kExitParse, std::string("parse error: ") + e.what()};
  }
}

io::Problem load_problem(const std::string& path) {
  try {
    return io::parse_problem(read_json(path));
  } catch (const io::ValidationError& e) {
    throw CliError{kExitValidation, std::string("validation error: ") + e.what()};
  }
}

const char* kind_name(ScrewKind k) {
  switch (k) {
    case ScrewKind::zero: return "zero";
    case ScrewKind::sliding: return "sliding";
    case ScrewKind::couple: return "couple";
    default: return "general";
  }
}

std::string format_pairs(Eigen::Index n, const Vectord& coeffs) {
  std::ostringstream ss;
  ss << "{";
  Eigen::Index p = 0;
  bool first = true;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j, ++p) {
      if (!first) ss << ", ";
      first = false;
      ss << "(" << i + 1 << "," << j + 1 << "): " << coeffs[p];
    }
  ss << "}";
  return ss.str();
}

std::string format_vec(const Vectord& v) {
  std::ostringstream ss;
  ss << "[";
  for (Eigen::Index i = 0; i < v.size(); ++i)
    ss << (i ? ", " : "") << v[i];
  ss << "]";
  return ss.str();
}

void emit(const json& report, bool as_json) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::cout << "tolerance: " << report.at("tolerance").get<double>() << "\n";
  for (const auto& [key, val] : report.at("lines").items())
    std::cout << key << ": " << val.get<std::string>() << "\n";
}

int cmd_analyze(const std::string& path, double tol, bool as_json) {
  const io::Problem prob = load_problem(path);
  const LineBivectord m = resultant(prob.system);
  const auto cls = classify(m, tol);
  const auto tri = trivector_invariant(m);

  json rep;
  rep["tolerance"] = tol;
  rep["vector_invariant"] = io::serialize_vector(m.u);
  rep["moment_at_origin"] = io::serialize_bivector(m.m0);
  rep["trivector_invariant_magnitude"] = magnitude_t(tri);
  rep["classification"] = kind_name(cls.kind);
  rep["equilibrium"] = is_equilibrium(prob.system, tol);

  json lines = json::object();
  lines["vector invariant"] = format_vec(m.u);
  lines["moment at origin"] = format_pairs(m.dim(), m.m0.coeffs);
  lines["trivector invariant magnitude"] = std::to_string(magnitude_t(tri));
  lines["classification"] = std::string(kind_name(cls.kind));

  if (m.u.norm() > 0) {
    const auto axis = central_axis(m);
    rep["axis"] = {{"point", io::serialize_vector(axis.q)},
                   {"direction", io::serialize_vector(axis.u)},
                   {"residual_couple", io::serialize_bivector(axis.beta)},
                   {"residual_couple_magnitude", magnitude_b(axis.beta)}};
    lines["axis point"] = format_vec(axis.q);
    lines["axis direction"] = format_vec(axis.u);
    lines["residual couple"] = format_pairs(m.dim(), axis.beta.coeffs);
    lines["residual couple magnitude"] = std::to_string(magnitude_b(axis.beta));
  }
  lines["equilibrium"] = is_equilibrium(prob.system, tol) ? "true" : "false";
  rep["lines"] = lines;
  emit(rep, as_json);
  return 0;
}

int cmd_equilibrium(const std::string& path, double tol, bool as_json) {
  const io::Problem prob = load_problem(path);
  const LineBivectord m = resultant(prob.system);
  const bool eq = is_equilibrium(prob.system, tol);

  json rep;
  rep["tolerance"] = tol;
  rep["equilibrium"] = eq;
  rep["residual_force_norm"] = m.u.norm();
  rep["residual_moment_norm"] = magnitude_b(m.m0);
  json lines = json::object();
  lines["equilibrium"] = eq ? "true" : "false";
  lines["residual force norm"] = std::to_string(m.u.norm());
  lines["residual moment norm"] = std::to_string(magnitude_b(m.m0));
  rep["lines"] = lines;
  emit(rep, as_json);
  return eq ? 0 : kExitNegative;
}

std::vector<Pointd> load_points(const std::string& path, Eigen::Index n) {
  json j = read_json(path);
  if (j.is_object() && j.contains("points")) j = j.at("points");
  if (!j.is_array())
    throw CliError{kExitValidation, "points file: expected array of points"};
  std::vector<Pointd> out;
  try {
    for (const auto& e : j) out.push_back(io::detail::parse_array(e, n, "point"));
  } catch (const io::ValidationError& e) {
    throw CliError{kExitValidation, std::string("validation error: ") + e.what()};
  }
  return out;
}

int cmd_reduce(const std::string& path, const std::string& points_path,
               double tol, bool as_json) {
  const io::Problem prob = load_problem(path);
  const Eigen::Index n = prob.system.dim;
  const LineBivectord m = resultant(prob.system);
  const auto points = load_points(points_path, n);
  if (static_cast<Eigen::Index>(points.size()) != n + 1)
    throw CliError{kExitValidation,
                   "reduce needs n+1 = " + std::to_string(n + 1) + " points"};

  std::vector<SlidingVectord> parts;
  try {
    parts = decompose_at_points(m, points);
  } catch (const std::domain_error& e) {
    throw CliError{kExitValidation, e.what()};
  }

  LineBivectord recomposed = zero_screw<double>(n);
  for (const auto& s : parts) recomposed = recomposed + from_sliding(s);
  const double residual = screw_norm(recomposed - m);

  json rep;
  rep["tolerance"] = tol;
  rep["sliding_vectors"] = json::array();
  json lines = json::object();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    rep["sliding_vectors"].push_back(
        {{"point", io::serialize_vector(parts[i].point)},
         {"vector", io::serialize_vector(parts[i].u)}});
    lines["sliding vector " + std::to_string(i)] =
        format_vec(parts[i].u) + " at " + format_vec(parts[i].point);
  }
  rep["recomposition_residual"] = residual;
  lines["recomposition residual"] = std::to_string(residual);
  rep["lines"] = lines;
  emit(rep, as_json);
  return 0;
}

int cmd_power(const std::string& path, const std::string& twist_path,
              double tol, bool as_json) {
  const io::Problem prob = load_problem(path);
  const Eigen::Index n = prob.system.dim;
  Twistd twist{Vectord(), AngularVelocityd{}, Vectord()};
  try {
    twist = io::parse_twist(read_json(twist_path));
  } catch (const io::ValidationError& e) {
    throw CliError{kExitValidation, std::string("validation error: ") + e.what()};
  }
  if (twist.q.size() != n)
    throw CliError{kExitValidation, "twist dimension does not match problem"};

  std::vector<PointCovectord> forces;
  for (const auto& f : prob.system.forces)
    forces.push_back({f.point, covector_from_vector(f.force)});

  double couple_power = 0;
  Wrenchd w = aggregate_wrench(forces, n);
  for (const auto& c : prob.system.couples) {
    const auto torque = torque_from_couple(c);
    w.mp = w.mp + torque;
    couple_power += pairing(torque, twist.omega);
  }

  const double direct = power(forces, twist) + couple_power;
  const double invariant = scalar_invariant(w, twist, Pointd(Pointd::Zero(n)));

  json rep;
  rep["tolerance"] = tol;
  rep["power_direct"] = direct;
  rep["power_invariant"] = invariant;
  rep["difference"] = direct - invariant;
  json lines = json::object();
  lines["power (direct sum)"] = std::to_string(direct);
  lines["power (scalar invariant)"] = std::to_string(invariant);
  lines["difference"] = std::to_string(direct - invariant);
  rep["lines"] = lines;
  emit(rep, as_json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sliding-vector / screw algebra analysis"};
  app.require_subcommand(1);

  double tol = 1e-9;
  bool as_json = false;
  std::string problem_path, twist_path, points_path;

  app.add_option("--tol", tol, "comparison tolerance")->capture_default_str();
  app.add_flag("--json", as_json, "machine-readable JSON output");

  auto* analyze = app.add_subcommand("analyze", "invariants, classification, central axis");
  analyze->add_option("problem", problem_path, "problem file ('-' for stdin)")->required();

  auto* equilibrium = app.add_subcommand("equilibrium", "test static equilibrium");
  equilibrium->add_option("problem", problem_path)->required();

  auto* reduce = app.add_subcommand("reduce", "express as n sliding vectors at given points");
  reduce->add_option("problem", problem_path)->required();
  reduce->add_option("--points", points_path, "JSON file with n+1 points")->required();

  auto* power = app.add_subcommand("power", "power of the force system against a twist");
  power->add_option("problem", problem_path)->required();
  power->add_option("twist", twist_path, "twist file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(problem_path, tol, as_json);
    if (app.got_subcommand(equilibrium)) return cmd_equilibrium(problem_path, tol, as_json);
    if (app.got_subcommand(reduce)) return cmd_reduce(problem_path, points_path, tol, as_json);
    if (app.got_subcommand(power)) return cmd_power(problem_path, twist_path, tol, as_json);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
