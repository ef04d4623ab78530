// Copyright 2026 The qnumrange Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qnr/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "qnr/error.hpp"
#include "qnr/essential.hpp"
#include "qnr/io.hpp"
#include "qnr/lancaster.hpp"
#include "qnr/numerical_range.hpp"
#include "qnr/polarization.hpp"
#include "qnr/random.hpp"
#include "qnr/spectrum.hpp"
#include "qnr/svg.hpp"

namespace qnr::cli {

namespace {

using json = nlohmann::ordered_json;
using Input = std::variant<QMatrix, OperatorFile>;

json config_object(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  j["input"] = c.input_path;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["angles"] = c.angles;
  j["section"] = c.section;
  j["depth"] = c.depth;
  j["tol"] = c.tol;
  j["out"] = c.out_dir;
  j["svg"] = c.svg;
  return j;
}

json points_json(std::span<const Point2> pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back({p.a, p.b});
  return arr;
}

void write_file(const RunConfig& c, const std::string& name, const std::string& content) {
  std::filesystem::create_directories(c.out_dir);
  const auto path = std::filesystem::path(c.out_dir) / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw NumericalError("cannot write " + path.string());
}

void write_summary(const RunConfig& c, json body) {
  json j;
  j["config"] = config_object(c);
  for (auto& [k, v] : body.items()) j[k] = v;
  write_file(c, "summary.json", j.dump(2) + "\n");
}

std::string csv_points(std::span<const Point2> pts, const std::string& kind) {
  std::string out;
  for (const auto& p : pts) out += format_double(p.a) + "," + format_double(p.b) + "," + kind + "\n";
  return out;
}

BildOptions bild_options(const RunConfig& c, std::string_view label) {
  BildOptions o;
  o.samples = c.samples;
  o.angles = c.angles;
  o.seed = child_seed(c.seed, label);
  return o;
}

const OperatorFile& need_operator(const Input& in, const std::string& command) {
  if (!std::holds_alternative<OperatorFile>(in)) {
    throw ParseError(command + " needs an operator file (with a \"tail\" member)");
  }
  return std::get<OperatorFile>(in);
}

QMatrix matrix_of(const Input& in, std::size_t section) {
  if (const auto* m = std::get_if<QMatrix>(&in)) return *m;
  return truncate(std::get<OperatorFile>(in).op, section).matrix;
}

std::vector<Point2> to_points(const SphereSet& s) {
  std::vector<Point2> out;
  for (const auto& sp : s.spheres) out.push_back({sp.a, sp.b});
  return out;
}

int run_bild(const RunConfig& c, const Input& in) {
  const QMatrix t = matrix_of(in, c.section);
  const BildRegion region = upper_bild(t, bild_options(c, "bild"));
  write_file(c, "bild.csv",
             "a,b,kind\n" + csv_points(region.inner_points, "inner") +
                 csv_points(region.outer_polygon, "vertex"));
  json s;
  s["n"] = t.size();
  s["frobenius"] = frobenius(t);
  s["hausdorff_gap"] = region.hausdorff_gap;
  s["support_gap"] = region.support_gap;
  s["exact"] = region.exact;
  s["outer_polygon"] = points_json(region.outer_polygon);
  s["inner_hull"] = points_json(region.inner_hull);
  try {
    const Interval r = real_section(region);
    s["real_section"] = {r.lo, r.hi};
  } catch (const NumericalError& e) {
    s["real_section"] = nullptr;
    s["real_section_error"] = e.what();
  }
  write_summary(c, s);
  if (c.svg) {
    const std::vector<Polygon> polys{region.outer_polygon};
    const auto [lo, hi] = svg::bounds(polys);
    svg::Canvas canvas(lo, hi);
    canvas.polygon(region.outer_polygon, "#1f4e99", "#9db8e8", 0.35);
    canvas.points(region.inner_points, "#333");
    canvas.polygon(region.inner_hull, "#c0392b", "none", 0.0);
    write_file(c, "bild.svg", canvas.str());
  }
  return kOk;
}

json essential_json(const Polygon& poly) {
  json s;
  s["polygon"] = points_json(poly);
  if (poly.size() == 2) {
    Polygon seg = poly;
    std::sort(seg.begin(), seg.end(), [](Point2 p, Point2 q) { return p.b != q.b ? p.b < q.b : p.a < q.a; });
    s["segment"] = points_json(seg);
  }
  return s;
}

json limit_json(const ModelOperator& m) {
  json arr = json::array();
  for (const auto& e : m.limit_set()) {
    if (e.is_sphere()) {
      arr.push_back({{"a", e.a}, {"b", e.b0}});
    } else {
      arr.push_back({{"a", e.a}, {"b0", e.b0}, {"b1", e.b1}});
    }
  }
  return arr;
}

bool validated(const OperatorFile& f, json& s) {
  try {
    f.op.validate(f.n_check);
    s["validated"] = true;
    return true;
  } catch (const DomainError& e) {
    s["validated"] = false;
    s["validation_error"] = e.what();
    return false;
  }
}

int run_essential(const RunConfig& c, const Input& in) {
  const OperatorFile& f = need_operator(in, "essential");
  json s;
  const bool ok = validated(f, s);
  const Polygon poly = essential_bild(f.op);
  write_file(c, "essential.csv", "a,b,kind\n" + csv_points(poly, "vertex"));
  s["tail"] = to_string(f.op.tail().kind);
  s["limit_set"] = limit_json(f.op);
  s["essential"] = essential_json(poly);
  write_summary(c, s);
  if (c.svg) {
    const std::vector<Polygon> polys{poly};
    const auto [lo, hi] = svg::bounds(polys);
    svg::Canvas canvas(lo, hi);
    canvas.polygon(poly, "#1f4e99", "#9db8e8", 0.5);
    write_file(c, "essential.svg", canvas.str());
  }
  return ok ? kOk : kVerificationFailed;
}

int run_sspec(const RunConfig& c, const Input& in) {
  const QMatrix t = matrix_of(in, c.section);
  const SphereSet spec = s_spectrum(t);
  std::string csv = "a,b\n";
  for (const auto& sp : spec.spheres) csv += format_double(sp.a) + "," + format_double(sp.b) + "\n";
  write_file(c, "sspec.csv", csv);
  json s;
  s["n"] = t.size();
  s["spheres"] = points_json(to_points(spec));
  s["worst_singular_value"] = spec.worst_singular_value;
  write_summary(c, s);
  return kOk;
}

std::vector<std::size_t> section_grid(std::size_t n) {
  std::vector<std::size_t> out;
  for (const std::size_t s : {50u, 100u, 200u, 500u}) {
    if (s < n) out.push_back(s);
  }
  out.push_back(n);
  return out;
}

int run_lancaster(const RunConfig& c, const Input& in) {
  const OperatorFile& f = need_operator(in, "lancaster");
  LancasterOptions o;
  o.sections = section_grid(c.section);
  o.bild = bild_options(c, "lancaster");
  o.tolerance = c.tol;
  o.reference = f.closure_reference;
  o.keep_regions = true;
  const LancasterReport report = lancaster_check(f.op, o);

  // Probe edges: the reference boundary when given, else the outer polygon of
  // each section (which reduces to the one-sided bild gap).
  std::vector<std::pair<Point2, Point2>> edges;
  if (f.closure_reference) {
    const Polygon& ref = *f.closure_reference;
    for (std::size_t e = 0; e < ref.size(); ++e) edges.emplace_back(ref[e], ref[(e + 1) % ref.size()]);
  }
  std::vector<double> residual(o.sections.size(), 0.0);
  json edge_rows = json::array();
  for (const auto& [p, q] : edges) {
    const auto probe = nonclosedness_probe(report.regions, o.sections, p, q);
    json row;
    row["edge"] = points_json(std::vector<Point2>{p, q});
    json vals = json::array();
    for (std::size_t i = 0; i < probe.size(); ++i) {
      residual[i] = std::max(residual[i], probe[i].residual);
      vals.push_back(probe[i].residual);
    }
    row["residual"] = vals;
    edge_rows.push_back(row);
  }
  if (edges.empty()) {
    for (std::size_t i = 0; i < o.sections.size(); ++i) {
      const Polygon& outer = report.regions[i].outer_polygon;
      for (std::size_t e = 0; e < outer.size(); ++e) {
        const std::vector<BildRegion> one{report.regions[i]};
        const std::vector<std::size_t> sec{o.sections[i]};
        residual[i] = std::max(residual[i],
                               nonclosedness_probe(one, sec, outer[e], outer[(e + 1) % outer.size()])[0].residual);
      }
    }
  }

  std::string csv = "N,hausdorff,residual\n";
  json rows = json::array();
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const LancasterRow& r = report.rows[i];
    const double h = o.reference ? r.hausdorff_reference : r.hausdorff_outer;
    csv += std::to_string(r.section) + "," + format_double(h) + "," + format_double(residual[i]) + "\n";
    rows.push_back({{"N", r.section},
                    {"hausdorff", h},
                    {"hausdorff_outer", r.hausdorff_outer},
                    {"hausdorff_reference", o.reference ? json(r.hausdorff_reference) : json(nullptr)},
                    {"bild_gap", r.bild_gap},
                    {"satellites", r.satellites},
                    {"residual", residual[i]}});
  }
  write_file(c, "lancaster.csv", csv);
  json s;
  s["essential_upper"] = points_json(report.essential_upper);
  if (o.reference) s["reference"] = points_json(*o.reference);
  s["rows"] = rows;
  s["edges"] = edge_rows;
  s["monotone"] = report.monotone;
  s["final_distance"] = report.final_distance;
  s["pass"] = report.pass;
  write_summary(c, s);
  if (c.svg) {
    const BildRegion& last = report.regions.back();
    std::vector<Polygon> polys{last.outer_polygon, report.essential_upper};
    if (o.reference) polys.push_back(*o.reference);
    const auto [lo, hi] = svg::bounds(polys);
    svg::Canvas canvas(lo, hi);
    for (const auto& m : report.iconv_regions.back().members) canvas.polygon(m, "none", "#f5b041", 0.02);
    canvas.polygon(last.outer_polygon, "#1f4e99", "none", 0.0);
    canvas.polygon(report.essential_upper, "#c0392b", "#c0392b", 0.6);
    if (o.reference) canvas.polygon(*o.reference, "#27ae60", "none", 0.0);
    write_file(c, "lancaster.svg", canvas.str());
  }
  return report.pass ? kOk : kVerificationFailed;
}

bool same_polygon(const Polygon& p, const Polygon& q, double tol) {
  if (p.size() != q.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (dist(p[i], q[i]) > tol) return false;
  }
  return true;
}

int verify_operator(const RunConfig& c, const OperatorFile& f) {
  const ModelOperator& m = f.op;
  json s;
  json checks;
  bool ok = validated(f, s);
  const Polygon poly = essential_bild(m);
  s["essential"] = essential_json(poly);

  Rng rng = make_rng(c.seed, "verify.block");
  const QMatrix other = random_matrix(std::max<std::size_t>(1, m.block_size()), rng);
  const bool compact = essential_bild(m.with_block(other)) == poly;
  const bool adjoint = essential_bild(m.adjoint()) == poly;
  constexpr double kA = -2.0, kB = 0.5;
  Polygon mapped;
  for (const auto& v : poly) mapped.push_back({kA * v.a + kB, std::fabs(kA) * v.b});
  const bool affine = same_polygon(essential_bild(m.affine(kA, kB)), convex_hull(mapped), 1e-12);
  bool limits = true;
  for (const auto& e : m.limit_set()) {
    limits = limits && distance_to_convex(poly, {e.a, e.b0}) <= 1e-12 &&
             distance_to_convex(poly, {e.a, e.b1}) <= 1e-12;
  }
  checks["compact_perturbation"] = compact;
  checks["adjoint"] = adjoint;
  checks["affine"] = affine;
  checks["limit_inclusion"] = limits;
  ok = ok && compact && adjoint && affine && limits;
  if (m.tail().kind == TailSymbol::Kind::constant) {
    const bool eig = distance_to_convex(poly, {csim(m.symbol(1)).a, csim(m.symbol(1)).b}) <= 1e-12;
    checks["eigenvalue_inclusion"] = eig;
    ok = ok && eig;
  }

  // Constructive membership of the polygon's vertex average.
  Point2 centre{};
  for (const auto& v : poly) centre = centre + (1.0 / static_cast<double>(poly.size())) * v;
  const MembershipReport mr =
      we_membership_report(m, Quaternion{centre.a, std::fabs(centre.b), 0.0, 0.0}, 1e-9, c.depth);
  const double bound = 5.0 * (2.0 + m.norm_bound()) / static_cast<double>(std::max<std::size_t>(1, c.depth));
  const bool constructive = mr.member && mr.constructed && mr.constructive_error <= bound;
  checks["constructive_membership"] = {{"point", {centre.a, std::fabs(centre.b)}},
                                       {"error", mr.constructive_error},
                                       {"bound", bound},
                                       {"pass", constructive}};
  ok = ok && constructive;
  s["checks"] = checks;
  s["pass"] = ok;
  write_file(c, "verify.csv", "check,pass\n" + [&] {
    std::string rows;
    for (const auto& [k, v] : checks.items()) {
      const bool pass = v.is_boolean() ? v.get<bool>() : v.at("pass").get<bool>();
      rows += k + "," + (pass ? "1" : "0") + "\n";
    }
    return rows;
  }());
  write_summary(c, s);
  return ok ? kOk : kVerificationFailed;
}

int verify_matrix(const RunConfig& c, const QMatrix& t) {
  json s;
  json checks;
  const BildRegion region = upper_bild(t, bild_options(c, "verify"));
  const SphereSet spec = s_spectrum(t);
  double worst_spectrum = 0.0;
  for (const auto& sp : spec.spheres) {
    worst_spectrum = std::max(worst_spectrum, distance_to_convex(region.outer_polygon, {sp.a, sp.b}));
  }
  double worst_inner = 0.0;
  for (const auto& p : region.inner_points) {
    worst_inner = std::max(worst_inner, distance_to_convex(region.outer_polygon, p));
  }
  Rng rng = make_rng(c.seed, "verify.polarization");
  double worst_pol = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const QVector x = random_unit_vector(t.size(), rng);
    const QVector y = random_unit_vector(t.size(), rng);
    worst_pol = std::max(worst_pol, abs(polarization(t, x, y) - inner(qnr::apply(t, x), y)));
  }
  bool real_ok = true;
  try {
    const Interval r = real_section(region);
    s["real_section"] = {r.lo, r.hi};
  } catch (const NumericalError& e) {
    real_ok = false;
    s["real_section"] = nullptr;
  }
  checks["spectrum_in_bild"] = {{"worst", worst_spectrum}, {"pass", worst_spectrum <= 1e-6}};
  checks["inner_in_outer"] = {{"worst", worst_inner}, {"pass", worst_inner <= 1e-9}};
  checks["polarization"] = {{"worst", worst_pol}, {"pass", worst_pol <= 1e-10 * (1.0 + frobenius(t))}};
  checks["real_section"] = {{"pass", real_ok}};
  bool ok = true;
  std::string rows;
  for (const auto& [k, v] : checks.items()) {
    const bool pass = v.at("pass").get<bool>();
    ok = ok && pass;
    rows += k + "," + (pass ? "1" : "0") + "\n";
  }
  s["spheres"] = points_json(to_points(spec));
  s["hausdorff_gap"] = region.hausdorff_gap;
  s["checks"] = checks;
  s["pass"] = ok;
  write_file(c, "verify.csv", "check,pass\n" + rows);
  write_summary(c, s);
  return ok ? kOk : kVerificationFailed;
}

int run_verify(const RunConfig& c, const Input& in) {
  if (const auto* f = std::get_if<OperatorFile>(&in)) return verify_operator(c, *f);
  return verify_matrix(c, std::get<QMatrix>(in));
}

}  // namespace

std::string config_json(const RunConfig& config) { return config_object(config).dump(); }

int run(const RunConfig& config, std::ostream& log) {
  try {
    const Input in = parse_input(read_file(config.input_path));
    if (config.command == "bild") return run_bild(config, in);
    if (config.command == "essential") return run_essential(config, in);
    if (config.command == "lancaster") return run_lancaster(config, in);
    if (config.command == "sspec") return run_sspec(config, in);
    if (config.command == "verify") return run_verify(config, in);
    log << "unknown command: " << config.command << "\n";
    return kParseError;
  } catch (const ParseError& e) {
    log << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const DimensionError& e) {
    log << "invalid input: " << e.what() << "\n";
    return kParseError;
  } catch (const DomainError& e) {
    log << "invalid input: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    log << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
}

int main(int argc, char** argv) {
  CLI::App app{"Quaternionic numerical ranges: bild, essential bild, Lancaster checks"};
  RunConfig c;
  app.add_option("command", c.command, "bild | essential | lancaster | sspec | verify")
      ->required()
      ->check(CLI::IsMember({"bild", "essential", "lancaster", "sspec", "verify"}));
  app.add_option("input", c.input_path, "matrix or operator JSON file")->required();
  app.add_option("--seed", c.seed, "RNG seed")->capture_default_str();
  app.add_option("--samples,-m", c.samples, "random unit vectors per bild")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--angles,-k", c.angles, "support angles in [0, pi]")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{3}, std::size_t{1} << 20));
  app.add_option("--section,-N", c.section, "finite section size for operators")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--depth,-p", c.depth, "combination depth")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--tol", c.tol, "distance tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--out", c.out_dir, "output directory")->capture_default_str();
  app.add_flag("--svg", c.svg, "also write an SVG figure");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }
  const int status = run(c, std::cerr);
  if (status == kOk) std::cerr << c.command << ": ok\n";
  if (status == kVerificationFailed) std::cerr << c.command << ": verification failed\n";
  return status;
}

}  // namespace qnr::cli
