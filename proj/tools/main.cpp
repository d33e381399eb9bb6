// Command-line surface: classify points, trace curves, extract admissible
// arcs, export surface meshes, and run the verification suite.
#include "wavem/io.hpp"
#include "wavem/lax.hpp"
#include "wavem/oracle.hpp"
#include "wavem/surfaces.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

using json = nlohmann::json;
using namespace wavem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitVerifyFailed = 4;
constexpr int kExitIo = 5;

struct Config {
  ModelParams params = ModelParams::standard();
  double z_max = 50.0;
  double membership_tol = 1e-9;
  double root_tol = 1e-9;
  double boundary_tol = 1e-9;
  std::string format = "csv";
  GridSpec grid;      // flood-fill grid for the verify table
  MeshSpec mesh;      // defaults for the mesh subcommand
};

void apply_config_file(Config& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open config file: " + path);
  json j;
  in >> j;
  double b1 = cfg.params.b1, c = cfg.params.c;
  if (j.contains("b1")) b1 = j["b1"].get<double>();
  if (j.contains("c")) c = j["c"].get<double>();
  cfg.params = ModelParams::standard(b1, c);
  if (j.contains("z_max")) cfg.z_max = j["z_max"].get<double>();
  if (j.contains("format")) cfg.format = j["format"].get<std::string>();
  if (j.contains("tolerances")) {
    const auto& t = j["tolerances"];
    if (t.contains("membership")) cfg.membership_tol = t["membership"].get<double>();
    if (t.contains("root")) cfg.root_tol = t["root"].get<double>();
    if (t.contains("boundary")) cfg.boundary_tol = t["boundary"].get<double>();
  }
  if (!(cfg.membership_tol > 0.0) || !(cfg.root_tol > 0.0) || !(cfg.boundary_tol > 0.0))
    throw std::invalid_argument("tolerances must be positive");
  if (j.contains("grid")) {
    const auto& g = j["grid"];
    if (g.contains("z_min")) cfg.grid.z_min = g["z_min"].get<double>();
    if (g.contains("z_max")) cfg.grid.z_max = g["z_max"].get<double>();
    if (g.contains("t_min")) cfg.grid.t_min = g["t_min"].get<double>();
    if (g.contains("t_max")) cfg.grid.t_max = g["t_max"].get<double>();
    if (g.contains("y_min")) cfg.grid.y_min = g["y_min"].get<double>();
    if (g.contains("y_max")) cfg.grid.y_max = g["y_max"].get<double>();
    if (g.contains("nz")) cfg.grid.nz = g["nz"].get<int>();
    if (g.contains("nt")) cfg.grid.nt = g["nt"].get<int>();
    if (g.contains("ny")) cfg.grid.ny = g["ny"].get<int>();
    if (g.contains("guard_cells")) cfg.grid.guard_cells = g["guard_cells"].get<int>();
    cfg.grid.validate();
    cfg.mesh.z_min = cfg.grid.z_min;
    cfg.mesh.z_max = cfg.grid.z_max;
    cfg.mesh.t_min = cfg.grid.t_min;
    cfg.mesh.t_max = cfg.grid.t_max;
  }
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::ios_base::failure("cannot open output path: " + path);
  return file;
}

json roots_to_json(const RealRoots& rr) {
  json arr = json::array();
  for (const Root& r : rr.roots)
    arr.push_back({{"z", r.x}, {"multiplicity", r.multiplicity}, {"residual", r.residual}});
  return arr;
}

double surface_distance_estimate(const ModelParams& mp, SurfaceId id, const ChartPoint& p) {
  const double v = surface_value(mp, id, p);
  const double h = 1e-6;
  const double gz = (surface_value(mp, id, {p.z + h, p.t, p.y}) -
                     surface_value(mp, id, {p.z - h, p.t, p.y})) / (2 * h);
  const double gt = (surface_value(mp, id, {p.z, p.t + h, p.y}) -
                     surface_value(mp, id, {p.z, p.t - h, p.y})) / (2 * h);
  const double gy = (surface_value(mp, id, {p.z, p.t, p.y + h}) -
                     surface_value(mp, id, {p.z, p.t, p.y - h})) / (2 * h);
  const double gn = std::sqrt(gz * gz + gt * gt + gy * gy);
  return gn > 0 ? std::abs(v) / gn : std::abs(v);
}

int run_classify(const Config& cfg, double z, double t, double y, bool as_json) {
  const ChartPoint p{z, t, y};
  const ModelParams& mp = cfg.params;
  const RegionLabel label = region_classify(mp, p, cfg.boundary_tol);
  const double vson = surface_value(mp, SurfaceId::Son, p);
  const double vsonp = surface_value(mp, SurfaceId::SonPrime, p);
  json dist;
  for (SurfaceId id : {SurfaceId::Characteristic, SurfaceId::Son, SurfaceId::SonPrime})
    dist[surface_name(id)] = surface_distance_estimate(mp, id, p);
  if (as_json) {
    json out = {{"label", region_name(label)},
                {"Y", y},
                {"son", vson},
                {"sonprime", vsonp},
                {"distance", dist}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "label: " << region_name(label) << "\n"
              << "Y: " << format_double(y) << "\n"
              << "son: " << format_double(vson) << "\n"
              << "sonprime: " << format_double(vsonp) << "\n"
              << "distance: characteristic=" << format_double(dist["characteristic"])
              << " son=" << format_double(dist["son"])
              << " sonprime=" << format_double(dist["sonprime"]) << "\n";
  }
  return kExitOk;
}

int run_curve(const Config& cfg, double k, double l, bool prime, double z_lo,
              double z_hi, int n, const std::string& format, const std::string& out) {
  const ModelParams& mp = cfg.params;
  const HugoniotCurve cu = curve_from_kl(mp, k, l, prime);
  const RealRoots rc = intersect_characteristic(mp, cu, cfg.root_tol);
  const RealRoots rs = intersect_son(mp, cu, cfg.root_tol);
  const RealRoots rsp = intersect_sonprime(mp, cu, cfg.root_tol);
  const auto in_range = [&](const RealRoots& rr) {
    RealRoots f;
    for (const Root& r : rr.roots)
      if (r.x >= z_lo && r.x <= z_hi) f.roots.push_back(r);
    return f;
  };
  std::vector<CurveSample> samples;
  samples.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double z = z_lo + (z_hi - z_lo) * i / (n - 1);
    samples.push_back(sample_curve(mp, cu, z));
  }
  std::ofstream file;
  std::ostream& os = open_output(file, out);
  if (format == "json") {
    json j = {{"curve", {{"k", k}, {"l", l}, {"prime", prime}}},
              {"intersections",
               {{"characteristic", roots_to_json(in_range(rc))},
                {"son", roots_to_json(in_range(rs))},
                {"sonprime", roots_to_json(in_range(rsp))}}},
              {"samples", json::array()}};
    for (const CurveSample& s : samples)
      j["samples"].push_back({{"z", s.z}, {"t", s.t}, {"Y", s.y}, {"s", s.s}});
    os << j.dump(2) << "\n";
  } else {
    const auto root_list = [&](const RealRoots& rr) {
      std::string acc;
      for (const Root& r : rr.roots) {
        if (!acc.empty()) acc += ' ';
        acc += format_double(r.x);
        if (r.multiplicity > 1) acc += "(x" + std::to_string(r.multiplicity) + ")";
      }
      return acc.empty() ? std::string("none") : acc;
    };
    os << "# curve k=" << format_double(k) << " l=" << format_double(l)
       << " prime=" << (prime ? "true" : "false") << "\n";
    os << "# characteristic-roots: " << root_list(in_range(rc)) << "\n";
    os << "# son-roots: " << root_list(in_range(rs)) << "\n";
    os << "# sonprime-roots: " << root_list(in_range(rsp)) << "\n";
    os << "z,t,Y,s\n";
    for (const CurveSample& s : samples)
      os << csv_row({format_double(s.z), format_double(s.t), format_double(s.y),
                     format_double(s.s)});
  }
  return kExitOk;
}

int run_arcs(const Config& cfg, std::optional<double> k, std::optional<double> l,
             std::optional<double> z, std::optional<double> t, std::optional<double> y,
             const std::string& out) {
  const ModelParams& mp = cfg.params;
  HugoniotCurve cu;
  if (k && l) {
    cu = curve_from_kl(mp, *k, *l, false);
  } else if (z && t && y) {
    cu = curve_through_point(mp, ChartPoint{*z, *t, *y}, false);
  } else {
    std::cerr << "arcs: provide either --k/--l or --z/--t/--Y\n";
    return kExitUsage;
  }
  ArcOptions opt;
  opt.z_max = cfg.z_max;
  opt.tol = cfg.boundary_tol;
  opt.root_tol = cfg.root_tol;
  const std::vector<ArcSegment> arcs = extract_arcs(mp, cu, opt);
  json j = {{"curve", {{"k", cu.k}, {"l", cu.l}, {"prime", cu.prime}}},
            {"arcs", json::array()}};
  for (const ArcSegment& a : arcs) {
    json ja = {{"z_start", a.z_start},
               {"z_end", a.z_end},
               {"start", arc_start_name(a.start_kind)},
               {"end", arc_end_name(a.end_kind)},
               {"class", arc_class_name(a.classification)},
               {"samples", json::array()}};
    const int ns = 33;
    for (int i = 0; i < ns; ++i) {
      const double zz = a.z_start + (a.z_end - a.z_start) * i / (ns - 1);
      const CurveSample s = sample_curve(mp, cu, zz);
      ja["samples"].push_back({s.z, s.t, s.y, s.s});
    }
    j["arcs"].push_back(ja);
  }
  std::ofstream file;
  std::ostream& os = open_output(file, out);
  os << j.dump(2) << "\n";
  return kExitOk;
}

int run_mesh(const Config& cfg, const std::string& surface, const MeshSpec& spec,
             const std::string& format, const std::string& out) {
  const auto id = surface_from_name(surface);
  if (!id) {
    std::cerr << "mesh: unknown surface '" << surface
              << "' (characteristic|son|sonprime|tf|tfprime|sigma)\n";
    return kExitUsage;
  }
  const std::vector<MeshRow> rows = sample_surface(cfg.params, *id, spec);
  std::ofstream file;
  std::ostream& os = open_output(file, out);
  if (format == "json") {
    json j = {{"surface", surface}, {"points", json::array()}};
    for (const MeshRow& r : rows) j["points"].push_back({r.z, r.t, r.y});
    os << j.dump(2) << "\n";
  } else {
    os << "surface,z,t,Y\n";
    for (const MeshRow& r : rows)
      os << csv_row({surface, format_double(r.z), format_double(r.t), format_double(r.y)});
  }
  return kExitOk;
}

int run_verify(const Config& cfg, const std::string& only, bool list, bool as_json) {
  const auto& registry = oracle_registry();
  if (list) {
    for (const auto& c : registry) std::cout << c.name << "\n";
    return kExitOk;
  }
  const auto missing = uncovered_closed_forms();
  bool all_pass = missing.empty();
  for (const std::string& m : missing)
    std::cout << "[FAIL] coverage: closed form '" << m << "' has no registered oracle\n";
  bool matched_any = false;
  json jreports = json::array();
  for (const auto& c : registry) {
    if (!only.empty() && c.name.find(only) == std::string::npos) continue;
    matched_any = true;
    const OracleReport rep = c.run(cfg.params);
    if (as_json) {
      jreports.push_back({{"name", rep.name},
                          {"samples", rep.samples},
                          {"max_residual", rep.max_residual},
                          {"tolerance", rep.tolerance},
                          {"pass", rep.pass},
                          {"worst", rep.worst}});
      all_pass = all_pass && rep.pass;
      continue;
    }
    std::cout << (rep.pass ? "[PASS] " : "[FAIL] ") << rep.name
              << " max_residual=" << format_double(rep.max_residual)
              << " tol=" << format_double(rep.tolerance) << " (n=" << rep.samples << ")\n";
    for (const std::string& s : rep.worst) std::cout << "       " << s << "\n";
    if (c.name == "floodfill-regions") {
      const FloodFillResult ff = oracle_floodfill(cfg.params, cfg.grid);
      std::cout << "       components=" << ff.component_count << "\n";
      for (const auto& fc : ff.components)
        std::cout << "       " << region_name(fc.label) << " signs=(" << fc.sign_y << ","
                  << fc.sign_son << "," << fc.sign_sonprime << ") z=["
                  << format_double(fc.z_lo) << "," << format_double(fc.z_hi)
                  << "] rep=(" << format_double(fc.representative.z) << ","
                  << format_double(fc.representative.t) << ","
                  << format_double(fc.representative.y) << ") cells=" << fc.cells << "\n";
    }
    all_pass = all_pass && rep.pass;
  }
  if (as_json) std::cout << jreports.dump(2) << "\n";
  if (!only.empty() && !matched_any) {
    std::cerr << "verify: no check matches '" << only << "'\n";
    return kExitUsage;
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wave-manifold geometry for quadratic conservation laws"};
  app.require_subcommand(1);

  Config cfg;
  std::string config_path;
  double b1 = cfg.params.b1, c = cfg.params.c;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--b1", b1, "model parameter b1 (> 1)");
  app.add_option("--c", c, "model parameter c (> 0)");

  auto* cls = app.add_subcommand("classify", "classify a chart point");
  double pz = 0, pt = 0, py = 0;
  bool cls_json = false;
  cls->add_option("--z", pz, "z coordinate")->required();
  cls->add_option("--t", pt, "t coordinate")->required();
  cls->add_option("--Y", py, "Y coordinate")->required();
  cls->add_flag("--json", cls_json, "JSON output");

  auto* cur = app.add_subcommand("curve", "sample a Hugoniot curve");
  double ck = 0, clv = 0, cz0 = -5, cz1 = 5;
  int cn = 101;
  bool cprime = false;
  std::string cformat, cout_path;
  cur->add_option("--k", ck, "curve invariant k")->required();
  cur->add_option("--l", clv, "curve invariant l")->required();
  cur->add_flag("--prime", cprime, "Hugoniot' curve");
  cur->add_option("--z-min", cz0, "window start");
  cur->add_option("--z-max", cz1, "window end");
  cur->add_option("-n,--samples", cn, "sample count (>= 2)")
      ->check(CLI::Range(2, 10000000));
  cur->add_option("--format", cformat, "csv or json");
  cur->add_option("--out", cout_path, "output path (stdout by default)");

  auto* arc = app.add_subcommand("arcs", "extract admissible arcs");
  std::optional<double> ak, al, az, at, ay;
  std::string aout;
  arc->add_option("--k", ak, "curve invariant k");
  arc->add_option("--l", al, "curve invariant l");
  arc->add_option("--z", az, "point z");
  arc->add_option("--t", at, "point t");
  arc->add_option("--Y", ay, "point Y");
  arc->add_option("--out", aout, "output path");

  auto* msh = app.add_subcommand("mesh", "sample a surface mesh");
  std::string msurface, mformat, mout;
  MeshSpec mspec;
  msh->add_option("--surface", msurface, "surface name")->required();
  msh->add_option("--z-min", mspec.z_min, "z lower bound");
  msh->add_option("--z-max", mspec.z_max, "z upper bound");
  msh->add_option("--t-min", mspec.t_min, "t lower bound");
  msh->add_option("--t-max", mspec.t_max, "t upper bound");
  msh->add_option("--nz", mspec.nz, "z resolution");
  msh->add_option("--nt", mspec.nt, "t resolution");
  msh->add_option("--guard", mspec.guard, "pole guard half-width in z");
  msh->add_option("--format", mformat, "csv or json");
  msh->add_option("--out", mout, "output path");

  auto* ver = app.add_subcommand("verify", "run oracle verification checks");
  std::string vcheck;
  bool vall = false, vlist = false, vjson = false;
  ver->add_flag("--all", vall, "run every check (default)");
  ver->add_option("--check", vcheck, "run checks whose name contains this");
  ver->add_flag("--list", vlist, "list check names");
  ver->add_flag("--json", vjson, "emit reports as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    // Flags win over config.
    if (app.count("--b1") || app.count("--c")) {
      cfg.params = ModelParams::standard(app.count("--b1") ? b1 : cfg.params.b1,
                                         app.count("--c") ? c : cfg.params.c);
    }
    cfg.params.validate();
    if (!(cfg.z_max > 1.0 / std::sqrt(cfg.params.b1 + 1.0) + 1.0))
      throw std::invalid_argument(
          "z_max must exceed 1/sqrt(b1+1) + 1 so the clip window holds every critical z");
    const std::string fmt_curve = cformat.empty() ? cfg.format : cformat;
    const std::string fmt_mesh = mformat.empty() ? cfg.format : mformat;

    if (cls->parsed()) return run_classify(cfg, pz, pt, py, cls_json);
    if (cur->parsed()) return run_curve(cfg, ck, clv, cprime, cz0, cz1, cn, fmt_curve, cout_path);
    if (arc->parsed()) return run_arcs(cfg, ak, al, az, at, ay, aout);
    if (msh->parsed()) {
      // Config supplies mesh bounds; explicit flags win.
      if (!msh->count("--z-min")) mspec.z_min = cfg.mesh.z_min;
      if (!msh->count("--z-max")) mspec.z_max = cfg.mesh.z_max;
      if (!msh->count("--t-min")) mspec.t_min = cfg.mesh.t_min;
      if (!msh->count("--t-max")) mspec.t_max = cfg.mesh.t_max;
      return run_mesh(cfg, msurface, mspec, fmt_mesh, mout);
    }
    if (ver->parsed()) return run_verify(cfg, vcheck, vlist, vjson);
  } catch (const SecondaryBifurcation& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const DegenerateCurve& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::domain_error& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
