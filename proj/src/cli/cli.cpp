#include "mixtau/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "mixtau/error.hpp"
#include "mixtau/parser.hpp"
#include "mixtau/region.hpp"

namespace mixtau {

namespace {

using Json = nlohmann::ordered_json;

struct FamilyArgs {
  std::uint64_t p = 0;
  std::string vars;
  std::vector<std::string> ideals;
  unsigned e_max = 8;
  unsigned confirm = 2;
};

struct Options {
  FamilyArgs fam;
  std::string poly;
  unsigned level = 1;
  std::string point;
  std::string box;
  unsigned k = 0;
  std::string ppm, csv, legend;
  unsigned threads = 1;
  std::string direction;
  std::string target;
  unsigned levels = 3;
  std::uint64_t max_m = 1u << 12;
  std::string bound;
  std::string shift;
  unsigned depth = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<Rational> parse_rationals(const std::string& text, const char* what) {
  if (trim(text).empty()) throw ParseError(std::string("empty ") + what, 0);
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) out.push_back(Rational::parse(trim(part)));
  return out;
}

std::vector<std::uint64_t> parse_naturals(const std::string& text, const char* what) {
  std::vector<std::uint64_t> out;
  for (const auto& r : parse_rationals(text, what)) {
    if (!r.is_integer() || r.is_negative()) {
      throw ParseError(std::string(what) + " entries must be non-negative integers", 0);
    }
    out.push_back(static_cast<std::uint64_t>(r.num()));
  }
  return out;
}

RingPtr make_ring(const FamilyArgs& a) {
  std::vector<std::string> vars;
  for (const auto& v : split(a.vars, ',')) vars.push_back(trim(v));
  return Ring::make(a.p, vars);
}

IdealGens parse_ideal(const std::string& text, const RingPtr& ring) {
  return IdealGens(ring, parse_polynomial_list(text, ring));
}

IdealFamily make_family(const FamilyArgs& a, const RingPtr& ring) {
  if (a.ideals.empty()) throw PreconditionError("at least one --ideal is required");
  std::vector<IdealGens> ideals;
  for (const auto& text : a.ideals) ideals.push_back(parse_ideal(text, ring));
  return IdealFamily(std::move(ideals));
}

TauConfig tau_config(const FamilyArgs& a) {
  TauConfig cfg;
  cfg.e_max = a.e_max;
  cfg.confirm_window = a.confirm;
  cfg.e_start = std::min(cfg.e_start, cfg.e_max);
  cfg.validate();
  return cfg;
}

Json ring_json(const Ring& ring) {
  return Json{{"p", ring.characteristic()}, {"vars", ring.variables()}};
}

Json gens_json(const ReducedGB& gb) {
  Json gens = Json::array();
  for (const auto& g : gb.basis()) gens.push_back(g.to_string());
  return gens;
}

Json ideal_json(const ReducedGB& gb) { return Json{{"ring", ring_json(*gb.ring())}, {"gens", gens_json(gb)}}; }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw PreconditionError("cannot open " + path + " for writing");
  f << content;
  if (!f) throw ResourceLimitError("failed writing " + path);
}

std::string raster_ppm(const RegionRaster& r) {
  if (r.shape.size() > 2) throw PreconditionError("PPM output needs at most two coordinates");
  const std::size_t w = r.shape[0];
  const std::size_t h = r.shape.size() == 2 ? r.shape[1] : 1;
  std::string out = "P3\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  for (std::size_t row = 0; row < h; ++row) {
    const std::size_t j = h - 1 - row;
    for (std::size_t i = 0; i < w; ++i) {
      std::vector<std::size_t> idx{i};
      if (r.shape.size() == 2) idx.push_back(j);
      const Rgb c = palette_color(r.at(idx));
      if (i) out += ' ';
      out += std::to_string(c.r) + ' ' + std::to_string(c.g) + ' ' + std::to_string(c.b);
    }
    out += '\n';
  }
  return out;
}

std::string raster_csv(const RegionRaster& r) {
  std::string out;
  for (std::size_t i = 0; i < r.shape.size(); ++i) out += "i" + std::to_string(i + 1) + ",";
  out += "ideal_key\n";
  for (std::size_t flat = 0; flat < r.cells.size(); ++flat) {
    for (auto v : grid_unflatten(flat, r.shape)) out += std::to_string(v) + ",";
    out += r.palette[r.cells[flat]].key + "\n";
  }
  return out;
}

Json raster_legend(const RegionRaster& r) {
  Json box = Json::array();
  for (const auto& l : r.box.upper) box.push_back(l.to_string());
  Json palette = Json::array();
  for (std::size_t i = 0; i < r.palette.size(); ++i) {
    const Rgb c = palette_color(i);
    Json gens = Json::array();
    for (const auto& g : r.palette_ideals[i].gens()) gens.push_back(g.to_string());
    palette.push_back(Json{{"index", i}, {"key", r.palette[i].key}, {"color", {c.r, c.g, c.b}}, {"gens", gens}});
  }
  return Json{{"p", r.p}, {"k", r.k}, {"box", box}, {"palette", palette}};
}

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(r.to_string());
  return a;
}

int cmd_root(const Options& o, std::ostream& out) {
  const RingPtr ring = make_ring(o.fam);
  const Polynomial h = parse_polynomial(o.poly, ring);
  if (h.is_zero()) throw PreconditionError("cannot take the root of the zero polynomial");
  const IdealGens root = poly_bracket_root(h, FrobLevel(*ring, o.level));
  out << ideal_json(buchberger(root)).dump() << '\n';
  return kExitOk;
}

int cmd_tau(const Options& o, std::ostream& out) {
  const RingPtr ring = make_ring(o.fam);
  const IdealFamily fam = make_family(o.fam, ring);
  const TauConfig cfg = tau_config(o.fam);
  const ParamPoint c{parse_rationals(o.point, "point")};
  out << ideal_json(buchberger(tau_mixed(fam, c, cfg), cfg.limits)).dump() << '\n';
  return kExitOk;
}

int cmd_raster(const Options& o, std::ostream& out) {
  const RingPtr ring = make_ring(o.fam);
  const IdealFamily fam = make_family(o.fam, ring);
  const TauConfig cfg = tau_config(o.fam);
  const Box box(parse_rationals(o.box, "box"));
  const RegionRaster r = rasterize(fam, box, o.k, cfg, o.threads);
  const std::string legend = raster_legend(r).dump() + "\n";
  if (!o.ppm.empty()) write_file(o.ppm, raster_ppm(r));
  if (!o.csv.empty()) write_file(o.csv, raster_csv(r));
  if (!o.legend.empty()) write_file(o.legend, legend);
  out << legend;
  return kExitOk;
}

int cmd_threshold(const Options& o, std::ostream& out) {
  const RingPtr ring = make_ring(o.fam);
  const IdealFamily fam = make_family(o.fam, ring);
  const IdealGens I = parse_ideal(o.target, ring);
  VSearchConfig vcfg;
  vcfg.max_m = o.max_m;
  const ThresholdResult t = f_threshold(fam, parse_naturals(o.direction, "direction"), I, o.levels, vcfg);
  out << Json{{"sequence", rationals_json(t.sequence)}, {"lower", t.lower.to_string()}, {"upper", t.upper.to_string()}}
             .dump()
      << '\n';
  return kExitOk;
}

int cmd_jump(const Options& o, std::ostream& out) {
  const RingPtr ring = make_ring(o.fam);
  const IdealFamily fam = make_family(o.fam, ring);
  const auto jumps =
      jumping_scan(fam, parse_naturals(o.direction, "direction"), o.k, Rational::parse(o.bound), tau_config(o.fam));
  Json list = Json::array();
  for (const auto& j : jumps) {
    list.push_back(Json{{"interval", {j.lower.to_string(), j.upper.to_string()}},
                        {"before", j.before.key},
                        {"after", j.after.key}});
  }
  out << Json{{"jumps", list}}.dump() << '\n';
  return kExitOk;
}

int cmd_fractal_check(const Options& o, std::ostream& out) {
  const RingPtr ring = make_ring(o.fam);
  const IdealFamily fam = make_family(o.fam, ring);
  const TauEvaluator eval(fam, tau_config(o.fam));
  const Box box(parse_rationals(o.box, "box"));
  const auto report =
      verify_fractal_identity_report(eval, parse_ideal(o.target, ring), o.level, parse_naturals(o.shift, "shift"), box, o.k);
  out << Json{{"holds", report.holds},
              {"samples", report.samples},
              {"mismatches", report.mismatches},
              {"colon", gens_json(buchberger(report.colon_ideal))}}
             .dump()
      << '\n';
  return report.holds ? kExitOk : kExitIdentityFailed;
}

int cmd_staircase(const Options& o, std::ostream& out) {
  Json points = Json::array();
  for (const auto& pt : staircase_boundary(o.depth)) points.push_back(pt.to_strings());
  out << points.dump() << '\n';
  return kExitOk;
}

/// "-vars" -> "--vars"; single-letter flags and values are left alone.
std::vector<std::string> normalize_args(const std::vector<std::string>& args) {
  static const std::regex single_dash_long("^-[A-Za-z][A-Za-z-]+$");
  std::vector<std::string> out;
  out.reserve(args.size());
  for (const auto& a : args) out.push_back(std::regex_match(a, single_dash_long) ? "-" + a : a);
  return out;
}

void add_ring_options(CLI::App* sub, Options& o) {
  sub->add_option("-p", o.fam.p, "prime characteristic")->required();
  sub->add_option("--vars", o.fam.vars, "comma-separated variable names")->required();
}

void add_family_options(CLI::App* sub, Options& o) {
  add_ring_options(sub, o);
  sub->add_option("--ideal", o.fam.ideals, "ideal as comma-separated generators (repeat per ideal)")->required();
  sub->add_option("--tau-emax", o.fam.e_max, "largest Frobenius level tried when stabilizing");
  sub->add_option("--confirm", o.fam.confirm, "consecutive equal levels required for stabilization");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius roots, mixed test ideals and their constancy regions over F_p", "mixtau"};
  app.require_subcommand(1);
  Options o;

  auto* root = app.add_subcommand("root", "bracket root h^[1/p^e]");
  add_ring_options(root, o);
  root->add_option("poly", o.poly, "polynomial")->required();
  root->add_option("-e", o.level, "Frobenius level");

  auto* tau = app.add_subcommand("tau", "mixed test ideal at a point");
  add_family_options(tau, o);
  tau->add_option("-c", o.point, "point c, comma-separated rationals")->required();

  auto* raster = app.add_subcommand("raster", "constancy-region raster");
  add_family_options(raster, o);
  raster->add_option("--box", o.box, "box side lengths")->required();
  raster->add_option("-k", o.k, "grid level (step 1/p^k)")->required();
  raster->add_option("--ppm", o.ppm, "PPM output path");
  raster->add_option("--csv", o.csv, "CSV output path");
  raster->add_option("--legend", o.legend, "legend JSON output path");
  raster->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));

  auto* threshold = app.add_subcommand("threshold", "F-threshold sequence V_e/p^e");
  add_family_options(threshold, o);
  threshold->add_option("-r", o.direction, "direction vector")->required();
  threshold->add_option("-I", o.target, "target ideal, comma-separated generators")->required();
  threshold->add_option("--emax", o.levels, "number of levels")->check(CLI::Range(1u, 30u));
  threshold->add_option("--max-m", o.max_m, "search cap for V");

  auto* jump = app.add_subcommand("jump", "F-jumping numbers along a direction");
  add_family_options(jump, o);
  jump->add_option("-r", o.direction, "direction vector")->required();
  jump->add_option("-k", o.k, "grid level")->required();
  jump->add_option("--bound", o.bound, "scan bound")->required();

  auto* fractal = app.add_subcommand("fractal-check", "check the fractal operator identity for chi");
  add_family_options(fractal, o);
  fractal->add_option("-I", o.target, "ideal I, comma-separated generators")->required();
  fractal->add_option("-e", o.level, "Frobenius level")->required();
  fractal->add_option("-b", o.shift, "shift vector")->required();
  fractal->add_option("--box", o.box, "box side lengths")->required();
  fractal->add_option("-k", o.k, "grid level")->required();

  auto* staircase = app.add_subcommand("staircase", "boundary points of the base-3 staircase");
  staircase->add_option("--depth", o.depth, "recursion depth")->required();

  std::vector<std::string> argv = normalize_args(args);
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (root->parsed()) return cmd_root(o, out);
    if (tau->parsed()) return cmd_tau(o, out);
    if (raster->parsed()) return cmd_raster(o, out);
    if (threshold->parsed()) return cmd_threshold(o, out);
    if (jump->parsed()) return cmd_jump(o, out);
    if (fractal->parsed()) return cmd_fractal_check(o, out);
    if (staircase->parsed()) return cmd_staircase(o, out);
  } catch (const ParseError& e) {
    err << "parse error at " << e.position() << ": " << e.what() << '\n';
    return kExitParse;
  } catch (const NotStabilizedError& e) {
    err << "not stabilized: " << e.what() << '\n';
    return kExitNotStabilized;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mixtau
