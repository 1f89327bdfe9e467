// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance [--cli PATH] [--work DIR] [criterion ...]
//
// Criteria: 1..8 and "census". With no criterion arguments all are run.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "acceptance.hpp"
#include "mixtau/error.hpp"
#include "mixtau/parser.hpp"
#include "mixtau/region.hpp"

using namespace mixtau;
using acceptance::Outcome;

namespace {

struct Context {
  std::string cli;
  std::filesystem::path work;
};

RingPtr f3xy() { return Ring::make(3, {"x", "y"}); }

IdealGens ideal(const std::string& text, const RingPtr& ring) {
  return IdealGens(ring, parse_polynomial_list(text, ring));
}

IdealFamily staircase(const RingPtr& R) { return IdealFamily({ideal("x+y", R), ideal("x*y", R)}); }

Rational frac(std::int64_t n, std::int64_t d) { return Rational(n, d); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome staircase_palette(const Context&) {
  const auto R = f3xy();
  const auto t0 = std::chrono::steady_clock::now();
  const RegionRaster r = rasterize(staircase(R), Box::unit(2), 4, {}, 1);
  const double secs = seconds_since(t0);
  const std::vector<IdealGens> expected{IdealGens::unit(R), ideal("x,y", R), ideal("x+y", R), ideal("x*y", R),
                                        ideal("x*y*(x+y)", R)};
  std::set<std::string> want, got;
  for (const auto& I : expected) want.insert(ideal_key(I).key);
  for (const auto& k : r.palette) got.insert(k.key);
  std::ostringstream os;
  os << r.shape[0] << "x" << r.shape[1] << " cells, " << r.palette.size() << " ideals {";
  for (std::size_t i = 0; i < r.palette.size(); ++i) os << (i ? ", " : "") << r.palette_ideals[i].to_string();
  os << "} in " << secs << " s (target < 30 s)";
  return {got == want && r.palette.size() == 5 && r.shape[0] == 82 && secs < 30.0, os.str()};
}

struct PointCase {
  Rational c1, c2;
  const char* expected;
};

Outcome point_oracles(const Context&) {
  const auto R = f3xy();
  const auto fam = staircase(R);
  std::vector<PointCase> cases{
      {frac(1, 3), frac(2, 3), "x,y"}, {frac(2, 3), frac(1, 3), "1"},   {0, frac(2, 3), "1"},
      {frac(1, 3), 1, "x*y"},          {1, frac(2, 3), "x+y"},           {1, 1, "x*y*(x+y)"},
  };
  for (std::int64_t q : {3, 9, 27}) cases.push_back({frac(q - 1, q), frac(q - 1, q), "x,y"});
  Outcome out;
  std::size_t ok = 0;
  std::ostringstream bad;
  for (const auto& pc : cases) {
    const ParamPoint c{{pc.c1, pc.c2}};
    const IdealGens t = tau_mixed(fam, c);
    if (ideal_equal(t, ideal(pc.expected, R))) {
      ++ok;
    } else {
      out.pass = false;
      bad << " tau" << c.to_string() << "=" << ideal_key(t).key << " expected (" << pc.expected << ");";
    }
  }
  out.detail = std::to_string(ok) + "/" + std::to_string(cases.size()) + " points exact" + bad.str();
  return out;
}

Outcome general_p(const Context&) {
  Outcome out;
  std::ostringstream os;
  std::size_t ok = 0, total = 0;
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const auto R = Ring::make(p, {"x", "y"});
    const auto fam = staircase(R);
    for (unsigned k = 1; k <= 2; ++k) {
      const auto q = static_cast<std::int64_t>(checked_pow(p, k));
      const IdealGens a = tau_mixed(fam, ParamPoint{{frac(1, q), frac(q - 1, q)}});
      const IdealGens b = tau_mixed(fam, ParamPoint{{frac(2, q), frac(q - 2, q)}});
      const bool a_ok = ideal_equal(a, ideal("x,y", R));
      const bool b_ok = b.has_unit_generator() || buchberger(b).is_unit();
      total += 2;
      ok += a_ok + b_ok;
      if (!a_ok || !b_ok) {
        out.pass = false;
        os << " p=" << p << " k=" << k << ":";
        if (!a_ok) os << " tau(1/" << q << "," << q - 1 << "/" << q << ")=" << ideal_key(a).key << " expected (x,y)";
        if (!b_ok) os << " tau(2/" << q << "," << q - 2 << "/" << q << ")=" << ideal_key(b).key << " expected R";
        os << ";";
      }
    }
  }
  out.detail = std::to_string(ok) + "/" + std::to_string(total) + " exact" + os.str();
  return out;
}

Outcome boundary_recursion(const Context&) {
  const auto R = f3xy();
  const TauEvaluator eval(staircase(R));
  const auto m = buchberger(ideal("x,y", R));
  Outcome out;
  std::size_t points = 0;
  std::ostringstream bad;
  for (unsigned depth = 0; depth <= 3; ++depth) {
    const Rational delta(1, static_cast<std::int64_t>(checked_pow(3, depth + 2)));
    for (const auto& pt : staircase_boundary(depth)) {
      ++points;
      const ParamPoint c = pt.value(3);
      ParamPoint below = c;
      for (auto& v : below.coords) v -= delta;
      const int at = chi(eval, m, c);
      const int under = chi(eval, m, below);
      if (at != 0 || under != 1) {
        out.pass = false;
        bad << " (" << pt.to_strings()[0] << "," << pt.to_strings()[1] << "): chi=" << at << " below=" << under << ";";
      }
    }
  }
  out.detail = std::to_string(points) + " boundary points, depth 0..3" + bad.str();
  return out;
}

Outcome fractal_identity(const Context&) {
  const auto R = f3xy();
  const IdealFamily fam = staircase(R);
  const TauEvaluator eval(fam);
  const auto l = fam.gen_counts();
  const IdealGens m = ideal("x,y", R);
  Outcome out;
  std::ostringstream os;
  for (unsigned e = 1; e <= 2; ++e) {
    const std::uint64_t q = checked_pow(3, e);
    std::size_t shifts = 0, samples = 0, mismatches = 0;
    for (std::uint64_t b1 = l[0] - 1; b1 < q; ++b1) {
      for (std::uint64_t b2 = l[1] - 1; b2 < q; ++b2) {
        const auto report = verify_fractal_identity_report(eval, m, e, {b1, b2}, Box::unit(2), e + 2);
        ++shifts;
        samples += report.samples;
        mismatches += report.mismatches;
        if (!report.holds) {
          out.pass = false;
          os << " e=" << e << " b=(" << b1 << "," << b2 << ") " << report.mismatches << " mismatches;";
        }
      }
    }
    os << " e=" << e << ": " << shifts << " shifts, " << samples - mismatches << "/" << samples << " samples agree;";
  }
  out.detail = os.str().substr(1);
  return out;
}

Outcome properties(const Context&) { return acceptance::property_suites(20240611); }

Outcome threshold_sequence(const Context&) {
  const auto R = f3xy();
  const auto fam = staircase(R);
  const auto t = f_threshold(fam, {1, 1}, ideal("x,y", R), 3);
  const std::vector<Rational> want{frac(1, 3), frac(5, 9), frac(17, 27)};
  std::ostringstream os;
  os << "sequence [";
  for (std::size_t i = 0; i < t.sequence.size(); ++i) os << (i ? ", " : "") << t.sequence[i];
  os << "]";
  // The diagonal of the level-3 raster leaves the region chi^(x,y) = 1
  // between 17/27 and 18/27 = 2/3.
  const TauEvaluator eval(fam);
  const auto m = buchberger(ideal("x,y", R));
  const auto g = sample_chi(eval, m, Box::unit(2), 3);
  std::size_t last_one = 0;
  for (std::size_t i = 0; i < g.shape()[0]; ++i)
    if (g.at({i, i}) == Rational(1)) last_one = i;
  os << "; diagonal chi=1 up to " << last_one << "/27";
  return {t.sequence == want && last_one == 17 && g.at({18, 18}) == Rational(0), os.str()};
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Outcome determinism(const Context& ctx) {
  if (ctx.cli.empty()) return {false, "no --cli path given"};
  const auto dir = ctx.work / "determinism";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::string family = " -p 3 -vars x,y -ideal 'x+y' -ideal 'x*y'";
  std::vector<std::string> files;
  for (int run = 1; run <= 2; ++run) {
    const std::string tag = (dir / ("run" + std::to_string(run))).string();
    const std::string threads = run == 1 ? "1" : "3";
    const std::string raster = quote(ctx.cli) + " raster" + family + " -box 1,1 -k 4 -threads " + threads +
                               " -ppm " + quote(tag + ".ppm") + " -csv " + quote(tag + ".csv") + " -legend " +
                               quote(tag + ".legend.json") + " > " + quote(tag + ".raster.out");
    const std::string threshold =
        quote(ctx.cli) + " threshold" + family + " -r 1,1 -I 'x,y' -emax 3 > " + quote(tag + ".threshold.json");
    if (std::system(raster.c_str()) != 0 || std::system(threshold.c_str()) != 0) {
      return {false, "CLI run " + std::to_string(run) + " failed"};
    }
  }
  Outcome out;
  std::ostringstream os;
  std::size_t bytes = 0;
  for (const char* ext : {".ppm", ".csv", ".legend.json", ".raster.out", ".threshold.json"}) {
    const std::string a = slurp(dir / (std::string("run1") + ext));
    const std::string b = slurp(dir / (std::string("run2") + ext));
    bytes += a.size();
    if (a.empty() || a != b) {
      out.pass = false;
      os << " " << ext << " differs;";
    }
  }
  out.detail = "5 artifacts, " + std::to_string(bytes) + " bytes, identical across runs (threads 1 vs 3)" + os.str();
  return out;
}

Outcome census(const Context&) {
  const auto R = f3xy();
  const TauEvaluator eval(staircase(R));
  const auto two = fractal_span_census(eval, ideal("x,y", R), Box::unit(2), 2);
  const auto three = fractal_span_census(eval, ideal("x,y", R), Box::unit(2), 3);
  bool same = two.size() == three.size();
  for (std::size_t i = 0; same && i < two.size(); ++i) same = two[i].function == three[i].function;
  return {same, "census sizes " + std::to_string(two.size()) + " (e_max=2) and " + std::to_string(three.size()) +
                    " (e_max=3)"};
}

struct Criterion {
  std::string id;
  std::string title;
  std::function<Outcome(const Context&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria runner"};
  Context ctx;
  std::string work = (std::filesystem::temp_directory_path() / "mixtau_acceptance").string();
  std::vector<std::string> only;
  app.add_option("--cli", ctx.cli, "path to the mixtau executable");
  app.add_option("--work", work, "scratch directory");
  app.add_option("criteria", only, "criterion ids to run");
  CLI11_PARSE(app, argc, argv);
  ctx.work = work;

  const std::vector<Criterion> criteria{
      {"1", "staircase palette at k=4", staircase_palette},
      {"2", "point oracles", point_oracles},
      {"3", "general-p staircase", general_p},
      {"4", "boundary recursion", boundary_recursion},
      {"5", "fractal operator identity", fractal_identity},
      {"6", "property suites", properties},
      {"7", "F-threshold sequence", threshold_sequence},
      {"8", "CLI determinism", determinism},
      {"census", "fractal span census stabilizes", census},
  };
  bool all = true;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.run(ctx);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): " << o.detail
              << " [" << static_cast<int>(seconds_since(t0) * 1000) << " ms]" << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
