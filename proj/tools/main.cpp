#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spherescope/ball.hpp"
#include "spherescope/depth.hpp"
#include "spherescope/errors.hpp"
#include "spherescope/report.hpp"
#include "spherescope/theorem.hpp"
#include "spherescope/topology.hpp"

using namespace spherescope;

namespace {

// Exit codes: 0 success (including negative findings with a verdict in the
// output), 1 domain errors and failed verifications, 2 usage errors.
constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string model_spec;
  std::string cache_path;
  int radius = -1;
  int guard = -1;
  std::uint64_t budget = kDefaultVertexBudget;
  std::string format = "csv";
  std::string out_path;
  std::uint64_t seed = 0;
};

void add_source_options(CLI::App* cmd, CommonOpts& o, bool need_radius = true) {
  auto* model = cmd->add_option("--model", o.model_spec, "model spec (z, zd:<d>, heisenberg:xy|xyz, lamplighter2, zwrz, lamplighter2_z2, free:<k>)")
                    ->envname("SPHERESCOPE_MODEL");
  auto* cache = cmd->add_option("--cache", o.cache_path, "load the ball from a cache file")
                    ->envname("SPHERESCOPE_CACHE");
  auto* radius = cmd->add_option("--N", o.radius, "ball radius to build")->envname("SPHERESCOPE_N");
  cmd->add_option("--cap", o.budget, "vertex budget for ball construction")
      ->envname("SPHERESCOPE_CAP");
  model->excludes(cache);
  if (need_radius) radius->needs(model);
}

void add_output_options(CLI::App* cmd, CommonOpts& o,
                        const std::vector<std::string>& formats = {"csv", "json"}) {
  std::string help = "output format (";
  for (std::size_t i = 0; i < formats.size(); ++i) help += (i ? "," : "") + formats[i];
  help += ")";
  cmd->add_option("--format", o.format, help)
      ->check(CLI::IsMember(formats))
      ->envname("SPHERESCOPE_FORMAT");
  cmd->add_option("--out", o.out_path, "write the report to this file (default: stdout)")
      ->envname("SPHERESCOPE_OUT");
}

void add_guard_option(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--guard", o.guard, "horizon trust guard (default max(2r,4))")
      ->envname("SPHERESCOPE_GUARD");
}

BallTable acquire_ball(const CommonOpts& o) {
  if (!o.cache_path.empty()) return load_ball(o.cache_path);
  if (o.model_spec.empty())
    throw CLI::ValidationError("--model or --cache is required");
  if (o.radius < 0) throw CLI::ValidationError("--N is required with --model");
  return build_ball(make_model(o.model_spec), o.radius, o.budget);
}

void emit(const CommonOpts& o, const std::string& content) {
  if (o.out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary | std::ios::trunc);
  if (!f) fail(Errc::io_error, "cannot open '" + o.out_path + "' for writing");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) fail(Errc::io_error, "short write to '" + o.out_path + "'");
}

Region parse_region(const BallTable& b, const std::string& spec) {
  if (spec == "id") return Region::of({b.model().identity()});
  if (spec.rfind("ball:", 0) == 0) return Region::ball(b, std::stoi(spec.substr(5)));
  if (spec.rfind("annulus:", 0) == 0) {
    std::string rest = spec.substr(8);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      fail(Errc::invalid_parameter, "annulus region needs two bounds, e.g. annulus:2:5");
    return Region::annulus(b, std::stoi(rest.substr(0, colon)), std::stoi(rest.substr(colon + 1)));
  }
  fail(Errc::invalid_parameter, "region spec must be id, ball:<k> or annulus:<a>:<b>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sphere-scope: Cayley-graph ball analytics (connected spheres, ends, dead ends)"};
  app.require_subcommand(1);

  CommonOpts o;
  int arg_r = 1, arg_nmax = -1, arg_n = -1, arg_rcap = 6;
  std::string presentation_path, omega_spec;
  int base_radius = -1;
  std::uint64_t sample_cap = 100'000;
  std::string cache_out;
  int exit_status = kExitOk;

  auto* ball_cmd = app.add_subcommand("ball", "build a ball and report sphere sizes");
  add_source_options(ball_cmd, o);
  add_output_options(ball_cmd, o);
  ball_cmd->add_option("--cache-out", cache_out, "save the ball to this cache file")
      ->envname("SPHERESCOPE_CACHE_OUT");
  ball_cmd->callback([&] {
    BallTable b = acquire_ball(o);
    if (!cache_out.empty()) save_ball(b, cache_out);
    emit(o, o.format == "json" ? render_ball_json(b) : render_ball_csv(b));
  });

  auto* spheres_cmd = app.add_subcommand("spheres", "thick-sphere component counts per n");
  add_source_options(spheres_cmd, o);
  add_output_options(spheres_cmd, o, {"csv", "json", "dot"});
  add_guard_option(spheres_cmd, o);
  spheres_cmd->add_option("--r", arg_r, "sphere thickness")->envname("SPHERESCOPE_R");
  spheres_cmd->add_option("--nmax", arg_nmax, "scan n = 0..nmax")->envname("SPHERESCOPE_NMAX");
  spheres_cmd->add_option("--n", arg_n, "single inner radius (required for --format dot)");
  spheres_cmd->callback([&] {
    BallTable b = acquire_ball(o);
    if (o.format == "dot") {
      if (arg_n < 0) throw CLI::ValidationError("--format dot requires --n");
      emit(o, export_annulus_dot(b, arg_n, arg_r));
      return;
    }
    SphereScan scan;
    if (arg_nmax >= 0) {
      scan = scan_connected_spheres(b, arg_r, arg_nmax, o.guard);
    } else if (arg_n >= 0) {
      scan.model_spec = b.model().spec();
      scan.ball_radius = b.radius();
      scan.r = arg_r;
      scan.n_max = arg_n;
      scan.guard = horizon_guard(arg_r, o.guard);
      scan.rows.push_back(thick_sphere_components(b, arg_n, arg_r, o.guard));
      scan.all_connected = scan.rows[0].component_count == 1;
      if (!scan.all_connected) scan.first_disconnected = arg_n;
    } else {
      throw CLI::ValidationError("--nmax (or --n) is required");
    }
    emit(o, o.format == "json" ? render_scan_json(b, scan) : render_scan_csv(b, scan));
  });

  auto* scanr_cmd = app.add_subcommand("scan-r", "smallest r with all thick spheres connected");
  add_source_options(scanr_cmd, o);
  add_output_options(scanr_cmd, o, {"text", "json"});
  add_guard_option(scanr_cmd, o);
  scanr_cmd->add_option("--nmax", arg_nmax, "scan n = 0..nmax")->required()->envname("SPHERESCOPE_NMAX");
  scanr_cmd->add_option("--rcap", arg_rcap, "largest r to try")->envname("SPHERESCOPE_RCAP");
  scanr_cmd->callback([&] {
    BallTable b = acquire_ball(o);
    RadiusSearch search = min_connecting_radius(b, arg_nmax, arg_rcap, o.guard);
    emit(o, o.format == "json" ? render_radius_search_json(b, search)
                               : render_radius_search_text(search));
  });

  auto* shell_cmd = app.add_subcommand("shell", "components of a region's dilation shell");
  add_source_options(shell_cmd, o);
  add_guard_option(shell_cmd, o);
  shell_cmd->add_option("--omega", omega_spec, "region: id | ball:<k> | annulus:<a>:<b>")->required();
  shell_cmd->add_option("--r", arg_r, "dilation radius")->required();
  shell_cmd->callback([&] {
    BallTable b = acquire_ball(o);
    Region omega = parse_region(b, omega_spec);
    SimplyConnectedCheck sc = is_simply_connected_region(b, omega, horizon_guard(0, o.guard));
    std::cout << "region: " << omega.size() << " vertices, "
              << (sc.region_connected ? "connected" : "disconnected") << "; complement "
              << (sc.complement_connected ? "connected" : "disconnected")
              << " (within horizon)\n";
    int count = shell_components(b, omega, arg_r, o.guard);
    std::cout << "shell components at r=" << arg_r << ": " << count << "\n";
  });

  auto* dead_cmd = app.add_subcommand("deadends", "dead-end census with depths");
  add_source_options(dead_cmd, o);
  add_output_options(dead_cmd, o);
  add_guard_option(dead_cmd, o);
  dead_cmd->add_option("--nmax", arg_nmax, "census radius")->required()->envname("SPHERESCOPE_NMAX");
  dead_cmd->callback([&] {
    BallTable b = acquire_ball(o);
    DeadEndCensus census =
        dead_end_census(b, arg_nmax, o.guard >= 0 ? o.guard : kBaseGuard);
    emit(o, o.format == "json" ? render_census_json(b, census) : render_census_csv(census));
  });

  auto* ends_cmd = app.add_subcommand("ends", "thick-sphere counts per n with a tail verdict");
  add_source_options(ends_cmd, o);
  add_output_options(ends_cmd, o);
  add_guard_option(ends_cmd, o);
  ends_cmd->add_option("--r", arg_r, "sphere thickness")->envname("SPHERESCOPE_R");
  ends_cmd->add_option("--nmax", arg_nmax, "scan n = 0..nmax")->required()->envname("SPHERESCOPE_NMAX");
  ends_cmd->callback([&] {
    BallTable b = acquire_ball(o);
    EndsProfile profile = ends_profile(b, arg_r, arg_nmax, o.guard);
    emit(o, o.format == "json" ? render_ends_json(b, profile, horizon_guard(arg_r, o.guard))
                               : render_ends_csv(b, profile, horizon_guard(arg_r, o.guard)));
  });

  auto* bound_cmd = app.add_subcommand("bound", "radius bound from a presentation");
  bound_cmd->add_option("--presentation", presentation_path, "presentation file")
      ->required()
      ->envname("SPHERESCOPE_PRESENTATION");
  bound_cmd->callback([&] {
    Presentation p = load_presentation_file(presentation_path);
    std::cout << "r = " << theorem_radius(p) << "\n";
  });

  auto* span_cmd = app.add_subcommand("span", "relator loop spans over ball base points");
  add_source_options(span_cmd, o);
  add_output_options(span_cmd, o, {"text"});
  span_cmd->add_option("--presentation", presentation_path, "presentation file")
      ->required()
      ->envname("SPHERESCOPE_PRESENTATION");
  span_cmd->add_option("--base-radius", base_radius, "draw base points from B_<k>");
  span_cmd->add_option("--sample", sample_cap, "sample size cap before switching off exhaustive mode");
  span_cmd->add_option("--seed", o.seed, "sampling seed")->envname("SPHERESCOPE_SEED");
  span_cmd->callback([&] {
    BallTable b = acquire_ball(o);
    Presentation p = load_presentation_file(presentation_path);
    GeneratorMap map = map_generators(p, b.model());
    int max_w = max_relator_length(p);
    int base = base_radius >= 0 ? base_radius : b.radius() - (max_w + 1) / 2;
    if (base < 0 || base + (max_w + 1) / 2 > b.radius())
      fail(Errc::guard_violation, "ball too small for span checks at this base radius");
    std::vector<ElementKey> bases = b.keys_with_length_in(0, base);
    bool exhaustive = bases.size() <= sample_cap;
    if (!exhaustive) {
      std::mt19937_64 rng(o.seed);
      std::uniform_int_distribution<std::size_t> pick(0, bases.size() - 1);
      std::vector<ElementKey> sample;
      sample.reserve(sample_cap);
      for (std::uint64_t i = 0; i < sample_cap; ++i) sample.push_back(bases[pick(rng)]);
      bases = std::move(sample);
    }
    std::ostringstream outs;
    outs << "base points: " << bases.size() << " from B_" << base
         << (exhaustive ? " (exhaustive)" : " (sampled, seed " + std::to_string(o.seed) + ")")
         << "\n";
    bool all_ok = true;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      int bound_i = static_cast<int>(p.relators[i].size()) / 2;
      int worst = 0;
      for (const ElementKey& g : bases)
        worst = std::max(worst, relator_loop_span(b, p.generators, map, p.relators[i], g));
      bool ok = worst <= bound_i;
      all_ok = all_ok && ok;
      outs << "relator '" << p.relator_text[i] << "': max span " << worst << ", bound " << bound_i
           << (ok ? " ok" : " VIOLATED") << "\n";
    }
    emit(o, outs.str());
    if (!all_ok) exit_status = kExitDomain;
  });

  auto* verify_cmd = app.add_subcommand("verify", "scan at the radius bound plus span checks");
  add_source_options(verify_cmd, o);
  add_output_options(verify_cmd, o, {"json"});
  add_guard_option(verify_cmd, o);
  verify_cmd->add_option("--presentation", presentation_path, "presentation file")
      ->required()
      ->envname("SPHERESCOPE_PRESENTATION");
  verify_cmd->add_option("--nmax", arg_nmax, "scan n = 0..nmax")->required()->envname("SPHERESCOPE_NMAX");
  verify_cmd->add_option("--sample", sample_cap, "span sample cap");
  verify_cmd->add_option("--seed", o.seed, "span sampling seed")->envname("SPHERESCOPE_SEED");
  verify_cmd->callback([&] {
    BallTable b = acquire_ball(o);
    Presentation p = load_presentation_file(presentation_path);
    VerifyOptions vo;
    vo.guard = o.guard;
    vo.seed = o.seed;
    vo.sample_cap = sample_cap;
    TheoremReport rep = verify_theorem(b, p, arg_nmax, vo);
    emit(o, render_theorem_json(rep));
    std::cerr << render_theorem_summary(rep);
    if (!rep.pass) exit_status = kExitDomain;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return exit_status;
}
