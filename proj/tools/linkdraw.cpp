#include "linkdraw/pipeline.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>

using namespace linkdraw;

namespace {

struct Common {
  std::string spec_path;
  std::string mode;
  std::string m0;
  std::optional<std::uint64_t> seed;
  std::string samples;
  std::string out_dir = ".";
};

PipelineOptions options_from(const Common& c) {
  PipelineOptions opts;
  if (!c.mode.empty()) {
    opts.mode = parse_mode(c.mode);
    if (!opts.mode) throw Error(ErrorCode::ParseError, "unknown mode '" + c.mode + "'");
  }
  if (!c.m0.empty()) opts.m0 = parse_dual_quaternion(c.m0);
  opts.seed = c.seed;
  if (!c.samples.empty()) {
    opts.samples.clear();
    for (const auto& t : parse_params(c.samples))
      if (t) opts.samples.push_back(*t);
  }
  return opts;
}

// Trace rows: the requested parameters as given, or the defaults plus infinity.
std::vector<Param> trace_samples(const Common& c) {
  if (!c.samples.empty()) return parse_params(c.samples);
  std::vector<Rational> d = default_samples();
  std::vector<Param> out(d.begin(), d.end());
  out.emplace_back(std::nullopt);
  return out;
}

int run_synth(const Common& c) {
  CurveSpec spec = read_curve_spec(read_file(c.spec_path));
  PipelineOptions opts = options_from(c);
  PipelineResult result = run_pipeline(spec, opts);
  std::filesystem::path dir(c.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IOError, "cannot create " + dir.string());
  write_file(dir / "linkage.json", write_linkage_doc(result.doc));
  write_file(dir / "trace.csv", emit_trace(result.doc.linkage, trace_samples(c)));
  write_file(dir / "report.txt", result.report);
  std::cout << result.report;
  return 0;
}

int run_factor_cmd(const Common& c) {
  CurveSpec spec = read_curve_spec(read_file(c.spec_path));
  std::cout << format_factorization(run_factor(spec));
  return 0;
}

int run_check(const Common& c, const std::string& linkage_path) {
  CurveSpec spec = read_curve_spec(read_file(c.spec_path));
  RationalCurve curve = curve_load(spec.x);
  LinkageDoc doc = read_linkage_doc(read_file(linkage_path));
  PipelineOptions opts = options_from(c);
  ClosureReport closure = check_loop_closure(doc.linkage);
  closure.require();
  TrajectoryReport traj = check_trajectory(doc.linkage, curve, opts.samples);
  traj.require();
  std::cout << "loop closure ok (" << doc.linkage.cell_reports().size() << " cells)\n"
            << "trajectory ok at " << traj.samples.size() << " samples, symbolic identity ok\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthesize linkages that draw rational space curves"};
  app.require_subcommand(1);
  Common common;
  std::string linkage_path;
  int d = 0, c = 0;

  auto add_common = [&](CLI::App* sub, bool pipeline_flags) {
    sub->add_option("spec,--spec", common.spec_path, "Curve specification (JSON)")->required();
    if (pipeline_flags) {
      sub->add_option("--mode", common.mode, "generic, planar or spherical");
      sub->add_option("--m0", common.m0, "Seed joint as 8 comma-separated rationals");
      sub->add_option("--seed", common.seed, "Seed for the random m0 fallback");
    }
    sub->add_option("--samples", common.samples, "Comma-separated sample parameters (rationals or inf)");
  };

  auto* synth = app.add_subcommand("synth", "Run the full pipeline and write linkage.json, trace.csv, report.txt");
  add_common(synth, true);
  synth->add_option("--out-dir", common.out_dir, "Output directory");
  auto* factor = app.add_subcommand("factor", "Print the motion polynomial and its factorization");
  factor->add_option("spec,--spec", common.spec_path, "Curve specification (JSON)")->required();
  auto* check = app.add_subcommand("check", "Verify a linkage document against a curve specification");
  add_common(check, false);
  check->add_option("--linkage", linkage_path, "Linkage document (JSON)")->required();
  auto* bounds = app.add_subcommand("bounds", "Print the link and joint bounds for degree d and circularity c");
  bounds->add_option("--d", d, "Curve degree")->required();
  bounds->add_option("--c", c, "Circularity")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*synth) return run_synth(common);
    if (*factor) return run_factor_cmd(common);
    if (*check) return run_check(common, linkage_path);
    if (*bounds) {
      CountBounds b = count_bounds(d, c);
      std::cout << "links " << b.links << "\njoints " << b.joints << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
  return 0;
}
