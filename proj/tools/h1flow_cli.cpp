// h1flow command line: run the flow, evaluate the circle oracle, build
// vanishing-distance demo paths, or emit generated curves.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "h1flow/flow.hpp"
#include "h1flow/io.hpp"
#include "h1flow/lambert_w.hpp"
#include "h1flow/metric_distance.hpp"

namespace {

using namespace h1flow;

struct ShapeOptions {
  std::string shape = "circle";
  std::string input;
  GeneratorSpec spec;

  void attach(CLI::App* cmd) {
    cmd->add_option("--shape", shape, "circle|square|ellipse|barbell|star|file");
    cmd->add_option("--size", spec.size, "radius, side, semi-major axis or bell radius");
    cmd->add_option("--n", spec.n, "vertex count");
    cmd->add_option("--input", input, "read the initial curve from a CSV or JSON file");
    cmd->add_option("--aspect", spec.aspect, "ellipse axis ratio");
    cmd->add_option("--neck", spec.neck, "barbell neck half-width relative to the bell radius");
    cmd->add_option("--amplitude", spec.amplitude, "star radial modulation");
    cmd->add_option("--arms", spec.arms, "star arm count");
  }

  PolyCurve build() {
    if (!input.empty()) {
      spec.kind = ShapeKind::kFile;
      spec.path = input;
    } else {
      spec.kind = parse_shape_kind(shape);
    }
    return generate(spec);
  }
};

template <class Fn>
void write_to(const std::string& path, Fn&& fn) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  fn(out);
  if (!out) throw Error("write failed for " + path);
}

Method parse_method(const std::string& name) {
  if (name == "euler") return Method::kEuler;
  if (name == "rk4") return Method::kRk4;
  throw InvalidArgument("unknown method '" + name + "'");
}

struct FlowOptions {
  ShapeOptions shape;
  FlowConfig cfg;
  std::optional<long> steps;
  std::optional<double> t1;
  std::string method = "euler";
  std::string out_csv, out_svg, out_json;

  int run() {
    const PolyCurve initial = shape.build();
    cfg.method = parse_method(method);
    if (steps) {
      if (*steps < 1) throw InvalidArgument("--steps must be positive");
      cfg.t1 = cfg.t0 + static_cast<double>(*steps) * cfg.dt;
    } else if (t1) {
      cfg.t1 = *t1;
    }
    cfg.validate();
    for (const auto& w : cfg.warnings()) std::cerr << "warning: " << w << '\n';

    const Trajectory traj = run_flow(initial, cfg);
    if (!out_csv.empty()) {
      write_to(out_csv, [&](std::ostream& os) { write_diagnostics_csv(os, traj.records); });
    }
    if (!out_svg.empty()) write_to(out_svg, [&](std::ostream& os) { write_svg(os, traj.states); });
    if (!out_json.empty()) {
      write_to(out_json, [&](std::ostream& os) { write_trajectory_json(os, traj); });
    }

    const DiagnosticsRecord& last = traj.records.back();
    std::cout << "termination " << termination_name(traj.termination) << '\n'
              << "t " << format_double(last.t) << '\n'
              << "length " << format_double(last.length) << '\n'
              << "iso_ratio " << format_double(last.iso_ratio) << '\n'
              << "records " << traj.size() << '\n';
    if (traj.termination != Termination::kCompleted) {
      std::cerr << "error: flow stopped early (" << termination_name(traj.termination)
                << ") at t = " << format_double(last.t) << '\n';
      return 2;
    }
    return 0;
  }
};

struct OracleOptions {
  double r0 = 1.0;
  double t = 0.0;

  int run() const {
    std::cout << format_double(CircleSolution(r0).radius(t)) << '\n';
    return 0;
  }
};

struct DistanceOptions {
  std::string demo;
  double lambda = 0.5;
  std::size_t teeth = 4;
  std::size_t frames = 33;
  std::size_t n = 256;
  double shift = 3.0;
  double twist = 0.5;
  std::string out_json;

  int run() const {
    const PolyCurve circle = generate(GeneratorSpec{.n = n});
    CurvePath path;
    if (demo == "shrink") {
      path = shrink_path(circle, lambda, frames);
    } else if (demo == "reparam") {
      if (!(lambda > 0.0)) throw InvalidArgument("--lambda must be positive");
      path = reparam_path(circle.scaled(lambda), sine_twist(n, twist), frames);
    } else {
      const CurvePath base = linear_path(circle, circle.translated({shift, 0.0}), frames);
      path = zigzag_path(base, teeth);
    }
    CurvePath quotient = path;
    quotient.mode = PathMode::kQuotient;
    std::cout << "frames " << path.frames.size() << '\n'
              << "full " << format_double(path_length_l2ds(path)) << '\n'
              << "quotient " << format_double(path_length_l2ds(quotient)) << '\n';
    if (!out_json.empty()) write_to(out_json, [&](std::ostream& os) { write_path_json(os, path); });
    return 0;
  }
};

struct GenerateOptions {
  ShapeOptions shape;
  std::string out;

  int run() {
    const PolyCurve c = shape.build();
    if (out.empty()) {
      write_curve_csv(std::cout, c);
    } else {
      write_curve_file(out, c);
    }
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"H1(ds) gradient flow of curve length"};
  app.require_subcommand(1);

  FlowOptions flow;
  auto* flow_cmd = app.add_subcommand("flow", "integrate the flow and write diagnostics");
  flow.shape.attach(flow_cmd);
  flow_cmd->add_option("--dt", flow.cfg.dt, "time step");
  auto* steps_opt = flow_cmd->add_option("--steps", flow.steps, "number of steps forward");
  auto* t1_opt = flow_cmd->add_option("--t1", flow.t1, "final time; below --t0 runs backward");
  steps_opt->excludes(t1_opt);
  flow_cmd->add_option("--t0", flow.cfg.t0, "initial time");
  flow_cmd->add_option("--method", flow.method, "euler|rk4");
  flow_cmd->add_option("--record-every", flow.cfg.record_every, "record every k-th step");
  flow_cmd->add_flag("--rescale", flow.cfg.rescale_profile, "report the asymptotic profile");
  flow_cmd->add_option("--out-csv", flow.out_csv, "diagnostics CSV");
  flow_cmd->add_option("--out-svg", flow.out_svg, "recorded frames as SVG");
  flow_cmd->add_option("--out-json", flow.out_json, "trajectory JSON");
  flow_cmd->add_option("--guard", flow.cfg.min_length_guard, "stop below this length");

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact radius of a shrinking circle");
  oracle_cmd->add_option("--r0", oracle.r0, "initial radius");
  oracle_cmd->add_option("--t", oracle.t, "time");

  DistanceOptions distance;
  auto* dist_cmd = app.add_subcommand("distance", "length of a demo path on curve space");
  dist_cmd->add_option("--demo", distance.demo, "shrink|reparam|zigzag")
      ->required()
      ->check(CLI::IsMember({"shrink", "reparam", "zigzag"}));
  dist_cmd->add_option("--lambda", distance.lambda, "shrink factor or curve scale");
  dist_cmd->add_option("--teeth", distance.teeth, "zigzag teeth");
  dist_cmd->add_option("--frames", distance.frames, "frames per path");
  dist_cmd->add_option("--n", distance.n, "vertex count");
  dist_cmd->add_option("--shift", distance.shift, "zigzag translation distance");
  dist_cmd->add_option("--twist", distance.twist, "reparametrization amplitude");
  dist_cmd->add_option("--out-json", distance.out_json, "path JSON");

  GenerateOptions gen;
  auto* gen_cmd = app.add_subcommand("generate", "write a generated curve");
  gen.shape.attach(gen_cmd);
  gen_cmd->add_option("--out", gen.out, "output file (.csv or .json); stdout if omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*flow_cmd) return flow.run();
    if (*oracle_cmd) return oracle.run();
    if (*dist_cmd) return distance.run();
    return gen.run();
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
