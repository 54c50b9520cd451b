#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "repulse/flow.hpp"
#include "repulse/io.hpp"
#include "repulse/kernel.hpp"
#include "repulse/linear_gather.hpp"
#include "repulse/planner.hpp"
#include "repulse/random.hpp"
#include "repulse/simulator.hpp"
#include "repulse/svg.hpp"

namespace {

using namespace repulse;

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;
constexpr int kInternalError = 3;

struct RunConfig {
  std::string polygon;
  std::string plan;
  double x = 0.0;
  double y = 0.0;
  double tol = 1e-9;
  std::size_t samples = 16;
  std::uint64_t seed = 1;
  std::string out;
  std::string trace;
  bool svg = false;

  Tolerance tolerance() const { return {tol, tol}; }
};

// A path, or `random:N` for a seeded random polygon.
ConvexPolygon load_polygon(const RunConfig& cfg) {
  constexpr std::string_view prefix = "random:";
  if (cfg.polygon.rfind(prefix, 0) == 0) {
    const std::string count = cfg.polygon.substr(prefix.size());
    std::size_t n = 0;
    try {
      n = std::stoul(count);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "bad vertex count in '" + cfg.polygon + "'");
    }
    std::mt19937_64 rng(cfg.seed);
    return random_convex_polygon(n, rng, cfg.tolerance());
  }
  return read_polygon_file(cfg.polygon, cfg.tolerance());
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + cfg.out);
  out << text;
}

int cmd_flow(const RunConfig& cfg) {
  const auto polygon = load_polygon(cfg);
  const auto diagram = flow_diagram(polygon, {cfg.x, cfg.y}, cfg.tolerance());
  emit(cfg, cfg.svg ? svg_flow(polygon, diagram) : format_flow(polygon, diagram));
  return 0;
}

int cmd_kernel(const RunConfig& cfg) {
  const auto polygon = load_polygon(cfg);
  const auto decomposition = build_decomposition(polygon, cfg.tolerance());
  const auto kernel = repulsion_kernel(polygon, decomposition, cfg.tolerance());
  if (kernel.empty()) {
    std::cerr << "note: the kernel has no cells; run `check1` for boundary witnesses\n";
  }
  emit(cfg, cfg.svg ? svg_decomposition(polygon, decomposition, kernel) : format_kernel(kernel));
  return 0;
}

int cmd_check1(const RunConfig& cfg) {
  const auto polygon = load_polygon(cfg);
  const auto witness = find_gather_point(polygon, cfg.tolerance());
  if (!witness) {
    emit(cfg, "none\n");
    return 0;
  }
  const Point at = boundary_eval(polygon, witness->location);
  emit(cfg, "witness " + std::to_string(witness->location.edge) + ' ' + format_number(witness->location.t) + ' ' +
                format_number(at.x) + ' ' + format_number(at.y) + " gather " +
                std::to_string(witness->gather_vertex) + '\n');
  return 0;
}

int cmd_plan(const RunConfig& cfg) {
  const auto polygon = load_polygon(cfg);
  emit(cfg, format_plan(plan_gather(polygon, cfg.tolerance())));
  return 0;
}

int cmd_simulate(const RunConfig& cfg) {
  const auto polygon = load_polygon(cfg);
  const GatherPlan plan = parse_plan(read_text(cfg.plan));
  const auto outcome = simulate_plan(polygon, plan, Seeding::boundary_sampled(cfg.samples), cfg.tolerance());
  if (!cfg.trace.empty()) {
    std::ofstream log(cfg.trace);
    if (!log) throw Error(ErrorKind::InvalidInput, "cannot write " + cfg.trace);
    write_trace_log(log, outcome);
  }
  if (cfg.svg) {
    emit(cfg, svg_trace(polygon, outcome));
    return 0;
  }
  std::string text;
  if (outcome.gathered) {
    text = "gathered " + format_number(outcome.gather_point->x) + ' ' + format_number(outcome.gather_point->y) + '\n';
  } else {
    text = "not gathered " + std::to_string(outcome.occupied.size()) + '\n';
    for (const Point& p : outcome.occupied) text += "occupied " + format_number(p.x) + ' ' + format_number(p.y) + '\n';
  }
  emit(cfg, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Repulsion gathering in convex polygons"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--tol", cfg.tol, "Geometric tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for random:N polygons");
  app.add_option("--out", cfg.out, "Write output here instead of stdout");
  app.add_flag("--svg", cfg.svg, "Emit SVG instead of text");
  app.add_option("--samples", cfg.samples, "Particles per edge for simulate")->check(CLI::Range(1, 1 << 20));

  auto polygon_arg = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("polygon", cfg.polygon, "Polygon file or random:N")->required();
  };
  std::function<int(const RunConfig&)> run;

  auto* flow = app.add_subcommand("flow", "Flow diagram for an actuator");
  polygon_arg(flow);
  flow->add_option("x", cfg.x)->required();
  flow->add_option("y", cfg.y)->required();
  flow->callback([&] { run = cmd_flow; });

  auto* kernel = app.add_subcommand("kernel", "Repulsion kernel cells");
  polygon_arg(kernel);
  kernel->callback([&] { run = cmd_kernel; });

  auto* check1 = app.add_subcommand("check1", "Boundary point gathering with one activation");
  polygon_arg(check1);
  check1->callback([&] { run = cmd_check1; });

  auto* plan = app.add_subcommand("plan", "Gathering plan");
  polygon_arg(plan);
  plan->callback([&] { run = cmd_plan; });

  auto* simulate = app.add_subcommand("simulate", "Run a plan");
  polygon_arg(simulate);
  simulate->add_option("plan", cfg.plan, "Plan file")->required();
  simulate->add_option("--trace", cfg.trace, "Write the event log here");
  simulate->callback([&] { run = cmd_simulate; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }
  if (cfg.svg && (check1->parsed() || plan->parsed())) {
    std::cerr << "--svg applies to flow, kernel and simulate only\n";
    return kUsageError;
  }

  try {
    return run(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Internal ? kInternalError : kDomainError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}
