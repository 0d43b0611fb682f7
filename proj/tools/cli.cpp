#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "rangeassign/analysis.hpp"
#include "rangeassign/instance_io.hpp"
#include "rangeassign/lp_export.hpp"
#include "rangeassign/oracle.hpp"
#include "rangeassign/random_instances.hpp"
#include "rangeassign/strategies.hpp"

namespace rangeassign::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& flag, const std::string& rule) {
  if (!ok) throw std::invalid_argument("invalid " + flag + ": " + rule);
}

StrategyConfig make_strategy(const std::string& name, double alpha, double k, double gamma) {
  StrategyConfig config;
  if (name == "nn") {
    config = StrategyConfig::nn(alpha);
  } else if (name == "ci") {
    config = StrategyConfig::ci(alpha);
  } else if (name == "knn") {
    require(k >= 1.0, "--k", "must be >= 1");
    config = StrategyConfig::knn(k, alpha);
  } else if (name == "dual") {
    require(gamma > 1.0, "--gamma", "must be > 1");
    config = StrategyConfig::dual(gamma, alpha);
  } else {
    throw std::invalid_argument("invalid --strategy: expected nn, ci, knn or dual, got '" + name + "'");
  }
  require(alpha > 1.0, "--alpha", "must be > 1");
  return config;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << text;
}

std::string fmt(double value) {
  std::ostringstream s;
  s << std::setprecision(17) << value;
  return s.str();
}

std::string fmt_short(double value) {
  std::ostringstream s;
  s << std::setprecision(10) << value;
  return s.str();
}

// Runs fn(0..count-1) on a few threads; each index writes its own slot.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

// --- sweep ---------------------------------------------------------------

struct SweepInstance {
  std::string label;
  std::optional<Instance> instance;
  std::string error;
};

struct SweepSpec {
  std::vector<SweepInstance> instances;
  std::vector<StrategyConfig> strategies;
  std::vector<double> alphas;
  bool oracle = true;
  std::string out;
};

SweepSpec parse_sweep_spec(const std::string& text, const std::string& base_dir) {
  json doc = json::parse(text);
  SweepSpec spec;
  spec.oracle = doc.value("oracle", true);
  spec.out = doc.value("out", std::string());
  spec.alphas = doc.value("alphas", std::vector<double>{2.0});
  if (spec.alphas.empty()) throw UsageError("sweep: 'alphas' is empty");
  for (double a : spec.alphas) require(a > 1.0, "alphas", "every alpha must be > 1");

  if (!doc.contains("strategies") || doc.at("strategies").empty()) {
    throw UsageError("sweep: 'strategies' must list at least one strategy");
  }
  for (const auto& s : doc.at("strategies")) {
    // alpha is filled per cell.
    spec.strategies.push_back(make_strategy(s.at("strategy").get<std::string>(), 2.0,
                                            s.value("k", 2.0), s.value("gamma", 4.0)));
  }

  if (!doc.contains("instances") || doc.at("instances").empty()) {
    throw UsageError("sweep: 'instances' must list at least one source");
  }
  for (const auto& src : doc.at("instances")) {
    if (src.contains("file")) {
      std::string path = src.at("file").get<std::string>();
      if (!path.empty() && path.front() != '/' && !base_dir.empty()) path = base_dir + "/" + path;
      SweepInstance item{path, std::nullopt, {}};
      try {
        item.instance = read_instance_file(path);
      } catch (const std::exception& e) {
        item.error = e.what();
      }
      spec.instances.push_back(std::move(item));
    } else if (src.contains("generator")) {
      GeneratorParams p;
      p.alpha = src.value("alpha", p.alpha);
      p.epsilon = src.value("epsilon", p.epsilon);
      p.delta = src.value("delta", p.delta);
      p.x = src.value("x", p.x);
      p.rounds = src.value("rounds", p.rounds);
      if (src.value("branch", std::string("F1")) == "F2") p.branch = UniversalBranch::F2;
      const std::string name = src.at("generator").get<std::string>();
      SweepInstance item{name, std::nullopt, {}};
      try {
        item.instance = generate_named(name, p);
      } catch (const std::exception& e) {
        item.error = e.what();
      }
      spec.instances.push_back(std::move(item));
    } else if (src.contains("random")) {
      const auto& r = src.at("random");
      const std::size_t count = r.value("count", std::size_t{1});
      const std::uint64_t seed = r.value("seed", std::uint64_t{1});
      GeneratorParams p;
      p.space = parse_space(r.value("space", std::string("plane")));
      p.n = r.value("n", std::size_t{10});
      for (std::size_t c = 0; c < count; ++c) {
        p.seed = seed + c;
        SweepInstance item{"random:" + std::string(to_string(p.space)) + ":n=" +
                               std::to_string(p.n) + ":seed=" + std::to_string(p.seed),
                           std::nullopt,
                           {}};
        try {
          item.instance = generate_named("random", p);
        } catch (const std::exception& e) {
          item.error = e.what();
        }
        spec.instances.push_back(std::move(item));
      }
    } else {
      throw UsageError("sweep: instance source needs 'file', 'generator' or 'random'");
    }
  }
  return spec;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string run_sweep(const SweepSpec& spec) {
  struct Cell {
    std::size_t instance = 0;
    std::size_t strategy = 0;
    double alpha = 2.0;
    std::string row;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < spec.instances.size(); ++i) {
    for (std::size_t s = 0; s < spec.strategies.size(); ++s) {
      for (double a : spec.alphas) cells.push_back({i, s, a, {}});
    }
  }

  parallel_for(cells.size(), [&](std::size_t c) {
    Cell& cell = cells[c];
    const SweepInstance& src = spec.instances[cell.instance];
    StrategyConfig config = spec.strategies[cell.strategy];
    config.alpha = cell.alpha;
    std::string n = "", cost = "", oracle_cost = "", ratio = "", status = "ok";
    const auto start = std::chrono::steady_clock::now();
    if (!src.instance) {
      status = "error: " + src.error;
    } else {
      n = std::to_string(src.instance->size());
      try {
        const SimulationResult run = simulate(*src.instance, config);
        cost = fmt(run.total_cost());
        if (auto violation = find_trace_violation(*src.instance, run.trace, true)) {
          status = "error: invariant violated: " + *violation;
        } else if (spec.oracle) {
          const double opt = solve_optimal(*src.instance, cell.alpha).cost;
          oracle_cost = fmt(opt);
          ratio = fmt(opt > 0.0 ? run.total_cost() / opt : 1.0);
        }
      } catch (const std::exception& e) {
        status = std::string("error: ") + e.what();
      }
    }
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream row;
    row << csv_field(src.label) << ',' << n << ',' << csv_field(config.label()) << ','
        << fmt(cell.alpha) << ',' << cost << ',' << oracle_cost << ',' << ratio << ','
        << csv_field(status) << ',' << std::fixed << std::setprecision(3) << wall_ms << '\n';
    cell.row = row.str();
  });

  std::string csv = "instance,n,strategy,alpha,cost,oracle_cost,ratio,status,wall_ms_nondet\n";
  for (const auto& cell : cells) csv += cell.row;
  return csv;
}

// --- subcommands ---------------------------------------------------------

struct Options {
  std::string generator;
  std::string instance_file;
  std::string out;
  std::string strategy;
  std::string space = "plane";
  std::string branch = "F1";
  std::string form = "primal";
  double alpha = 2.0;
  double k = 2.0;
  double gamma = 4.0;
  double epsilon = 1e-3;
  double delta = 0.01;
  double x = 1.0;
  int rounds = 3;
  std::uint64_t seed = 1;
  std::size_t n = 10;
  bool approx = false;
  bool fstar = false;
  bool alpha_star = false;
};

int cmd_generate(const Options& o, std::ostream& out) {
  GeneratorParams p;
  p.alpha = o.alpha;
  p.epsilon = o.epsilon;
  p.delta = o.delta;
  p.x = o.x;
  p.rounds = o.rounds;
  p.seed = o.seed;
  p.n = o.n;
  p.space = parse_space(o.space);
  require(o.branch == "F1" || o.branch == "F2", "--branch", "expected F1 or F2");
  p.branch = o.branch == "F2" ? UniversalBranch::F2 : UniversalBranch::F1;
  emit(o.out, format_instance(generate_named(o.generator, p)), out);
  return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
  const Instance instance = read_instance_file(o.instance_file);
  const StrategyConfig config = make_strategy(o.strategy, o.alpha, o.k, o.gamma);
  const SimulationResult run = simulate(instance, config);
  std::ostringstream csv;
  write_steps_csv(csv, run.steps);

  std::ostringstream summary;
  summary << "# strategy=" << config.label() << " alpha=" << fmt_short(o.alpha)
          << " n=" << instance.size() << " total_cost=" << fmt(run.total_cost());
  if (run.dual) summary << " sum_y=" << fmt(run.dual->total());
  summary << '\n';

  if (o.out.empty()) {
    out << csv.str() << summary.str();
  } else {
    emit(o.out, csv.str(), out);
    out << summary.str();
  }
  const bool single_touch = true;
  if (auto violation = find_trace_violation(instance, run.trace, single_touch)) {
    err << "invariant violated: " << *violation << '\n';
    return kInvariant;
  }
  if (run.dual && !is_dual_feasible(instance, o.alpha, *run.dual, instance.size())) {
    err << "invariant violated: dual infeasible\n";
    return kInvariant;
  }
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  require(o.alpha > 1.0, "--alpha", "must be > 1");
  const Instance instance = read_instance_file(o.instance_file);
  const auto print_ranges = [&out](const RangeAssignment& ranges) {
    out << "ranges=";
    for (std::size_t i = 0; i < ranges.size(); ++i) out << (i ? "," : "") << fmt(ranges[i]);
    out << '\n';
  };
  if (o.approx) {
    const ApproxResult approx = approx_5alpha(instance, o.alpha);
    const auto& cert = approx.certificate;
    const bool feasible = is_priority_feasible(instance, approx.ranges);
    const bool within = cert.cost <= cert.bound * (1.0 + 1e-9);
    out << "mode=approx\n"
        << "cost=" << fmt(cert.cost) << '\n'
        << "sum_y=" << fmt(cert.dual_total) << '\n'
        << "bound=" << fmt(cert.bound) << '\n'
        << "ratio_to_sum_y=" << fmt(cert.dual_total > 0.0 ? cert.cost / cert.dual_total : 0.0)
        << '\n';
    print_ranges(approx.ranges);
    out << "independent=";
    for (std::size_t i = 0; i < cert.independent.size(); ++i) {
      out << (i ? "," : "") << cert.independent[i];
    }
    out << "\nclusters=";
    for (std::size_t c = 0; c < cert.clusters.size(); ++c) {
      out << (c ? ";" : "");
      for (std::size_t m = 0; m < cert.clusters[c].size(); ++m) {
        out << (m ? "," : "") << cert.clusters[c][m];
      }
    }
    out << "\ncertificate=" << (feasible && within ? "pass" : "fail") << '\n';
    if (!(feasible && within)) {
      err << "invariant violated: approximation certificate failed\n";
      return kInvariant;
    }
    return kOk;
  }
  const OracleResult result = solve_optimal(instance, o.alpha);
  out << "mode=exact\n"
      << "cost=" << fmt(result.cost) << '\n';
  print_ranges(result.ranges);
  out << "states_expanded=" << result.states_expanded << '\n';
  return kOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  if (o.alpha_star) {
    const AlphaStar best = alpha_star();
    out << "alpha_star=" << fmt_short(best.alpha) << '\n'
        << "f_star=" << fmt_short(best.value) << '\n';
    return kOk;
  }
  if (o.fstar) {
    out << "alpha=" << fmt_short(o.alpha) << '\n' << "f_star=" << fmt(f_star_upper(o.alpha)) << '\n';
    return kOk;
  }
  const UniversalConstants c = universal_constants(o.alpha);
  out << "alpha=" << fmt_short(c.alpha) << '\n'
      << "c=" << fmt(c.c) << '\n'
      << "delta=" << fmt(c.delta) << '\n'
      << "iterations=" << c.iterations << '\n';
  return kOk;
}

int cmd_export_lp(const Options& o, std::ostream& out) {
  require(o.form == "primal" || o.form == "dual", "--form", "expected primal or dual");
  const Instance instance = read_instance_file(o.instance_file);
  std::ostringstream lp;
  write_lp(lp, instance, o.alpha, o.form == "dual" ? LpForm::Dual : LpForm::Primal);
  emit(o.out, lp.str(), out);
  return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  std::ifstream in(o.instance_file);
  if (!in) throw std::runtime_error("cannot open sweep spec '" + o.instance_file + "'");
  std::ostringstream text;
  text << in.rdbuf();
  const auto slash = o.instance_file.find_last_of('/');
  const std::string base = slash == std::string::npos ? "" : o.instance_file.substr(0, slash);
  SweepSpec spec;
  try {
    spec = parse_sweep_spec(text.str(), base);
  } catch (const json::exception& e) {
    throw UsageError(std::string("sweep spec: ") + e.what());
  }
  const std::string path = o.out.empty() ? spec.out : o.out;
  emit(path, run_sweep(spec), out);
  return kOk;
}

}  // namespace

Instance generate_named(const std::string& generator, const GeneratorParams& p) {
  if (generator == "nn-lb-1d") {
    require(p.delta > 0.0 && p.delta < 1.0, "--delta", "must satisfy 0 < delta < 1");
    require(p.x > 0.0, "--x", "must be > 0");
    return gen_1d_nn_lb(p.delta, p.x);
  }
  if (generator == "nn-lb-2d") {
    require(p.epsilon > 0.0 && p.epsilon < 0.1, "--epsilon", "must satisfy 0 < epsilon < 0.1");
    return gen_2d_nn_lb(p.epsilon);
  }
  if (generator == "universal-1d") {
    require(p.alpha > 1.0, "--alpha", "must be > 1");
    require(p.x >= 1.0, "--x", "must be >= 1");
    return gen_1d_universal(p.alpha, p.x, p.branch);
  }
  if (generator == "recursive-squares") {
    require(p.rounds >= 1 && p.rounds <= 6, "--rounds", "must lie in [1, 6]");
    return gen_recursive_squares(p.rounds);
  }
  if (generator == "random") {
    require(p.n >= 1, "--n", "must be >= 1");
    RandomFamily family;
    switch (p.space) {
      case Space::Line:
        family = RandomFamily::line_symmetric(p.n);
        break;
      case Space::Plane:
        family = RandomFamily::unit_square(p.n);
        break;
      case Space::Metric:
        family = RandomFamily::random_metric(p.n);
        break;
    }
    return random_instance(family, p.seed);
  }
  throw std::invalid_argument("invalid generator '" + generator +
                              "': expected nn-lb-1d, nn-lb-2d, universal-1d, "
                              "recursive-squares or random");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Online broadcast range assignment: strategies, oracles and bounds",
               "rangeassign"};
  app.require_subcommand(1);
  Options o;

  auto* generate = app.add_subcommand("generate", "Write an instance file");
  generate->add_option("generator", o.generator,
                       "nn-lb-1d | nn-lb-2d | universal-1d | recursive-squares | random")
      ->required();
  generate->add_option("--alpha", o.alpha, "Exponent (universal-1d)");
  generate->add_option("--epsilon", o.epsilon, "nn-lb-2d angular/radial offset");
  generate->add_option("--delta", o.delta, "nn-lb-1d position of p_1 as a fraction of x");
  generate->add_option("--x", o.x, "Scale");
  generate->add_option("--branch", o.branch, "universal-1d family: F1 or F2");
  generate->add_option("--rounds", o.rounds, "recursive-squares rounds");
  generate->add_option("--seed", o.seed, "random seed");
  generate->add_option("--n", o.n, "random instance size");
  generate->add_option("--space", o.space, "random space: line | plane | metric");
  generate->add_option("--out", o.out, "Output file (default stdout)");

  auto* simulate_cmd = app.add_subcommand("simulate", "Run an online strategy");
  simulate_cmd->add_option("instance", o.instance_file, "Instance file")->required();
  simulate_cmd->add_option("--strategy", o.strategy, "nn | ci | knn | dual")->required();
  simulate_cmd->add_option("--alpha", o.alpha, "Exponent");
  simulate_cmd->add_option("--k", o.k, "knn expansion factor (default 2)");
  simulate_cmd->add_option("--gamma", o.gamma, "dual range factor (default 4)");
  simulate_cmd->add_option("--out", o.out, "CSV output file (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "Solve the offline problem");
  oracle->add_option("instance", o.instance_file, "Instance file")->required();
  oracle->add_option("--alpha", o.alpha, "Exponent");
  oracle->add_flag("--approx", o.approx, "Run the 5^alpha approximation");

  auto* bounds = app.add_subcommand("bounds", "Closed-form and numeric constants");
  bounds->add_option("--alpha", o.alpha, "Exponent");
  bounds->add_flag("--fstar", o.fstar, "Print the F*_alpha upper bound");
  bounds->add_flag("--alpha-star", o.alpha_star, "Print the minimizer of F*_alpha");

  auto* export_lp = app.add_subcommand("export-lp", "Write the covering LP or its dual");
  export_lp->add_option("instance", o.instance_file, "Instance file")->required();
  export_lp->add_option("--alpha", o.alpha, "Exponent");
  export_lp->add_option("--form", o.form, "primal | dual");
  export_lp->add_option("--out", o.out, "Output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "Run an experiment grid");
  sweep->add_option("spec", o.instance_file, "Experiment spec (JSON)")->required();
  sweep->add_option("--out", o.out, "CSV output file (overrides the spec)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return cmd_generate(o, out);
    if (*simulate_cmd) return cmd_simulate(o, out, err);
    if (*oracle) return cmd_oracle(o, out, err);
    if (*bounds) return cmd_bounds(o, out);
    if (*export_lp) return cmd_export_lp(o, out);
    if (*sweep) return cmd_sweep(o, out);
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace rangeassign::cli
