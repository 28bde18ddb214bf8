// Command-line front end: run experiments on registered benchmark functions
// and the beam design problems, export stats tables (csv/json) and
// per-iteration convergence traces.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "acoci/acoci.hpp"

namespace {

struct CommonOpts {
  acoci::SolverConfig config;
  int replicates = 30;
  std::string format = "csv";
  std::string out_path;
  std::string trace_path;
};

void add_solver_options(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--ants", o.config.ants, "Population size")->capture_default_str();
  cmd->add_option("--elites", o.config.elites, "Elite count followed by the cohort")
      ->capture_default_str();
  cmd->add_option("--reduction-factor", o.config.reduction_factor,
                  "Per-iteration sampling-interval contraction, in (0,1)")
      ->capture_default_str();
  cmd->add_option("--q-constant", o.config.q_constant, "Pheromone deposit scale")
      ->capture_default_str();
  cmd->add_option("--evaporation", o.config.evaporation, "Pheromone evaporation rate, in [0,1)")
      ->capture_default_str();
  cmd->add_option("--tau-init", o.config.tau_init, "Initial pheromone level")
      ->capture_default_str();
  cmd->add_option("--convergence-tol", o.config.convergence_tol,
                  "Relative population-spread tolerance")
      ->capture_default_str();
  cmd->add_option("--max-iterations", o.config.max_iterations, "Iteration cap")
      ->capture_default_str();
  cmd->add_option("--penalty-coefficient", o.config.penalty_coefficient,
                  "Quadratic constraint-penalty weight")
      ->capture_default_str();
  cmd->add_option("--seed", o.config.seed, "Seed base; replicate k runs with seed+k")
      ->envname("ACOCI_SEED")
      ->capture_default_str();
  cmd->add_option("--replicates", o.replicates, "Independent runs to aggregate")
      ->capture_default_str();
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out_path, "Output file (default: stdout)");
  cmd->add_option("--trace", o.trace_path,
                  "Write the first replicate's per-iteration trace CSV here");
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  file << text;
  if (!file) throw std::runtime_error("cannot write output file '" + path + "'");
}

void emit_rows(const std::vector<acoci::report::StatsRow>& rows, const CommonOpts& opts) {
  if (opts.format == "json") {
    const nlohmann::json j = rows.size() == 1 ? acoci::report::stats_json(rows.front())
                                              : acoci::report::stats_json(rows);
    write_text(opts.out_path, j.dump(2) + "\n");
  } else {
    write_text(opts.out_path, acoci::report::stats_csv(rows));
  }
}

acoci::report::StatsRow run_problem(const acoci::Problem& problem, const CommonOpts& opts) {
  acoci::ExperimentPlan plan{problem, opts.config, opts.replicates, opts.config.seed};
  const acoci::ExperimentResult result = acoci::run_experiment(plan);
  for (const auto& failure : result.failures)
    std::cerr << "warning: replicate " << failure.index << " failed: " << failure.message
              << '\n';
  if (result.results.empty())
    throw std::runtime_error("all replicates of '" + problem.name() + "' failed");
  if (!opts.trace_path.empty())
    write_text(opts.trace_path, acoci::report::trace_csv(result.results.front().trace));
  return {problem.name(), static_cast<int>(result.results.size()), result.stats};
}

std::string cases_csv() {
  std::string out = "case,length,load,target_deflection\n";
  for (const auto& c : acoci::beams::ibeam_cases()) {
    out += std::to_string(c.id) + ',' + acoci::report::format_number(c.length) + ',' +
           acoci::report::format_number(c.load) + ',' +
           acoci::report::format_number(c.target_deflection) + '\n';
  }
  return out;
}

std::string cases_json() {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : acoci::beams::ibeam_cases())
    arr.push_back({{"case", c.id},
                   {"length", c.length},
                   {"load", c.load},
                   {"target_deflection", c.target_deflection}});
  return arr.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acoci: ant-cohort hybrid optimizer for box-bounded, "
               "inequality-constrained problems"};
  app.set_version_flag("--version", "1.0.0");
  app.require_subcommand(1);

  // solve
  CommonOpts solve_opts;
  std::string problem_name;
  std::size_t dim = 0;
  auto* solve = app.add_subcommand("solve", "Run a registered benchmark function");
  solve->add_option("--problem", problem_name, "Registered function name")->required();
  solve->add_option("--dim", dim, "Dimension override (scalable functions only)");
  add_solver_options(solve, solve_opts);

  // bench
  CommonOpts bench_opts;
  auto* bench = app.add_subcommand("bench", "Run the whole benchmark registry");
  add_solver_options(bench, bench_opts);
  bench->get_option("--trace")->group("");  // traces are per-problem; hidden here

  // beam
  auto* beam = app.add_subcommand("beam", "Run a beam design problem");
  beam->require_subcommand(1);
  CommonOpts cant_opts;
  auto* cantilever = beam->add_subcommand("cantilever", "Stepped cantilever weight minimization");
  add_solver_options(cantilever, cant_opts);

  CommonOpts ibeam_opts;
  int case_id = 0;
  double length = 0.0, load = 0.0;
  double lateral = 50.0, modulus = 20000.0;
  auto* ibeam = beam->add_subcommand("ibeam", "I-section beam deflection minimization");
  auto* case_opt = ibeam->add_option("--case", case_id, "Published load case (1-10)");
  auto* length_opt = ibeam->add_option("--length", length, "Beam length L in cm");
  auto* load_opt = ibeam->add_option("--load", load, "Vertical load P in kN");
  ibeam->add_option("--lateral", lateral, "Lateral load Q in kN")->capture_default_str();
  ibeam->add_option("--modulus", modulus, "Elastic modulus E in kN/cm^2")
      ->capture_default_str();
  case_opt->excludes(length_opt)->excludes(load_opt);
  length_opt->needs(load_opt);
  load_opt->needs(length_opt);
  add_solver_options(ibeam, ibeam_opts);

  // cases
  std::string cases_format = "csv";
  std::string cases_out;
  auto* cases = app.add_subcommand("cases", "List the published I-beam load cases");
  cases->add_option("--format", cases_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cases->add_option("--out", cases_out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (solve->parsed()) {
      const auto& base = acoci::benchmarks::find_entry(problem_name);
      const acoci::benchmarks::BenchmarkEntry entry =
          (dim != 0 && dim != base.default_dimension)
              ? acoci::benchmarks::make_entry(problem_name, dim)
              : base;
      emit_rows({run_problem(entry.problem, solve_opts)}, solve_opts);
    } else if (bench->parsed()) {
      std::vector<acoci::report::StatsRow> rows;
      for (const auto& entry : acoci::benchmarks::registry())
        rows.push_back(run_problem(entry.problem, bench_opts));
      emit_rows(rows, bench_opts);
    } else if (cantilever->parsed()) {
      emit_rows({run_problem(acoci::beams::cantilever_problem(), cant_opts)}, cant_opts);
    } else if (ibeam->parsed()) {
      if (case_opt->count() > 0) {
        const auto& c = acoci::beams::ibeam_case(case_id);
        acoci::Problem problem =
            acoci::beams::ibeam_problem(c.length, c.load, lateral, modulus);
        acoci::Problem named("ibeam-case-" + std::to_string(c.id),
                             [problem](const std::vector<double>& x) { return problem.objective(x); },
                             problem.constraints(), problem.bounds(), c.target_deflection);
        emit_rows({run_problem(named, ibeam_opts)}, ibeam_opts);
      } else if (length_opt->count() > 0) {
        emit_rows({run_problem(acoci::beams::ibeam_problem(length, load, lateral, modulus),
                               ibeam_opts)},
                  ibeam_opts);
      } else {
        throw acoci::ValidationError("ibeam requires --case N or --length L --load P");
      }
    } else if (cases->parsed()) {
      write_text(cases_out, cases_format == "json" ? cases_json() : cases_csv());
    }
  } catch (const acoci::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
