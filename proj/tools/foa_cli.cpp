// Command-line front end: instance generation, validation, solving with
// the exact / approximation-scheme / heuristic algorithms, comparison
// tables and CSV benchmarks.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "foa/heuristics.hpp"
#include "foa/io.hpp"
#include "foa/max_angles.hpp"
#include "foa/min_ratios.hpp"
#include "foa/oracle.hpp"

namespace {

using foa::Instance;
using foa::Objective;
using foa::SolveReport;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void print_error(const std::string& type, const std::string& message) {
  json err;
  err["error"] = {{"type", type}, {"message", message}};
  std::cerr << err.dump() << "\n";
}

foa::Validation validate_instance(const Instance& inst, Objective objective) {
  return objective == Objective::SumAngles ? foa::validate_for_angles(inst)
                                           : foa::validate_for_ratios(inst);
}

SolveReport run_exact(const Instance& inst, Objective objective,
                      foa::OracleCaps caps) {
  const auto start = std::chrono::steady_clock::now();
  const foa::OracleResult res =
      foa::solve_exact(inst, objective, foa::SearchSpace::AllOverlapping, caps);
  SolveReport report;
  report.algorithm = "exact";
  report.objective = objective;
  report.assignment = res.best;
  report.value = res.best.value;
  report.certified = true;
  report.counters.candidates = res.pairings_examined;
  report.counters.evaluated = res.pairings_examined;
  report.counters.wall_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
  return report;
}

SolveReport run_algorithm(const Instance& inst, Objective objective,
                          const std::string& algorithm, double epsilon,
                          long long max_candidates, foa::OracleCaps caps) {
  if (algorithm == "exact") return run_exact(inst, objective, caps);
  if (algorithm == "heuristic") return foa::best_heuristic(inst, objective);
  if (objective == Objective::SumAngles) {
    foa::EnumerationLimits limits;
    limits.max_candidates = max_candidates;
    return foa::solve_max_sum_angles(inst, epsilon, limits);
  }
  foa::RatioEnumLimits limits;
  limits.max_combos = max_candidates;
  return foa::solve_min_sum_ratios(inst, epsilon, limits);
}

std::string fmt(double v, int precision = 17) {
  std::ostringstream ss;
  ss << std::setprecision(precision) << v;
  return ss.str();
}

int cmd_validate(const std::string& file, const std::string& objective_name) {
  const Objective objective = foa::objective_from_name(objective_name);
  const Instance inst = foa::project_targets(foa::load_instance(file));
  const foa::Validation v = validate_instance(inst, objective);
  json out;
  out["valid"] = v.ok;
  out["errors"] = v.errors;
  json offending = json::array();
  for (int t : v.offending_targets) offending.push_back(t + 1);
  out["offending_targets"] = offending;
  std::cout << out.dump(2) << "\n";
  return v.ok ? kExitOk : kExitValidation;
}

int cmd_generate(int n, std::uint64_t seed, const std::string& profile,
                 double margin, const std::string& out_path) {
  foa::GenerateOptions opt;
  opt.n = n;
  opt.seed = seed;
  opt.profile = foa::profile_from_name(profile);
  opt.thales_margin = margin;
  const Instance inst = foa::generate_instance(opt);
  if (out_path.empty()) {
    std::cout << foa::instance_to_json(inst, opt).dump(2) << "\n";
  } else {
    foa::save_instance(inst, out_path, opt);
  }
  return kExitOk;
}

int cmd_solve(const std::string& file, const std::string& objective_name,
              const std::string& algorithm, double epsilon,
              long long max_candidates, int oracle_cap,
              const std::string& out_path) {
  const Objective objective = foa::objective_from_name(objective_name);
  const Instance inst = foa::project_targets(foa::load_instance(file));
  const foa::Validation v = validate_instance(inst, objective);
  if (!v.ok) {
    std::string msg = "instance fails validation for objective '" +
                      objective_name + "'";
    for (const std::string& e : v.errors) msg += "; " + e;
    print_error("validation_failed", msg);
    return kExitValidation;
  }
  foa::OracleCaps caps;
  caps.max_n_overlapping = oracle_cap;

  const SolveReport report = run_algorithm(inst, objective, algorithm,
                                           epsilon, max_candidates, caps);
  json config;
  config["input"] = file;
  config["objective"] = objective_name;
  config["algorithm"] = algorithm;
  if (algorithm == "qptas") {
    config["epsilon"] = epsilon;
    config["max_candidates"] = max_candidates;
  }
  const json doc = foa::report_to_json(report, config);
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    foa::write_text_file(out_path, doc.dump(2) + "\n");
  }
  const bool budget_hit = algorithm == "qptas" && !report.certified;
  return budget_hit ? kExitBudget : kExitOk;
}

int cmd_compare(const std::string& file, double epsilon,
                long long max_candidates, int oracle_cap,
                const std::string& out_path) {
  const Instance inst = foa::project_targets(foa::load_instance(file));
  foa::OracleCaps caps;
  caps.max_n_overlapping = oracle_cap;

  json table;
  table["input"] = file;
  table["n"] = inst.n();
  table["epsilon"] = epsilon;
  bool any_budget_hit = false;

  std::cout << std::left;
  for (Objective objective : {Objective::SumAngles, Objective::SumRatios}) {
    const std::string oname = foa::objective_name(objective);
    if (!validate_instance(inst, objective).ok) {
      table[oname] = {{"skipped", "instance not valid for this objective"}};
      std::cout << oname << ": skipped (instance not valid)\n";
      continue;
    }
    json section;
    std::optional<double> exact_value;
    std::vector<std::string> algorithms = {"qptas", "heuristic"};
    if (inst.n() <= caps.max_n_overlapping) {
      algorithms.insert(algorithms.begin(), "exact");
    }
    std::cout << "objective " << oname << ":\n";
    for (const std::string& algorithm : algorithms) {
      const SolveReport r = run_algorithm(inst, objective, algorithm,
                                          epsilon, max_candidates, caps);
      if (algorithm == "exact") exact_value = r.value;
      json row;
      row["value"] = r.value;
      row["certified"] = r.certified;
      row["wall_ms"] = r.counters.wall_ms;
      if (exact_value && *exact_value != 0.0) {
        row["ratio_to_exact"] = r.value / *exact_value;
      }
      section[algorithm] = row;
      if (algorithm == "qptas" && !r.certified) any_budget_hit = true;

      std::cout << "  " << std::setw(10) << algorithm << " value="
                << fmt(r.value, 12);
      if (exact_value && *exact_value != 0.0) {
        std::cout << "  vs-exact=" << fmt(r.value / *exact_value, 6);
      }
      std::cout << "  certified=" << (r.certified ? "yes" : "no") << "\n";
    }
    table[oname] = section;
  }
  if (!out_path.empty()) {
    foa::write_text_file(out_path, table.dump(2) + "\n");
  }
  return any_budget_hit ? kExitBudget : kExitOk;
}

int cmd_bench(const std::string& n_range, const std::string& seeds_csv,
              double epsilon, const std::string& profile, double margin,
              long long max_candidates, int oracle_cap,
              const std::string& out_path) {
  int n_lo = 0, n_hi = 0;
  {
    const auto colon = n_range.find(':');
    if (colon == std::string::npos) {
      throw foa::InvalidRange("--n-range must look like LO:HI");
    }
    n_lo = std::stoi(n_range.substr(0, colon));
    n_hi = std::stoi(n_range.substr(colon + 1));
    if (n_lo < 1 || n_hi < n_lo) {
      throw foa::InvalidRange("--n-range must satisfy 1 <= LO <= HI");
    }
  }
  std::vector<std::uint64_t> seeds;
  {
    std::stringstream ss(seeds_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) seeds.push_back(std::stoull(item));
    }
    if (seeds.empty()) throw foa::InvalidRange("--seeds must list seeds");
  }

  std::ostringstream csv;
  csv << "n,seed,algorithm,objective,epsilon,value,ratio_to_exact,wall_ms,"
         "candidates,certified\n";
  foa::OracleCaps caps;
  caps.max_n_overlapping = oracle_cap;

  for (int n = n_lo; n <= n_hi; ++n) {
    for (std::uint64_t seed : seeds) {
      foa::GenerateOptions opt;
      opt.n = n;
      opt.seed = seed;
      opt.profile = foa::profile_from_name(profile);
      opt.thales_margin = margin;
      const Instance inst = foa::generate_instance(opt);
      for (Objective objective : {Objective::SumAngles, Objective::SumRatios}) {
        std::optional<double> exact_value;
        std::vector<std::string> algorithms = {"qptas", "heuristic"};
        if (n <= caps.max_n_overlapping) {
          algorithms.insert(algorithms.begin(), "exact");
        }
        for (const std::string& algorithm : algorithms) {
          const SolveReport r = run_algorithm(inst, objective, algorithm,
                                              epsilon, max_candidates, caps);
          if (algorithm == "exact") exact_value = r.value;
          csv << n << ',' << seed << ',' << algorithm << ','
              << foa::objective_name(objective) << ','
              << (algorithm == "qptas" ? fmt(epsilon) : "") << ','
              << fmt(r.value) << ','
              << (exact_value && *exact_value != 0.0
                      ? fmt(r.value / *exact_value)
                      : "")
              << ',' << fmt(r.counters.wall_ms, 6) << ','
              << r.counters.candidates << ','
              << (r.certified ? "true" : "false") << "\n";
        }
      }
    }
  }
  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    foa::write_text_file(out_path, csv.str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Camera-pairing solvers for collinear-camera target tracking"};
  app.require_subcommand(1);

  std::string file, objective = "angles", algorithm = "qptas";
  std::string profile = "uniform", out_path, n_range = "1:4", seeds = "1,2,3";
  double epsilon = 0.5, margin = 1.5;
  int n = 1, oracle_cap = 8;
  std::uint64_t seed = 0;
  long long max_candidates = 10'000'000;

  CLI::App* validate = app.add_subcommand("validate", "Check an instance");
  validate->add_option("file", file)->required();
  validate->add_option("--objective", objective)
      ->check(CLI::IsMember({"angles", "ratios"}));

  CLI::App* generate =
      app.add_subcommand("generate", "Create a random instance");
  generate->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  generate->add_option("--seed", seed)->required();
  generate->add_option("--profile", profile)
      ->check(CLI::IsMember({"uniform", "geometric"}));
  generate->add_option("--margin", margin);
  generate->add_option("--out", out_path);

  CLI::App* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("file", file)->required();
  solve->add_option("--objective", objective)
      ->check(CLI::IsMember({"angles", "ratios"}));
  solve->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"exact", "qptas", "heuristic"}));
  solve->add_option("--epsilon", epsilon);
  solve->add_option("--max-candidates", max_candidates);
  solve->add_option("--oracle-cap", oracle_cap);
  solve->add_option("--out", out_path);

  CLI::App* compare =
      app.add_subcommand("compare", "Run every algorithm on one instance");
  compare->add_option("file", file)->required();
  compare->add_option("--epsilon", epsilon)->required();
  compare->add_option("--max-candidates", max_candidates);
  compare->add_option("--oracle-cap", oracle_cap);
  compare->add_option("--out", out_path);

  CLI::App* bench = app.add_subcommand("bench", "CSV benchmark sweep");
  bench->add_option("--n-range", n_range)->required();
  bench->add_option("--seeds", seeds)->required();
  bench->add_option("--epsilon", epsilon)->required();
  bench->add_option("--profile", profile)
      ->check(CLI::IsMember({"uniform", "geometric"}));
  bench->add_option("--margin", margin);
  bench->add_option("--max-candidates", max_candidates);
  bench->add_option("--oracle-cap", oracle_cap);
  bench->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(file, objective);
    if (generate->parsed()) {
      return cmd_generate(n, seed, profile, margin, out_path);
    }
    if (solve->parsed()) {
      if (algorithm == "qptas" && !(epsilon > 0.0 && epsilon < 1.0)) {
        print_error("usage", "qptas needs --epsilon in (0, 1)");
        return kExitUsage;
      }
      return cmd_solve(file, objective, algorithm, epsilon, max_candidates,
                       oracle_cap, out_path);
    }
    if (compare->parsed()) {
      return cmd_compare(file, epsilon, max_candidates, oracle_cap, out_path);
    }
    if (bench->parsed()) {
      return cmd_bench(n_range, seeds, epsilon, profile, margin,
                       max_candidates, oracle_cap, out_path);
    }
  } catch (const foa::ValidationError& e) {
    print_error("validation_failed", e.what());
    return kExitValidation;
  } catch (const foa::InstanceTooLarge& e) {
    print_error("instance_too_large", e.what());
    return kExitValidation;
  } catch (const foa::InvalidRange& e) {
    print_error("usage", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
