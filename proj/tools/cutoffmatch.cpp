// cutoffmatch command-line front end.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cutoffmatch/cutoff_engine.hpp"
#include "cutoffmatch/egalitarian.hpp"
#include "cutoffmatch/funding_flow.hpp"
#include "cutoffmatch/gadgets.hpp"
#include "cutoffmatch/instance_json.hpp"
#include "cutoffmatch/milp.hpp"
#include "cutoffmatch/oracle.hpp"
#include "cutoffmatch/random_instance.hpp"
#include "cutoffmatch/report_json.hpp"
#include "cutoffmatch/stability.hpp"

using namespace cutoffmatch;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kResource = 3 };

struct Globals {
  std::string format = "json";
  bool verbose = false;
};

// Thrown for bad command-line values that CLI11 cannot catch itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Run {
 public:
  Run(std::string command, const Globals& g) : g_(g), start_(std::chrono::steady_clock::now()) {
    report_["command"] = std::move(command);
  }
  Json& report() { return report_; }
  bool text() const { return g_.format == "text"; }
  void log(const std::string& line) const {
    if (g_.verbose) std::cerr << line << "\n";
  }
  void emit(const std::string& text_form) {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    report_["wall_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    if (text()) {
      std::cout << text_form;
    } else {
      std::cout << report_.dump(2) << "\n";
    }
  }

 private:
  const Globals& g_;
  std::chrono::steady_clock::time_point start_;
  Json report_;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::string cutoffs_text(const Instance& inst, const CutoffVector& d) {
  std::string out;
  for (int p = 0; p < inst.num_projects(); ++p) {
    out += (p ? " " : "") + inst.project(p).id + "=" + std::to_string(d[p]);
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_check(const Globals& g, const std::string& instance_path, const std::string& matching_path) {
  const auto inst = load_instance(instance_path);
  const auto m = load_matching(inst, matching_path);
  Run run("check", g);
  auto& r = run.report();
  r["instance_digest"] = instance_digest(inst);
  r["matching"] = matching_json(inst, m);

  const auto funding = check_feasibility(inst, m);
  r["feasible"] = funding.feasible;
  if (funding.allocation) r["allocation"] = allocation_json(inst, *funding.allocation);
  const auto verdict = check_stability(inst, m);
  r["verdict"] = verdict_json(inst, verdict);
  if (verdict.fair && funding.feasible) r["cutoffs"] = cutoffs_json(inst, cutoffs_for(inst, m));

  std::string text = funding.feasible ? "feasible" : "infeasible";
  text += "; level: " + std::string(to_string(verdict.level)) + "\n";
  for (const auto& w : verdict.witnesses) {
    text += "  witness: " + (w.applicant >= 0 ? inst.applicant_id(w.applicant) : std::string("-")) + " " +
            (w.project >= 0 ? inst.project(w.project).id : std::string("-")) + " " + w.reason + "\n";
  }
  run.emit(text);
  return funding.feasible ? kOk : kNegative;
}

int cmd_solve(const Globals& g, const std::string& instance_path, const std::string& order_arg,
              const std::optional<std::string>& trace_path, const std::optional<std::uint64_t>& seed) {
  const auto inst = load_instance(instance_path);
  std::vector<int> order;
  if (!order_arg.empty()) {
    for (const auto& id : split(order_arg, ',')) {
      const auto p = inst.find_project(id);
      if (!p) throw UsageError("unknown project in --order: " + id);
      order.push_back(*p);
    }
    if (static_cast<int>(order.size()) != inst.num_projects()) {
      throw UsageError("--order must list every project exactly once");
    }
  } else if (seed) {
    order.resize(inst.num_projects());
    for (int p = 0; p < inst.num_projects(); ++p) order[p] = p;
    PortableRng rng(*seed);
    rng.shuffle(order);
  }
  EngineResult result;
  try {
    result = solve_cutoff_stable(inst, order);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto verdict = check_stability(inst, result.matching);

  Run run("solve", g);
  auto& r = run.report();
  r["instance_digest"] = instance_digest(inst);
  Json order_ids = Json::array();
  for (int p = 0; p < inst.num_projects(); ++p) {
    order_ids.push_back(inst.project(order.empty() ? p : order[p]).id);
  }
  r["order"] = order_ids;
  r["matching"] = matching_json(inst, result.matching);
  r["cutoffs"] = cutoffs_json(inst, result.cutoffs);
  r["cutoff_stable"] = verdict.cutoff_stable;
  r["level"] = std::string(to_string(verdict.level));
  r["counters"] = {{"feasibility_calls", result.trace.feasibility_calls},
                   {"steps", result.trace.steps.size()},
                   {"call_bound", feasibility_call_bound(inst)}};

  if (trace_path) {
    const auto lines = trace_to_jsonl(inst, result.trace);
    if (trace_path->empty() || *trace_path == "-") {
      std::cerr << lines;
    } else {
      write_file(*trace_path, lines);
    }
  }
  run.emit("matching: " + describe(inst, result.matching) + "\ncutoffs: " +
           cutoffs_text(inst, result.cutoffs) + "\ncutoff stable: " + yes_no(verdict.cutoff_stable) + "\n");
  return verdict.cutoff_stable ? kOk : kNegative;
}

int optimize_guard() {
  if (std::getenv("CUTOFFMATCH_GUARD") != nullptr) return applicant_guard();
  return 12;
}

int cmd_optimize(const Globals& g, const std::string& instance_path, const std::string& export_path,
                 std::size_t node_limit, bool oracle) {
  const auto inst = load_instance(instance_path);
  const int guard = optimize_guard();
  if (inst.num_applicants() > guard) throw GuardExceeded(inst.num_applicants(), guard);

  if (!export_path.empty()) export_lp_file(build_model(inst), export_path);
  MilpOptions options;
  options.node_limit = node_limit;
  const auto result = solve_max_cutoff_stable(inst, options);

  Run run("optimize", g);
  auto& r = run.report();
  r["instance_digest"] = instance_digest(inst);
  r["status"] = std::string(to_string(result.status));
  r["matching"] = matching_json(inst, result.matching);
  r["cutoffs"] = cutoffs_json(inst, result.cutoffs);
  r["objective"] = rational_json(result.objective);
  r["counters"] = {{"nodes", result.nodes}, {"lp_solves", result.lp_solves}};
  std::string text = "status: " + std::string(to_string(result.status)) +
                     "\nsize: " + std::to_string(result.matching.size()) +
                     "\nmatching: " + describe(inst, result.matching) +
                     "\ncutoffs: " + cutoffs_text(inst, result.cutoffs) +
                     "\nobjective: " + to_string(result.objective) + "\n";
  int code = result.status == MilpStatus::kOptimal ? kOk : kResource;
  if (oracle) {
    OracleOptions opts;
    opts.max_applicants = guard;
    const auto brute = max_cutoff_stable_bruteforce(inst, opts);
    r["oracle_size"] = brute.size;
    r["oracle_agrees"] = brute.size == result.matching.size();
    text += "oracle size: " + std::to_string(brute.size) + "\n";
    if (code == kOk && brute.size != result.matching.size()) code = kNegative;
  }
  run.emit(text);
  return code;
}

int cmd_allocate(const Globals& g, const std::string& instance_path, const std::string& matching_path,
                 const std::string& targets_arg, const std::string& mode_arg) {
  const auto inst = load_instance(instance_path);
  const auto m = load_matching(inst, matching_path);
  const TargetMode mode = mode_arg == "lenient" ? TargetMode::kLenient : TargetMode::kStrict;

  Run run("allocate", g);
  auto& r = run.report();
  r["instance_digest"] = instance_digest(inst);
  r["matching"] = matching_json(inst, m);
  if (!check_feasibility(inst, m).feasible) {
    r["feasible"] = false;
    run.emit("infeasible matching\n");
    return kNegative;
  }

  TargetProfile targets;
  try {
    if (targets_arg == "equal") {
      targets = default_targets(inst, m);
    } else if (targets_arg == "proportional") {
      targets = proportional_targets(inst, m);
    } else {
      targets = load_targets(inst, targets_arg);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto check = check_targets(inst, m, targets, mode);
  for (const auto& w : check.warnings) run.log("warning: " + w.entity + ": " + w.message);
  if (!check.ok()) {
    std::string msg = "invalid targets:";
    for (const auto& e : check.errors) msg += " [" + e.rule + " @ " + e.entity + "] " + e.message + ";";
    throw UsageError(msg);
  }

  const auto result = egalitarian_allocation(inst, m, targets, mode);
  r["feasible"] = true;
  r["mode"] = mode_arg;
  r["allocation"] = allocation_report_json(inst, result);
  std::string text;
  for (const auto& e : result.pairs) {
    text += inst.supervisor(e.supervisor).id + " " + inst.project(e.project).id + " x=" + to_string(e.x) +
            " t=" + to_string(e.target) + " ratio=" + to_string(e.ratio) +
            " round=" + std::to_string(e.round_fixed) + "\n";
  }
  text += "lp solves: " + std::to_string(result.lp_solves) + "\n";
  run.emit(text);
  return kOk;
}

int cmd_generate(const Globals& g, std::uint64_t seed, const std::string& sizes, const std::string& density,
                 const std::string& budget, bool integer_budgets, const std::string& out) {
  RandomInstanceParams params;
  const auto parts = split(sizes, ',');
  if (parts.size() != 3) throw UsageError("--sizes expects A,P,S");
  try {
    params.applicants = std::stoi(parts[0]);
    params.projects = std::stoi(parts[1]);
    params.supervisors = std::stoi(parts[2]);
    params.density = parse_rational(density);
    if (!budget.empty()) {
      const auto range = split(budget, ',');
      if (range.size() != 2) throw UsageError("--budget expects LO,HI");
      params.min_budget = parse_rational(range[0]);
      params.max_budget = parse_rational(range[1]);
    }
    params.integer_budgets = integer_budgets;
    const auto text = instance_to_json(random_instance_spec(params, seed));
    if (out.empty()) {
      std::cout << text;
    } else {
      write_file(out, text);
      Run run("generate", g);
      run.report()["out"] = out;
      run.report()["seed"] = seed;
      run.emit("wrote " + out + "\n");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

int cmd_gadget(const Globals& g, const std::string& name, const std::string& out, bool list) {
  if (list) {
    for (auto n : gadget_names()) std::cout << n << "\n";
    return kOk;
  }
  InstanceSpec spec;
  try {
    spec = gadget_spec(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto text = instance_to_json(spec);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
    Run run("gadget", g);
    run.report()["out"] = out;
    run.emit("wrote " + out + "\n");
  }
  return kOk;
}

int cmd_oracle(const Globals& g, const std::string& instance_path, const std::string& mode) {
  const auto inst = load_instance(instance_path);
  Run run("oracle", g);
  auto& r = run.report();
  r["instance_digest"] = instance_digest(inst);
  std::string text;
  int code = kOk;
  if (mode == "classify") {
    Json rows = Json::array();
    for (const auto& c : classify_all(inst)) {
      rows.push_back({{"matching", matching_json(inst, c.matching)},
                      {"level", std::string(to_string(c.verdict.level))}});
      text += describe(inst, c.matching) + " " + std::string(to_string(c.verdict.level)) + "\n";
    }
    r["matchings"] = std::move(rows);
  } else if (mode == "max") {
    const auto best = max_cutoff_stable_bruteforce(inst);
    r["max_cutoff_stable_size"] = best.size;
    Json w = Json::array();
    for (const auto& m : best.witnesses) {
      w.push_back(matching_json(inst, m));
      text += describe(inst, m) + "\n";
    }
    r["witnesses"] = std::move(w);
    text = "max cutoff stable size: " + std::to_string(best.size) + "\n" + text;
  } else {
    const auto found = find_strongly_stable(inst);
    r["strongly_stable_exists"] = found.has_value();
    if (found) r["witness"] = matching_json(inst, *found);
    text = found ? "strongly stable: " + describe(inst, *found) + "\n" : "no strongly stable matching\n";
    code = found ? kOk : kNegative;
  }
  run.emit(text);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cutoff-stable matching with supervisor budgets"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--verbose", g.verbose, "Diagnostics on stderr");

  std::string instance_path;
  std::string matching_path;

  auto* check = app.add_subcommand("check", "Feasibility and stability of a matching");
  check->add_option("instance", instance_path)->required();
  check->add_option("matching", matching_path)->required();

  std::string order;
  std::optional<std::string> trace;
  std::optional<std::uint64_t> solve_seed;
  auto* solve = app.add_subcommand("solve", "Cutoff-decreasing algorithm");
  solve->add_option("instance", instance_path)->required();
  solve->add_option("--order", order, "Project order, comma separated ids");
  solve->add_option("--trace", trace, "JSON-lines trace to PATH (stderr if omitted)")->expected(0, 1);
  solve->add_option("--seed", solve_seed, "Random project order");

  std::string export_lp_path;
  std::size_t node_limit = 0;
  bool with_oracle = false;
  auto* optimize = app.add_subcommand("optimize", "Maximum-size cutoff stable matching (MILP)");
  optimize->add_option("instance", instance_path)->required();
  optimize->add_option("--export-lp", export_lp_path, "Write the model in LP format");
  optimize->add_option("--time-limit", node_limit, "Branch-and-bound node limit (0: none)");
  optimize->add_flag("--oracle", with_oracle, "Cross-check the size by brute force");

  std::string targets = "equal";
  std::string mode = "strict";
  auto* allocate = app.add_subcommand("allocate", "Egalitarian funding allocation");
  allocate->add_option("instance", instance_path)->required();
  allocate->add_option("matching", matching_path)->required();
  allocate->add_option("--targets", targets, "equal, proportional, or a targets JSON file")
      ->capture_default_str();
  allocate->add_option("--mode", mode)->check(CLI::IsMember({"strict", "lenient"}))->capture_default_str();

  std::uint64_t seed = 1;
  std::string sizes = "5,3,2";
  std::string density = "1/2";
  std::string budget;
  bool integer_budgets = false;
  std::string out;
  auto* generate = app.add_subcommand("generate", "Random instance");
  generate->add_option("--seed", seed)->capture_default_str();
  generate->add_option("--sizes", sizes, "A,P,S")->capture_default_str();
  generate->add_option("--density", density, "Acceptability probability in (0,1]")->capture_default_str();
  generate->add_option("--budget", budget, "Budget range LO,HI");
  generate->add_flag("--integer-budgets", integer_budgets);
  generate->add_option("--out", out);

  std::string gadget_name;
  bool list = false;
  auto* gadget_cmd = app.add_subcommand("gadget", "Built-in fixture instance");
  gadget_cmd->add_option("name", gadget_name);
  gadget_cmd->add_option("--out", out);
  gadget_cmd->add_flag("--list", list);

  std::string oracle_mode = "classify";
  auto* oracle = app.add_subcommand("oracle", "Brute-force enumeration (small instances)");
  oracle->add_option("instance", instance_path)->required();
  oracle->add_option("--mode", oracle_mode)
      ->check(CLI::IsMember({"classify", "max", "strong"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (check->parsed()) return cmd_check(g, instance_path, matching_path);
    if (solve->parsed()) return cmd_solve(g, instance_path, order, trace, solve_seed);
    if (optimize->parsed()) return cmd_optimize(g, instance_path, export_lp_path, node_limit, with_oracle);
    if (allocate->parsed()) return cmd_allocate(g, instance_path, matching_path, targets, mode);
    if (generate->parsed()) return cmd_generate(g, seed, sizes, density, budget, integer_budgets, out);
    if (gadget_cmd->parsed()) {
      if (!list && gadget_name.empty()) throw UsageError("gadget name required (see --list)");
      return cmd_gadget(g, gadget_name, out, list);
    }
    if (oracle->parsed()) return cmd_oracle(g, instance_path, oracle_mode);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
