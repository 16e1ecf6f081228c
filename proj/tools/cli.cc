#include "cli.h"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "hyperign/decision.h"
#include "hyperign/errors.h"
#include "hyperign/model.h"
#include "hyperign/proofsys.h"
#include "hyperign/repro.h"
#include "hyperign/semantics.h"

namespace hyperign::cli {

namespace {

using nlohmann::json;

// Raised for anything that should end with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

System system_flag(const std::string& s) {
  auto sys = system_from_string(s);
  if (!sys) throw UsageError("unknown system '" + s + "' (iw, iu, di, hiw, hiu, hdi)");
  return *sys;
}

Formula formula_arg(const std::string& text, System s) {
  try {
    return parse(text, language_of(s));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

json report_json(const CountermodelReport& r) {
  json j{{"verdict", to_string(r.verdict)}, {"models_checked", r.models_checked}};
  if (r.witness) {
    j["world"] = r.witness->world;
    j["model"] = model_to_json(r.witness->model);
  }
  return j;
}

int cmd_parse(const std::string& text, const std::string& sys, std::ostream& out) {
  const Formula f = formula_arg(text, system_flag(sys));
  out << print(f) << '\n';
  out << "vars:";
  for (const auto& v : vars(f)) out << ' ' << v;
  out << '\n';
  return 0;
}

int cmd_eval(const std::string& path, const std::string& world, const std::string& text,
             const std::string& sys, bool trace, std::ostream& out) {
  EvalConfig cfg;
  cfg.system = system_flag(sys);
  const Formula f = formula_arg(text, cfg.system);
  Model m = [&] {
    try {
      return load_model_file(path);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  try {
    if (trace) {
      for (const auto& t : eval_trace(m, world, f, cfg)) {
        out << (t.value ? "  true   " : "  false  ") << print(t.formula) << '\n';
      }
    }
    out << (eval(m, world, f, cfg) ? "true" : "false") << '\n';
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return 0;
}

int cmd_valid(const std::string& text, const std::string& sys, int max_worlds, int threads,
              const std::string& expect, const std::string& out_path, std::ostream& out) {
  EvalConfig cfg;
  cfg.system = system_flag(sys);
  const Formula f = formula_arg(text, cfg.system);
  Verdict want = Verdict::ValidUpToBound;
  if (expect == "countermodel") want = Verdict::Countermodel;
  SearchBounds b;
  b.max_worlds = max_worlds;
  b.threads = threads;
  CountermodelReport r;
  try {
    r = bounded_valid(f, cfg, b);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  out << to_string(r.verdict) << '\n';
  out << "models checked: " << r.models_checked << '\n';
  if (r.witness) {
    out << "world: " << r.witness->world << '\n';
    out << save_model(r.witness->model) << '\n';
  }
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw UsageError("cannot write " + out_path);
    file << report_json(r).dump(2) << '\n';
  }
  return r.verdict == want ? 0 : 1;
}

int cmd_fuzz(const std::string& sys, int trials, std::uint64_t seed, bool mutants, std::ostream& out) {
  EvalConfig cfg;
  cfg.system = system_flag(sys);
  FuzzOptions o;
  o.trials = trials;
  o.seed = seed;
  const FuzzReport r = check_axiom_instances(cfg, o);
  out << to_string(cfg.system) << ": " << r.instances << " instances, " << r.violations.size()
      << " schemata violated\n";
  for (const auto& s : r.per_schema) {
    out << "  " << s.name << "  " << s.instances << " instances, " << s.violations << " violations\n";
  }
  for (const auto& v : r.violations) {
    out << "violation " << v.schema << ": " << print(v.instance) << " fails at " << v.witness.world
        << (v.minimized ? " (minimized)" : "") << '\n'
        << save_model(v.witness.model) << '\n';
  }
  bool ok = r.clean();
  if (mutants) {
    const MutationReport m = check_mutants(cfg, o);
    out << "mutants: " << m.killed << "/" << m.tried << " killed\n";
    for (const auto& s : m.survivors) out << "  survived " << s << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_prove(const std::string& path, const std::string& sys, std::ostream& out) {
  Proof p = [&] {
    try {
      return load_proof_file(path, sys.empty() ? System::HIW : system_flag(sys));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  const System s = sys.empty() ? p.system : system_flag(sys);
  if (const auto err = check_proof(p, s)) {
    out << err->describe() << '\n';
    return 1;
  }
  out << "OK " << p.lines.size() << " lines (" << to_string(s) << ")\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topic-sensitive ignorance logics: evaluation, bounded validity, proofs", "hyperign"};
  app.require_subcommand(1);

  std::string system = "hiw";
  int max_worlds = 3;
  int threads = 1;
  std::uint64_t seed = 0;
  int trials = 1000;
  bool trace = false;
  bool mutants = false;
  std::string text, path, world, expect = "valid", out_path, prove_system, data_dir = HYPERIGN_DATA_DIR;
  std::vector<std::string> mutate;

  auto add_system = [&](CLI::App* c) {
    c->add_option("--system", system, "iw, iu, di, hiw, hiu or hdi")->capture_default_str();
  };

  auto* p_parse = app.add_subcommand("parse", "Parse and print a formula in canonical form");
  p_parse->add_option("formula", text)->required();
  add_system(p_parse);

  auto* p_eval = app.add_subcommand("eval", "Evaluate a formula at a world of a model file");
  p_eval->add_option("model", path)->required();
  p_eval->add_option("world", world)->required();
  p_eval->add_option("formula", text)->required();
  add_system(p_eval);
  p_eval->add_flag("--trace", trace, "Print the value of every subformula");

  auto* p_valid = app.add_subcommand("valid", "Search for a countermodel up to a size bound");
  p_valid->add_option("formula", text)->required();
  add_system(p_valid);
  p_valid->add_option("--max-worlds", max_worlds)->capture_default_str()->check(CLI::Range(1, 8));
  p_valid->add_option("--threads", threads)->capture_default_str()->check(CLI::Range(1, 256));
  p_valid->add_option("--expect", expect, "Verdict that counts as success")
      ->check(CLI::IsMember({"valid", "countermodel"}))
      ->capture_default_str();
  p_valid->add_option("--out", out_path, "Write the report (verdict and witness model) as JSON");

  auto* p_fuzz = app.add_subcommand("fuzz", "Check random axiom instances on random models");
  add_system(p_fuzz);
  p_fuzz->add_option("--trials", trials)->capture_default_str()->check(CLI::PositiveNumber);
  p_fuzz->add_option("--seed", seed)->capture_default_str();
  p_fuzz->add_flag("--mutants", mutants, "Also report which flipped-operator mutants are caught");

  auto* p_prove = app.add_subcommand("prove", "Check a proof script");
  p_prove->add_option("proof", path)->required();
  p_prove->add_option("--system", prove_system, "Override the system named in the file");

  auto* p_repro = app.add_subcommand("repro", "Run the fixture suite and print a pass/fail table");
  p_repro->add_option("--seed", seed)->capture_default_str();
  p_repro->add_option("--trials", trials)->capture_default_str()->check(CLI::PositiveNumber);
  p_repro->add_option("--max-worlds", max_worlds)->capture_default_str()->check(CLI::Range(1, 8));
  p_repro->add_option("--threads", threads)->capture_default_str()->check(CLI::Range(1, 256));
  p_repro->add_option("--data-dir", data_dir)->capture_default_str();
  p_repro->add_option("--mutate", mutate, "Run against a broken clause: box-successors, disbelief-self")
      ->check(CLI::IsMember({"box-successors", "disbelief-self"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*p_parse) return cmd_parse(text, system, out);
    if (*p_eval) return cmd_eval(path, world, text, system, trace, out);
    if (*p_valid) return cmd_valid(text, system, max_worlds, threads, expect, out_path, out);
    if (*p_fuzz) return cmd_fuzz(system, trials, seed, mutants, out);
    if (*p_prove) return cmd_prove(path, prove_system, out);
    if (*p_repro) {
      ReproOptions o;
      o.seed = seed;
      o.trials = trials;
      o.max_worlds = max_worlds;
      o.threads = threads;
      o.data_dir = data_dir;
      o.box_over_successors = std::count(mutate.begin(), mutate.end(), "box-successors") > 0;
      o.disbelief_counts_self = std::count(mutate.begin(), mutate.end(), "disbelief-self") > 0;
      const auto rows = run_repro(o);
      out << format_table(rows);
      return std::all_of(rows.begin(), rows.end(), [](const ReproRow& r) { return r.pass; }) ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace hyperign::cli
