#include "hyperign/repro.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "hyperign/decision.h"
#include "hyperign/errors.h"
#include "hyperign/model.h"
#include "hyperign/proofsys.h"
#include "hyperign/semantics.h"

namespace hyperign {

namespace {

struct Expect {
  const char* world;
  const char* formula;
  bool value;
};

struct ModelFixture {
  const char* file;
  System system;
  std::vector<Expect> expect;
};

const std::vector<ModelFixture>& model_fixtures() {
  static const std::vector<ModelFixture> k = {
      {"william3_hiw.json",
       System::HIW,
       {{"w", "~Iw p", true}, {"w", "Iw (p & (q | ~q))", true}, {"w", "Iw q", true}}},
      {"william3_hiw_grasp.json",
       System::HIW,
       {{"w", "~Iw p", true}, {"w", "Iw (p & (q | ~q))", true}, {"w", "Iw q", true}}},
      {"william3_hdi.json",
       System::HDI,
       {{"w", "Id p", true}, {"w", "Id (p & (q | ~q))", false}, {"w", "G p", true}, {"w", "G q", false}}},
      // A reflexive point: the successor clause must skip w itself.
      {"hdi_reflexive_point.json", System::HDI, {{"w", "Id p", true}}},
  };
  return k;
}

EvalConfig config(System s, const ReproOptions& o) {
  EvalConfig c;
  c.system = s;
  c.box_over_successors = o.box_over_successors;
  c.disbelief_counts_self = o.disbelief_counts_self;
  return c;
}

template <class F>
ReproRow timed(std::string group, std::string name, F&& body) {
  ReproRow row{std::move(group), std::move(name), false, "", 0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(row);
  } catch (const std::exception& e) {
    row.pass = false;
    row.detail = std::string("error: ") + e.what();
  }
  row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

}  // namespace

std::vector<ReproRow> run_repro(const ReproOptions& o) {
  std::vector<ReproRow> rows;

  for (const auto& fx : model_fixtures()) {
    rows.push_back(timed("model", fx.file, [&](ReproRow& row) {
      const Model m = load_model_file(o.data_dir / "models" / fx.file);
      const EvalConfig cfg = config(fx.system, o);
      const Language lang = language_of(fx.system);
      row.pass = true;
      for (const auto& e : fx.expect) {
        const bool got = eval(m, e.world, parse(e.formula, lang), cfg);
        if (got != e.value) {
          row.pass = false;
          row.detail += std::string(e.formula) + " at " + e.world + " is " + (got ? "true" : "false") + "; ";
        }
      }
      if (row.pass) row.detail = std::to_string(fx.expect.size()) + " values as expected";
    }));
  }

  for (Principle p : kAllPrinciples) {
    for (System s : kAllSystems) {
      rows.push_back(timed("omniscience", std::string(to_string(p)) + " " + std::string(to_string(s)),
                           [&](ReproRow& row) {
                             SearchBounds b;
                             b.max_worlds = o.max_worlds;
                             b.threads = o.threads;
                             const OmniscienceReport r = refute_omniscience(p, config(s, o), b);
                             row.pass = r.matches();
                             row.detail = std::string(to_string(r.report.verdict)) + " (expected " +
                                          std::string(to_string(r.expected)) + ")";
                             if (r.report.witness) {
                               row.detail += ", " + std::to_string(frame_of(r.report.witness->model).size()) +
                                             "-world witness";
                             }
                           }));
    }
  }

  std::vector<std::filesystem::path> proofs;
  if (std::filesystem::is_directory(o.data_dir / "proofs")) {
    for (const auto& e : std::filesystem::directory_iterator(o.data_dir / "proofs")) {
      if (e.path().extension() == ".json") proofs.push_back(e.path());
    }
  }
  std::sort(proofs.begin(), proofs.end());
  if (proofs.empty()) rows.push_back({"proof", "(none)", false, "no proof scripts found", 0});
  for (const auto& path : proofs) {
    rows.push_back(timed("proof", path.filename().string(), [&](ReproRow& row) {
      const Proof p = load_proof_file(path);
      const auto err = check_proof(p);
      row.pass = !err;
      row.detail = err ? err->describe() : std::to_string(p.lines.size()) + " lines OK";
    }));
  }

  for (System s : kAllSystems) {
    rows.push_back(timed("fuzz", "soundness " + std::string(to_string(s)), [&](ReproRow& row) {
      FuzzOptions fo;
      fo.seed = o.seed;
      fo.trials = o.trials;
      const FuzzReport r = check_axiom_instances(config(s, o), fo);
      row.pass = r.clean();
      row.detail = std::to_string(r.instances) + " instances";
      for (const auto& v : r.violations) {
        row.detail += "; " + v.schema + " fails: " + print(v.instance) + " at " + v.witness.world;
      }
    }));
  }
  return rows;
}

std::string format_table(const std::vector<ReproRow>& rows) {
  std::size_t width = 4;
  for (const auto& r : rows) width = std::max(width, r.group.size() + 1 + r.name.size());
  std::ostringstream os;
  int failed = 0;
  for (const auto& r : rows) {
    std::string label = r.group + " " + r.name;
    label.resize(width, ' ');
    char ms[32];
    std::snprintf(ms, sizeof ms, "%9.2f ms", r.millis);
    os << (r.pass ? "PASS  " : "FAIL  ") << label << "  " << ms << "  " << r.detail << '\n';
    failed += r.pass ? 0 : 1;
  }
  os << rows.size() - static_cast<std::size_t>(failed) << "/" << rows.size() << " rows pass\n";
  return os.str();
}

}  // namespace hyperign
