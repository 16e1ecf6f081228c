#include <bit>

#include "hyperign/decision.h"
#include "hyperign/errors.h"

namespace hyperign {

namespace {

const std::vector<std::string> kAtoms = {"p", "q", "r"};

std::optional<FuzzViolation> check_once(const Schema& s, const Formula& inst, const EvalConfig& cfg,
                                        Generator& gen, const FuzzOptions& o) {
  const std::set<std::string> atoms = vars(inst);
  for (int m = 0; m < o.models_per_instance; ++m) {
    Model model = gen.model(cfg.system, o.max_worlds, atoms, o.lattice_p, o.max_elements);
    const WorldSet t = truth_set(model, inst, cfg);
    const WorldSet bad = frame_of(model).all() & ~t;
    if (bad == 0) continue;
    FuzzViolation v{s.name, inst, Witness{model, frame_of(model).world(std::countr_zero(bad))}, false};
    SearchBounds b;
    b.max_worlds = 2;
    CountermodelReport small = bounded_valid(inst, cfg, b);
    if (small.witness) {
      v.witness = std::move(*small.witness);
      v.minimized = true;
    }
    if (eval(v.witness.model, v.witness.world, inst, cfg)) {
      throw std::logic_error("fuzz witness does not re-check for " + print(inst));
    }
    return v;
  }
  return std::nullopt;
}

}  // namespace

Formula random_instance(const Schema& s, System system, Generator& gen, const FuzzOptions& o) {
  const Language lang = language_of(system);
  const int n = gen.uniform(1, std::min<int>(o.max_atoms, static_cast<int>(kAtoms.size())));
  const std::vector<std::string> atoms(kAtoms.begin(), kAtoms.begin() + n);
  Substitution sub;
  if (s.side) {
    Formula sup = gen.formula(lang, o.max_depth, atoms);
    const auto sv = vars(sup);
    sub.emplace(s.side->sup, sup);
    sub.emplace(s.side->sub, gen.formula(lang, o.max_depth, {sv.begin(), sv.end()}));
  }
  for (const auto& m : s.pattern.metavars()) {
    if (!sub.count(m)) sub.emplace(m, gen.formula(lang, o.max_depth, atoms));
  }
  return instantiate(s.pattern, sub);
}

FuzzReport check_schemata(const std::vector<Schema>& schemata, const EvalConfig& cfg,
                          const FuzzOptions& o) {
  FuzzReport r{cfg.system, 0, {}, {}};
  if (schemata.empty()) return r;
  for (const auto& s : schemata) r.per_schema.push_back({s.name, 0, 0});
  Generator gen(o.seed);
  for (int t = 0; t < o.trials; ++t) {
    const std::size_t k = static_cast<std::size_t>(t) % schemata.size();
    const Schema& s = schemata[k];
    const Formula inst = random_instance(s, cfg.system, gen, o);
    ++r.instances;
    ++r.per_schema[k].instances;
    if (auto v = check_once(s, inst, cfg, gen, o)) {
      if (r.per_schema[k].violations++ == 0) r.violations.push_back(std::move(*v));
    }
  }
  return r;
}

FuzzReport check_axiom_instances(const EvalConfig& cfg, const FuzzOptions& o) {
  return check_schemata(list_schemata(cfg.system).axioms, cfg, o);
}

MutationReport check_mutants(const EvalConfig& cfg, const FuzzOptions& o) {
  MutationReport r{cfg.system, 0, 0, {}};
  for (const auto& ax : list_schemata(cfg.system).axioms) {
    for (const auto& m : mutants(ax)) {
      ++r.tried;
      FuzzOptions mo = o;
      mo.seed = o.seed + static_cast<std::uint64_t>(r.tried);
      if (check_schemata({m}, cfg, mo).clean()) {
        r.survivors.push_back(m.name);
      } else {
        ++r.killed;
      }
    }
  }
  return r;
}

}  // namespace hyperign
