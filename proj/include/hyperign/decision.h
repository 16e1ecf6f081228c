// Bounded validity, countermodel search, rule-preservation checks, the
// logical-omniscience table and randomized axiom soundness checks.

#ifndef HYPERIGN_DECISION_H_
#define HYPERIGN_DECISION_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hyperign/generate.h"
#include "hyperign/model.h"
#include "hyperign/proofsys.h"
#include "hyperign/semantics.h"
#include "hyperign/syntax.h"

namespace hyperign {

struct SearchBounds {
  int max_worlds = 3;
  // Defaults to vars of the query.
  std::optional<std::set<std::string>> atoms;
  // Defaults to Grasp for HIW/HIU/HDI and None for the classic systems.
  std::optional<TopicMode> topic_mode;
  int threads = 1;
};

enum class Verdict { ValidUpToBound, Countermodel };
std::string_view to_string(Verdict v);  // "VALID_UP_TO_BOUND", "COUNTERMODEL"

struct Witness {
  Model model;
  WorldId world;
};

struct CountermodelReport {
  Verdict verdict = Verdict::ValidUpToBound;
  std::optional<Witness> witness;
  std::uint64_t models_checked = 0;
};

// First countermodel in enumeration order, re-checked with eval() before
// it is returned. Throws BoundsError, LanguageMismatch.
CountermodelReport bounded_valid(const Formula& f, const EvalConfig& cfg,
                                 const SearchBounds& b = {});

struct RuleCheck {
  std::vector<Formula> premises;
  Formula conclusion;
  CountermodelReport report;
};

// Premises must be tautologies or bounded-valid at the same bounds
// (otherwise PremiseNotCertified); each conclusion is then searched for
// a countermodel.
std::vector<RuleCheck> check_rule_preservation(const std::string& rule, const EvalConfig& cfg,
                                               const std::vector<std::vector<Formula>>& instances,
                                               const SearchBounds& b = {});

enum class Principle { LO_IMP, LO_NEC, LO_RE };
inline constexpr Principle kAllPrinciples[] = {Principle::LO_IMP, Principle::LO_NEC,
                                               Principle::LO_RE};
std::string_view to_string(Principle p);

struct OmniscienceReport {
  Principle principle;
  System system;
  Formula premise;
  Formula query;
  Verdict expected;
  CountermodelReport report;

  bool matches() const { return report.verdict == expected; }
};

// The premise (a tautology) and the ignorance formula that the principle
// would make valid, written in the system's language.
std::pair<Formula, Formula> omniscience_instance(Principle p, System s);
Verdict expected_verdict(Principle p, System s);
OmniscienceReport refute_omniscience(Principle p, const EvalConfig& cfg,
                                     const SearchBounds& b = {});

// Soundness fuzz.

struct FuzzOptions {
  int trials = 1000;            // instantiations per run
  int models_per_instance = 4;  // random models tried on each instance
  int max_worlds = 4;
  int max_atoms = 3;
  int max_depth = 2;
  std::uint64_t seed = 0;
  double lattice_p = 0.5;
  int max_elements = 5;
};

struct FuzzViolation {
  std::string schema;
  Formula instance;
  Witness witness;
  bool minimized;  // witness comes from a bounded search at 2 worlds
};

struct SchemaStats {
  std::string name;
  int instances = 0;
  int violations = 0;
};

struct FuzzReport {
  System system;
  int instances = 0;
  std::vector<SchemaStats> per_schema;
  std::vector<FuzzViolation> violations;  // first violation of each schema

  bool clean() const { return violations.empty(); }
};

// Random instance of a schema: metavariables get formulas of the
// system's language; a side condition is met by drawing the smaller
// formula from the atoms of the larger.
Formula random_instance(const Schema& s, System system, Generator& gen, const FuzzOptions& o);

// `trials` instances spread round-robin over `schemata`.
FuzzReport check_schemata(const std::vector<Schema>& schemata, const EvalConfig& cfg,
                          const FuzzOptions& o);
FuzzReport check_axiom_instances(const EvalConfig& cfg, const FuzzOptions& o = {});

struct MutationReport {
  System system;
  int tried = 0;
  int killed = 0;
  std::vector<std::string> survivors;
};

// Every single-flip mutant of every axiom gets its own budget of
// o.trials instances.
MutationReport check_mutants(const EvalConfig& cfg, const FuzzOptions& o = {});

}  // namespace hyperign

#endif  // HYPERIGN_DECISION_H_
