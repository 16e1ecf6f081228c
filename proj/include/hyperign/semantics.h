// Truth at pointed models for the classic systems (IW, IU, DI) and the
// topic-sensitive ones (HIW, HIU, HDI).
//
// Three evaluation routes share one set of clauses:
//   eval        pointwise recursion, the reference reading of each clause;
//   truth_set   the set of worlds where a formula holds, on Model;
//   Compiled    flattened formula evaluated on PackedModel, used by search.

#ifndef HYPERIGN_SEMANTICS_H_
#define HYPERIGN_SEMANTICS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperign/model.h"
#include "hyperign/syntax.h"

namespace hyperign {

enum class System { IW, IU, DI, HIW, HIU, HDI };

inline constexpr System kAllSystems[] = {System::IW,  System::IU,  System::DI,
                                         System::HIW, System::HIU, System::HDI};

std::string_view to_string(System s);  // "IW", "HIW", ...
// Case-insensitive "iw", "hiw", ...
std::optional<System> system_from_string(std::string_view s);
Language language_of(System s);
bool is_hyper(System s);
// The ignorance operator of the system.
Op ignorance_op(System s);

struct EvalConfig {
  System system = System::HIW;
  // Deliberately wrong variants of two clauses, kept for mutation checks:
  // [] ranging over successors instead of all worlds, and I^d letting
  // the evaluation world count among its successors.
  bool box_over_successors = false;
  bool disbelief_counts_self = false;
};

// Throws WorldNotFound, LanguageMismatch, MissingTopics (and the topic
// errors when a full topic lattice lacks an assignment).
bool eval(const Model& m, std::string_view world, const Formula& f, const EvalConfig& cfg);

WorldSet truth_set(const Model& m, const Formula& f, const EvalConfig& cfg);

// Whether f holds at every world.
bool valid_in(const Model& m, const Formula& f, const EvalConfig& cfg);

// ~I bar(f) for HIW/HIU, G f for HDI: "the agent grasps the topic of f".
bool grasp_formula_truth(const Model& m, std::string_view world, const Formula& f,
                         const EvalConfig& cfg);

struct TraceEntry {
  Formula formula;
  bool value;
};

// Truth value of every subformula at the world, children before parents.
std::vector<TraceEntry> eval_trace(const Model& m, std::string_view world, const Formula& f,
                                   const EvalConfig& cfg);

// Formula flattened against a fixed atom list for repeated evaluation on
// packed models.
class CompiledFormula {
 public:
  // Throws LanguageMismatch, or BoundsError if f uses an atom outside
  // `atoms` (at most 64 atoms).
  CompiledFormula(const Formula& f, const std::vector<std::string>& atoms, const EvalConfig& cfg);

  WorldSet truth_set(const PackedModel& m) const;
  bool valid(const PackedModel& m) const { return truth_set(m) == all_worlds(m.worlds); }

 private:
  struct Step {
    Op op;
    std::uint32_t a = 0;  // child step or atom index
    std::uint32_t b = 0;
    std::uint64_t var_mask = 0;
  };

  std::vector<Step> steps_;
  EvalConfig cfg_;
};

}  // namespace hyperign

#endif  // HYPERIGN_SEMANTICS_H_
