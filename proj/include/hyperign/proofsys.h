// Axiom schemata and rules of the six systems, schema matching, the
// propositional tautology oracle and a Hilbert-style proof checker.

#ifndef HYPERIGN_PROOFSYS_H_
#define HYPERIGN_PROOFSYS_H_

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperign/semantics.h"
#include "hyperign/syntax.h"
#include "json.hpp"

namespace hyperign {

// Formula with metavariables (PHI, PSI, CHI, ...) and BAR(M), which
// stands for bar() of whatever M is bound to.
class Pattern {
 public:
  enum class Kind : std::uint8_t { Atom, Meta, Bar, Unary, Binary };

  struct Node {
    Kind kind;
    Op op = Op::Atom;
    std::string name;  // atom or metavariable
    std::shared_ptr<const Node> a, b;
  };
  using NodePtr = std::shared_ptr<const Node>;

  Pattern() = default;
  explicit Pattern(NodePtr root) : root_(std::move(root)) {}

  const NodePtr& root() const { return root_; }
  std::set<std::string> metavars() const;

 private:
  NodePtr root_;
};

// Throws SyntaxError / LanguageError like parse().
Pattern parse_pattern(std::string_view text, Language lang);
std::string print(const Pattern& p);

using Substitution = std::map<std::string, Formula>;

// Var(sub) must be a subset of Var(sup) after substitution.
struct SideCondition {
  std::string sub;
  std::string sup;
};

struct Schema {
  std::string name;
  std::string group;  // "" or "S5"
  Pattern pattern;
  std::optional<SideCondition> side;
};

struct Rule {
  std::string name;
  std::string group;
  std::vector<Pattern> premises;
  Pattern conclusion;
};

struct Catalog {
  System system;
  std::vector<Schema> axioms;
  std::vector<Rule> rules;
  // Inference principles that are built into the checker rather than
  // listed as schemata: "CPL", "MP" and, where the system states it, "US".
  std::vector<std::string> implicit;

  const Schema* axiom(std::string_view name) const;
  const Rule* rule(std::string_view name) const;
};

const Catalog& list_schemata(System s);

// Structural match; BAR(M) is resolved after the whole pattern has been
// walked, so M may be bound elsewhere. Checks the side condition.
std::optional<Substitution> match(const Schema& schema, const Formula& f);
std::optional<Substitution> match(const Pattern& p, const Formula& f);

// Matches premise and conclusion patterns of a rule jointly.
std::optional<Substitution> match_rule(const Rule& rule, const std::vector<Formula>& premises,
                                       const Formula& conclusion);

// Throws std::out_of_range if a metavariable is unbound.
Formula instantiate(const Pattern& p, const Substitution& sub);
bool side_condition_holds(const Schema& schema, const Substitution& sub);

// One mutant per modal operator occurrence (preorder): a negated
// occurrence loses its negation, any other gets one. Names are
// "<name>~<k>".
std::vector<Schema> mutants(const Schema& schema);

// Classical tautology after abstracting maximal modal subformulas.
// Throws TooManyAtoms beyond 20 distinct propositional letters.
bool taut(const Formula& f);

// Proofs.

struct AxiomStep {
  std::string name;
  Substitution sub;
  // Line follows from the instance by propositional logic (e.g. the
  // contrapositive); requires a complete substitution.
  bool cpl = false;
};
struct TautStep {};
struct MPStep {
  int minor;  // line i holding phi
  int major;  // line j holding phi -> this line
};
struct RuleStep {
  std::string name;  // a rule of the system, or "CPL"
  std::vector<int> from;
};

using Justification = std::variant<AxiomStep, TautStep, MPStep, RuleStep>;

struct ProofLine {
  int index;
  Formula formula;
  Justification by;
  std::string note;
};

struct Proof {
  System system = System::HIW;
  std::optional<Formula> goal;
  std::vector<ProofLine> lines;
};

struct ProofError {
  enum class Kind {
    BadAxiomInstance,
    BadMP,
    BadRuleApplication,
    NotTaut,
    ForwardReference,
    BadIndex,
    GoalMismatch,
  };
  Kind kind;
  int line;  // label of the offending line
  std::string message;

  std::string describe() const;
};

std::string_view to_string(ProofError::Kind k);

// Empty optional means the proof checks.
std::optional<ProofError> check_proof(const Proof& proof, System system);
inline std::optional<ProofError> check_proof(const Proof& proof) {
  return check_proof(proof, proof.system);
}

// {"system": "hiw", "goal": "...", "lines": [...]} or a bare array of
// lines (then `fallback` gives the system). Throws FormatError.
Proof proof_from_json(const nlohmann::json& j, System fallback = System::HIW);
nlohmann::json proof_to_json(const Proof& p);
Proof load_proof(std::string_view text, System fallback = System::HIW);
Proof load_proof_file(const std::filesystem::path& path, System fallback = System::HIW);
std::string save_proof(const Proof& p);

}  // namespace hyperign

#endif  // HYPERIGN_PROOFSYS_H_
