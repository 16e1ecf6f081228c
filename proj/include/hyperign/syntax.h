// Formulas of the ignorance languages: AST, parser, printer, Var and the
// excluded-middle conjunction ("bar") built from a formula's variables.

#ifndef HYPERIGN_SYNTAX_H_
#define HYPERIGN_SYNTAX_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace hyperign {

enum class Op : std::uint8_t {
  Atom,
  Not,
  And,
  Or,
  Imp,
  Iff,
  Box,
  IgnW,
  IgnU,
  IgnD,
  Grasp,
};

// Object languages. The classic ones carry a single ignorance operator
// and neither [] nor G.
enum class Language : std::uint8_t {
  IW,
  IU,
  IDG,
  ClassicIW,
  ClassicIU,
  ClassicID,
};

std::string_view to_string(Language lang);  // "L_IW", ...
std::string_view op_symbol(Op op);          // "~", "&", "Iw", ...
bool admits(Language lang, Op op);
bool is_unary(Op op);
bool is_binary(Op op);
// [] and the ignorance / grasp operators.
bool is_modal(Op op);

// Immutable formula tree with structural equality. Copies share nodes.
class Formula {
 public:
  static Formula Atom(std::string name);
  static Formula Not(Formula f);
  static Formula And(Formula f, Formula g);
  static Formula Or(Formula f, Formula g);
  static Formula Imp(Formula f, Formula g);
  static Formula Iff(Formula f, Formula g);
  static Formula Box(Formula f);
  static Formula IgnW(Formula f);
  static Formula IgnU(Formula f);
  static Formula IgnD(Formula f);
  static Formula Grasp(Formula f);

  static Formula Unary(Op op, Formula f);
  static Formula Binary(Op op, Formula f, Formula g);

  Op op() const;
  // Atom name; empty for compound formulas.
  const std::string& name() const;
  // Operand of a unary node, left operand of a binary node.
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& arg() const { return lhs(); }

  std::size_t size() const;
  std::size_t hash() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Formula& f);

// Parses the text grammar; throws SyntaxError or LanguageError.
Formula parse(std::string_view text, Language lang);

// Canonical text: every binary node parenthesized, "~" tight, other
// prefix operators followed by a space.
std::string print(const Formula& f);

std::set<std::string> vars(const Formula& f);

// Conjunction of (x | ~x) over vars(f) in lexicographic order, left
// associated. Throws EmptyVarError if f has no variables.
Formula bar(const Formula& f);
Formula bar_of(const std::set<std::string>& atoms);

// Whether every operator occurring in f belongs to lang.
bool in_language(const Formula& f, Language lang);
// The first operator of f outside lang, in preorder.
const Formula* first_foreign(const Formula& f, Language lang);

}  // namespace hyperign

template <>
struct std::hash<hyperign::Formula> {
  std::size_t operator()(const hyperign::Formula& f) const { return f.hash(); }
};

#endif  // HYPERIGN_SYNTAX_H_
