#include "hyperign/syntax.h"

#include <cassert>
#include <ostream>
#include <vector>

#include "hyperign/errors.h"
#include "parser.h"

namespace hyperign {

struct Formula::Node {
  Op op;
  std::string name;
  Formula lhs{nullptr};
  Formula rhs{nullptr};
  std::size_t size = 1;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const std::string kEmpty;

}  // namespace

std::string_view to_string(Language lang) {
  switch (lang) {
    case Language::IW: return "L_IW";
    case Language::IU: return "L_IU";
    case Language::IDG: return "L_IDG";
    case Language::ClassicIW: return "L_CLASSIC_IW";
    case Language::ClassicIU: return "L_CLASSIC_IU";
    case Language::ClassicID: return "L_CLASSIC_ID";
  }
  return "?";
}

std::string_view op_symbol(Op op) {
  switch (op) {
    case Op::Atom: return "atom";
    case Op::Not: return "~";
    case Op::And: return "&";
    case Op::Or: return "|";
    case Op::Imp: return "->";
    case Op::Iff: return "<->";
    case Op::Box: return "[]";
    case Op::IgnW: return "Iw";
    case Op::IgnU: return "Iu";
    case Op::IgnD: return "Id";
    case Op::Grasp: return "G";
  }
  return "?";
}

bool admits(Language lang, Op op) {
  switch (op) {
    case Op::Atom:
    case Op::Not:
    case Op::And:
    case Op::Or:
    case Op::Imp:
    case Op::Iff:
      return true;
    case Op::Box:
      return lang == Language::IW || lang == Language::IU || lang == Language::IDG;
    case Op::IgnW:
      return lang == Language::IW || lang == Language::ClassicIW;
    case Op::IgnU:
      return lang == Language::IU || lang == Language::ClassicIU;
    case Op::IgnD:
      return lang == Language::IDG || lang == Language::ClassicID;
    case Op::Grasp:
      return lang == Language::IDG;
  }
  return false;
}

bool is_unary(Op op) {
  return op == Op::Not || op == Op::Box || op == Op::IgnW || op == Op::IgnU ||
         op == Op::IgnD || op == Op::Grasp;
}

bool is_binary(Op op) {
  return op == Op::And || op == Op::Or || op == Op::Imp || op == Op::Iff;
}

bool is_modal(Op op) { return is_unary(op) && op != Op::Not; }

Formula Formula::Atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->op = Op::Atom;
  n->hash = mix(std::hash<std::string>{}(name), 1);
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::Unary(Op op, Formula f) {
  assert(is_unary(op));
  auto n = std::make_shared<Node>();
  n->op = op;
  n->size = f.size() + 1;
  n->hash = mix(f.hash(), static_cast<std::size_t>(op) + 17);
  n->lhs = std::move(f);
  return Formula(std::move(n));
}

Formula Formula::Binary(Op op, Formula f, Formula g) {
  assert(is_binary(op));
  auto n = std::make_shared<Node>();
  n->op = op;
  n->size = f.size() + g.size() + 1;
  n->hash = mix(mix(f.hash(), g.hash()), static_cast<std::size_t>(op) + 31);
  n->lhs = std::move(f);
  n->rhs = std::move(g);
  return Formula(std::move(n));
}

Formula Formula::Not(Formula f) { return Unary(Op::Not, std::move(f)); }
Formula Formula::Box(Formula f) { return Unary(Op::Box, std::move(f)); }
Formula Formula::IgnW(Formula f) { return Unary(Op::IgnW, std::move(f)); }
Formula Formula::IgnU(Formula f) { return Unary(Op::IgnU, std::move(f)); }
Formula Formula::IgnD(Formula f) { return Unary(Op::IgnD, std::move(f)); }
Formula Formula::Grasp(Formula f) { return Unary(Op::Grasp, std::move(f)); }
Formula Formula::And(Formula f, Formula g) { return Binary(Op::And, std::move(f), std::move(g)); }
Formula Formula::Or(Formula f, Formula g) { return Binary(Op::Or, std::move(f), std::move(g)); }
Formula Formula::Imp(Formula f, Formula g) { return Binary(Op::Imp, std::move(f), std::move(g)); }
Formula Formula::Iff(Formula f, Formula g) { return Binary(Op::Iff, std::move(f), std::move(g)); }

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->op == Op::Atom ? node_->name : kEmpty; }
const Formula& Formula::lhs() const { return node_->lhs; }
const Formula& Formula::rhs() const { return node_->rhs; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::hash() const { return node_->hash; }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.op != b.op || a.hash != b.hash || a.size != b.size) return false;
  if (a.op == Op::Atom) return a.name == b.name;
  if (!(a.lhs == b.lhs)) return false;
  return !is_binary(a.op) || a.rhs == b.rhs;
}

namespace {

void print_to(const Formula& f, std::string& out) {
  const Op op = f.op();
  if (op == Op::Atom) {
    out += f.name();
  } else if (op == Op::Not) {
    out += '~';
    print_to(f.arg(), out);
  } else if (is_unary(op)) {
    out += op_symbol(op);
    out += ' ';
    print_to(f.arg(), out);
  } else {
    out += '(';
    print_to(f.lhs(), out);
    out += ' ';
    out += op_symbol(op);
    out += ' ';
    print_to(f.rhs(), out);
    out += ')';
  }
}

void collect_vars(const Formula& f, std::set<std::string>& out) {
  if (f.op() == Op::Atom) {
    out.insert(f.name());
    return;
  }
  collect_vars(f.lhs(), out);
  if (is_binary(f.op())) collect_vars(f.rhs(), out);
}

struct FormulaBuilder {
  using Node = Formula;
  Node atom(std::string name) { return Formula::Atom(std::move(name)); }
  Node unary(Op op, Node f) { return Formula::Unary(op, std::move(f)); }
  Node binary(Op op, Node f, Node g) { return Formula::Binary(op, std::move(f), std::move(g)); }
  // Unreachable: metavariables are disabled for plain formulas.
  Node meta(const std::string&) { throw SyntaxError(0, "formula"); }
  Node bar(const std::string&) { throw SyntaxError(0, "formula"); }
};

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_to(f, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << print(f); }

Formula parse(std::string_view text, Language lang) {
  FormulaBuilder b;
  detail::Parser<FormulaBuilder> p(text, lang, b, /*allow_meta=*/false);
  return p.parse_all();
}

std::set<std::string> vars(const Formula& f) {
  std::set<std::string> out;
  collect_vars(f, out);
  return out;
}

Formula bar_of(const std::set<std::string>& atoms) {
  if (atoms.empty()) throw EmptyVarError();
  std::vector<Formula> parts;
  for (const auto& a : atoms) {
    Formula x = Formula::Atom(a);
    parts.push_back(Formula::Or(x, Formula::Not(x)));
  }
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::And(acc, parts[i]);
  return acc;
}

Formula bar(const Formula& f) { return bar_of(vars(f)); }

const Formula* first_foreign(const Formula& f, Language lang) {
  if (!admits(lang, f.op())) return &f;
  if (f.op() == Op::Atom) return nullptr;
  if (const Formula* l = first_foreign(f.lhs(), lang)) return l;
  return is_binary(f.op()) ? first_foreign(f.rhs(), lang) : nullptr;
}

bool in_language(const Formula& f, Language lang) { return first_foreign(f, lang) == nullptr; }

}  // namespace hyperign
