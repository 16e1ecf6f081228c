#include "hyperign/proofsys.h"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "hyperign/errors.h"
#include "parser.h"

namespace hyperign {

namespace {

using Node = Pattern::Node;
using NodePtr = Pattern::NodePtr;
using Kind = Pattern::Kind;

struct PatternBuilder {
  using Node = NodePtr;
  Node atom(std::string name) {
    return std::make_shared<const Pattern::Node>(Pattern::Node{Kind::Atom, Op::Atom, std::move(name), {}, {}});
  }
  Node unary(Op op, Node f) {
    return std::make_shared<const Pattern::Node>(Pattern::Node{Kind::Unary, op, {}, std::move(f), {}});
  }
  Node binary(Op op, Node f, Node g) {
    return std::make_shared<const Pattern::Node>(
        Pattern::Node{Kind::Binary, op, {}, std::move(f), std::move(g)});
  }
  Node meta(const std::string& name) {
    return std::make_shared<const Pattern::Node>(Pattern::Node{Kind::Meta, Op::Atom, name, {}, {}});
  }
  Node bar(const std::string& name) {
    return std::make_shared<const Pattern::Node>(Pattern::Node{Kind::Bar, Op::Atom, name, {}, {}});
  }
};

void print_to(const Node& n, std::string& out) {
  switch (n.kind) {
    case Kind::Atom:
    case Kind::Meta:
      out += n.name;
      return;
    case Kind::Bar:
      out += "BAR(" + n.name + ")";
      return;
    case Kind::Unary:
      out += op_symbol(n.op);
      if (n.op != Op::Not) out += ' ';
      print_to(*n.a, out);
      return;
    case Kind::Binary:
      out += '(';
      print_to(*n.a, out);
      out += ' ';
      out += op_symbol(n.op);
      out += ' ';
      print_to(*n.b, out);
      out += ')';
      return;
  }
}

void collect_metas(const Node& n, std::set<std::string>& out) {
  switch (n.kind) {
    case Kind::Meta:
    case Kind::Bar: out.insert(n.name); break;
    case Kind::Binary: collect_metas(*n.b, out); [[fallthrough]];
    case Kind::Unary: collect_metas(*n.a, out); break;
    case Kind::Atom: break;
  }
}

// Walks patterns against formulas, binding metavariables and queueing
// BAR(M) obligations until every direct binding is known.
class Matcher {
 public:
  bool walk(const Node& n, const Formula& f) {
    switch (n.kind) {
      case Kind::Atom:
        return f.op() == Op::Atom && f.name() == n.name;
      case Kind::Meta: {
        auto [it, fresh] = sub_.emplace(n.name, f);
        return fresh || it->second == f;
      }
      case Kind::Bar:
        deferred_.emplace_back(n.name, f);
        return true;
      case Kind::Unary:
        return f.op() == n.op && walk(*n.a, f.arg());
      case Kind::Binary:
        return f.op() == n.op && walk(*n.a, f.lhs()) && walk(*n.b, f.rhs());
    }
    return false;
  }

  std::optional<Substitution> finish() {
    for (const auto& [meta, g] : deferred_) {
      auto it = sub_.find(meta);
      if (it == sub_.end()) {
        // Only the bar itself is known; a canonical bar is its own bar.
        if (bar(g) != g) return std::nullopt;
        sub_.emplace(meta, g);
      } else if (bar(it->second) != g) {
        return std::nullopt;
      }
    }
    return std::move(sub_);
  }

 private:
  Substitution sub_;
  std::vector<std::pair<std::string, Formula>> deferred_;
};

Formula inst(const Node& n, const Substitution& sub) {
  switch (n.kind) {
    case Kind::Atom: return Formula::Atom(n.name);
    case Kind::Meta: return sub.at(n.name);
    case Kind::Bar: return bar(sub.at(n.name));
    case Kind::Unary: return Formula::Unary(n.op, inst(*n.a, sub));
    case Kind::Binary: return Formula::Binary(n.op, inst(*n.a, sub), inst(*n.b, sub));
  }
  throw std::logic_error("bad pattern node");
}

bool modal_node(const Node& n) { return n.kind == Kind::Unary && is_modal(n.op); }

NodePtr negate(NodePtr n) {
  return std::make_shared<const Node>(Node{Kind::Unary, Op::Not, {}, std::move(n), {}});
}

// Rebuilds the tree with the k-th modal occurrence flipped; `k` counts
// down as occurrences are passed.
NodePtr flip(const NodePtr& n, int& k) {
  auto rebuild = [](const NodePtr& n, NodePtr a, NodePtr b) {
    if (a == n->a && b == n->b) return n;
    return std::make_shared<const Node>(Node{n->kind, n->op, n->name, std::move(a), std::move(b)});
  };
  if (n->kind == Kind::Unary && n->op == Op::Not && modal_node(*n->a)) {
    if (k == 0) {
      --k;
      return n->a;
    }
  }
  if (modal_node(*n)) {
    if (k == 0) {
      --k;
      return negate(n);
    }
    --k;
  }
  switch (n->kind) {
    case Kind::Unary: return rebuild(n, flip(n->a, k), nullptr);
    case Kind::Binary: {
      NodePtr a = flip(n->a, k);
      return rebuild(n, a, flip(n->b, k));
    }
    default: return n;
  }
}

int count_modal(const Node& n) {
  int c = modal_node(n) ? 1 : 0;
  if (n.a) c += count_modal(*n.a);
  if (n.b) c += count_modal(*n.b);
  return c;
}

Schema ax(const std::string& name, const char* text, Language lang, std::string group = "") {
  return Schema{name, std::move(group), parse_pattern(text, lang), std::nullopt};
}

Rule rl(const std::string& name, std::vector<const char*> prem, const char* concl, Language lang,
        std::string group = "") {
  Rule r{name, std::move(group), {}, parse_pattern(concl, lang)};
  for (const char* p : prem) r.premises.push_back(parse_pattern(p, lang));
  return r;
}

void add_s5(Catalog& c, Language lang) {
  c.axioms.push_back(ax("K_Box", "[] (PHI -> PSI) -> ([] PHI -> [] PSI)", lang, "S5"));
  c.axioms.push_back(ax("T_Box", "[] PHI -> PHI", lang, "S5"));
  c.axioms.push_back(ax("4_Box", "[] PHI -> [] [] PHI", lang, "S5"));
  c.axioms.push_back(ax("5_Box", "~[] PHI -> [] ~[] PHI", lang, "S5"));
  c.rules.push_back(rl("NEC_Box", {"PHI"}, "[] PHI", lang, "S5"));
}

Catalog build(System s) {
  Catalog c{s, {}, {}, {"CPL", "MP"}};
  const Language L = language_of(s);
  switch (s) {
    case System::IW:
      c.axioms.push_back(ax("A1_IW", "(~Iw (PHI -> PSI) & ~Iw (~PHI -> PSI)) -> ~Iw PSI", L));
      c.axioms.push_back(ax("A2_IW", "~Iw PHI -> (~Iw (PHI -> PSI) | ~Iw (~PHI -> CHI))", L));
      c.axioms.push_back(ax("A3_IW", "~Iw PHI <-> ~Iw ~PHI", L));
      c.rules.push_back(rl("NEC_IW", {"PHI"}, "~Iw PHI", L));
      c.rules.push_back(rl("RE_IW", {"PHI <-> PSI"}, "~Iw PHI <-> ~Iw PSI", L));
      break;
    case System::IU:
      // The constant "true" is written as the excluded middle on PHI.
      c.axioms.push_back(ax("A1_IU", "~Iu (PHI | ~PHI)", L));
      c.axioms.push_back(ax("A2_IU", "~PHI -> ~Iu PHI", L));
      c.axioms.push_back(ax("A3_IU", "(~Iu PHI & ~Iu PSI) -> ~Iu (PHI & PSI)", L));
      c.rules.push_back(rl("R_IU", {"PHI -> PSI"}, "(~Iu PHI & PHI) -> ~Iu PSI", L));
      c.implicit.push_back("US");
      break;
    case System::DI:
      c.axioms.push_back(ax("A1_DI", "Id PHI -> PHI", L));
      c.axioms.push_back(ax("A2_DI", "(Id PHI & Id PSI) -> Id (PHI | PSI)", L));
      c.rules.push_back(rl("IR_DI", {"PHI -> PSI"}, "PHI -> (Id PSI -> Id PHI)", L));
      c.implicit.push_back("US");
      break;
    case System::HIW: {
      c.axioms.push_back(ax("Iw<->", "Iw PHI <-> Iw ~PHI", L));
      c.axioms.push_back(ax("A1_Iw",
                            "((~Iw PHI & ~Iw BAR(PSI)) & ~Iw BAR(CHI)) -> "
                            "(~Iw (PHI -> PSI) | ~Iw (~PHI -> CHI))",
                            L));
      c.axioms.push_back(ax("A2_Iw", "~Iw BAR(PHI) -> ~Iw (PHI | ~PHI)", L));
      c.axioms.push_back(ax("A3_Iw", "(~Iw PHI & ~Iw PSI) -> ~Iw (PHI & PSI)", L));
      c.axioms.push_back(ax("A4_Iw", "~Iw BAR(PHI) -> [] ~Iw BAR(PHI)", L));
      c.axioms.push_back(ax("A5_Iw", "Iw BAR(PHI) -> Iw PHI", L));
      c.axioms.push_back(ax("A6_Iw", "((~Iw (PHI -> ~PSI) & ~Iw PHI) & ~Iw (PSI -> PHI)) -> ~Iw PSI", L));
      Schema a7 = ax("A7_Iw", "~Iw BAR(PHI) -> ~Iw BAR(PSI)", L);
      a7.side = SideCondition{"PSI", "PHI"};
      c.axioms.push_back(std::move(a7));
      c.rules.push_back(rl("NEC_Iw", {"PHI"}, "~Iw BAR(PHI) -> ~Iw PHI", L));
      c.rules.push_back(rl("RE_Iw", {"PHI <-> PSI"},
                           "(~Iw BAR(PHI) & ~Iw BAR(PSI)) -> (~Iw PHI <-> ~Iw PSI)", L));
      add_s5(c, L);
      break;
    }
    case System::HIU: {
      c.axioms.push_back(ax("A1_Iu", "(Iu PHI & ~Iu BAR(PHI)) -> PHI", L));
      c.axioms.push_back(ax("A2_Iu", "~Iu BAR(PHI) -> ~Iu (PHI | ~PHI)", L));
      c.axioms.push_back(ax("A3_Iu", "(~Iu PHI & ~Iu PSI) -> ~Iu (PHI & PSI)", L));
      c.axioms.push_back(ax("A4_Iu", "~Iu BAR(PHI) -> [] ~Iu BAR(PHI)", L));
      c.axioms.push_back(ax("A5_Iu", "Iu BAR(PHI) -> Iu PHI", L));
      c.axioms.push_back(
          ax("A6_Iu", "(((PHI & ~Iu BAR(PHI)) & ~Iu BAR(PSI)) & Iu (PHI | PSI)) -> Iu PHI", L));
      c.axioms.push_back(ax("A7_Iu", "(~Iu (PHI | PSI) & ~Iu (PHI -> PSI)) -> ~Iu PSI", L));
      Schema a8 = ax("A8_Iu", "~Iu BAR(PHI) -> ~Iu BAR(PSI)", L);
      a8.side = SideCondition{"PSI", "PHI"};
      c.axioms.push_back(std::move(a8));
      c.rules.push_back(rl("NEC_Iu", {"PHI"}, "~Iu BAR(PHI) -> ~Iu PHI", L));
      c.rules.push_back(rl("RE_Iu", {"PHI <-> PSI"},
                           "(~Iu BAR(PHI) & ~Iu BAR(PSI)) -> (~Iu PHI <-> ~Iu PSI)", L));
      add_s5(c, L);
      break;
    }
    case System::HDI:
      c.axioms.push_back(ax("G1", "G PHI <-> G ~PHI", L));
      c.axioms.push_back(ax("G2", "G PHI <-> G Id PHI", L));
      c.axioms.push_back(ax("G3", "G PHI <-> G [] PHI", L));
      c.axioms.push_back(ax("G4", "(G PHI & G PSI) <-> G (PHI & PSI)", L));
      c.axioms.push_back(ax("G5", "G PHI -> [] G PHI", L));
      c.axioms.push_back(ax("A1_Id", "Id PHI -> PHI", L));
      c.axioms.push_back(ax("A2_Id", "(Id PHI & Id PSI) -> Id (PHI | PSI)", L));
      c.axioms.push_back(ax("A3_Id", "Id PHI -> G PHI", L));
      c.rules.push_back(rl("HIR", {"PHI -> PSI"}, "PHI -> (Id PSI -> (G PHI -> Id PHI))", L));
      add_s5(c, L);
      break;
  }
  return c;
}

}  // namespace

std::set<std::string> Pattern::metavars() const {
  std::set<std::string> out;
  if (root_) collect_metas(*root_, out);
  return out;
}

Pattern parse_pattern(std::string_view text, Language lang) {
  PatternBuilder b;
  detail::Parser<PatternBuilder> p(text, lang, b, /*allow_meta=*/true);
  return Pattern(p.parse_all());
}

std::string print(const Pattern& p) {
  std::string out;
  print_to(*p.root(), out);
  return out;
}

const Schema* Catalog::axiom(std::string_view name) const {
  for (const auto& a : axioms) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

const Rule* Catalog::rule(std::string_view name) const {
  for (const auto& r : rules) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

const Catalog& list_schemata(System s) {
  static const std::map<System, Catalog> kCatalogs = [] {
    std::map<System, Catalog> m;
    for (System sys : kAllSystems) m.emplace(sys, build(sys));
    return m;
  }();
  return kCatalogs.at(s);
}

std::optional<Substitution> match(const Pattern& p, const Formula& f) {
  Matcher m;
  if (!m.walk(*p.root(), f)) return std::nullopt;
  return m.finish();
}

bool side_condition_holds(const Schema& schema, const Substitution& sub) {
  if (!schema.side) return true;
  const auto small = vars(sub.at(schema.side->sub));
  const auto big = vars(sub.at(schema.side->sup));
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::optional<Substitution> match(const Schema& schema, const Formula& f) {
  auto sub = match(schema.pattern, f);
  if (sub && !side_condition_holds(schema, *sub)) return std::nullopt;
  return sub;
}

std::optional<Substitution> match_rule(const Rule& rule, const std::vector<Formula>& premises,
                                       const Formula& conclusion) {
  if (premises.size() != rule.premises.size()) return std::nullopt;
  Matcher m;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (!m.walk(*rule.premises[i].root(), premises[i])) return std::nullopt;
  }
  if (!m.walk(*rule.conclusion.root(), conclusion)) return std::nullopt;
  return m.finish();
}

Formula instantiate(const Pattern& p, const Substitution& sub) { return inst(*p.root(), sub); }

std::vector<Schema> mutants(const Schema& schema) {
  std::vector<Schema> out;
  const int n = count_modal(*schema.pattern.root());
  for (int i = 0; i < n; ++i) {
    int k = i;
    Schema m = schema;
    m.name = schema.name + "~" + std::to_string(i + 1);
    m.pattern = Pattern(flip(schema.pattern.root(), k));
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace hyperign
