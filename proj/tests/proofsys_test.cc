#include <gtest/gtest.h>

#include <chrono>
#include <functional>
#include <unordered_map>

#include "hyperign/errors.h"
#include "hyperign/generate.h"
#include "hyperign/proofsys.h"

namespace hyperign {
namespace {

const std::filesystem::path kData = HYPERIGN_DATA_DIR;

Formula f_(const char* text, Language l = Language::IW) { return parse(text, l); }

TEST(Pattern, ParseAndPrint) {
  const Pattern p = parse_pattern("Iw BAR(PHI) -> Iw PHI", Language::IW);
  EXPECT_EQ(print(p), "(Iw BAR(PHI) -> Iw PHI)");
  EXPECT_EQ(p.metavars(), (std::set<std::string>{"PHI"}));
  EXPECT_THROW(parse_pattern("BAR(p)", Language::IW), SyntaxError);
  EXPECT_THROW(parse_pattern("Iu PHI", Language::IW), LanguageError);
}

TEST(Match, GraspAxiomBindsUnderBar) {
  const Schema* a5 = list_schemata(System::HIW).axiom("A5_Iw");
  const auto sub = match(*a5, f_("Iw ((p | ~p) & (q | ~q)) -> Iw (p -> q)"));
  ASSERT_TRUE(sub);
  EXPECT_EQ(sub->at("PHI"), f_("p -> q"));
  // Bar over the wrong variables.
  EXPECT_FALSE(match(*a5, f_("Iw (p | ~p) -> Iw (p -> q)")));
  // Bar must be canonical: order matters.
  EXPECT_FALSE(match(*a5, f_("Iw ((q | ~q) & (p | ~p)) -> Iw (p -> q)")));
}

TEST(Match, DisbeliefFactivity) {
  const auto sub = match(*list_schemata(System::DI).axiom("A1_DI"), f_("Id p -> p", Language::ClassicID));
  ASSERT_TRUE(sub);
  EXPECT_EQ(sub->at("PHI"), f_("p"));
}

TEST(Match, SideCondition) {
  const Schema* a7 = list_schemata(System::HIW).axiom("A7_Iw");
  EXPECT_TRUE(match(*a7, f_("~Iw ((p | ~p) & (q | ~q)) -> ~Iw (p | ~p)")));
  EXPECT_FALSE(match(*a7, f_("~Iw (p | ~p) -> ~Iw (q | ~q)")));
}

TEST(Match, BarOnlyMetavariableTakesTheBar) {
  const Schema* a4 = list_schemata(System::HIW).axiom("A4_Iw");
  const auto sub = match(*a4, f_("~Iw (p | ~p) -> [] ~Iw (p | ~p)"));
  ASSERT_TRUE(sub);
  EXPECT_EQ(instantiate(a4->pattern, *sub), f_("~Iw (p | ~p) -> [] ~Iw (p | ~p)"));
  EXPECT_FALSE(match(*a4, f_("~Iw (p | ~p) -> [] ~Iw (q | ~q)")));
  EXPECT_FALSE(match(*a4, f_("~Iw (p & p) -> [] ~Iw (p & p)")));
}

TEST(Property, MatchInvertsInstantiate) {
  Generator gen(2);
  for (System s : kAllSystems) {
    const Language lang = language_of(s);
    for (const auto& ax : list_schemata(s).axioms) {
      for (int i = 0; i < 50; ++i) {
        Substitution sub;
        for (const auto& m : ax.pattern.metavars()) sub.emplace(m, gen.formula(lang, 2, {"p", "q", "r"}));
        const Formula inst = instantiate(ax.pattern, sub);
        const auto back = match(ax.pattern, inst);
        ASSERT_TRUE(back) << ax.name << ": " << print(inst);
        ASSERT_EQ(instantiate(ax.pattern, *back), inst);
      }
    }
  }
}

TEST(Taut, Examples) {
  EXPECT_TRUE(taut(f_("((r -> p) & (r -> q)) <-> (r -> (p & q))")));
  EXPECT_FALSE(taut(f_("p -> q")));
  EXPECT_TRUE(taut(f_("Iw p | ~Iw p")));
  EXPECT_FALSE(taut(f_("Iw p | ~Iw q")));
  EXPECT_FALSE(taut(f_("Iw p -> p")));
  EXPECT_TRUE(taut(bar_of({"p", "q", "r"})));
}

TEST(Taut, TooManyLetters) {
  Formula big = Formula::Atom("a0");
  for (int i = 1; i <= 20; ++i) big = Formula::Or(big, Formula::Atom("a" + std::to_string(i)));
  EXPECT_THROW(taut(big), TooManyAtoms);
  // Twenty letters is still fine and needs more than one 64-row word.
  Formula ok = Formula::Atom("a0");
  for (int i = 1; i < 20; ++i) ok = Formula::Or(ok, Formula::Atom("a" + std::to_string(i)));
  EXPECT_FALSE(taut(ok));
  EXPECT_TRUE(taut(Formula::Or(ok, Formula::Not(Formula::Atom("a7")))));
}

// Reference: plain recursion over every assignment of the abstracted
// letters.
bool brute_taut(const Formula& f) {
  std::unordered_map<Formula, int> letters;
  std::function<void(const Formula&)> collect = [&](const Formula& g) {
    if (g.op() == Op::Atom || is_modal(g.op())) {
      letters.emplace(g, static_cast<int>(letters.size()));
      return;
    }
    collect(g.lhs());
    if (is_binary(g.op())) collect(g.rhs());
  };
  collect(f);
  std::function<bool(const Formula&, unsigned)> value = [&](const Formula& g, unsigned row) -> bool {
    switch (g.op()) {
      case Op::Not: return !value(g.arg(), row);
      case Op::And: return value(g.lhs(), row) && value(g.rhs(), row);
      case Op::Or: return value(g.lhs(), row) || value(g.rhs(), row);
      case Op::Imp: return !value(g.lhs(), row) || value(g.rhs(), row);
      case Op::Iff: return value(g.lhs(), row) == value(g.rhs(), row);
      default: return (row >> letters.at(g)) & 1U;
    }
  };
  for (unsigned row = 0; row < (1U << letters.size()); ++row) {
    if (!value(f, row)) return false;
  }
  return true;
}

TEST(Property, TautAgreesWithBruteForce) {
  Generator gen(6);
  int tautologies = 0;
  for (int i = 0; i < 3000; ++i) {
    const Formula a = gen.formula(Language::IW, 3, {"p", "q"});
    // Mix in shapes that are tautologies more often than random ones.
    const Formula f = i % 3 == 0 ? Formula::Imp(a, a) : i % 3 == 1 ? Formula::Or(a, gen.formula(Language::IW, 2, {"p", "q"})) : a;
    const bool expect = brute_taut(f);
    tautologies += expect;
    ASSERT_EQ(taut(f), expect) << print(f);
  }
  EXPECT_GT(tautologies, 1000);
}

TEST(Catalog, Hiw) {
  const Catalog& c = list_schemata(System::HIW);
  int own = 0;
  bool s5 = false;
  for (const auto& a : c.axioms) (a.group.empty() ? own : (s5 = true, own)) += a.group.empty();
  EXPECT_EQ(own, 8);
  EXPECT_TRUE(s5);
  std::vector<std::string> rules;
  for (const auto& r : c.rules) {
    if (r.group.empty()) rules.push_back(r.name);
  }
  EXPECT_EQ(rules, (std::vector<std::string>{"NEC_Iw", "RE_Iw"}));
  ASSERT_TRUE(c.axiom("A7_Iw")->side);
  EXPECT_EQ(c.axiom("A7_Iw")->side->sub, "PSI");
  EXPECT_NE(std::find(c.implicit.begin(), c.implicit.end(), "CPL"), c.implicit.end());
  EXPECT_TRUE(c.rule("NEC_Box"));
}

TEST(Catalog, HdiAndIu) {
  const Catalog& d = list_schemata(System::HDI);
  for (const char* n : {"G1", "G2", "G3", "G4", "G5", "A1_Id", "A2_Id", "A3_Id", "K_Box", "T_Box", "4_Box", "5_Box"}) {
    EXPECT_TRUE(d.axiom(n)) << n;
  }
  EXPECT_TRUE(d.rule("HIR"));
  const Catalog& u = list_schemata(System::IU);
  EXPECT_EQ(u.axioms.size(), 3u);
  EXPECT_TRUE(u.rule("R_IU"));
  EXPECT_NE(std::find(u.implicit.begin(), u.implicit.end(), "US"), u.implicit.end());
  EXPECT_EQ(std::find(list_schemata(System::IW).implicit.begin(), list_schemata(System::IW).implicit.end(), "US"),
            list_schemata(System::IW).implicit.end());
}

TEST(Mutants, FlipEachModalOccurrence) {
  const auto ms = mutants(*list_schemata(System::HIW).axiom("A5_Iw"));
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_EQ(print(ms[0].pattern), "(~Iw BAR(PHI) -> Iw PHI)");
  EXPECT_EQ(print(ms[1].pattern), "(Iw BAR(PHI) -> ~Iw PHI)");
  const auto neg = mutants(*list_schemata(System::IW).axiom("A3_IW"));
  ASSERT_EQ(neg.size(), 2u);
  EXPECT_EQ(print(neg[0].pattern), "(Iw PHI <-> ~Iw ~PHI)");
  EXPECT_EQ(print(neg[1].pattern), "(~Iw PHI <-> Iw ~PHI)");
  // [] ~[] PHI: the inner box is negated, the outer one is not.
  const auto five = mutants(*list_schemata(System::HIW).axiom("5_Box"));
  ASSERT_EQ(five.size(), 3u);
  EXPECT_EQ(print(five[1].pattern), "(~[] PHI -> ~[] ~[] PHI)");
  EXPECT_EQ(print(five[2].pattern), "(~[] PHI -> [] [] PHI)");
}

Proof script(const char* name) { return load_proof_file(kData / "proofs" / name); }

TEST(Proof, BundledScriptsCheck) {
  for (const char* f : {"gen_a6_iw_k2.json", "gen_a7_iu_k2.json", "gen_a2_id_k2.json", "gen_a2_id_k3.json"}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto err = check_proof(script(f));
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_FALSE(err) << f << ": " << err->describe();
    EXPECT_LT(ms, 100.0) << f;
  }
  EXPECT_EQ(script("gen_a6_iw_k2.json").lines.size(), 14u);
  EXPECT_EQ(script("gen_a7_iu_k2.json").lines.size(), 13u);
}

TEST(Proof, DeletingStepTenBreaksStepEleven) {
  Proof p = script("gen_a6_iw_k2.json");
  p.lines.erase(p.lines.begin() + 9);
  const auto err = check_proof(p);
  ASSERT_TRUE(err);
  EXPECT_EQ(err->kind, ProofError::Kind::BadRuleApplication);
  EXPECT_EQ(err->line, 11);
}

// A broken script must be reported inside the damaged span: at or after
// a deleted line (at the new last line if it was the goal), between the
// two ends of a swap.
TEST(Proof, EveryDeletionAndSwapIsCaught) {
  for (const char* f : {"gen_a6_iw_k2.json", "gen_a7_iu_k2.json"}) {
    const Proof base = script(f);
    const int n = static_cast<int>(base.lines.size());
    for (int i = 0; i < n; ++i) {
      Proof p = base;
      p.lines.erase(p.lines.begin() + i);
      const auto err = check_proof(p);
      ASSERT_TRUE(err) << f << " without line " << i + 1;
      if (i == n - 1) {
        EXPECT_EQ(err->kind, ProofError::Kind::GoalMismatch);
        EXPECT_EQ(err->line, i);
      } else {
        EXPECT_GT(err->line, i) << err->describe();
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        Proof p = base;
        std::swap(p.lines[i], p.lines[j]);
        const auto err = check_proof(p);
        ASSERT_TRUE(err) << f << " swapping " << i + 1 << " and " << j + 1;
        bool inside = false;
        for (int k = i; k <= j; ++k) inside = inside || p.lines[k].index == err->line;
        EXPECT_TRUE(inside) << err->describe();
      }
    }
  }
}

Proof tiny(std::vector<ProofLine> lines, System s = System::HIW) {
  Proof p;
  p.system = s;
  p.lines = std::move(lines);
  return p;
}

TEST(Proof, ErrorKinds) {
  using K = ProofError::Kind;
  const Formula pp = f_("p -> p");
  auto kind = [](const Proof& p) { return check_proof(p)->kind; };

  EXPECT_EQ(kind(tiny({{1, f_("p -> q"), TautStep{}, ""}})), K::NotTaut);
  EXPECT_EQ(kind(tiny({{1, f_("Iw p -> p"), AxiomStep{"A5_Iw", {}, false}, ""}})), K::BadAxiomInstance);
  EXPECT_EQ(kind(tiny({{1, f_("Iw p -> p"), AxiomStep{"nope", {}, false}, ""}})), K::BadAxiomInstance);
  EXPECT_EQ(kind(tiny({{1, pp, TautStep{}, ""}, {2, f_("q"), MPStep{1, 1}, ""}})), K::BadMP);
  EXPECT_EQ(kind(tiny({{1, pp, TautStep{}, ""}, {2, f_("q"), MPStep{1, 2}, ""}})), K::ForwardReference);
  EXPECT_EQ(kind(tiny({{1, pp, RuleStep{"NEC_Box", {3}}, ""}})), K::ForwardReference);
  EXPECT_EQ(kind(tiny({{2, pp, TautStep{}, ""}, {2, pp, TautStep{}, ""}})), K::BadIndex);
  EXPECT_EQ(kind(tiny({{1, pp, TautStep{}, ""}, {2, f_("[] p"), RuleStep{"NEC_Box", {1}}, ""}})),
            K::BadRuleApplication);
  EXPECT_EQ(kind(tiny({{1, pp, TautStep{}, ""}, {2, pp, RuleStep{"NEC_IW", {1}}, ""}})), K::BadRuleApplication);

  Proof goal = tiny({{1, pp, TautStep{}, ""}});
  goal.goal = f_("q -> q");
  EXPECT_EQ(kind(goal), K::GoalMismatch);

  // Given substitution must agree with the match.
  AxiomStep wrong{"A1_DI", {{"PHI", f_("q", Language::ClassicID)}}, false};
  EXPECT_EQ(kind(tiny({{1, f_("Id p -> p", Language::ClassicID), wrong, ""}}, System::DI)), K::BadAxiomInstance);
}

TEST(Proof, ModusPonensAndRules) {
  const Proof p = tiny({
      {1, f_("p -> p"), TautStep{}, ""},
      {2, f_("(p -> p) -> (q -> q)"), TautStep{}, ""},
      {3, f_("q -> q"), MPStep{1, 2}, ""},
      {5, f_("[] (q -> q)"), RuleStep{"NEC_Box", {3}}, ""},
      {6, f_("~Iw (q | ~q) -> ~Iw (q -> q)"), RuleStep{"NEC_Iw", {3}}, ""},
      {7, f_("~Iw (q -> q) -> ~Iw (q | ~q)"), AxiomStep{"A5_Iw", {{"PHI", f_("q -> q")}}, true}, ""},
  });
  EXPECT_FALSE(check_proof(p)) << check_proof(p)->describe();
}

TEST(Proof, JsonRoundTripAndBareArray) {
  const Proof p = script("gen_a6_iw_k2.json");
  const Proof back = load_proof(save_proof(p));
  ASSERT_EQ(back.lines.size(), p.lines.size());
  EXPECT_FALSE(check_proof(back));
  EXPECT_EQ(*back.goal, *p.goal);

  const Proof bare = load_proof(R"([{"i":1,"f":"Id p -> p","by":{"axiom":"A1_DI","sub":{"PHI":"p"}}}])", System::DI);
  EXPECT_EQ(bare.system, System::DI);
  EXPECT_FALSE(check_proof(bare));
  EXPECT_THROW(load_proof(R"({"system":"zz","lines":[]})"), FormatError);
  EXPECT_THROW(load_proof(R"([{"i":1,"f":"Iu p","by":"TAUT"}])"), FormatError);
  EXPECT_THROW(load_proof(R"([{"i":1,"f":"p","by":"MAGIC"}])"), FormatError);
}

}  // namespace
}  // namespace hyperign
