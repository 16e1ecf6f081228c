#include <gtest/gtest.h>

#include <thread>

#include "hyperign/decision.h"
#include "hyperign/errors.h"
#include "hyperign/generate.h"

namespace hyperign {
namespace {

const std::filesystem::path kData = HYPERIGN_DATA_DIR;

EvalConfig cfg(System s) {
  EvalConfig c;
  c.system = s;
  return c;
}

Formula f_(const char* text, System s) { return parse(text, language_of(s)); }

TEST(BoundedValid, DualityAxiomHolds) {
  const auto r = bounded_valid(f_("Iw p <-> Iw ~p", System::HIW), cfg(System::HIW));
  EXPECT_EQ(r.verdict, Verdict::ValidUpToBound);
  EXPECT_FALSE(r.witness);
  EXPECT_EQ(r.models_checked, enumerate_models({"p"}, 3, TopicMode::Grasp).size());
}

TEST(BoundedValid, DisbeliefOfExcludedMiddle) {
  SearchBounds b;
  b.max_worlds = 1;
  const auto r = bounded_valid(f_("~Id (p | ~p)", System::DI), cfg(System::DI), b);
  ASSERT_EQ(r.verdict, Verdict::Countermodel);
  EXPECT_EQ(r.witness->model, Model(KripkeModel({"w1"}, {}, {{"p", {"w1"}}})));
  EXPECT_EQ(r.witness->world, "w1");
  EXPECT_EQ(r.models_checked, 1u);
}

TEST(BoundedValid, TrivialValidityEverywhere) {
  for (System s : kAllSystems) {
    EXPECT_EQ(bounded_valid(f_("p -> p", s), cfg(s)).verdict, Verdict::ValidUpToBound);
  }
}

TEST(BoundedValid, Errors) {
  SearchBounds b;
  b.max_worlds = 0;
  EXPECT_THROW(bounded_valid(f_("p", System::IW), cfg(System::IW), b), BoundsError);
  SearchBounds few;
  few.atoms = std::set<std::string>{"q"};
  EXPECT_THROW(bounded_valid(f_("p", System::IW), cfg(System::IW), few), BoundsError);
  EXPECT_THROW(bounded_valid(f_("Iu p", System::IU), cfg(System::IW)), LanguageMismatch);
}

TEST(BoundedValid, ExtraAtomsWidenTheSpace) {
  SearchBounds b;
  b.max_worlds = 1;
  b.atoms = std::set<std::string>{"p", "q"};
  EXPECT_EQ(bounded_valid(f_("p | ~p", System::IW), cfg(System::IW), b).models_checked, 8u);
}

TEST(Property, WitnessesRecheckAndBoundsAreMonotone) {
  Generator gen(4);
  const std::vector<std::string> atoms = {"p", "q"};
  for (System s : kAllSystems) {
    for (int i = 0; i < 40; ++i) {
      const Formula f = gen.formula(language_of(s), 2, atoms);
      SearchBounds small, big;
      small.max_worlds = 1;
      big.max_worlds = 2;
      const auto a = bounded_valid(f, cfg(s), small);
      const auto b = bounded_valid(f, cfg(s), big);
      if (a.verdict == Verdict::Countermodel) {
        ASSERT_EQ(b.verdict, Verdict::Countermodel) << print(f);
        // Smaller models come first, so the witness does not move.
        ASSERT_EQ(a.models_checked, b.models_checked);
        ASSERT_FALSE(eval(a.witness->model, a.witness->world, f, cfg(s)));
      }
      if (b.witness) {
        ASSERT_FALSE(eval(b.witness->model, b.witness->world, f, cfg(s)));
      }
    }
  }
}

TEST(Property, ThreadsDoNotChangeTheAnswer) {
  Generator gen(12);
  const std::vector<std::string> atoms = {"p", "q"};
  for (System s : {System::HIW, System::DI}) {
    for (int i = 0; i < 20; ++i) {
      const Formula f = gen.formula(language_of(s), 3, atoms);
      SearchBounds one, many;
      many.threads = 4;
      const auto a = bounded_valid(f, cfg(s), one);
      const auto b = bounded_valid(f, cfg(s), many);
      ASSERT_EQ(a.verdict, b.verdict);
      ASSERT_EQ(a.models_checked, b.models_checked);
      if (a.witness) {
        ASSERT_EQ(a.witness->model, b.witness->model);
        ASSERT_EQ(a.witness->world, b.witness->world);
      }
    }
  }
}

TEST(Omniscience, Table) {
  for (Principle p : kAllPrinciples) {
    for (System s : kAllSystems) {
      const auto r = refute_omniscience(p, cfg(s));
      EXPECT_TRUE(r.matches()) << to_string(p) << " " << to_string(s);
      if (r.report.witness) {
        EXPECT_LE(frame_of(r.report.witness->model).size(), p == Principle::LO_IMP ? 2u : 1u);
      }
    }
  }
  EXPECT_EQ(expected_verdict(Principle::LO_NEC, System::IW), Verdict::ValidUpToBound);
  EXPECT_EQ(expected_verdict(Principle::LO_NEC, System::DI), Verdict::Countermodel);
  EXPECT_EQ(expected_verdict(Principle::LO_RE, System::DI), Verdict::ValidUpToBound);
  EXPECT_EQ(expected_verdict(Principle::LO_RE, System::HDI), Verdict::Countermodel);
}

TEST(Omniscience, HandBuiltWitnesses) {
  // Classic IW closure under implication fails on this two-world model.
  const Model m1 = KripkeModel({"w", "w'"}, {{"w", "w'"}, {"w", "w"}}, {{"p", {}}, {"q", {"w"}}});
  EXPECT_FALSE(eval(m1, "w", omniscience_instance(Principle::LO_IMP, System::IW).second, cfg(System::IW)));
  // Excluded middle with an ungrasped p.
  const Model m2 = TopicSensitiveModel{KripkeModel({"w"}, {}, {{"p", {"w"}}}), GraspSet{}};
  for (System s : {System::HIW, System::HIU}) {
    EXPECT_FALSE(eval(m2, "w", omniscience_instance(Principle::LO_NEC, s).second, cfg(s)));
  }
  // Disbelief in p | ~p holds at a lone grasped point, in q | ~q it does not.
  const Model m3 = TopicSensitiveModel{KripkeModel({"w"}, {}, {{"p", {"w"}}}), GraspSet{{"p"}}};
  EXPECT_TRUE(eval(m3, "w", f_("Id (p | ~p)", System::HDI), cfg(System::HDI)));
  EXPECT_FALSE(eval(m3, "w", f_("Id (q | ~q)", System::HDI), cfg(System::HDI)));
  EXPECT_FALSE(eval(m3, "w", omniscience_instance(Principle::LO_RE, System::HDI).second, cfg(System::HDI)));
}

TEST(Omniscience, PremisesAreTautologies) {
  for (Principle p : kAllPrinciples) {
    for (System s : kAllSystems) EXPECT_TRUE(taut(omniscience_instance(p, s).first));
  }
}

TEST(RulePreservation, Examples) {
  const auto nec = check_rule_preservation("NEC_Iw", cfg(System::HIW), {{f_("p | ~p", System::HIW)}});
  ASSERT_EQ(nec.size(), 1u);
  EXPECT_EQ(print(nec[0].conclusion), "(~Iw (p | ~p) -> ~Iw (p | ~p))");
  EXPECT_EQ(nec[0].report.verdict, Verdict::ValidUpToBound);

  const auto hir = check_rule_preservation("HIR", cfg(System::HDI), {{f_("(p & q) -> p", System::HDI)}});
  EXPECT_EQ(hir[0].report.verdict, Verdict::ValidUpToBound);

  const auto re = check_rule_preservation("RE_Iu", cfg(System::HIU), {{f_("p <-> ~~p", System::HIU)}});
  EXPECT_EQ(re[0].report.verdict, Verdict::ValidUpToBound);
}

TEST(RulePreservation, EveryRuleOnCertifiedPremises) {
  const std::map<System, std::vector<std::pair<std::string, std::vector<const char*>>>> cases = {
      {System::IW, {{"NEC_IW", {"p | ~p"}}, {"RE_IW", {"p <-> ~~p"}}}},
      {System::IU, {{"R_IU", {"(p & q) -> p"}}}},
      {System::DI, {{"IR_DI", {"(p & q) -> p"}}}},
      {System::HIW, {{"RE_Iw", {"(p & q) <-> (q & p)"}}, {"NEC_Box", {"p -> p"}}}},
      {System::HIU, {{"NEC_Iu", {"q -> (p -> q)"}}}},
  };
  for (const auto& [s, rules] : cases) {
    for (const auto& [name, prem] : rules) {
      std::vector<Formula> fs;
      for (const char* t : prem) fs.push_back(f_(t, s));
      const auto out = check_rule_preservation(name, cfg(s), {fs});
      EXPECT_EQ(out[0].report.verdict, Verdict::ValidUpToBound) << name;
    }
  }
}

TEST(RulePreservation, UncertifiedPremise) {
  EXPECT_THROW(check_rule_preservation("NEC_Iw", cfg(System::HIW), {{f_("p", System::HIW)}}),
               PremiseNotCertified);
  EXPECT_THROW(check_rule_preservation("RE_Iw", cfg(System::HIW), {{f_("p -> p", System::HIW)}}),
               PremiseNotCertified);
}

TEST(Fuzz, SoundSystemsHaveNoViolations) {
  FuzzOptions o;
  for (System s : kAllSystems) {
    const auto r = check_axiom_instances(cfg(s), o);
    EXPECT_TRUE(r.clean()) << to_string(s) << ": " << (r.clean() ? "" : r.violations[0].schema);
    EXPECT_EQ(r.instances, 1000);
  }
}

TEST(Fuzz, DisbeliefFactivityAlone) {
  const Schema* a1 = list_schemata(System::DI).axiom("A1_DI");
  EXPECT_TRUE(check_schemata({*a1}, cfg(System::DI), {}).clean());
}

TEST(Fuzz, ReversedGraspAxiomIsCaught) {
  Schema bad = *list_schemata(System::HIW).axiom("A5_Iw");
  bad.name = "A5_Iw reversed";
  bad.pattern = parse_pattern("~Iw BAR(PHI) -> Iw PHI", Language::IW);
  const auto r = check_schemata({bad}, cfg(System::HIW), {});
  ASSERT_FALSE(r.clean());
  const FuzzViolation& v = r.violations[0];
  EXPECT_FALSE(eval(v.witness.model, v.witness.world, v.instance, cfg(System::HIW)));
}

TEST(Fuzz, SideConditionRespected) {
  Generator gen(1);
  const Schema* a7 = list_schemata(System::HIW).axiom("A7_Iw");
  for (int i = 0; i < 200; ++i) {
    const Formula inst = random_instance(*a7, System::HIW, gen, {});
    ASSERT_TRUE(match(*a7, inst)) << print(inst);
  }
}

// Every line accepted by the checker is valid up to the default bound.
TEST(Bridge, CheckedTheoremsAreBoundedValid) {
  SearchBounds b;
  b.threads = static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency())));
  for (const char* file : {"gen_a6_iw_k2.json", "gen_a7_iu_k2.json", "gen_a2_id_k2.json", "gen_a2_id_k3.json"}) {
    const Proof p = load_proof_file(kData / "proofs" / file);
    ASSERT_FALSE(check_proof(p)) << file;
    for (const auto& ln : p.lines) {
      EXPECT_EQ(bounded_valid(ln.formula, cfg(p.system), b).verdict, Verdict::ValidUpToBound)
          << file << " line " << ln.index;
    }
  }
}

}  // namespace
}  // namespace hyperign
