#include <gtest/gtest.h>

#include "hyperign/errors.h"
#include "hyperign/generate.h"
#include "hyperign/syntax.h"

namespace hyperign {
namespace {

const Formula p = Formula::Atom("p");
const Formula q = Formula::Atom("q");

TEST(Parse, IgnoranceOverConjunction) {
  EXPECT_EQ(parse("Iw (p & (q | ~q))", Language::IW),
            Formula::IgnW(Formula::And(p, Formula::Or(q, Formula::Not(q)))));
}

TEST(Parse, GraspImpliesDisbelief) {
  EXPECT_EQ(parse("G p -> Id p", Language::IDG), Formula::Imp(Formula::Grasp(p), Formula::IgnD(p)));
}

TEST(Parse, ForeignOperatorIsLanguageError) {
  try {
    parse("Iu p", Language::IW);
    FAIL();
  } catch (const LanguageError& e) {
    EXPECT_EQ(e.op(), "Iu");
    EXPECT_EQ(e.tag(), "L_IW");
  }
  EXPECT_THROW(parse("[] p", Language::ClassicIW), LanguageError);
  EXPECT_THROW(parse("G p", Language::IW), LanguageError);
  EXPECT_NO_THROW(parse("[] Id p", Language::IDG));
}

TEST(Parse, SyntaxErrorsCarryPosition) {
  try {
    parse("p & ", Language::IW);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse("(p", Language::IW), SyntaxError);
  EXPECT_THROW(parse("p q", Language::IW), SyntaxError);
  EXPECT_THROW(parse("PHI", Language::IW), SyntaxError);
  EXPECT_THROW(parse("p $ q", Language::IW), SyntaxError);
}

TEST(Parse, PrecedenceAndAssociativity) {
  const Formula r = Formula::Atom("r");
  EXPECT_EQ(parse("p -> q -> r", Language::IW), Formula::Imp(p, Formula::Imp(q, r)));
  EXPECT_EQ(parse("p & q & r", Language::IW), Formula::And(Formula::And(p, q), r));
  EXPECT_EQ(parse("p | q & r", Language::IW), Formula::Or(p, Formula::And(q, r)));
  EXPECT_EQ(parse("p <-> q -> r", Language::IW), Formula::Iff(p, Formula::Imp(q, r)));
  EXPECT_EQ(parse("~p & q", Language::IW), Formula::And(Formula::Not(p), q));
  EXPECT_EQ(parse("Iw p -> p", Language::IW), Formula::Imp(Formula::IgnW(p), p));
  EXPECT_EQ(parse("p1 & x_2", Language::IW), Formula::And(Formula::Atom("p1"), Formula::Atom("x_2")));
}

TEST(Print, CanonicalForms) {
  EXPECT_EQ(print(Formula::IgnW(p)), "Iw p");
  EXPECT_EQ(print(Formula::And(p, q)), "(p & q)");
  EXPECT_EQ(print(Formula::Not(Formula::Box(p))), "~[] p");
  EXPECT_EQ(print(Formula::Grasp(Formula::Not(p))), "G ~p");
}

TEST(Vars, Occurrences) {
  EXPECT_EQ(vars(parse("p & (q | ~q)", Language::IW)), (std::set<std::string>{"p", "q"}));
  EXPECT_EQ(vars(parse("Iw p", Language::IW)), (std::set<std::string>{"p"}));
  EXPECT_EQ(vars(parse("~~p", Language::IW)), (std::set<std::string>{"p"}));
}

TEST(Bar, Singleton) { EXPECT_EQ(bar(p), Formula::Or(p, Formula::Not(p))); }

TEST(Bar, LexicographicAndVarOnly) {
  const Formula expected = Formula::And(Formula::Or(p, Formula::Not(p)), Formula::Or(q, Formula::Not(q)));
  EXPECT_EQ(bar(Formula::And(q, p)), expected);
  EXPECT_EQ(bar(parse("Iw (p -> q)", Language::IW)), expected);
  EXPECT_EQ(print(bar_of({"r", "p", "q"})), "(((p | ~p) & (q | ~q)) & (r | ~r))");
}

TEST(Bar, EmptyVarSet) { EXPECT_THROW(bar_of({}), EmptyVarError); }

TEST(Formula, StructuralEqualityAndHash) {
  const Formula a = parse("(p & q) -> Iw r", Language::IW);
  const Formula b = parse("p & q -> Iw r", Language::IW);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_NE(a, parse("(q & p) -> Iw r", Language::IW));
  EXPECT_EQ(a.size(), 6u);
}

constexpr Language kLangs[] = {Language::IW,        Language::IU,        Language::IDG,
                               Language::ClassicIW, Language::ClassicIU, Language::ClassicID};

TEST(Property, RoundTripAndBarStability) {
  Generator gen(7);
  const std::vector<std::string> atoms = {"p", "q", "r", "s1"};
  for (Language lang : kLangs) {
    for (int i = 0; i < 500; ++i) {
      const Formula f = gen.formula(lang, 4, atoms);
      ASSERT_EQ(parse(print(f), lang), f) << print(f);
      ASSERT_TRUE(in_language(f, lang));
      ASSERT_EQ(vars(bar(f)), vars(f));
    }
  }
}

}  // namespace
}  // namespace hyperign
