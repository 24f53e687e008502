#include <gtest/gtest.h>

#include "initrans/builtins.h"
#include "initrans/laws.h"
#include "initrans/surface.h"

using namespace initrans;

namespace {

ObjType g(std::string c, std::vector<ObjType> a = {}) { return ObjType(std::move(c), std::move(a)); }

GenConfig config(std::size_t cases, std::uint64_t seed = 1) {
  GenConfig cfg;
  cfg.cases = cases;
  cfg.seed = seed;
  return cfg;
}

// The classic bug: images are not shifted when the substitution passes under
// a binder.
Term unshifted_substitute(const TypedSignature& sig, const Term& t, std::span<const Term> images, std::size_t depth) {
  if (t.is_var()) return t.index() < depth ? t : images[t.index() - depth];
  const TermArity* a = sig.find_arity(t.arity());
  std::vector<Term> args;
  for (std::size_t j = 0; j < t.args().size(); ++j)
    args.push_back(unshifted_substitute(sig, t.args()[j], images, depth + a->args[j].binders.size()));
  return Term::con(t.arity(), t.literal(), t.inst(), std::move(args));
}

}  // namespace

TEST(Rng, SplitMixReferenceValues) {
  // First outputs of SplitMix64 seeded with 0, as published with the algorithm.
  Rng r(0);
  EXPECT_EQ(r.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(r.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(r.next(), 0x06c45d188009454fULL);
}

TEST(Rng, BelowStaysInRange) {
  Rng r(5);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(r.below(7), 7u);
  EXPECT_THROW(r.below(0), std::invalid_argument);
}

TEST(GenConfig, Invariants) {
  EXPECT_THROW(config(0).validate(), std::invalid_argument);
  GenConfig cfg;
  cfg.max_depth = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  EXPECT_THROW(check_monad_laws(get_language("PCF"), config(0)), std::invalid_argument);
}

TEST(SmallTypes, DepthAtMostTwo) {
  auto pcf = small_types(get_language("PCF").types());
  // Nat, Bool and the four arrows between them.
  EXPECT_EQ(pcf.size(), 6u);
  for (const auto& t : pcf) EXPECT_LE(t.depth(), 2u);
  EXPECT_EQ(small_types(get_language("ULC").types()), std::vector<ObjType>{g("*")});
}

TEST(GenTerm, WellTypedUntypedTerms) {
  const auto& ulc = get_language("ULC");
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenConfig cfg = config(1, seed);
    auto t = gen_term(ulc, {g("*")}, std::nullopt, cfg);
    ASSERT_TRUE(t);
    EXPECT_NO_THROW(check(ulc, {g("*")}, *t, g("*")));
  }
}

TEST(GenTerm, HitsRequestedGoal) {
  const auto& pcf = get_language("PCF");
  ObjType goal = g("arr", {g("Nat"), g("Bool")});
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto t = gen_term(pcf, {g("Nat")}, goal, config(1, seed));
    ASSERT_TRUE(t);
    EXPECT_EQ(infer(pcf, {g("Nat")}, *t), goal);
  }
}

TEST(GenTerm, Deterministic) {
  const auto& pcf = get_language("PCF");
  auto a = gen_term(pcf, {}, std::nullopt, config(1, 42));
  auto b = gen_term(pcf, {}, std::nullopt, config(1, 42));
  ASSERT_TRUE(a && b);
  EXPECT_EQ(*a, *b);
}

TEST(GenTerm, ClosedFalsityIsUnreachable) {
  GenConfig cfg = config(1);
  cfg.retries = 50;
  cfg.max_depth = 3;
  EXPECT_FALSE(gen_term(get_language("CPC"), {}, g("bot"), cfg));
}

TEST(MonadLaws, HoldOnPcf) {
  auto r = check_monad_laws(get_language("PCF"), config(10000));
  EXPECT_TRUE(r.passed()) << to_string(r);
  EXPECT_EQ(r.cases, 10000u);
  EXPECT_FALSE(r.counterexample);
}

TEST(MonadLaws, HoldOnEveryLanguage) {
  for (const auto& n : list_builtins().languages) {
    auto r = check_monad_laws(get_language(n), config(500, 3));
    EXPECT_TRUE(r.passed()) << to_string(r);
  }
}

TEST(MonadLaws, CatchMissingShift) {
  const auto& ulc = get_language("ULC");
  SubstituteFn broken = [](const TypedSignature& sig, const Term& t, std::span<const Term> images) {
    return unshifted_substitute(sig, t, images, 0);
  };
  auto r = check_monad_laws(ulc, config(500), broken);
  ASSERT_TRUE(r.counterexample) << to_string(r);
  EXPECT_FALSE(r.passed());
  // Replaying the reported case alone fails again, with the same inputs.
  GenConfig one = config(1);
  auto replay = check_monad_laws(ulc, one, broken, r.counterexample->case_index);
  ASSERT_TRUE(replay.counterexample);
  EXPECT_EQ(replay.counterexample->inputs, r.counterexample->inputs);
  EXPECT_EQ(replay.counterexample->case_index, r.counterexample->case_index);
}

TEST(MonadLaws, ReportIsDeterministic) {
  auto a = to_string(check_monad_laws(get_language("STLC"), config(300, 9)));
  auto b = to_string(check_monad_laws(get_language("STLC"), config(300, 9)));
  EXPECT_EQ(a, b);
  // Every untyped goal is inhabited, so no case can be skipped.
  EXPECT_EQ(to_string(check_monad_laws(get_language("ULC"), config(300, 9))),
            "law: monad laws (ULC)\ncases: 300 (300 run, 0 skipped)\nresult: pass\n");
}

TEST(LawReport, SkipsOverHalfFail) {
  LawReport r{"x", 10, 5, std::nullopt};
  EXPECT_TRUE(r.passed());
  r.skipped = 6;
  EXPECT_FALSE(r.passed());
}

TEST(TranslationLaws, BuiltinsPass) {
  for (const auto& n : list_builtins().translations) {
    auto r = check_translation_laws(get_translation(n), config(500));
    EXPECT_TRUE(r.passed()) << to_string(r);
  }
}

TEST(TranslationLaws, IdentityOnUntyped) {
  auto id = identity_translation(get_language("ULC"));
  auto r = check_translation_laws(id, config(500));
  EXPECT_TRUE(r.passed()) << to_string(r);
  auto same = check_agreement(id, [](const Context&, const Term& t) { return t; }, config(500));
  EXPECT_TRUE(same.passed()) << to_string(same);
}

TEST(TranslationLaws, DetectBrokenTemplate) {
  // Projecting the wrong component breaks typing of the image whenever the
  // two conjuncts differ.
  Translation x = get_translation("cpc2ipc-godel-gentzen");
  x.term_map.at("andE1") = x.term_map.at("andE2");
  auto r = check_translation_laws(x, config(2000));
  ASSERT_TRUE(r.counterexample) << to_string(r);
  EXPECT_EQ(r.counterexample->law, "type preservation");
}

TEST(Agreement, OraclesMatchEngine) {
  auto turing = check_agreement(get_translation("pcf2ulc-turing"),
                                [](const Context&, const Term& t) { return oracles::pcf_to_ulc(t, false); }, config(2000));
  EXPECT_TRUE(turing.passed()) << to_string(turing);
  auto curry = check_agreement(get_translation("pcf2ulc-curry"),
                               [](const Context&, const Term& t) { return oracles::pcf_to_ulc(t, true); }, config(500));
  EXPECT_TRUE(curry.passed()) << to_string(curry);
  auto gg = check_agreement(get_translation("cpc2ipc-godel-gentzen"),
                            [](const Context&, const Term& t) { return oracles::godel_gentzen_proof(t); }, config(2000));
  EXPECT_TRUE(gg.passed()) << to_string(gg);
}

TEST(Agreement, WrongOracleDisagrees) {
  // Curry's oracle against the Turing engine: they differ on rec.
  auto r = check_agreement(get_translation("pcf2ulc-turing"),
                           [](const Context&, const Term& t) { return oracles::pcf_to_ulc(t, true); }, config(2000));
  ASSERT_TRUE(r.counterexample);
  EXPECT_NE(r.counterexample->inputs.find("rec"), std::string::npos);
}

TEST(Oracles, GodelGentzenTypes) {
  ObjType p = g("p"), q = g("q"), bot = g("bot");
  auto neg = [&](ObjType a) { return g("impl", {std::move(a), bot}); };
  EXPECT_EQ(oracles::godel_gentzen_type(p), neg(neg(p)));
  EXPECT_EQ(oracles::godel_gentzen_type(bot), neg(neg(bot)));
  EXPECT_EQ(oracles::godel_gentzen_type(g("or", {p, q})), neg(g("and", {neg(neg(neg(p))), neg(neg(neg(q)))})));
}
