#include <gtest/gtest.h>

#include "initrans/builtins.h"
#include "initrans/laws.h"
#include "initrans/syntax.h"

using namespace initrans;

namespace {

ObjType g(std::string c, std::vector<ObjType> a = {}) { return ObjType(std::move(c), std::move(a)); }
const ObjType Nat = g("Nat"), Bool = g("Bool"), Star = g("*");
ObjType arr(ObjType a, ObjType b) { return g("arr", {std::move(a), std::move(b)}); }

Term var(std::size_t i) { return Term::var(i); }
Term lam(Term b) { return Term::con("abs", {}, {std::move(b)}); }
Term app(Term f, Term a) { return Term::con("app", {}, {std::move(f), std::move(a)}); }

const TypedSignature& ulc() { return get_language("ULC"); }
const TypedSignature& pcf() { return get_language("PCF"); }

}  // namespace

TEST(Infer, ContextLookup) { EXPECT_EQ(infer(pcf(), {Nat}, var(0)), Nat); }

TEST(Infer, SuccessorOfNumeral) {
  Term t = Term::con("app", {Nat, Nat}, {Term::con("Succ"), Term::con("nats", 3, {}, {})});
  EXPECT_EQ(infer(pcf(), {}, t), Nat);
}

TEST(Infer, MismatchNamesBothTypes) {
  Term t = Term::con("app", {Bool, Nat}, {Term::con("Succ"), Term::con("tttt")});
  try {
    infer(pcf(), {}, t);
    FAIL();
  } catch (const TypeError& e) {
    EXPECT_STREQ(e.what(), "expected arr(Bool,Nat), found arr(Nat,Nat)");
    EXPECT_EQ(e.path(), std::vector<std::size_t>{0});
  }
}

TEST(Infer, Errors) {
  auto msg = [](const Term& t, const Context& ctx = {}) -> std::string {
    try {
      infer(get_language("PCF"), ctx, t);
    } catch (const TypeError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_EQ(msg(var(0)), "unbound index 0");
  EXPECT_EQ(msg(Term::con("foo")), "unknown arity foo");
  EXPECT_EQ(msg(Term::con("nats")), "nats requires a family literal");
  EXPECT_EQ(msg(Term::con("tttt", 1, {}, {})), "tttt takes no family literal");
  EXPECT_EQ(msg(Term::con("bottom")), "bottom expects 1 type argument, got 0");
  EXPECT_EQ(msg(Term::con("bottom", {g("List")})), "ill-formed type List");
  EXPECT_EQ(msg(Term::con("rec", {Nat}, {})), "rec expects 1 argument, got 0");
}

TEST(Infer, BinderExtendsContext) {
  Term id = Term::con("abs", {Nat, Nat}, {var(0)});
  EXPECT_EQ(infer(pcf(), {}, id), arr(Nat, Nat));
  // The body sees the binder at 0 and the outer Bool at 1.
  Term k = Term::con("abs", {Nat, Bool}, {var(1)});
  EXPECT_EQ(infer(pcf(), {Bool}, k), arr(Nat, Bool));
  EXPECT_THROW(infer(pcf(), {Nat}, k), TypeError);
}

TEST(Check, UntypedVariable) {
  EXPECT_NO_THROW(check(ulc(), {Star}, var(0), Star));
  try {
    check(ulc(), {}, var(0), Star);
    FAIL();
  } catch (const TypeError& e) {
    EXPECT_STREQ(e.what(), "unbound index 0");
  }
}

TEST(ContextExtend, Examples) {
  std::vector<ObjType> inst{Nat, Bool};
  std::vector<TypeExpr> one{TypeExpr::var(1)};
  std::vector<TypeExpr> two{TypeExpr::var(1), TypeExpr::var(2)};
  EXPECT_EQ(context_extend({}, inst, one), (Context{Nat}));
  EXPECT_EQ(context_extend({Bool}, inst, two), (Context{Nat, Bool, Bool}));
  EXPECT_EQ(context_extend({Bool}, inst, {}), (Context{Bool}));
}

TEST(Weaken, Examples) {
  EXPECT_EQ(weaken(ulc(), var(0), 1, 5), var(0));
  EXPECT_EQ(weaken(ulc(), var(2), 1, 2), var(4));
  EXPECT_EQ(weaken(ulc(), lam(app(var(1), var(0))), 0, 1), lam(app(var(2), var(0))));
}

TEST(Rename, SwapAndIdentity) {
  std::vector<std::size_t> swap{1, 0}, id{0, 1};
  EXPECT_EQ(rename(ulc(), app(var(0), var(1)), swap), app(var(1), var(0)));
  Term t = lam(app(var(1), app(var(0), var(2))));
  EXPECT_EQ(rename(ulc(), t, id), t);
  EXPECT_EQ(rename(ulc(), t, swap), lam(app(var(2), app(var(0), var(1)))));
}

TEST(Rename, Composition) {
  GenConfig cfg;
  Rng rng(7);
  Context ctx{Nat, Bool, Nat};
  std::vector<std::size_t> f{2, 1, 0}, h{1, 0, 2};
  std::vector<std::size_t> hf{h[f[0]], h[f[1]], h[f[2]]};
  for (int i = 0; i < 1000; ++i) {
    auto t = gen_term(pcf(), ctx, std::nullopt, rng, 5, cfg.retries);
    ASSERT_TRUE(t);
    EXPECT_EQ(rename(pcf(), rename(pcf(), *t, f), h), rename(pcf(), *t, hf));
  }
}

TEST(Eta, Variables) {
  EXPECT_EQ(eta({Nat}, 0), var(0));
  EXPECT_EQ(eta({Nat, Bool}, 1), var(1));
  EXPECT_THROW(eta({Nat}, 1), std::out_of_range);
  Context ctx{Nat, Bool, arr(Nat, Nat)};
  for (std::size_t i = 0; i < ctx.size(); ++i) EXPECT_EQ(infer(pcf(), ctx, eta(ctx, i)), ctx[i]);
}

TEST(Substitute, LiftsUnderBinder) {
  std::vector<Term> images{lam(var(0))};
  EXPECT_EQ(substitute(ulc(), lam(app(var(1), var(0))), images), lam(app(lam(var(0)), var(0))));
}

TEST(Substitute, OpenImageIsShiftedUnderBinders) {
  // #0 := #1 over a larger context; under one binder it must become #2.
  std::vector<Term> images{var(1)};
  EXPECT_EQ(substitute(ulc(), lam(app(var(1), var(0))), images), lam(app(var(2), var(0))));
}

TEST(Substitute, UnitLaws) {
  Term t = lam(app(var(1), app(var(0), var(2))));
  auto id = identity_substitution({Star, Star});
  EXPECT_EQ(substitute(ulc(), t, id), t);
  std::vector<Term> images{lam(var(0)), app(var(0), var(0))};
  EXPECT_EQ(substitute(ulc(), var(1), images), images[1]);
}

TEST(Substitute, CompositionIsKleisli) {
  std::vector<Term> first{app(var(0), var(1)), var(0)};
  std::vector<Term> second{lam(var(0)), var(1)};
  auto composed = compose(ulc(), first, second);
  ASSERT_EQ(composed.size(), 2u);
  EXPECT_EQ(composed[0], app(lam(var(0)), var(1)));
  EXPECT_EQ(composed[1], lam(var(0)));
}

TEST(CheckSubstitution, WrongImageType) {
  Substitution s{{Nat}, {Bool}, {var(0)}};
  EXPECT_THROW(check_substitution(pcf(), s), TypeError);
  Substitution ok{{Nat}, {Bool, Nat}, {var(1)}};
  EXPECT_NO_THROW(check_substitution(pcf(), ok));
  Substitution short_s{{Nat, Nat}, {Nat}, {var(0)}};
  EXPECT_THROW(check_substitution(pcf(), short_s), TypeError);
}

TEST(Term, SizeAndEquality) {
  Term t = lam(app(var(0), var(0)));
  EXPECT_EQ(t.size(), 4u);
  EXPECT_NE(Term::con("nats", 1, {}, {}), Term::con("nats", 2, {}, {}));
  EXPECT_NE(Term::con("bottom", {Nat}), Term::con("bottom", {Bool}));
}
