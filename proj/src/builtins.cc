#include "initrans/builtins.h"

#include <stdexcept>

namespace initrans {

namespace {

TypeExpr v(std::size_t k) { return TypeExpr::var(k); }
TypeExpr ty(std::string c, std::vector<TypeExpr> args = {}) { return TypeExpr::app(std::move(c), std::move(args)); }

ArgSpec arg(std::vector<TypeExpr> binders, TypeExpr body) { return {std::move(binders), std::move(body)}; }

TermArity arity(std::string name, std::size_t degree, std::vector<ArgSpec> args, TypeExpr result,
                bool family = false) {
  return TermArity{std::move(name), degree, family, std::move(args), std::move(result)};
}

TypedSignature make_ulc() {
  TypeExpr star = ty("*");
  return TypedSignature("ULC", {}, TypeSignature({{"*", 0}}),
                        {arity("abs", 0, {arg({star}, star)}, star),
                         arity("app", 0, {arg({}, star), arg({}, star)}, star)});
}

TypedSignature make_stlc() {
  return TypedSignature("STLC", {}, TypeSignature({{"*", 0}, {"arr", 2}}),
                        {arity("abs", 2, {arg({v(1)}, v(2))}, ty("arr", {v(1), v(2)})),
                         arity("app", 2, {arg({}, ty("arr", {v(1), v(2)})), arg({}, v(1))}, v(2))});
}

TypedSignature make_pcf() {
  auto arr = [](TypeExpr a, TypeExpr b) { return ty("arr", {std::move(a), std::move(b)}); };
  TypeExpr nat = ty("Nat"), boolean = ty("Bool");
  return TypedSignature(
      "PCF", {}, TypeSignature({{"Nat", 0}, {"Bool", 0}, {"arr", 2}}),
      {arity("app", 2, {arg({}, arr(v(1), v(2))), arg({}, v(1))}, v(2)),
       arity("abs", 2, {arg({v(1)}, v(2))}, arr(v(1), v(2))),
       arity("rec", 1, {arg({}, arr(v(1), v(1)))}, v(1)),
       arity("tttt", 0, {}, boolean),
       arity("ffff", 0, {}, boolean),
       arity("nats", 0, {}, nat, true),
       arity("Succ", 0, {}, arr(nat, nat)),
       arity("Pred", 0, {}, arr(nat, nat)),
       arity("Zero", 0, {}, arr(nat, boolean)),
       arity("CondN", 0, {}, arr(boolean, arr(nat, arr(nat, nat)))),
       arity("CondB", 0, {}, arr(boolean, arr(boolean, arr(boolean, boolean)))),
       arity("bottom", 1, {}, v(1))});
}

TypedSignature make_cpc() {
  auto bin = [](const char* c, TypeExpr a, TypeExpr b) { return ty(c, {std::move(a), std::move(b)}); };
  return TypedSignature(
      "CPC", {"p", "q", "r"},
      TypeSignature({{"top", 0}, {"bot", 0}, {"and", 2}, {"or", 2}, {"impl", 2}}),
      {arity("topI", 0, {}, ty("top")),
       arity("botI", 1, {arg({}, ty("bot"))}, v(1)),
       arity("andI", 2, {arg({}, v(1)), arg({}, v(2))}, bin("and", v(1), v(2))),
       arity("andE1", 2, {arg({}, bin("and", v(1), v(2)))}, v(1)),
       arity("andE2", 2, {arg({}, bin("and", v(1), v(2)))}, v(2)),
       arity("implI", 2, {arg({v(1)}, v(2))}, bin("impl", v(1), v(2))),
       arity("implE", 2, {arg({}, bin("impl", v(1), v(2))), arg({}, v(1))}, v(2)),
       arity("orI1", 2, {arg({}, v(1))}, bin("or", v(1), v(2))),
       arity("orI2", 2, {arg({}, v(2))}, bin("or", v(1), v(2))),
       arity("orE", 3, {arg({}, bin("or", v(1), v(2))), arg({v(1)}, v(3)), arg({v(2)}, v(3))}, v(3)),
       arity("EM", 1, {}, bin("or", bin("impl", v(1), ty("bot")), v(1)))});
}

TypedSignature make_ipc() { return make_cpc().without({"EM"}, "IPC"); }

// Untyped lambda templates.
Template lam(Template body) { return Template::con("abs", {}, {std::move(body)}); }
Template ap(Template f, Template a) { return Template::con("app", {}, {std::move(f), std::move(a)}); }
Template x(std::size_t i) { return Template::var(i); }
Template meta(std::size_t j) { return Template::meta(j); }

Term to_term(const Template& t) {
  if (t.kind() == Template::Kind::Var) return Term::var(t.number());
  std::vector<Term> args;
  for (const auto& a : t.args()) args.push_back(to_term(a));
  return Term::con(t.name(), t.literal(), {}, std::move(args));
}

Translation make_pcf2ulc(std::string name, bool curry) {
  const TypedSignature& pcf = get_language("PCF");
  const TypedSignature& ulc = get_language("ULC");
  TypeTranslation g{pcf.types(), ulc.types(), {}};
  for (const auto& [c, n] : pcf.types().constructors()) g.templates.emplace(c, ty("*"));

  // Theta = (\x y. y (x x y)) (\x y. y (x x y)); Y = \f. (\x. f (x x)) (\x. f (x x))
  Template turing_half = lam(lam(ap(x(0), ap(ap(x(1), x(1)), x(0)))));
  Template curry_half = lam(ap(x(1), ap(x(0), x(0))));
  std::string fix = curry ? "Y" : "Theta";
  Term fix_term = curry ? to_term(lam(ap(curry_half, curry_half))) : to_term(ap(turing_half, turing_half));

  Template cond = lam(lam(lam(ap(ap(x(2), x(1)), x(0)))));
  Template omega = lam(ap(x(0), x(0)));
  std::map<std::string, Template> m;
  m.emplace("app", ap(meta(1), meta(2)));
  m.emplace("abs", lam(meta(1)));
  m.emplace("rec", ap(Template::macro(fix), meta(1)));
  m.emplace("tttt", lam(lam(x(1))));
  m.emplace("ffff", lam(lam(x(0))));
  // Church numeral: \s z. s (s (... z))
  m.emplace("nats", lam(lam(Template::repeat(ap(x(1), meta(0)), x(0)))));
  // \n s z. s (n s z)
  m.emplace("Succ", lam(lam(lam(ap(x(1), ap(ap(x(2), x(1)), x(0)))))));
  // Kleene predecessor: \n f a. n (\g h. h (g f)) (\u. a) (\u. u)
  m.emplace("Pred", lam(lam(lam(ap(ap(ap(x(2), lam(lam(ap(x(0), ap(x(1), x(3)))))), lam(x(1))), lam(x(0)))))));
  // \n. n (\_. false) true
  m.emplace("Zero", lam(ap(ap(x(0), lam(lam(lam(x(0))))), lam(lam(x(1))))));
  m.emplace("CondN", cond);
  m.emplace("CondB", cond);
  m.emplace("bottom", ap(omega, omega));

  return Translation{std::move(name), pcf, ulc, std::move(g), {{fix, fix_term}}, {}, std::move(m)};
}

// Proof templates for the Goedel-Gentzen translation. Type positions are over
// IPC with $k the translated k-th parameter.
TypeExpr neg(TypeExpr a) { return ty("impl", {std::move(a), ty("bot")}); }
TypeExpr conj(TypeExpr a, TypeExpr b) { return ty("and", {std::move(a), std::move(b)}); }
TypeExpr imp(TypeExpr a, TypeExpr b) { return ty("impl", {std::move(a), std::move(b)}); }

Template intro(TypeExpr a, TypeExpr b, Template body) { return Template::con("implI", {std::move(a), std::move(b)}, {std::move(body)}); }
Template elim(TypeExpr a, TypeExpr b, Template f, Template s) {
  return Template::con("implE", {std::move(a), std::move(b)}, {std::move(f), std::move(s)});
}
Template pair(TypeExpr a, TypeExpr b, Template l, Template r) {
  return Template::con("andI", {std::move(a), std::move(b)}, {std::move(l), std::move(r)});
}
Template fst(TypeExpr a, TypeExpr b, Template p) { return Template::con("andE1", {std::move(a), std::move(b)}, {std::move(p)}); }
Template snd(TypeExpr a, TypeExpr b, Template p) { return Template::con("andE2", {std::move(a), std::move(b)}, {std::move(p)}); }

// ~~~Z -> ~Z as \h z. h (\k. k z)
Template triple_negation(const TypeExpr& z) {
  return intro(neg(neg(neg(z))), neg(z),
               intro(z, ty("bot"), elim(neg(neg(z)), ty("bot"), x(1), intro(neg(z), ty("bot"), elim(z, ty("bot"), x(0), x(1))))));
}

Translation make_godel_gentzen() {
  const TypedSignature& cpc = get_language("CPC");
  const TypedSignature& ipc = get_language("IPC");
  TypeExpr a = v(1), b = v(2), c = v(3), bot = ty("bot");

  TypeTranslation g{cpc.types(), ipc.types(), {}};
  for (const auto& atom : cpc.atoms()) g.templates.emplace(atom, neg(neg(ty(atom))));
  g.templates.emplace("top", neg(neg(ty("top"))));
  g.templates.emplace("bot", neg(neg(bot)));
  g.templates.emplace("and", conj(a, b));
  g.templates.emplace("or", neg(conj(neg(a), neg(b))));
  g.templates.emplace("impl", imp(a, b));

  // stable at t : ~~t^g -> t^g, by recursion on t.
  IndexedMacro stable{"stable", imp(neg(neg(v(1))), v(1)), {}};
  for (const auto& atom : cpc.atoms()) stable.clauses.emplace(atom, triple_negation(neg(ty(atom))));
  stable.clauses.emplace("top", triple_negation(neg(ty("top"))));
  stable.clauses.emplace("bot", triple_negation(neg(bot)));
  stable.clauses.emplace("or", triple_negation(conj(neg(a), neg(b))));
  // \h. <stable a> (\k. h (\p. k (fst p))) , <stable b> (\k. h (\p. k (snd p)))
  TypeExpr ab = conj(a, b);
  stable.clauses.emplace(
      "and",
      intro(neg(neg(ab)), ab,
            pair(a, b,
                 elim(neg(neg(a)), a, Template::indexed("stable", 1),
                      intro(neg(a), bot, elim(neg(ab), bot, x(1), intro(ab, bot, elim(a, bot, x(1), fst(a, b, x(0))))))),
                 elim(neg(neg(b)), b, Template::indexed("stable", 2),
                      intro(neg(b), bot, elim(neg(ab), bot, x(1), intro(ab, bot, elim(b, bot, x(1), snd(a, b, x(0))))))))));
  // \h u. <stable b> (\k. h (\f. k (f u)))
  TypeExpr a_to_b = imp(a, b);
  stable.clauses.emplace(
      "impl",
      intro(neg(neg(a_to_b)), a_to_b,
            intro(a, b,
                  elim(neg(neg(b)), b, Template::indexed("stable", 2),
                       intro(neg(b), bot,
                             elim(neg(a_to_b), bot, x(2),
                                  intro(a_to_b, bot, elim(b, bot, x(1), elim(a, b, x(0), x(2))))))))));

  TypeExpr not_a_and_not_b = conj(neg(a), neg(b));
  std::map<std::string, Template> m;
  m.emplace("topI", intro(neg(ty("top")), bot, elim(ty("top"), bot, x(0), Template::con("topI"))));
  m.emplace("botI", Template::con("botI", {a}, {elim(neg(bot), bot, meta(1), intro(bot, bot, x(0)))}));
  m.emplace("andI", Template::con("andI", {a, b}, {meta(1), meta(2)}));
  m.emplace("andE1", Template::con("andE1", {a, b}, {meta(1)}));
  m.emplace("andE2", Template::con("andE2", {a, b}, {meta(1)}));
  m.emplace("implI", Template::con("implI", {a, b}, {meta(1)}));
  m.emplace("implE", Template::con("implE", {a, b}, {meta(1), meta(2)}));
  m.emplace("orI1", intro(not_a_and_not_b, bot, elim(a, bot, fst(neg(a), neg(b), x(0)), meta(1))));
  m.emplace("orI2", intro(not_a_and_not_b, bot, elim(b, bot, snd(neg(a), neg(b), x(0)), meta(1))));
  // <stable c> (\k. ?1 (pair (\u. k ?2) (\u. k ?3)))
  m.emplace("orE",
            elim(neg(neg(c)), c, Template::indexed("stable", 3),
                 intro(neg(c), bot,
                       elim(not_a_and_not_b, bot, meta(1),
                            pair(neg(a), neg(b), intro(a, bot, elim(c, bot, x(1), meta(2))),
                                 intro(b, bot, elim(c, bot, x(1), meta(3))))))));
  // \h. fst h (\u k. snd h u), typed at ~(~(a -> ~~bot) & ~a)
  TypeExpr nnbot = neg(neg(bot));
  TypeExpr d = imp(a, nnbot);
  m.emplace("EM", intro(conj(neg(d), neg(a)), bot,
                        elim(d, bot, fst(neg(d), neg(a), x(0)),
                             intro(a, nnbot, intro(neg(bot), bot, elim(a, bot, snd(neg(d), neg(a), x(2)), x(1)))))));

  return Translation{"cpc2ipc-godel-gentzen", cpc, ipc, std::move(g), {}, {std::move(stable)}, std::move(m)};
}

}  // namespace

const TypedSignature& get_language(std::string_view name) {
  static const TypedSignature ulc = make_ulc();
  static const TypedSignature stlc = make_stlc();
  static const TypedSignature pcf = make_pcf();
  static const TypedSignature cpc = make_cpc();
  static const TypedSignature ipc = make_ipc();
  if (name == "ULC") return ulc;
  if (name == "STLC") return stlc;
  if (name == "PCF") return pcf;
  if (name == "CPC") return cpc;
  if (name == "IPC") return ipc;
  throw std::out_of_range("unknown language " + std::string(name));
}

const Translation& get_translation(std::string_view name) {
  static const Translation turing = make_pcf2ulc("pcf2ulc-turing", false);
  static const Translation curry = make_pcf2ulc("pcf2ulc-curry", true);
  static const Translation gg = make_godel_gentzen();
  if (name == "pcf2ulc-turing") return turing;
  if (name == "pcf2ulc-curry") return curry;
  if (name == "cpc2ipc-godel-gentzen") return gg;
  throw std::out_of_range("unknown translation " + std::string(name));
}

BuiltinListing list_builtins() {
  return {{"CPC", "IPC", "PCF", "STLC", "ULC"},
          {"cpc2ipc-godel-gentzen", "pcf2ulc-curry", "pcf2ulc-turing"}};
}

}  // namespace initrans
