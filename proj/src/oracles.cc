// Direct-recursion translators, written without the template engine. They are
// the reference the engine is compared against.

#include <stdexcept>

#include "initrans/builtins.h"
#include "initrans/laws.h"

namespace initrans::oracles {

namespace {

Term lam(Term body) { return Term::con("abs", {}, {std::move(body)}); }
Term app(Term f, Term a) { return Term::con("app", {}, {std::move(f), std::move(a)}); }
Term ix(std::size_t i) { return Term::var(i); }

Term church(std::uint64_t n) {
  Term body = ix(0);
  for (std::uint64_t k = 0; k < n; ++k) body = app(ix(1), body);
  return lam(lam(body));
}

Term theta() {
  Term half = lam(lam(app(ix(0), app(app(ix(1), ix(1)), ix(0)))));
  return app(half, half);
}

Term y_combinator() {
  Term half = lam(app(ix(1), app(ix(0), ix(0))));
  return lam(app(half, half));
}

}  // namespace

Term pcf_to_ulc(const Term& t, bool curry) {
  if (t.is_var()) return t;
  const std::string& a = t.arity();
  auto arg = [&](std::size_t i) { return pcf_to_ulc(t.args()[i], curry); };
  if (a == "app") return app(arg(0), arg(1));
  if (a == "abs") return lam(arg(0));
  if (a == "rec") return app(curry ? y_combinator() : theta(), arg(0));
  if (a == "tttt") return lam(lam(ix(1)));
  if (a == "ffff") return lam(lam(ix(0)));
  if (a == "nats") return church(t.literal().value_or(0));
  if (a == "Succ") return lam(lam(lam(app(ix(1), app(app(ix(2), ix(1)), ix(0))))));
  if (a == "Pred") {
    Term step = lam(lam(app(ix(0), app(ix(1), ix(3)))));
    return lam(lam(lam(app(app(app(ix(2), step), lam(ix(1))), lam(ix(0))))));
  }
  if (a == "Zero") return lam(app(app(ix(0), lam(lam(lam(ix(0))))), lam(lam(ix(1)))));
  if (a == "CondN" || a == "CondB") return lam(lam(lam(app(app(ix(2), ix(1)), ix(0)))));
  if (a == "bottom") {
    Term omega = lam(app(ix(0), ix(0)));
    return app(omega, omega);
  }
  throw std::invalid_argument("not a PCF arity: " + a);
}

namespace {

ObjType bot() { return ObjType("bot"); }
ObjType neg(ObjType a) { return ObjType("impl", {std::move(a), bot()}); }
ObjType conj(ObjType a, ObjType b) { return ObjType("and", {std::move(a), std::move(b)}); }
ObjType imp(ObjType a, ObjType b) { return ObjType("impl", {std::move(a), std::move(b)}); }

Term intro(const ObjType& a, const ObjType& b, Term body) { return Term::con("implI", {a, b}, {std::move(body)}); }
Term elim(const ObjType& a, const ObjType& b, Term f, Term s) {
  return Term::con("implE", {a, b}, {std::move(f), std::move(s)});
}
Term fst(const ObjType& a, const ObjType& b, Term p) { return Term::con("andE1", {a, b}, {std::move(p)}); }
Term snd(const ObjType& a, const ObjType& b, Term p) { return Term::con("andE2", {a, b}, {std::move(p)}); }
Term pair(const ObjType& a, const ObjType& b, Term l, Term r) {
  return Term::con("andI", {a, b}, {std::move(l), std::move(r)});
}

Term shift(const Term& t, std::size_t cutoff, std::size_t amount) {
  return weaken(get_language("IPC"), t, cutoff, amount);
}

// ~~~z -> ~z
Term unneg(const ObjType& z) {
  return intro(neg(neg(neg(z))), neg(z),
               intro(z, bot(), elim(neg(neg(z)), bot(), ix(1), intro(neg(z), bot(), elim(z, bot(), ix(0), ix(1))))));
}

// A closed proof of ~~t^g -> t^g.
Term stability(const ObjType& t) {
  const std::string& c = t.ctor();
  if (c == "and") {
    ObjType a = godel_gentzen_type(t.children()[0]);
    ObjType b = godel_gentzen_type(t.children()[1]);
    ObjType ab = conj(a, b);
    auto half = [&](const ObjType& part, Term stable_part, Term project) {
      return elim(neg(neg(part)), part, std::move(stable_part),
                  intro(neg(part), bot(),
                        elim(neg(ab), bot(), ix(1), intro(ab, bot(), elim(part, bot(), ix(1), std::move(project))))));
    };
    return intro(neg(neg(ab)), ab,
                 pair(a, b, half(a, stability(t.children()[0]), fst(a, b, ix(0))),
                      half(b, stability(t.children()[1]), snd(a, b, ix(0)))));
  }
  if (c == "impl") {
    ObjType a = godel_gentzen_type(t.children()[0]);
    ObjType b = godel_gentzen_type(t.children()[1]);
    ObjType f = imp(a, b);
    return intro(neg(neg(f)), f,
                 intro(a, b,
                       elim(neg(neg(b)), b, stability(t.children()[1]),
                            intro(neg(b), bot(),
                                  elim(neg(f), bot(), ix(2), intro(f, bot(), elim(b, bot(), ix(1), elim(a, b, ix(0), ix(2)))))))));
  }
  // Every other image is a negation ~z.
  ObjType image = godel_gentzen_type(t);
  return unneg(image.children()[0]);
}

}  // namespace

ObjType godel_gentzen_type(const ObjType& t) {
  const std::string& c = t.ctor();
  if (c == "and") return conj(godel_gentzen_type(t.children()[0]), godel_gentzen_type(t.children()[1]));
  if (c == "impl") return imp(godel_gentzen_type(t.children()[0]), godel_gentzen_type(t.children()[1]));
  if (c == "or")
    return neg(conj(neg(godel_gentzen_type(t.children()[0])), neg(godel_gentzen_type(t.children()[1]))));
  // atoms, top, bot
  return neg(neg(ObjType(c)));
}

Term godel_gentzen_proof(const Term& t) {
  if (t.is_var()) return t;
  const std::string& n = t.arity();
  std::vector<ObjType> g;
  for (const auto& ty : t.inst()) g.push_back(godel_gentzen_type(ty));
  auto sub = [&](std::size_t i) { return godel_gentzen_proof(t.args()[i]); };

  if (n == "topI") {
    ObjType top("top");
    return intro(neg(top), bot(), elim(top, bot(), ix(0), Term::con("topI")));
  }
  if (n == "botI") return Term::con("botI", {g[0]}, {elim(neg(bot()), bot(), sub(0), intro(bot(), bot(), ix(0)))});
  if (n == "andI" || n == "andE1" || n == "andE2" || n == "implI" || n == "implE") {
    std::vector<Term> args;
    for (std::size_t i = 0; i < t.args().size(); ++i) args.push_back(sub(i));
    return Term::con(n, g, std::move(args));
  }
  if (n == "orI1" || n == "orI2") {
    ObjType nn = conj(neg(g[0]), neg(g[1]));
    bool left = n == "orI1";
    const ObjType& side = left ? g[0] : g[1];
    Term proj = left ? fst(neg(g[0]), neg(g[1]), ix(0)) : snd(neg(g[0]), neg(g[1]), ix(0));
    return intro(nn, bot(), elim(side, bot(), std::move(proj), shift(sub(0), 0, 1)));
  }
  if (n == "orE") {
    const ObjType &a = g[0], &b = g[1], &c = g[2];
    ObjType nn = conj(neg(a), neg(b));
    // Under the new binder k : ~c, each branch keeps its own binder at 0.
    Term left = intro(a, bot(), elim(c, bot(), ix(1), shift(sub(1), 1, 1)));
    Term right = intro(b, bot(), elim(c, bot(), ix(1), shift(sub(2), 1, 1)));
    return elim(neg(neg(c)), c, stability(t.inst()[2]),
                intro(neg(c), bot(), elim(nn, bot(), shift(sub(0), 0, 1), pair(neg(a), neg(b), left, right))));
  }
  if (n == "EM") {
    const ObjType& a = g[0];
    ObjType nnbot = neg(neg(bot()));
    ObjType d = imp(a, nnbot);
    return intro(conj(neg(d), neg(a)), bot(),
                 elim(d, bot(), fst(neg(d), neg(a), ix(0)),
                      intro(a, nnbot, intro(neg(bot()), bot(), elim(a, bot(), snd(neg(d), neg(a), ix(2)), ix(1))))));
  }
  throw std::invalid_argument("not a CPC arity: " + n);
}

}  // namespace initrans::oracles
