// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "initrans/builtins.h"
#include "initrans/laws.h"
#include "initrans/surface.h"

using namespace initrans;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int n, const char* title, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  if (o.ok && dt >= limit_s) o = {false, "took " + std::to_string(dt) + " s, limit " + std::to_string(limit_s) + " s"};
  if (!o.ok) ++failures;
  std::printf("[%s] %d. %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", n, title, dt, o.detail.empty() ? "" : " -- ",
              o.detail.c_str());
  std::fflush(stdout);
}

GenConfig config(std::size_t cases, std::uint64_t seed, std::size_t depth = 6) {
  GenConfig cfg;
  cfg.cases = cases;
  cfg.seed = seed;
  cfg.max_depth = depth;
  return cfg;
}

Outcome expect_eq(const std::string& got, const std::string& want) {
  if (got == want) return {true, ""};
  return {false, "got `" + got + "`"};
}

Outcome from_report(const LawReport& r, double max_skip = 0.5) {
  if (!r.passed()) return {false, to_string(r)};
  if (static_cast<double>(r.skipped) > max_skip * static_cast<double>(r.cases))
    return {false, r.law + ": " + std::to_string(r.skipped) + " skipped"};
  return {true, ""};
}

Outcome all_of(std::initializer_list<Outcome> parts) {
  for (const auto& p : parts)
    if (!p.ok) return p;
  return {true, ""};
}

bool contains_arity(const Term& t, const std::string& name) {
  if (t.is_var()) return false;
  if (t.arity() == name) return true;
  for (const auto& a : t.args())
    if (contains_arity(a, name)) return true;
  return false;
}

// Independent of the type-translation engine: the clauses written out.
ObjType gg_direct(const ObjType& t) {
  auto neg = [](ObjType a) { return ObjType("impl", {std::move(a), ObjType("bot")}); };
  const std::string& c = t.ctor();
  if (c == "and") return ObjType("and", {gg_direct(t.children()[0]), gg_direct(t.children()[1])});
  if (c == "impl") return ObjType("impl", {gg_direct(t.children()[0]), gg_direct(t.children()[1])});
  if (c == "or") return neg(ObjType("and", {neg(gg_direct(t.children()[0])), neg(gg_direct(t.children()[1]))}));
  return neg(neg(t));
}

ObjType random_proposition(Rng& rng, std::size_t depth) {
  static const char* leaves[] = {"p", "q", "r", "top", "bot"};
  static const char* binary[] = {"and", "or", "impl"};
  if (depth == 0 || rng.below(3) == 0) return ObjType(leaves[rng.below(5)]);
  return ObjType(binary[rng.below(3)], {random_proposition(rng, depth - 1), random_proposition(rng, depth - 1)});
}

const char* kGoldenSource =
    "context ; (abs [Bool,Bool] (app [Bool,Bool] (app [Bool,arr(Bool,Bool)] "
    "(app [Bool,arr(Bool,arr(Bool,Bool))] (CondB) #0) (ffff)) (tttt)))";

}  // namespace

int main() {
  const TypedSignature& ulc = get_language("ULC");

  criterion(1, "golden translation of the boolean conditional", 1.0, [&] {
    auto p = parse_term(kGoldenSource, get_language("PCF"));
    Term out = translate_term(get_translation("pcf2ulc-turing"), p.context, p.term);
    return expect_eq(print_term(ulc, {}, out, Style::Paper),
                     "Abs (Abs (Abs (Abs (3 @ 2 @ 1))) @ 1 @ Abs (Abs 1) @ Abs (Abs 2))");
  });

  criterion(2, "golden fixed-point combinators", 1.0, [&] {
    return all_of({expect_eq(print_term(ulc, {}, *get_translation("pcf2ulc-turing").find_macro("Theta"), Style::Paper),
                             "Abs (Abs (1 @ (2 @ 2 @ 1))) @ Abs (Abs (1 @ (2 @ 2 @ 1)))"),
                   expect_eq(print_term(ulc, {}, *get_translation("pcf2ulc-curry").find_macro("Y"), Style::Paper),
                             "Abs (Abs (2 @ (1 @ 1)) @ Abs (2 @ (1 @ 1)))")});
  });

  criterion(3, "substitution monad laws on ULC, PCF, IPC (10000 cases each)", 60.0, [&] {
    return all_of({from_report(check_monad_laws(ulc, config(10000, 1)), 0.10),
                   from_report(check_monad_laws(get_language("PCF"), config(10000, 1)), 0.10),
                   from_report(check_monad_laws(get_language("IPC"), config(10000, 1)), 0.10)});
  });

  criterion(4, "translation commutes with substitution and preserves types", 60.0, [&] {
    for (const auto& n : list_builtins().translations) {
      auto r = check_translation_laws(get_translation(n), config(2000, 4));
      if (!r.passed()) return Outcome{false, to_string(r)};
    }
    return Outcome{true, ""};
  });

  criterion(5, "classical proofs transport to intuitionistic proofs", 60.0, [&] {
    const Translation& x = get_translation("cpc2ipc-godel-gentzen");
    auto pool = small_types(x.source.types());
    std::size_t done = 0;
    for (std::size_t i = 0; done < 2000; ++i) {
      if (i > 4000) return Outcome{false, "could not generate 2000 proofs"};
      Rng rng(case_seed(5, i));
      Context gamma;
      for (auto k = rng.below(4); k > 0; --k) gamma.push_back(pool[rng.below(pool.size())]);
      auto proof = gen_term(x.source, gamma, std::nullopt, rng, 6, GenConfig{}.retries);
      if (!proof) continue;
      ++done;
      ObjType a = infer(x.source, gamma, *proof);
      Term image = translate_term(x, gamma, *proof);
      try {
        check(x.target, retype_context(x.type_map, gamma), image, translate_type(x.type_map, a));
      } catch (const TypeError& e) {
        return Outcome{false, print_term_file(gamma, *proof) + e.what()};
      }
    }
    return Outcome{true, ""};
  });

  criterion(6, "engine agrees with direct-recursion oracles", 60.0, [&] {
    return all_of({from_report(check_agreement(get_translation("pcf2ulc-turing"),
                                               [](const Context&, const Term& t) { return oracles::pcf_to_ulc(t, false); },
                                               config(2000, 6))),
                   from_report(check_agreement(get_translation("cpc2ipc-godel-gentzen"),
                                               [](const Context&, const Term& t) { return oracles::godel_gentzen_proof(t); },
                                               config(2000, 6)))});
  });

  criterion(7, "Goedel-Gentzen type map", 10.0, [&] {
    const TypeTranslation& g = get_translation("cpc2ipc-godel-gentzen").type_map;
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
      ObjType t = random_proposition(rng, 4);
      if (!(translate_type(g, t) == gg_direct(t))) return Outcome{false, to_string(t)};
    }
    ObjType p("p"), q("q");
    ObjType pg = translate_type(g, p), qg = translate_type(g, q);
    return all_of({expect_eq(to_string(pg), "impl(impl(p,bot),bot)"),
                   expect_eq(to_string(translate_type(g, ObjType("and", {p, q}))), "and(" + to_string(pg) + "," + to_string(qg) + ")"),
                   expect_eq(to_string(translate_type(g, ObjType("or", {p, q}))),
                             "impl(and(impl(" + to_string(pg) + ",bot),impl(" + to_string(qg) + ",bot)),bot)"),
                   expect_eq(to_string(translate_type(g, ObjType("bot"))), "impl(impl(bot,bot),bot)")});
  });

  criterion(8, "parse/print round trips and fuzzed parsers", 120.0, [&] {
    for (const auto& n : list_builtins().languages) {
      const auto& s = get_language(n);
      if (!(parse_signature(print_signature(s)) == s)) return Outcome{false, "signature " + n};
    }
    for (const auto& n : list_builtins().translations) {
      const auto& x = get_translation(n);
      if (!(parse_translation(print_translation(x), x.source, x.target) == x)) return Outcome{false, "translation " + n};
    }
    for (const auto& n : list_builtins().languages) {
      const auto& sig = get_language(n);
      auto pool = small_types(sig.types());
      std::size_t done = 0;
      for (std::size_t i = 0; done < 1000; ++i) {
        if (i > 2000) return Outcome{false, "could not generate terms for " + n};
        Rng rng(case_seed(8, i));
        Context ctx;
        for (auto k = rng.below(4); k > 0; --k) ctx.push_back(pool[rng.below(pool.size())]);
        auto t = gen_term(sig, ctx, std::nullopt, rng, 6, GenConfig{}.retries);
        if (!t) continue;
        ++done;
        std::string text = print_term_file(ctx, *t);
        auto p = parse_term(text, sig);
        if (!(p.term == *t) || !(p.context == ctx)) return Outcome{false, n + ": " + text};
      }
    }
    // Byte fuzz: mutated valid inputs and raw random bytes; only SourceError may escape.
    const auto& pcf = get_language("PCF");
    std::string seeds[] = {kGoldenSource, print_signature(get_language("CPC")),
                           print_translation(get_translation("pcf2ulc-turing")),
                           print_translation(get_translation("cpc2ipc-godel-gentzen"))};
    Rng rng(88);
    std::size_t rejected = 0;
    for (int i = 0; i < 10000; ++i) {
      std::string s;
      if (i % 4 == 3) {
        for (auto k = rng.below(200); k > 0; --k) s.push_back(static_cast<char>(rng.below(256)));
      } else {
        s = seeds[rng.below(4)];
        for (auto k = rng.below(6) + 1; k > 0; --k) {
          std::size_t at = rng.below(s.size() + 1);
          switch (rng.below(3)) {
            case 0: s.insert(s.begin() + at, static_cast<char>(rng.below(256))); break;
            case 1: if (at < s.size()) s.erase(at, 1 + rng.below(8)); break;
            default: if (at < s.size()) s[at] = static_cast<char>(rng.below(256));
          }
        }
      }
      try { parse_term(s, pcf); } catch (const SourceError&) { ++rejected; }
      try { parse_signature(s); } catch (const SourceError&) { ++rejected; }
      try { parse_translation(s, pcf, ulc); } catch (const SourceError&) { ++rejected; }
      try { parse_translation(s, get_language("CPC"), get_language("IPC")); } catch (const SourceError&) { ++rejected; }
    }
    return Outcome{true, std::to_string(rejected) + " structured rejections"};
  });

  criterion(9, "Curry and Turing translations differ exactly at rec", 60.0, [&] {
    const TypedSignature no_rec = get_language("PCF").without({"rec"}, "PCF");
    const Translation& tu = get_translation("pcf2ulc-turing");
    const Translation& cu = get_translation("pcf2ulc-curry");
    auto pool = small_types(no_rec.types());
    std::size_t done = 0;
    for (std::size_t i = 0; done < 2000; ++i) {
      if (i > 4000) return Outcome{false, "could not generate 2000 terms"};
      Rng rng(case_seed(9, i));
      Context ctx;
      for (auto k = rng.below(4); k > 0; --k) ctx.push_back(pool[rng.below(pool.size())]);
      auto t = gen_term(no_rec, ctx, std::nullopt, rng, 6, GenConfig{}.retries);
      if (!t) continue;
      ++done;
      if (contains_arity(*t, "rec")) return Outcome{false, "generator produced rec"};
      if (!(translate_term(tu, ctx, *t) == translate_term(cu, ctx, *t))) return Outcome{false, print_term_file(ctx, *t)};
    }
    auto fixed = parse_term("context ; (rec [Nat] (abs [Nat,Nat] #0))", get_language("PCF"));
    if (translate_term(tu, {}, fixed.term) == translate_term(cu, {}, fixed.term))
      return Outcome{false, "outputs agree on a term with rec"};
    return Outcome{true, ""};
  });

  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
