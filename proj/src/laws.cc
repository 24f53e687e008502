#include "initrans/laws.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "initrans/surface.h"

namespace initrans {

void GenConfig::validate() const {
  if (cases == 0) throw std::invalid_argument("cases must be at least 1");
  if (max_depth == 0) throw std::invalid_argument("max_depth must be at least 1");
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  // Rejection keeps the draw unbiased.
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  for (;;) {
    std::uint64_t r = next();
    if (r < limit) return r % n;
  }
}

std::uint64_t case_seed(std::uint64_t seed, std::size_t index) {
  Rng mix(seed ^ (0xd1b54a32d192ed03ULL * (static_cast<std::uint64_t>(index) + 1)));
  return mix.next();
}

std::vector<ObjType> small_types(const TypeSignature& types) {
  std::vector<ObjType> nullary;
  for (const auto& [name, n] : types.constructors())
    if (n == 0) nullary.emplace_back(name);
  std::set<ObjType> out(nullary.begin(), nullary.end());
  for (const auto& [name, n] : types.constructors()) {
    if (n == 0 || nullary.empty()) continue;
    // All n-tuples over the nullary constructors, capped for wide constructors.
    std::vector<std::size_t> idx(n, 0);
    for (std::size_t produced = 0; produced < 4096; ++produced) {
      std::vector<ObjType> children;
      for (auto i : idx) children.push_back(nullary[i]);
      out.emplace(name, std::move(children));
      std::size_t k = 0;
      while (k < n && ++idx[k] == nullary.size()) idx[k++] = 0;
      if (k == n) break;
    }
  }
  return {out.begin(), out.end()};
}

namespace {

void add_subterms(const ObjType& t, std::set<ObjType>& out) {
  if (!out.insert(t).second) return;
  for (const auto& c : t.children()) add_subterms(c, out);
}

bool match(const TypeExpr& pattern, const ObjType& t, std::vector<std::optional<ObjType>>& env) {
  if (pattern.is_var()) {
    auto& slot = env[pattern.var_index() - 1];
    if (slot) return *slot == t;
    slot = t;
    return true;
  }
  if (pattern.ctor() != t.ctor() || pattern.args().size() != t.children().size()) return false;
  for (std::size_t i = 0; i < pattern.args().size(); ++i)
    if (!match(pattern.args()[i], t.children()[i], env)) return false;
  return true;
}

struct OutOfBudget {};

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

class Generator {
 public:
  Generator(const TypedSignature& sig, Rng& rng, std::size_t max_depth, std::size_t retries,
            std::vector<ObjType> pool)
      : sig_(sig), rng_(rng), max_depth_(max_depth), retries_(retries), pool_(std::move(pool)) {}

  std::optional<Term> run(const Context& ctx, const std::optional<ObjType>& goal) {
    try {
      return go(ctx, goal, 1);
    } catch (const OutOfBudget&) {
      return std::nullopt;
    }
  }

 private:
  struct Choice {
    bool is_var;
    std::size_t index;
  };

  std::optional<Term> go(const Context& ctx, const std::optional<ObjType>& goal, std::size_t depth) {
    std::vector<Choice> options;
    for (std::size_t i = 0; i < ctx.size(); ++i)
      if (!goal || ctx[i] == *goal) options.push_back({true, i});
    for (std::size_t a = 0; a < sig_.terms().size(); ++a) {
      const TermArity& arity = sig_.terms()[a];
      if (depth >= max_depth_ && !arity.args.empty()) continue;
      if (goal) {
        std::vector<std::optional<ObjType>> env(arity.degree);
        if (!match(arity.result, *goal, env)) continue;
      }
      options.push_back({false, a});
    }
    shuffle(options, rng_);
    for (const Choice& c : options) {
      if (c.is_var) return Term::var(c.index);
      if (auto t = build(sig_.terms()[c.index], ctx, goal, depth)) return t;
    }
    if (++dead_ends_ > retries_) throw OutOfBudget{};
    return std::nullopt;
  }

  std::optional<Term> build(const TermArity& a, const Context& ctx, const std::optional<ObjType>& goal,
                            std::size_t depth) {
    std::vector<std::optional<ObjType>> env(a.degree);
    if (goal) match(a.result, *goal, env);
    std::vector<ObjType> inst;
    inst.reserve(a.degree);
    for (auto& slot : env) {
      if (!slot) {
        if (pool_.empty()) return std::nullopt;
        slot = pool_[rng_.below(pool_.size())];
      }
      inst.push_back(*slot);
    }
    std::optional<std::uint64_t> literal;
    if (a.family) literal = rng_.below(4);
    std::vector<Term> args;
    args.reserve(a.args.size());
    for (const auto& spec : a.args) {
      Context inner = context_extend(ctx, inst, spec.binders);
      auto sub = go(inner, eval_type_expr(inst, spec.body), depth + 1);
      if (!sub) return std::nullopt;
      args.push_back(std::move(*sub));
    }
    return Term::con(a.name, literal, std::move(inst), std::move(args));
  }

  const TypedSignature& sig_;
  Rng& rng_;
  std::size_t max_depth_;
  std::size_t retries_;
  std::size_t dead_ends_ = 0;
  std::vector<ObjType> pool_;
};

std::vector<ObjType> type_pool(const TypedSignature& sig, const Context& ctx, const std::optional<ObjType>& goal) {
  auto base = small_types(sig.types());
  std::set<ObjType> pool(base.begin(), base.end());
  for (const auto& t : ctx) add_subterms(t, pool);
  if (goal) add_subterms(*goal, pool);
  return {pool.begin(), pool.end()};
}

}  // namespace

std::optional<Term> gen_term(const TypedSignature& sig, const Context& ctx,
                             const std::optional<ObjType>& goal, Rng& rng, std::size_t max_depth,
                             std::size_t retries) {
  Generator g(sig, rng, max_depth, retries, type_pool(sig, ctx, goal));
  return g.run(ctx, goal);
}

std::optional<Term> gen_term(const TypedSignature& sig, const Context& ctx,
                             const std::optional<ObjType>& goal, const GenConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  return gen_term(sig, ctx, goal, rng, cfg.max_depth, cfg.retries);
}

std::string to_string(const LawReport& r) {
  std::string out = "law: " + r.law + "\n";
  out += "cases: " + std::to_string(r.cases) + " (" + std::to_string(r.run()) + " run, " +
         std::to_string(r.skipped) + " skipped)\n";
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    out += "counterexample: case " + std::to_string(c.case_index) + ", " + c.law + "\n";
    out += "  " + c.detail + "\n";
    out += c.inputs;
  }
  out += std::string("result: ") + (r.passed() ? "pass" : "FAIL") + "\n";
  return out;
}

namespace {

// A generated context, a term over it, and a substitution out of it.
struct Case {
  Context gamma;
  Term term;
  Substitution sigma;
};

Context random_context(const std::vector<ObjType>& pool, Rng& rng, std::size_t max_len) {
  Context ctx;
  std::size_t n = rng.below(max_len + 1);
  for (std::size_t i = 0; i < n && !pool.empty(); ++i) ctx.push_back(pool[rng.below(pool.size())]);
  return ctx;
}

// Codomain contexts contain every domain type, so each image type is
// inhabited at least by a variable.
std::optional<Substitution> random_substitution(const TypedSignature& sig, const Context& domain,
                                                const std::vector<ObjType>& pool, Rng& rng,
                                                const GenConfig& cfg) {
  Context codomain = domain;
  Context extra = random_context(pool, rng, 2);
  codomain.insert(codomain.end(), extra.begin(), extra.end());
  shuffle(codomain, rng);
  Substitution s{domain, codomain, {}};
  std::size_t depth = std::max<std::size_t>(1, cfg.max_depth / 2);
  for (const auto& ty : domain) {
    auto image = gen_term(sig, codomain, ty, rng, depth, cfg.retries);
    if (!image) return std::nullopt;
    s.images.push_back(std::move(*image));
  }
  return s;
}

std::optional<Case> random_case(const TypedSignature& sig, const GenConfig& cfg, Rng& rng) {
  auto pool = small_types(sig.types());
  Context gamma = random_context(pool, rng, 3);
  auto term = gen_term(sig, gamma, std::nullopt, rng, cfg.max_depth, cfg.retries);
  if (!term) return std::nullopt;
  auto sigma = random_substitution(sig, gamma, pool, rng, cfg);
  if (!sigma) return std::nullopt;
  return Case{std::move(gamma), std::move(*term), std::move(*sigma)};
}

std::string show_substitution(const TypedSignature& sig, const std::string& name, const Substitution& s) {
  std::string out = "  " + name + " into context";
  for (const auto& t : s.codomain) out += " " + to_string(t);
  out += "\n";
  for (std::size_t i = 0; i < s.images.size(); ++i)
    out += "    #" + std::to_string(i) + " := " + print_term(sig, s.codomain, s.images[i]) + "\n";
  return out;
}

std::string show_case(const TypedSignature& sig, const Case& c) {
  std::string out = "  term: " + print_term_file(c.gamma, c.term);
  out += show_substitution(sig, "sigma", c.sigma);
  return out;
}

template <typename Body>
LawReport run_cases(std::string law, const GenConfig& cfg, std::size_t first_case, Body body) {
  cfg.validate();
  LawReport report{std::move(law), 0, 0, std::nullopt};
  for (std::size_t i = first_case; i < first_case + cfg.cases; ++i) {
    ++report.cases;
    Rng rng(case_seed(cfg.seed, i));
    std::optional<Counterexample> failure;
    if (!body(rng, i, failure)) {
      ++report.skipped;
      continue;
    }
    if (failure) {
      failure->case_index = i;
      report.counterexample = std::move(failure);
      break;
    }
  }
  return report;
}

Counterexample failure(std::string law, std::string detail, std::string inputs) {
  return Counterexample{0, std::move(law), std::move(detail), std::move(inputs)};
}

}  // namespace

LawReport check_monad_laws(const TypedSignature& sig, const GenConfig& cfg, const SubstituteFn& subst_fn,
                           std::size_t first_case) {
  SubstituteFn subst = subst_fn ? subst_fn : SubstituteFn([](const TypedSignature& s, const Term& t, std::span<const Term> im) {
    return substitute(s, t, im);
  });
  auto pool = small_types(sig.types());
  return run_cases("monad laws (" + sig.name() + ")", cfg, first_case,
                   [&](Rng& rng, std::size_t, std::optional<Counterexample>& out) {
    auto c = random_case(sig, cfg, rng);
    if (!c) return false;
    auto rho = random_substitution(sig, c->sigma.codomain, pool, rng, cfg);
    if (!rho) return false;
    std::string inputs = show_case(sig, *c) + show_substitution(sig, "rho", *rho);

    for (std::size_t i = 0; i < c->gamma.size(); ++i) {
      Term lhs = subst(sig, Term::var(i), c->sigma.images);
      if (!(lhs == c->sigma.images[i])) {
        out = failure("left unit", "variable #" + std::to_string(i) + " became " + print_term(sig, {}, lhs), inputs);
        return true;
      }
    }
    Substitution id = identity_substitution(c->gamma);
    Term same = subst(sig, c->term, id.images);
    if (!(same == c->term)) {
      out = failure("right unit", "identity substitution gave " + print_term(sig, {}, same), inputs);
      return true;
    }
    Term once = subst(sig, c->term, c->sigma.images);
    Term twice = subst(sig, once, rho->images);
    std::vector<Term> composed;
    for (const auto& im : c->sigma.images) composed.push_back(subst(sig, im, rho->images));
    Term together = subst(sig, c->term, composed);
    if (!(twice == together)) {
      out = failure("associativity",
                    print_term(sig, {}, twice) + " differs from " + print_term(sig, {}, together), inputs);
      return true;
    }
    try {
      ObjType before = infer(sig, c->gamma, c->term);
      ObjType after = infer(sig, c->sigma.codomain, once);
      if (!(before == after)) {
        out = failure("type preservation", to_string(before) + " became " + to_string(after), inputs);
      }
    } catch (const TypeError& e) {
      out = failure("type preservation", std::string("substituted term is ill-typed: ") + e.what(), inputs);
    }
    return true;
  });
}

LawReport check_translation_laws(const Translation& x, const GenConfig& cfg, std::size_t first_case) {
  return run_cases("translation laws (" + x.name + ")", cfg, first_case,
                   [&](Rng& rng, std::size_t, std::optional<Counterexample>& out) {
    auto c = random_case(x.source, cfg, rng);
    if (!c) return false;
    std::string inputs = show_case(x.source, *c);
    const TypedSignature& tgt = x.target;

    Term translated = translate_term(x, c->gamma, c->term);
    Context target_gamma = retype_context(x.type_map, c->gamma);
    try {
      ObjType expected = translate_type(x.type_map, infer(x.source, c->gamma, c->term));
      ObjType actual = infer(tgt, target_gamma, translated);
      if (!(expected == actual)) {
        out = failure("type preservation", "expected " + to_string(expected) + ", found " + to_string(actual), inputs);
        return true;
      }
    } catch (const TypeError& e) {
      out = failure("type preservation", std::string("translation is ill-typed: ") + e.what(), inputs);
      return true;
    }

    Term lhs = translate_term(x, c->sigma.codomain, substitute(x.source, c->term, c->sigma));
    std::vector<Term> images;
    for (const auto& im : c->sigma.images) images.push_back(translate_term(x, c->sigma.codomain, im));
    Term rhs = substitute(tgt, translated, images);
    if (!(lhs == rhs)) {
      out = failure("substitution square", print_term(tgt, {}, lhs) + " differs from " + print_term(tgt, {}, rhs), inputs);
      return true;
    }

    if (!c->gamma.empty()) {
      std::size_t i = rng.below(c->gamma.size());
      Term v = translate_term(x, c->gamma, Term::var(i));
      if (!(v == Term::var(i))) {
        out = failure("variable clause", "#" + std::to_string(i) + " became " + print_term(tgt, {}, v), inputs);
      }
    }
    return true;
  });
}

LawReport check_agreement(const Translation& x, const Translator& oracle, const GenConfig& cfg,
                          std::size_t first_case) {
  return run_cases("agreement (" + x.name + ")", cfg, first_case,
                   [&](Rng& rng, std::size_t, std::optional<Counterexample>& out) {
    auto pool = small_types(x.source.types());
    Context gamma = random_context(pool, rng, 3);
    auto term = gen_term(x.source, gamma, std::nullopt, rng, cfg.max_depth, cfg.retries);
    if (!term) return false;
    Term engine = translate_term(x, gamma, *term);
    Term reference = oracle(gamma, *term);
    if (!(engine == reference)) {
      out = failure("agreement",
                    "engine gave " + print_term(x.target, {}, engine) + ", oracle gave " + print_term(x.target, {}, reference),
                    "  term: " + print_term_file(gamma, *term));
    }
    return true;
  });
}

}  // namespace initrans
