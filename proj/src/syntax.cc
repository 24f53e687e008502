#include "initrans/syntax.h"

#include <numeric>

namespace initrans {

Term Term::var(std::size_t index) {
  Node n;
  n.is_var = true;
  n.index = index;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::con(std::string arity, std::optional<std::uint64_t> literal, std::vector<ObjType> inst,
               std::vector<Term> args) {
  Node n;
  n.arity = std::move(arity);
  n.literal = literal;
  n.inst = std::move(inst);
  n.args = std::move(args);
  for (const auto& a : n.args) n.size += a.size();
  return Term(std::make_shared<const Node>(std::move(n)));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.is_var != y.is_var || x.size != y.size) return false;
  if (x.is_var) return x.index == y.index;
  return x.arity == y.arity && x.literal == y.literal && x.inst == y.inst && x.args == y.args;
}

namespace {

std::string plural(std::size_t n, const char* word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

ObjType infer_at(const TypedSignature& sig, const Context& ctx, const Term& t,
                 std::vector<std::size_t>& path) {
  if (t.is_var()) {
    if (t.index() >= ctx.size()) throw TypeError(path, "unbound index " + std::to_string(t.index()));
    return ctx[t.index()];
  }
  const TermArity* a = sig.find_arity(t.arity());
  if (!a) throw TypeError(path, "unknown arity " + t.arity());
  if (a->family && !t.literal()) throw TypeError(path, a->name + " requires a family literal");
  if (!a->family && t.literal()) throw TypeError(path, a->name + " takes no family literal");
  if (t.inst().size() != a->degree) {
    throw TypeError(path, a->name + " expects " + plural(a->degree, "type argument") + ", got " +
                              std::to_string(t.inst().size()));
  }
  for (const auto& ty : t.inst()) {
    if (!is_well_formed(sig.types(), ty)) throw TypeError(path, "ill-formed type " + to_string(ty));
  }
  if (t.args().size() != a->args.size()) {
    throw TypeError(path, a->name + " expects " + plural(a->args.size(), "argument") + ", got " +
                              std::to_string(t.args().size()));
  }
  for (std::size_t j = 0; j < a->args.size(); ++j) {
    const auto& spec = a->args[j];
    Context inner = context_extend(ctx, t.inst(), spec.binders);
    path.push_back(j);
    ObjType expected = eval_type_expr(t.inst(), spec.body);
    ObjType actual = infer_at(sig, inner, t.args()[j], path);
    if (!(actual == expected)) {
      throw TypeError(path, "expected " + to_string(expected) + ", found " + to_string(actual));
    }
    path.pop_back();
  }
  return eval_type_expr(t.inst(), a->result);
}

const TermArity& arity_or_throw(const TypedSignature& sig, const Term& t) {
  const TermArity* a = sig.find_arity(t.arity());
  if (!a || a->args.size() != t.args().size()) {
    throw std::invalid_argument("term does not match signature " + sig.name() + " at " + t.arity());
  }
  return *a;
}

Term weaken_at(const TypedSignature& sig, const Term& t, std::size_t cutoff, std::size_t amount) {
  if (t.is_var()) return t.index() < cutoff ? t : Term::var(t.index() + amount);
  const TermArity& a = arity_or_throw(sig, t);
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (std::size_t j = 0; j < t.args().size(); ++j)
    args.push_back(weaken_at(sig, t.args()[j], cutoff + a.args[j].binders.size(), amount));
  return Term::con(t.arity(), t.literal(), t.inst(), std::move(args));
}

Term rename_at(const TypedSignature& sig, const Term& t, std::span<const std::size_t> f,
               std::size_t depth) {
  if (t.is_var()) {
    if (t.index() < depth) return t;
    std::size_t i = t.index() - depth;
    if (i >= f.size()) throw std::out_of_range("renaming undefined at " + std::to_string(i));
    return Term::var(f[i] + depth);
  }
  const TermArity& a = arity_or_throw(sig, t);
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (std::size_t j = 0; j < t.args().size(); ++j)
    args.push_back(rename_at(sig, t.args()[j], f, depth + a.args[j].binders.size()));
  return Term::con(t.arity(), t.literal(), t.inst(), std::move(args));
}

// Substitution under `depth` binders: indices below depth are bound locally,
// the others are replaced by their image weakened past the binders.
Term substitute_at(const TypedSignature& sig, const Term& t, std::span<const Term> images,
                   std::size_t depth) {
  if (t.is_var()) {
    if (t.index() < depth) return t;
    std::size_t i = t.index() - depth;
    if (i >= images.size()) throw std::out_of_range("substitution undefined at " + std::to_string(i));
    return depth == 0 ? images[i] : weaken_at(sig, images[i], 0, depth);
  }
  const TermArity& a = arity_or_throw(sig, t);
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (std::size_t j = 0; j < t.args().size(); ++j)
    args.push_back(substitute_at(sig, t.args()[j], images, depth + a.args[j].binders.size()));
  return Term::con(t.arity(), t.literal(), t.inst(), std::move(args));
}

}  // namespace

ObjType infer(const TypedSignature& sig, const Context& ctx, const Term& term) {
  std::vector<std::size_t> path;
  return infer_at(sig, ctx, term, path);
}

void check(const TypedSignature& sig, const Context& ctx, const Term& term, const ObjType& ty) {
  ObjType actual = infer(sig, ctx, term);
  if (!(actual == ty)) throw TypeError({}, "expected " + to_string(ty) + ", found " + to_string(actual));
}

Context context_extend(const Context& ctx, std::span<const ObjType> inst,
                       std::span<const TypeExpr> binders) {
  if (binders.empty()) return ctx;
  Context out;
  out.reserve(binders.size() + ctx.size());
  for (const auto& b : binders) out.push_back(eval_type_expr(inst, b));
  out.insert(out.end(), ctx.begin(), ctx.end());
  return out;
}

Term weaken(const TypedSignature& sig, const Term& term, std::size_t cutoff, std::size_t amount) {
  if (amount == 0) return term;
  return weaken_at(sig, term, cutoff, amount);
}

Term rename(const TypedSignature& sig, const Term& term, std::span<const std::size_t> f) {
  return rename_at(sig, term, f, 0);
}

Term eta(const Context& ctx, std::size_t i) {
  if (i >= ctx.size()) {
    throw std::out_of_range("index " + std::to_string(i) + " outside a context of " +
                            std::to_string(ctx.size()));
  }
  return Term::var(i);
}

Substitution identity_substitution(const Context& ctx) {
  Substitution s{ctx, ctx, {}};
  s.images.reserve(ctx.size());
  for (std::size_t i = 0; i < ctx.size(); ++i) s.images.push_back(Term::var(i));
  return s;
}

void check_substitution(const TypedSignature& sig, const Substitution& s) {
  if (s.images.size() != s.domain.size()) {
    throw TypeError({}, "substitution has " + std::to_string(s.images.size()) + " images for " +
                            std::to_string(s.domain.size()) + " variables");
  }
  for (std::size_t i = 0; i < s.images.size(); ++i) {
    ObjType actual = infer(sig, s.codomain, s.images[i]);
    if (!(actual == s.domain[i])) {
      throw TypeError({}, "image " + std::to_string(i) + ": expected " + to_string(s.domain[i]) +
                              ", found " + to_string(actual));
    }
  }
}

Term substitute(const TypedSignature& sig, const Term& term, std::span<const Term> images) {
  return substitute_at(sig, term, images, 0);
}

std::vector<Term> compose(const TypedSignature& sig, std::span<const Term> first,
                          std::span<const Term> second) {
  std::vector<Term> out;
  out.reserve(first.size());
  for (const auto& t : first) out.push_back(substitute(sig, t, second));
  return out;
}

}  // namespace initrans
