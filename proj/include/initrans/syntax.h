#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "initrans/signature.h"
#include "initrans/types.h"

namespace initrans {

/// Typing context. Position 0 is the innermost (most recently bound) variable.
using Context = std::vector<ObjType>;

/// An intrinsically typed term over a context, with 0-based de Bruijn
/// variables. A constructor node names its arity, carries the family literal
/// for family arities, the type instantiation (one ground type per degree) and
/// its sub-terms. Terms are immutable and share structure.
class Term {
 public:
  static Term var(std::size_t index);
  static Term con(std::string arity, std::optional<std::uint64_t> literal,
                  std::vector<ObjType> inst, std::vector<Term> args);
  static Term con(std::string arity, std::vector<ObjType> inst = {}, std::vector<Term> args = {}) {
    return con(std::move(arity), std::nullopt, std::move(inst), std::move(args));
  }

  bool is_var() const { return node_->is_var; }
  std::size_t index() const { return node_->index; }
  const std::string& arity() const { return node_->arity; }
  const std::optional<std::uint64_t>& literal() const { return node_->literal; }
  const std::vector<ObjType>& inst() const { return node_->inst; }
  const std::vector<Term>& args() const { return node_->args; }

  std::size_t size() const { return node_->size; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    bool is_var = false;
    std::size_t index = 0;
    std::string arity;
    std::optional<std::uint64_t> literal;
    std::vector<ObjType> inst;
    std::vector<Term> args;
    std::size_t size = 1;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// A typing failure, located by the sequence of argument positions leading
/// from the root to the offending node.
class TypeError : public std::runtime_error {
 public:
  TypeError(std::vector<std::size_t> path, const std::string& message)
      : std::runtime_error(message), path_(std::move(path)) {}

  const std::vector<std::size_t>& path() const { return path_; }

 private:
  std::vector<std::size_t> path_;
};

ObjType infer(const TypedSignature& sig, const Context& ctx, const Term& term);

/// Throws TypeError unless `term` has type `ty` in `ctx`.
void check(const TypedSignature& sig, const Context& ctx, const Term& term, const ObjType& ty);

/// `binders` evaluated at `inst`, prepended to `ctx`; the first binder becomes
/// position 0.
Context context_extend(const Context& ctx, std::span<const ObjType> inst,
                       std::span<const TypeExpr> binders);

/// Raises every free index >= cutoff by `amount`.
Term weaken(const TypedSignature& sig, const Term& term, std::size_t cutoff, std::size_t amount);

/// Relabels free variable i as f[i].
Term rename(const TypedSignature& sig, const Term& term, std::span<const std::size_t> f);

Term eta(const Context& ctx, std::size_t i);

/// A simultaneous substitution from `domain` to `codomain`: images[i] is a
/// term over `codomain` of type domain[i].
struct Substitution {
  Context domain;
  Context codomain;
  std::vector<Term> images;
};

Substitution identity_substitution(const Context& ctx);

/// Throws TypeError if some image does not have its required type.
void check_substitution(const TypedSignature& sig, const Substitution& s);

/// Capture-avoiding simultaneous substitution of images[i] for variable i.
Term substitute(const TypedSignature& sig, const Term& term, std::span<const Term> images);

inline Term substitute(const TypedSignature& sig, const Term& term, const Substitution& s) {
  return substitute(sig, term, s.images);
}

/// Kleisli composition: the substitution i -> substitute(first[i], second).
std::vector<Term> compose(const TypedSignature& sig, std::span<const Term> first,
                          std::span<const Term> second);

}  // namespace initrans
