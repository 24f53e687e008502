#pragma once

#include <compare>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "initrans/signature.h"

namespace initrans {

/// A ground type: a constructor applied to ground children. Equality is
/// structural; the ordering (constructor name, then children) is only used to
/// make printing and generation deterministic.
class ObjType {
 public:
  ObjType() : ObjType("") {}
  explicit ObjType(std::string ctor, std::vector<ObjType> children = {});

  const std::string& ctor() const { return node_->ctor; }
  const std::vector<ObjType>& children() const { return node_->children; }
  std::size_t depth() const { return node_->depth; }

  friend bool operator==(const ObjType& a, const ObjType& b);
  friend std::strong_ordering operator<=>(const ObjType& a, const ObjType& b);

 private:
  struct Node {
    std::string ctor;
    std::vector<ObjType> children;
    std::size_t depth;
  };
  std::shared_ptr<const Node> node_;
};

std::string to_string(const ObjType& t);

bool is_well_formed(const TypeSignature& types, const ObjType& t);

/// Substitutes `env[k-1]` for `$k`. Throws std::out_of_range when `e`
/// mentions a variable beyond the environment.
ObjType eval_type_expr(std::span<const ObjType> env, const TypeExpr& e);

/// Substitutes `args[k-1]` for `$k` in an open expression.
TypeExpr subst_type_expr(const TypeExpr& e, std::span<const TypeExpr> args);

/// Reads a ground type as a closed expression.
TypeExpr to_type_expr(const ObjType& t);

/// A representation of one type signature in the ground types of another:
/// each source constructor of arity m maps to a target expression of degree m.
struct TypeTranslation {
  TypeSignature source;
  TypeSignature target;
  std::map<std::string, TypeExpr> templates;

  friend bool operator==(const TypeTranslation&, const TypeTranslation&) = default;
};

TypeTranslation identity_type_translation(const TypeSignature& sig);

ValidationReport validate_type_translation(const TypeTranslation& g);

/// The unique homomorphism from source ground types induced by `g`.
ObjType translate_type(const TypeTranslation& g, const ObjType& t);

/// Extension of translate_type to open expressions; variables are kept.
TypeExpr translate_type_expr(const TypeTranslation& g, const TypeExpr& e);

}  // namespace initrans
