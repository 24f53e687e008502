#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "initrans/signature.h"
#include "initrans/syntax.h"
#include "initrans/types.h"

namespace initrans {

/// A second-order target term used as the image of one source arity.
///
/// Leaves beyond ordinary variables:
///  - `meta(j)`     the translated j-th argument (1-based); `meta(0)` is the
///                  accumulator inside the step of a `repeat`.
///  - `macro(M)`    a closed target term shared between templates.
///  - `indexed(N, k)` the indexed macro N at the k-th source type parameter.
///  - `repeat(step, base)` for family arities: `step` iterated literal times
///                  over `base`.
/// Type positions of constructor nodes are open expressions over the target,
/// `$k` standing for the translated k-th type parameter.
class Template {
 public:
  enum class Kind { Var, Meta, Macro, Indexed, Con, Repeat };

  static Template var(std::size_t index);
  static Template meta(std::size_t j);
  static Template macro(std::string name);
  static Template indexed(std::string name, std::size_t param);
  static Template con(std::string arity, std::optional<std::uint64_t> literal,
                      std::vector<TypeExpr> inst, std::vector<Template> args);
  static Template con(std::string arity, std::vector<TypeExpr> inst = {},
                      std::vector<Template> args = {}) {
    return con(std::move(arity), std::nullopt, std::move(inst), std::move(args));
  }
  static Template repeat(Template step, Template base);

  Kind kind() const { return node_->kind; }
  /// Variable index, meta index or indexed-macro parameter.
  std::size_t number() const { return node_->number; }
  /// Arity name or macro name.
  const std::string& name() const { return node_->name; }
  const std::optional<std::uint64_t>& literal() const { return node_->literal; }
  const std::vector<TypeExpr>& inst() const { return node_->inst; }
  /// Sub-templates; for Repeat: {step, base}.
  const std::vector<Template>& args() const { return node_->args; }

  friend bool operator==(const Template& a, const Template& b);

 private:
  struct Node {
    Kind kind = Kind::Var;
    std::size_t number = 0;
    std::string name;
    std::optional<std::uint64_t> literal;
    std::vector<TypeExpr> inst;
    std::vector<Template> args;
  };
  explicit Template(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// A family of closed target terms indexed by source ground types, defined by
/// structural recursion: one clause per source type constructor. In a clause
/// for a constructor of arity m, `$i` is the translated i-th child and
/// `indexed(N, i)` recurses into the i-th child. The term at source type t has
/// type `scheme` with `$1` read as the translation of t.
struct IndexedMacro {
  std::string name;
  TypeExpr scheme = TypeExpr::var(1);
  std::map<std::string, Template> clauses;

  friend bool operator==(const IndexedMacro&, const IndexedMacro&) = default;
};

/// A representation of a source typed signature in the syntax of a target:
/// a type translation plus one template per source arity.
struct Translation {
  std::string name;
  TypedSignature source;
  TypedSignature target;
  TypeTranslation type_map;
  std::vector<std::pair<std::string, Term>> macros;  // declaration order
  std::vector<IndexedMacro> indexed;                 // declaration order
  std::map<std::string, Template> term_map;

  const Term* find_macro(std::string_view name) const;
  const IndexedMacro* find_indexed(std::string_view name) const;

  friend bool operator==(const Translation&, const Translation&) = default;
};

Translation identity_translation(const TypedSignature& sig);

/// Arguments handed to an opaque arity callback.
struct ArityCall {
  const TermArity& arity;
  std::optional<std::uint64_t> literal;
  std::span<const ObjType> source_inst;
  std::span<const ObjType> target_inst;
  const Context& target_context;
  std::span<const Term> args;  // translated, each in its extended context
};

/// A representation given by arbitrary code rather than templates. Every
/// callback result is typechecked at its expected type.
struct OpaqueRepresentation {
  TypedSignature source;
  TypedSignature target;
  TypeTranslation type_map;
  std::map<std::string, std::function<Term(const ArityCall&)>> arities;
};

Context retype_context(const TypeTranslation& g, const Context& ctx);
std::vector<ObjType> retype_inst(const TypeTranslation& g, std::span<const ObjType> inst);

ValidationReport validate_translation(const Translation& x);

/// The indexed macro `name` at source type `t`.
Term eval_indexed(const Translation& x, const std::string& name, const ObjType& t);

/// Plugs translated arguments into the template of `arity`.
/// `args[j]` lives in the translated binders of argument j followed by the
/// target context; each occurrence is weakened past extra template binders.
Term instantiate_template(const Translation& x, const TermArity& arity,
                          std::optional<std::uint64_t> literal,
                          std::span<const ObjType> source_inst,
                          std::span<const ObjType> target_inst, std::span<const Term> args);

/// The initial morphism: translates a term over `ctx` into a term over
/// retype_context(x.type_map, ctx).
Term translate_term(const Translation& x, const Context& ctx, const Term& t);
Term translate_term(const OpaqueRepresentation& x, const Context& ctx, const Term& t);

}  // namespace initrans
