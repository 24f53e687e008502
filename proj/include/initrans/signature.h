#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace initrans {

/// An open type expression: either the k-th type variable `$k` (1-based) or a
/// type constructor applied to argument expressions.
class TypeExpr {
 public:
  static TypeExpr var(std::size_t k);
  static TypeExpr app(std::string ctor, std::vector<TypeExpr> args = {});

  bool is_var() const { return node_->var != 0; }
  std::size_t var_index() const { return node_->var; }
  const std::string& ctor() const { return node_->ctor; }
  const std::vector<TypeExpr>& args() const { return node_->args; }

  friend bool operator==(const TypeExpr& a, const TypeExpr& b);

 private:
  struct Node {
    std::size_t var = 0;
    std::string ctor;
    std::vector<TypeExpr> args;
  };
  explicit TypeExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const TypeExpr& e);

/// Largest variable index occurring in `e`, 0 for a closed expression.
std::size_t min_degree(const TypeExpr& e);

/// An algebraic signature: constructor names with their argument counts, in
/// declaration order.
class TypeSignature {
 public:
  TypeSignature() = default;
  explicit TypeSignature(std::vector<std::pair<std::string, std::size_t>> ctors);

  const std::vector<std::pair<std::string, std::size_t>>& constructors() const { return ctors_; }
  std::optional<std::size_t> arity_of(std::string_view ctor) const;
  bool contains(std::string_view ctor) const { return arity_of(ctor).has_value(); }

  friend bool operator==(const TypeSignature& a, const TypeSignature& b) { return a.ctors_ == b.ctors_; }

 private:
  std::vector<std::pair<std::string, std::size_t>> ctors_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

struct ArgSpec {
  std::vector<TypeExpr> binders;
  TypeExpr body;

  friend bool operator==(const ArgSpec&, const ArgSpec&) = default;
};

/// Shape of a term constructor of degree `degree`: arguments with binder lists,
/// and a result type. A `family` arity stands for one constructor per natural
/// literal.
struct TermArity {
  std::string name;
  std::size_t degree = 0;
  bool family = false;
  std::vector<ArgSpec> args;
  TypeExpr result = TypeExpr::var(1);

  friend bool operator==(const TermArity&, const TermArity&) = default;
};

struct Violation {
  std::string subject;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string subject, std::string message) {
    violations.push_back({std::move(subject), std::move(message)});
  }
  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

std::string to_string(const ValidationReport& r);

/// A typed signature: type constructors, atoms (each an extra nullary type
/// constructor) and term arities.
class TypedSignature {
 public:
  TypedSignature() = default;
  TypedSignature(std::string name, std::vector<std::string> atoms,
                 TypeSignature declared_types, std::vector<TermArity> terms);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& atoms() const { return atoms_; }
  /// Type constructors as declared, without the atoms.
  const TypeSignature& declared_types() const { return declared_; }
  /// Atoms followed by the declared constructors.
  const TypeSignature& types() const { return types_; }
  const std::vector<TermArity>& terms() const { return terms_; }

  const TermArity* find_arity(std::string_view name) const;

  /// Copy with the named arities removed.
  TypedSignature without(const std::vector<std::string>& arity_names, std::string new_name) const;

  friend bool operator==(const TypedSignature& a, const TypedSignature& b) {
    return a.name_ == b.name_ && a.atoms_ == b.atoms_ && a.declared_ == b.declared_ &&
           a.terms_ == b.terms_;
  }

 private:
  std::string name_;
  std::vector<std::string> atoms_;
  TypeSignature declared_;
  TypeSignature types_;
  std::vector<TermArity> terms_;
  std::unordered_map<std::string, std::size_t> arity_index_;
};

/// Checks `e` against `types` at degree `degree`, appending to `report`.
void validate_type_expr(const TypeSignature& types, const TypeExpr& e, std::size_t degree,
                        const std::string& subject, ValidationReport& report);

ValidationReport validate_signature(const TypedSignature& sig);

}  // namespace initrans
