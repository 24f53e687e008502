#include "initrans/signature.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace initrans {

TypeExpr TypeExpr::var(std::size_t k) {
  if (k == 0) throw std::invalid_argument("type variables are numbered from 1");
  return TypeExpr(std::make_shared<const Node>(Node{k, {}, {}}));
}

TypeExpr TypeExpr::app(std::string ctor, std::vector<TypeExpr> args) {
  return TypeExpr(std::make_shared<const Node>(Node{0, std::move(ctor), std::move(args)}));
}

bool operator==(const TypeExpr& a, const TypeExpr& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->var == b.node_->var && a.node_->ctor == b.node_->ctor &&
         a.node_->args == b.node_->args;
}

std::string to_string(const TypeExpr& e) {
  if (e.is_var()) return "$" + std::to_string(e.var_index());
  std::string out = e.ctor();
  if (!e.args().empty()) {
    out += '(';
    for (std::size_t i = 0; i < e.args().size(); ++i) {
      if (i) out += ',';
      out += to_string(e.args()[i]);
    }
    out += ')';
  }
  return out;
}

std::size_t min_degree(const TypeExpr& e) {
  if (e.is_var()) return e.var_index();
  std::size_t d = 0;
  for (const auto& a : e.args()) d = std::max(d, min_degree(a));
  return d;
}

TypeSignature::TypeSignature(std::vector<std::pair<std::string, std::size_t>> ctors)
    : ctors_(std::move(ctors)) {
  for (const auto& [name, n] : ctors_) index_.emplace(name, n);
}

std::optional<std::size_t> TypeSignature::arity_of(std::string_view ctor) const {
  auto it = index_.find(ctor);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string to_string(const ValidationReport& r) {
  std::string out;
  for (const auto& v : r.violations) {
    out += v.subject;
    out += ": ";
    out += v.message;
    out += '\n';
  }
  return out;
}

TypedSignature::TypedSignature(std::string name, std::vector<std::string> atoms,
                               TypeSignature declared_types, std::vector<TermArity> terms)
    : name_(std::move(name)),
      atoms_(std::move(atoms)),
      declared_(std::move(declared_types)),
      terms_(std::move(terms)) {
  std::vector<std::pair<std::string, std::size_t>> all;
  for (const auto& a : atoms_) all.emplace_back(a, 0);
  for (const auto& c : declared_.constructors()) all.push_back(c);
  types_ = TypeSignature(std::move(all));
  for (std::size_t i = 0; i < terms_.size(); ++i) arity_index_.emplace(terms_[i].name, i);
}

const TermArity* TypedSignature::find_arity(std::string_view name) const {
  auto it = arity_index_.find(std::string(name));
  return it == arity_index_.end() ? nullptr : &terms_[it->second];
}

TypedSignature TypedSignature::without(const std::vector<std::string>& arity_names,
                                       std::string new_name) const {
  std::vector<TermArity> kept;
  for (const auto& a : terms_) {
    if (std::find(arity_names.begin(), arity_names.end(), a.name) == arity_names.end())
      kept.push_back(a);
  }
  return TypedSignature(std::move(new_name), atoms_, declared_, std::move(kept));
}

void validate_type_expr(const TypeSignature& types, const TypeExpr& e, std::size_t degree,
                        const std::string& subject, ValidationReport& report) {
  if (e.is_var()) {
    if (e.var_index() > degree) {
      report.add(subject, "variable " + std::to_string(e.var_index()) + " exceeds degree " +
                              std::to_string(degree));
    }
    return;
  }
  auto n = types.arity_of(e.ctor());
  if (!n) {
    report.add(subject, "unknown type constructor " + e.ctor());
  } else if (*n != e.args().size()) {
    report.add(subject, e.ctor() + " expects " + std::to_string(*n) + " argument" +
                            (*n == 1 ? "" : "s") + ", got " + std::to_string(e.args().size()));
  }
  for (const auto& a : e.args()) validate_type_expr(types, a, degree, subject, report);
}

ValidationReport validate_signature(const TypedSignature& sig) {
  ValidationReport report;
  std::set<std::string> seen;
  for (const auto& [name, n] : sig.types().constructors()) {
    if (!seen.insert(name).second) report.add(name, "duplicate type constructor " + name);
  }
  std::set<std::string> arities;
  for (const auto& a : sig.terms()) {
    if (!arities.insert(a.name).second) report.add(a.name, "duplicate term arity " + a.name);
    for (std::size_t j = 0; j < a.args.size(); ++j) {
      for (const auto& b : a.args[j].binders) validate_type_expr(sig.types(), b, a.degree, a.name, report);
      validate_type_expr(sig.types(), a.args[j].body, a.degree, a.name, report);
    }
    validate_type_expr(sig.types(), a.result, a.degree, a.name, report);
  }
  return report;
}

}  // namespace initrans
