#include "initrans/types.h"

#include <algorithm>
#include <stdexcept>

namespace initrans {

ObjType::ObjType(std::string ctor, std::vector<ObjType> children) {
  std::size_t depth = 0;
  for (const auto& c : children) depth = std::max(depth, c.depth());
  node_ = std::make_shared<const Node>(Node{std::move(ctor), std::move(children), depth + 1});
}

bool operator==(const ObjType& a, const ObjType& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->depth == b.node_->depth && a.node_->ctor == b.node_->ctor &&
         a.node_->children == b.node_->children;
}

std::strong_ordering operator<=>(const ObjType& a, const ObjType& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.ctor().compare(b.ctor()); c != 0) return c <=> 0;
  return std::lexicographical_compare_three_way(a.children().begin(), a.children().end(),
                                                b.children().begin(), b.children().end());
}

std::string to_string(const ObjType& t) {
  std::string out = t.ctor();
  if (!t.children().empty()) {
    out += '(';
    for (std::size_t i = 0; i < t.children().size(); ++i) {
      if (i) out += ',';
      out += to_string(t.children()[i]);
    }
    out += ')';
  }
  return out;
}

bool is_well_formed(const TypeSignature& types, const ObjType& t) {
  auto n = types.arity_of(t.ctor());
  if (!n || *n != t.children().size()) return false;
  return std::all_of(t.children().begin(), t.children().end(),
                     [&](const ObjType& c) { return is_well_formed(types, c); });
}

ObjType eval_type_expr(std::span<const ObjType> env, const TypeExpr& e) {
  if (e.is_var()) {
    if (e.var_index() > env.size()) {
      throw std::out_of_range("type variable $" + std::to_string(e.var_index()) +
                              " outside an environment of " + std::to_string(env.size()));
    }
    return env[e.var_index() - 1];
  }
  std::vector<ObjType> children;
  children.reserve(e.args().size());
  for (const auto& a : e.args()) children.push_back(eval_type_expr(env, a));
  return ObjType(e.ctor(), std::move(children));
}

TypeExpr subst_type_expr(const TypeExpr& e, std::span<const TypeExpr> args) {
  if (e.is_var()) {
    if (e.var_index() > args.size()) {
      throw std::out_of_range("type variable $" + std::to_string(e.var_index()) +
                              " has no substitute");
    }
    return args[e.var_index() - 1];
  }
  std::vector<TypeExpr> out;
  out.reserve(e.args().size());
  for (const auto& a : e.args()) out.push_back(subst_type_expr(a, args));
  return TypeExpr::app(e.ctor(), std::move(out));
}

TypeExpr to_type_expr(const ObjType& t) {
  std::vector<TypeExpr> args;
  args.reserve(t.children().size());
  for (const auto& c : t.children()) args.push_back(to_type_expr(c));
  return TypeExpr::app(t.ctor(), std::move(args));
}

TypeTranslation identity_type_translation(const TypeSignature& sig) {
  TypeTranslation g{sig, sig, {}};
  for (const auto& [name, n] : sig.constructors()) {
    std::vector<TypeExpr> vars;
    for (std::size_t k = 1; k <= n; ++k) vars.push_back(TypeExpr::var(k));
    g.templates.emplace(name, TypeExpr::app(name, std::move(vars)));
  }
  return g;
}

ValidationReport validate_type_translation(const TypeTranslation& g) {
  ValidationReport report;
  for (const auto& [name, n] : g.source.constructors()) {
    auto it = g.templates.find(name);
    if (it == g.templates.end()) {
      report.add(name, "no template for type constructor " + name);
      continue;
    }
    validate_type_expr(g.target, it->second, n, name, report);
  }
  for (const auto& [name, tpl] : g.templates) {
    if (!g.source.contains(name)) report.add(name, "template for unknown type constructor " + name);
  }
  return report;
}

namespace {

const TypeExpr& template_for(const TypeTranslation& g, const std::string& ctor) {
  auto it = g.templates.find(ctor);
  if (it == g.templates.end()) throw std::invalid_argument("no template for type constructor " + ctor);
  return it->second;
}

}  // namespace

ObjType translate_type(const TypeTranslation& g, const ObjType& t) {
  std::vector<ObjType> children;
  children.reserve(t.children().size());
  for (const auto& c : t.children()) children.push_back(translate_type(g, c));
  return eval_type_expr(children, template_for(g, t.ctor()));
}

TypeExpr translate_type_expr(const TypeTranslation& g, const TypeExpr& e) {
  if (e.is_var()) return e;
  std::vector<TypeExpr> args;
  args.reserve(e.args().size());
  for (const auto& a : e.args()) args.push_back(translate_type_expr(g, a));
  return subst_type_expr(template_for(g, e.ctor()), args);
}

}  // namespace initrans
