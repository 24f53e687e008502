#include "initrans/translate.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace initrans {

Template Template::var(std::size_t index) {
  Node n;
  n.kind = Kind::Var;
  n.number = index;
  return Template(std::make_shared<const Node>(std::move(n)));
}

Template Template::meta(std::size_t j) {
  Node n;
  n.kind = Kind::Meta;
  n.number = j;
  return Template(std::make_shared<const Node>(std::move(n)));
}

Template Template::macro(std::string name) {
  Node n;
  n.kind = Kind::Macro;
  n.name = std::move(name);
  return Template(std::make_shared<const Node>(std::move(n)));
}

Template Template::indexed(std::string name, std::size_t param) {
  Node n;
  n.kind = Kind::Indexed;
  n.name = std::move(name);
  n.number = param;
  return Template(std::make_shared<const Node>(std::move(n)));
}

Template Template::con(std::string arity, std::optional<std::uint64_t> literal,
                       std::vector<TypeExpr> inst, std::vector<Template> args) {
  Node n;
  n.kind = Kind::Con;
  n.name = std::move(arity);
  n.literal = literal;
  n.inst = std::move(inst);
  n.args = std::move(args);
  return Template(std::make_shared<const Node>(std::move(n)));
}

Template Template::repeat(Template step, Template base) {
  Node n;
  n.kind = Kind::Repeat;
  n.args = {std::move(step), std::move(base)};
  return Template(std::make_shared<const Node>(std::move(n)));
}

bool operator==(const Template& a, const Template& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.number == y.number && x.name == y.name && x.literal == y.literal &&
         x.inst == y.inst && x.args == y.args;
}

const Term* Translation::find_macro(std::string_view name) const {
  for (const auto& [n, t] : macros)
    if (n == name) return &t;
  return nullptr;
}

const IndexedMacro* Translation::find_indexed(std::string_view name) const {
  for (const auto& m : indexed)
    if (m.name == name) return &m;
  return nullptr;
}

Translation identity_translation(const TypedSignature& sig) {
  Translation x{"identity", sig, sig, identity_type_translation(sig.types()), {}, {}, {}};
  for (const auto& a : sig.terms()) {
    if (a.family) throw std::invalid_argument("identity translation of family arity " + a.name);
    std::vector<TypeExpr> inst;
    for (std::size_t k = 1; k <= a.degree; ++k) inst.push_back(TypeExpr::var(k));
    std::vector<Template> args;
    for (std::size_t j = 1; j <= a.args.size(); ++j) args.push_back(Template::meta(j));
    x.term_map.emplace(a.name, Template::con(a.name, std::move(inst), std::move(args)));
  }
  return x;
}

Context retype_context(const TypeTranslation& g, const Context& ctx) {
  Context out;
  out.reserve(ctx.size());
  for (const auto& t : ctx) out.push_back(translate_type(g, t));
  return out;
}

std::vector<ObjType> retype_inst(const TypeTranslation& g, std::span<const ObjType> inst) {
  std::vector<ObjType> out;
  out.reserve(inst.size());
  for (const auto& t : inst) out.push_back(translate_type(g, t));
  return out;
}

namespace {

struct TemplateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Typing environment for checking one template at one instantiation.
struct CheckEnv {
  const Translation& x;
  std::span<const ObjType> types;    // values of $1..$n in the target
  const TermArity* source = nullptr;  // arity whose template is checked
  bool allow_repeat = false;
  std::optional<ObjType> hole;  // type of ?0 inside a repeat step
  std::size_t hole_depth = 0;
};

ObjType eval_checked(const CheckEnv& env, const TypeExpr& e) {
  ValidationReport r;
  validate_type_expr(env.x.target.types(), e, env.types.size(), "", r);
  if (!r.ok()) throw TemplateError(r.violations.front().message + " in " + to_string(e));
  return eval_type_expr(env.types, e);
}

ObjType check_template(CheckEnv& env, const std::vector<ObjType>& stack, const Template& t) {
  switch (t.kind()) {
    case Template::Kind::Var:
      if (t.number() >= stack.size()) {
        throw TemplateError("variable #" + std::to_string(t.number()) +
                            " is not bound inside the template");
      }
      return stack[t.number()];
    case Template::Kind::Meta: {
      if (t.number() == 0) {
        if (!env.hole) throw TemplateError("?0 outside the step of a repeat");
        return *env.hole;
      }
      if (!env.source || t.number() > env.source->args.size()) {
        throw TemplateError("Meta(" + std::to_string(t.number()) + ") has no matching argument");
      }
      const ArgSpec& spec = env.source->args[t.number() - 1];
      if (stack.size() < spec.binders.size()) {
        throw TemplateError("binder context mismatch at Meta(" + std::to_string(t.number()) + ")");
      }
      for (std::size_t b = 0; b < spec.binders.size(); ++b) {
        ObjType want = eval_type_expr(env.types, translate_type_expr(env.x.type_map, spec.binders[b]));
        if (!(stack[b] == want)) {
          throw TemplateError("binder context mismatch at Meta(" + std::to_string(t.number()) +
                              "): binder " + std::to_string(b) + " is " + to_string(stack[b]) +
                              ", expected " + to_string(want));
        }
      }
      return eval_type_expr(env.types, translate_type_expr(env.x.type_map, spec.body));
    }
    case Template::Kind::Macro: {
      const Term* m = env.x.find_macro(t.name());
      if (!m) throw TemplateError("unknown macro " + t.name());
      try {
        return infer(env.x.target, {}, *m);
      } catch (const TypeError& e) {
        throw TemplateError("macro " + t.name() + " is ill-typed: " + e.what());
      }
    }
    case Template::Kind::Indexed: {
      const IndexedMacro* m = env.x.find_indexed(t.name());
      if (!m) throw TemplateError("unknown indexed macro " + t.name());
      if (t.number() == 0 || t.number() > env.types.size()) {
        throw TemplateError("indexed macro " + t.name() + " at missing parameter $" +
                            std::to_string(t.number()));
      }
      return eval_type_expr(env.types.subspan(t.number() - 1, 1), m->scheme);
    }
    case Template::Kind::Repeat: {
      if (!env.allow_repeat) throw TemplateError("repeat outside the template of a family arity");
      ObjType base = check_template(env, stack, t.args()[1]);
      auto saved = env.hole;
      auto saved_depth = env.hole_depth;
      env.hole = base;
      env.hole_depth = stack.size();
      ObjType step = check_template(env, stack, t.args()[0]);
      env.hole = saved;
      env.hole_depth = saved_depth;
      if (!(step == base)) {
        throw TemplateError("repeat step has type " + to_string(step) + " but its base has type " +
                            to_string(base));
      }
      return base;
    }
    case Template::Kind::Con:
      break;
  }
  const TermArity* a = env.x.target.find_arity(t.name());
  if (!a) throw TemplateError("unknown target arity " + t.name());
  if (a->family != t.literal().has_value()) {
    throw TemplateError(t.name() + (a->family ? " requires a family literal" : " takes no family literal"));
  }
  if (t.inst().size() != a->degree || t.args().size() != a->args.size()) {
    throw TemplateError(t.name() + " expects " + std::to_string(a->degree) + " type argument(s) and " +
                        std::to_string(a->args.size()) + " argument(s)");
  }
  std::vector<ObjType> inst;
  inst.reserve(t.inst().size());
  for (const auto& e : t.inst()) inst.push_back(eval_checked(env, e));
  for (std::size_t j = 0; j < a->args.size(); ++j) {
    const ArgSpec& spec = a->args[j];
    std::vector<ObjType> inner = context_extend(stack, inst, spec.binders);
    ObjType expected = eval_type_expr(inst, spec.body);
    ObjType actual = check_template(env, inner, t.args()[j]);
    if (!(actual == expected)) {
      throw TemplateError("argument " + std::to_string(j + 1) + " of " + t.name() + ": expected " +
                          to_string(expected) + ", found " + to_string(actual));
    }
  }
  return eval_type_expr(inst, a->result);
}

bool mentions_repeat_hole(const Template& t) {
  if (t.kind() == Template::Kind::Meta) return t.number() == 0;
  if (t.kind() == Template::Kind::Repeat) return false;
  return std::any_of(t.args().begin(), t.args().end(), mentions_repeat_hole);
}

// Instantiations at which a template of the given degree is checked. When
// every type template is closed, the translated parameters range over the
// finite image of the type map and all combinations are enumerated; otherwise
// each parameter is a fresh opaque constant `$k`.
std::vector<std::vector<ObjType>> checking_instances(const Translation& x, std::size_t degree) {
  const auto& tpls = x.type_map.templates;
  bool closed = !tpls.empty() && std::all_of(tpls.begin(), tpls.end(), [](const auto& kv) {
    return min_degree(kv.second) == 0;
  });
  std::vector<std::vector<ObjType>> out;
  if (closed) {
    std::set<ObjType> image;
    for (const auto& [name, e] : tpls) image.insert(eval_type_expr({}, e));
    std::size_t combos = 1;
    for (std::size_t k = 0; k < degree && combos <= 4096; ++k) combos *= image.size();
    if (combos <= 4096) {
      std::vector<ObjType> values(image.begin(), image.end());
      out.emplace_back();
      for (std::size_t k = 0; k < degree; ++k) {
        std::vector<std::vector<ObjType>> next;
        for (const auto& prefix : out) {
          for (const auto& v : values) {
            auto p = prefix;
            p.push_back(v);
            next.push_back(std::move(p));
          }
        }
        out = std::move(next);
      }
      return out;
    }
  }
  std::vector<ObjType> opaque;
  for (std::size_t k = 1; k <= degree; ++k) opaque.emplace_back("$" + std::to_string(k));
  out.push_back(std::move(opaque));
  return out;
}

void validate_closed_type_expr(const Translation& x, const TypeExpr& e, std::size_t degree,
                               const std::string& subject, ValidationReport& report) {
  validate_type_expr(x.target.types(), e, degree, subject, report);
}

}  // namespace

ValidationReport validate_translation(const Translation& x) {
  ValidationReport report = validate_type_translation(x.type_map);
  if (!(x.type_map.source == x.source.types())) {
    report.add(x.name, "type map source differs from the types of " + x.source.name());
  }
  if (!(x.type_map.target == x.target.types())) {
    report.add(x.name, "type map target differs from the types of " + x.target.name());
  }
  if (!report.ok()) return report;

  std::set<std::string> names;
  for (const auto& [name, term] : x.macros) {
    if (!names.insert(name).second) report.add(name, "duplicate macro " + name);
    try {
      infer(x.target, {}, term);
    } catch (const TypeError& e) {
      report.add(name, std::string("macro is not a closed well-typed term: ") + e.what());
    }
  }

  for (const auto& m : x.indexed) {
    if (!names.insert(m.name).second) report.add(m.name, "duplicate macro " + m.name);
    validate_closed_type_expr(x, m.scheme, 1, m.name, report);
  }
  if (!report.ok()) return report;

  for (const auto& m : x.indexed) {
    for (const auto& [ctor, n] : x.source.types().constructors()) {
      auto it = m.clauses.find(ctor);
      if (it == m.clauses.end()) {
        report.add(m.name, "no clause for type constructor " + ctor);
        continue;
      }
      std::vector<ObjType> children;
      for (std::size_t k = 1; k <= n; ++k) children.emplace_back("$" + std::to_string(k));
      ObjType at = eval_type_expr(children, x.type_map.templates.at(ctor));
      ObjType expected = eval_type_expr(std::span<const ObjType>(&at, 1), m.scheme);
      CheckEnv env{x, children, nullptr, false, std::nullopt, 0};
      try {
        ObjType actual = check_template(env, {}, it->second);
        if (!(actual == expected)) {
          report.add(m.name + "/" + ctor,
                     "clause has type " + to_string(actual) + ", expected " + to_string(expected));
        }
      } catch (const TemplateError& e) {
        report.add(m.name + "/" + ctor, e.what());
      }
    }
    for (const auto& [ctor, clause] : m.clauses) {
      if (!x.source.types().contains(ctor)) report.add(m.name, "clause for unknown type constructor " + ctor);
    }
  }

  for (const auto& a : x.source.terms()) {
    auto it = x.term_map.find(a.name);
    if (it == x.term_map.end()) {
      report.add(a.name, "no template for " + a.name);
      continue;
    }
    for (const auto& types : checking_instances(x, a.degree)) {
      CheckEnv env{x, types, &a, a.family, std::nullopt, 0};
      try {
        ObjType expected = eval_type_expr(types, translate_type_expr(x.type_map, a.result));
        ObjType actual = check_template(env, {}, it->second);
        if (!(actual == expected)) {
          report.add(a.name, "template has type " + to_string(actual) + ", expected " + to_string(expected));
          break;
        }
      } catch (const TemplateError& e) {
        report.add(a.name, e.what());
        break;
      }
    }
  }
  for (const auto& [name, tpl] : x.term_map) {
    if (!x.source.find_arity(name)) report.add(name, "template for unknown arity " + name);
  }
  return report;
}

namespace {

struct Plug {
  const Translation& x;
  const TermArity* source;
  std::optional<std::uint64_t> literal;
  std::span<const ObjType> source_inst;
  std::span<const ObjType> types;
  std::span<const Term> args;
  const Term* hole = nullptr;
  std::size_t hole_depth = 0;
};

constexpr std::uint64_t kMaxRepeat = 1'000'000;

Term plug(Plug& p, const Template& t, std::size_t depth) {
  switch (t.kind()) {
    case Template::Kind::Var:
      return Term::var(t.number());
    case Template::Kind::Meta: {
      if (t.number() == 0) {
        if (!p.hole) throw std::logic_error("?0 outside a repeat step");
        return weaken(p.x.target, *p.hole, 0, depth - p.hole_depth);
      }
      if (!p.source || t.number() > p.args.size()) {
        throw std::logic_error("template refers to missing argument " + std::to_string(t.number()));
      }
      std::size_t bound = p.source->args[t.number() - 1].binders.size();
      if (depth < bound) throw std::logic_error("template binder context mismatch");
      return weaken(p.x.target, p.args[t.number() - 1], bound, depth - bound);
    }
    case Template::Kind::Macro: {
      const Term* m = p.x.find_macro(t.name());
      if (!m) throw std::logic_error("unknown macro " + t.name());
      return *m;
    }
    case Template::Kind::Indexed:
      if (t.number() == 0 || t.number() > p.source_inst.size()) {
        throw std::logic_error("indexed macro at missing parameter");
      }
      return eval_indexed(p.x, t.name(), p.source_inst[t.number() - 1]);
    case Template::Kind::Repeat: {
      if (!p.literal) throw std::logic_error("repeat without a family literal");
      if (*p.literal > kMaxRepeat) throw std::length_error("family literal too large to expand");
      Term acc = plug(p, t.args()[1], depth);
      const Term* saved = p.hole;
      std::size_t saved_depth = p.hole_depth;
      for (std::uint64_t i = 0; i < *p.literal; ++i) {
        p.hole = &acc;
        p.hole_depth = depth;
        acc = plug(p, t.args()[0], depth);
      }
      p.hole = saved;
      p.hole_depth = saved_depth;
      return acc;
    }
    case Template::Kind::Con:
      break;
  }
  const TermArity* a = p.x.target.find_arity(t.name());
  if (!a) throw std::logic_error("unknown target arity " + t.name());
  std::vector<ObjType> inst;
  inst.reserve(t.inst().size());
  for (const auto& e : t.inst()) inst.push_back(eval_type_expr(p.types, e));
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (std::size_t j = 0; j < t.args().size(); ++j)
    args.push_back(plug(p, t.args()[j], depth + a->args[j].binders.size()));
  return Term::con(t.name(), t.literal(), std::move(inst), std::move(args));
}

}  // namespace

Term eval_indexed(const Translation& x, const std::string& name, const ObjType& t) {
  const IndexedMacro* m = x.find_indexed(name);
  if (!m) throw std::invalid_argument("unknown indexed macro " + name);
  auto it = m->clauses.find(t.ctor());
  if (it == m->clauses.end()) throw std::invalid_argument(name + " has no clause for " + t.ctor());
  std::vector<ObjType> images = retype_inst(x.type_map, t.children());
  Plug p{x, nullptr, std::nullopt, t.children(), images, {}};
  return plug(p, it->second, 0);
}

Term instantiate_template(const Translation& x, const TermArity& arity,
                          std::optional<std::uint64_t> literal,
                          std::span<const ObjType> source_inst,
                          std::span<const ObjType> target_inst, std::span<const Term> args) {
  auto it = x.term_map.find(arity.name);
  if (it == x.term_map.end()) throw std::invalid_argument("no template for " + arity.name);
  Plug p{x, &arity, literal, source_inst, target_inst, args};
  return plug(p, it->second, 0);
}

namespace {

Term translate_rec(const Translation& x, const Term& t) {
  if (t.is_var()) return t;
  const TermArity* a = x.source.find_arity(t.arity());
  if (!a) throw TypeError({}, "unknown arity " + t.arity());
  std::vector<ObjType> inst = retype_inst(x.type_map, t.inst());
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& arg : t.args()) args.push_back(translate_rec(x, arg));
  return instantiate_template(x, *a, t.literal(), t.inst(), inst, args);
}

Term translate_rec(const OpaqueRepresentation& x, const Context& ctx, const Term& t,
                   std::vector<std::size_t>& path) {
  if (t.is_var()) return t;
  const TermArity* a = x.source.find_arity(t.arity());
  if (!a) throw TypeError(path, "unknown arity " + t.arity());
  auto cb = x.arities.find(a->name);
  if (cb == x.arities.end()) throw TypeError(path, "no representation for " + a->name);
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (std::size_t j = 0; j < t.args().size(); ++j) {
    path.push_back(j);
    args.push_back(translate_rec(x, context_extend(ctx, t.inst(), a->args[j].binders), t.args()[j], path));
    path.pop_back();
  }
  std::vector<ObjType> inst = retype_inst(x.type_map, t.inst());
  Context target_ctx = retype_context(x.type_map, ctx);
  Term out = cb->second(ArityCall{*a, t.literal(), t.inst(), inst, target_ctx, args});
  ObjType expected = eval_type_expr(inst, translate_type_expr(x.type_map, a->result));
  ObjType actual;
  try {
    actual = infer(x.target, target_ctx, out);
  } catch (const TypeError& e) {
    throw TypeError(path, "representation of " + a->name + " produced an ill-typed term: " + e.what());
  }
  if (!(actual == expected)) {
    throw TypeError(path, "representation of " + a->name + ": expected " + to_string(expected) +
                              ", found " + to_string(actual));
  }
  return out;
}

}  // namespace

Term translate_term(const Translation& x, const Context&, const Term& t) {
  return translate_rec(x, t);
}

Term translate_term(const OpaqueRepresentation& x, const Context& ctx, const Term& t) {
  std::vector<std::size_t> path;
  return translate_rec(x, ctx, t, path);
}

}  // namespace initrans
