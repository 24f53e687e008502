#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "initrans/builtins.h"
#include "initrans/laws.h"
#include "initrans/surface.h"

namespace py = pybind11;
using namespace initrans;

namespace {

Style style_of(const std::string& s) {
  if (s == "canonical") return Style::Canonical;
  if (s == "paper") return Style::Paper;
  throw py::value_error("style must be 'canonical' or 'paper'");
}

GenConfig config(std::uint64_t seed, std::size_t cases, std::size_t depth) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.cases = cases;
  cfg.max_depth = depth;
  cfg.validate();
  return cfg;
}

py::dict report_dict(const LawReport& r) {
  py::dict d;
  d["law"] = r.law;
  d["cases"] = r.cases;
  d["skipped"] = r.skipped;
  d["passed"] = r.passed();
  d["counterexample"] = r.counterexample ? py::object(py::str(r.counterexample->detail)) : py::none();
  d["text"] = to_string(r);
  return d;
}

}  // namespace

PYBIND11_MODULE(_initrans, m) {
  m.doc() = "Typed initial syntax, substitution and translations between languages";

  py::register_exception<SourceError>(m, "SourceError", PyExc_ValueError);

  m.def("languages", [] { return list_builtins().languages; });
  m.def("translations", [] { return list_builtins().translations; });

  m.def("show_language", [](const std::string& name) { return print_signature(get_language(name)); },
        py::arg("name"), "The builtin signature in .sig format.");
  m.def("show_translation", [](const std::string& name) { return print_translation(get_translation(name)); },
        py::arg("name"), "The builtin translation in .xlat format.");

  m.def("normalize_signature", [](const std::string& text) { return print_signature(parse_signature(text)); },
        py::arg("text"), "Parse and validate a .sig text, returning it re-printed.");

  m.def("check", [](const std::string& lang, const std::string& text) {
          return to_string(parse_term(text, get_language(lang)).type);
        }, py::arg("lang"), py::arg("term"), "Typecheck a .term text; returns its type.");

  m.def("translate", [](const std::string& name, const std::string& text, const std::string& style) {
          const Translation& x = get_translation(name);
          ParsedTerm p = parse_term(text, x.source);
          Term out = translate_term(x, p.context, p.term);
          return print_term(x.target, retype_context(x.type_map, p.context), out, style_of(style));
        }, py::arg("translation"), py::arg("term"), py::arg("style") = "canonical");

  m.def("substitute", [](const std::string& lang, const std::string& text, const std::vector<std::string>& images,
                         const std::vector<std::string>& codomain) {
          const TypedSignature& sig = get_language(lang);
          ParsedTerm p = parse_term(text, sig);
          std::string ctx = "context";
          for (const auto& t : codomain) ctx += " " + t;
          std::vector<Term> ims;
          for (const auto& im : images) ims.push_back(parse_term(ctx + " ; " + im, sig).term);
          Context delta;
          for (const auto& t : codomain) delta.push_back(parse_type(t, sig.types()));
          Substitution s{p.context, std::move(delta), std::move(ims)};
          check_substitution(sig, s);
          return print_term(sig, s.codomain, substitute(sig, p.term, s));
        }, py::arg("lang"), py::arg("term"), py::arg("images"), py::arg("codomain"),
        "Substitute images (term texts over `codomain`) for the variables of a .term text.");

  m.def("monad_laws", [](const std::string& lang, std::uint64_t seed, std::size_t cases, std::size_t depth) {
          return report_dict(check_monad_laws(get_language(lang), config(seed, cases, depth)));
        }, py::arg("lang"), py::arg("seed") = 1, py::arg("cases") = 1000, py::arg("depth") = 6);

  m.def("translation_laws", [](const std::string& name, std::uint64_t seed, std::size_t cases, std::size_t depth) {
          return report_dict(check_translation_laws(get_translation(name), config(seed, cases, depth)));
        }, py::arg("translation"), py::arg("seed") = 1, py::arg("cases") = 1000, py::arg("depth") = 6);
}
