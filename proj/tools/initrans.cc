// initrans: check, translate and law-test terms over typed signatures.
//
// Exit codes: 0 success, 1 domain failure (type error, counterexample),
// 2 usage or I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <optional>
#include <string>
#include <vector>

#include "initrans/builtins.h"
#include "initrans/laws.h"
#include "initrans/surface.h"

using namespace initrans;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool is_builtin_language(const std::string& name) {
  for (const auto& n : list_builtins().languages)
    if (n == name) return true;
  return false;
}

const TypedSignature& builtin_language(const std::string& name) {
  if (!is_builtin_language(name)) throw UsageError("unknown language " + name);
  return get_language(name);
}

const Translation& builtin_translation(const std::string& name) {
  for (const auto& n : list_builtins().translations)
    if (n == name) return get_translation(n);
  throw UsageError("unknown translation " + name);
}

TypedSignature load_signature(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_signature(text);
  } catch (const SourceError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

// Languages named in a translation header: user files first, then builtins.
TypedSignature resolve_language(const std::string& name, const std::vector<TypedSignature>& loaded) {
  for (const auto& s : loaded)
    if (s.name() == name) return s;
  return builtin_language(name);
}

int report_source_error(const std::string& path, const SourceError& e) {
  std::cerr << path << ":" << e.what() << "\n";
  return 1;
}

int cmd_lang_list() {
  auto b = list_builtins();
  std::cout << "languages:";
  for (const auto& n : b.languages) std::cout << " " << n;
  std::cout << "\ntranslations:";
  for (const auto& n : b.translations) std::cout << " " << n;
  std::cout << "\n";
  return 0;
}

int cmd_lang_show(const std::string& name) {
  std::cout << print_signature(builtin_language(name));
  return 0;
}

int cmd_check(const std::string& lang, const std::string& sig_file, const std::string& term_file) {
  TypedSignature sig = sig_file.empty() ? builtin_language(lang) : load_signature(sig_file);
  std::string text = read_file(term_file);
  try {
    ParsedTerm p = parse_term(text, sig);
    std::cout << ": " << to_string(p.type) << "\n";
    return 0;
  } catch (const SourceError& e) {
    return report_source_error(term_file, e);
  }
}

int cmd_translate(const std::string& using_name, const std::string& xlat_file,
                  const std::vector<std::string>& sig_files, const std::string& term_file, Style style) {
  std::vector<TypedSignature> loaded;
  for (const auto& f : sig_files) loaded.push_back(load_signature(f));

  std::optional<Translation> x;
  if (!xlat_file.empty()) {
    std::string text = read_file(xlat_file);
    try {
      TranslationHeader h = parse_translation_header(text);
      x = parse_translation(text, resolve_language(h.source, loaded), resolve_language(h.target, loaded));
    } catch (const SourceError& e) {
      throw UsageError(xlat_file + ":" + e.what());
    }
  } else {
    x = builtin_translation(using_name);
  }

  std::string text = read_file(term_file);
  std::optional<ParsedTerm> parsed;
  try {
    parsed = parse_term(text, x->source);
  } catch (const SourceError& e) {
    return report_source_error(term_file, e);
  }
  const ParsedTerm& p = *parsed;
  Term out = translate_term(*x, p.context, p.term);
  Context out_ctx = retype_context(x->type_map, p.context);
  try {
    check(x->target, out_ctx, out, translate_type(x->type_map, p.type));
  } catch (const TypeError& e) {
    std::cerr << "internal error: translated term does not typecheck: " << e.what() << "\n";
    return 1;
  }
  try {
    std::cout << print_term(x->target, out_ctx, out, style) << "\n";
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return 0;
}

std::optional<Translator> oracle_for(const std::string& name) {
  if (name == "pcf2ulc-turing") return Translator([](const Context&, const Term& t) { return oracles::pcf_to_ulc(t, false); });
  if (name == "pcf2ulc-curry") return Translator([](const Context&, const Term& t) { return oracles::pcf_to_ulc(t, true); });
  if (name == "cpc2ipc-godel-gentzen")
    return Translator([](const Context&, const Term& t) { return oracles::godel_gentzen_proof(t); });
  return std::nullopt;
}

int cmd_laws(const std::string& lang, const std::string& translation, const GenConfig& cfg) {
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<LawReport> reports;
  if (!lang.empty()) {
    reports.push_back(check_monad_laws(builtin_language(lang), cfg));
  } else {
    const Translation& x = builtin_translation(translation);
    reports.push_back(check_translation_laws(x, cfg));
    if (auto oracle = oracle_for(translation)) reports.push_back(check_agreement(x, *oracle, cfg));
  }
  bool ok = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) std::cout << "\n";
    std::cout << to_string(reports[i]);
    ok = ok && reports[i].passed();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Typed initial syntax and translations between languages"};
  app.require_subcommand(1);

  auto* lang = app.add_subcommand("lang", "List or show builtin languages");
  lang->require_subcommand(1);
  lang->add_subcommand("list", "Print builtin language and translation names");
  auto* show = lang->add_subcommand("show", "Print a builtin signature in .sig format");
  std::string show_name;
  show->add_option("NAME", show_name)->required();

  auto* check_cmd = app.add_subcommand("check", "Parse and typecheck a term file");
  std::string check_lang, check_sig, check_file;
  auto* lang_opt = check_cmd->add_option("--lang", check_lang, "Builtin language");
  auto* sig_opt = check_cmd->add_option("--sig", check_sig, "Signature file");
  lang_opt->excludes(sig_opt);
  check_cmd->add_option("TERMFILE", check_file)->required();

  auto* tr = app.add_subcommand("translate", "Translate a term file");
  std::string using_name, xlat_file, tr_file, style_name = "canonical";
  std::vector<std::string> tr_sigs;
  auto* using_opt = tr->add_option("--using", using_name, "Builtin translation");
  auto* xlat_opt = tr->add_option("--xlat", xlat_file, "Translation file");
  using_opt->excludes(xlat_opt);
  tr->add_option("--sig", tr_sigs, "Signature files for languages named by --xlat");
  tr->add_option("--style", style_name, "Output style")->check(CLI::IsMember({"canonical", "paper"}));
  tr->add_option("TERMFILE", tr_file)->required();

  auto* laws = app.add_subcommand("laws", "Run the law checks");
  std::string laws_lang, laws_translation;
  GenConfig cfg;
  auto* ll = laws->add_option("--lang", laws_lang, "Builtin language (substitution laws)");
  auto* lt = laws->add_option("--translation", laws_translation, "Builtin translation (translation laws)");
  ll->excludes(lt);
  laws->add_option("--seed", cfg.seed, "Seed")->capture_default_str();
  laws->add_option("--cases", cfg.cases, "Number of cases")->capture_default_str();
  laws->add_option("--depth", cfg.max_depth, "Maximum term depth")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (lang->got_subcommand("list")) return cmd_lang_list();
    if (lang->got_subcommand("show")) return cmd_lang_show(show_name);
    if (check_cmd->parsed()) {
      if (check_lang.empty() && check_sig.empty()) throw UsageError("check needs --lang or --sig");
      return cmd_check(check_lang, check_sig, check_file);
    }
    if (tr->parsed()) {
      if (using_name.empty() && xlat_file.empty()) throw UsageError("translate needs --using or --xlat");
      return cmd_translate(using_name, xlat_file, tr_sigs, tr_file,
                           style_name == "paper" ? Style::Paper : Style::Canonical);
    }
    if (laws->parsed()) {
      if (laws_lang.empty() && laws_translation.empty()) throw UsageError("laws needs --lang or --translation");
      return cmd_laws(laws_lang, laws_translation, cfg);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
