#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "initrans/signature.h"
#include "initrans/syntax.h"
#include "initrans/translate.h"
#include "initrans/types.h"

namespace initrans {

/// A syntax, validation or typing error located in an input text. Line and
/// column are 1-based.
class SourceError : public std::runtime_error {
 public:
  SourceError(std::size_t line, std::size_t column, std::string message, std::string expected = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }
  /// Summary of the tokens that would have been accepted, empty if not a
  /// syntax error.
  const std::string& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
  std::string expected_;
};

/// Parses a `.sig` file. The result passes validate_signature.
TypedSignature parse_signature(std::string_view text);

struct ParsedTerm {
  Context context;
  Term term;
  ObjType type;
};

/// Parses a `.term` file over `sig` and typechecks it. In the context line the
/// first listed type is variable #0.
ParsedTerm parse_term(std::string_view text, const TypedSignature& sig);

/// Parses a single ground type such as `arr(Nat,Bool)`.
ObjType parse_type(std::string_view text, const TypeSignature& types);

struct TranslationHeader {
  std::string name;
  std::string source;
  std::string target;
};

TranslationHeader parse_translation_header(std::string_view text);

/// Parses a `.xlat` file. The result passes validate_translation.
Translation parse_translation(std::string_view text, const TypedSignature& source,
                             const TypedSignature& target);

enum class Style { Canonical, Paper };

/// Canonical style prints the term in `.term` syntax. Paper style renders an
/// untyped lambda term with `Abs`, left-associative infix `@` and 1-based
/// indices; it throws std::invalid_argument for any other term.
std::string print_term(const TypedSignature& sig, const Context& ctx, const Term& term,
                       Style style = Style::Canonical);

/// A complete `.term` file: context line and term.
std::string print_term_file(const Context& ctx, const Term& term);

std::string print_signature(const TypedSignature& sig);
std::string print_template(const Template& t);
std::string print_translation(const Translation& x);

}  // namespace initrans
