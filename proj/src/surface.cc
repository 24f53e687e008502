#include "initrans/surface.h"

#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <set>

namespace initrans {

SourceError::SourceError(std::size_t line, std::size_t column, std::string message, std::string expected)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message +
                         (expected.empty() ? "" : " (expected " + expected + ")")),
      line_(line),
      column_(column),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok {
  Ident, Nat, Dollar, Hash, Query, At,
  LBrace, RBrace, LParen, RParen, LBrack, RBrack,
  Comma, Colon, Semi, Equals, Less, Greater, Arrow, End
};

struct Token {
  Tok kind;
  std::string text;
  std::uint64_t value = 0;
  std::size_t line = 1;
  std::size_t col = 1;
};

constexpr std::size_t kMaxNesting = 256;
constexpr std::uint64_t kMaxArity = 255;
// Inlining earlier macros can grow terms exponentially; cap the expansion.
constexpr std::size_t kMaxMacroSize = 1'000'000;

std::string hex_byte(unsigned char c) {
  const char* digits = "0123456789abcdef";
  return std::string("\\x") + digits[c >> 4] + digits[c & 15];
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
 public:
  // With `hash_vars`, `#` directly followed by a digit is a variable token;
  // any other `#` starts a comment.
  Lexer(std::string_view text, bool hash_vars) : text_(text), hash_vars_(hash_vars) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t{Tok::End, {}, 0, line_, col_};
      if (i_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      char c = text_[i_];
      if (ident_start(c)) {
        t.kind = Tok::Ident;
        t.text = ident();
      } else if (c == '*') {
        t.kind = Tok::Ident;
        t.text = "*";
        advance();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::Nat;
        t.value = number(t);
        t.text = std::to_string(t.value);
      } else if (c == '$' || c == '#' || c == '?') {
        t.kind = c == '$' ? Tok::Dollar : c == '#' ? Tok::Hash : Tok::Query;
        advance();
        if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_]))) {
          throw SourceError(t.line, t.col, std::string("'") + c + "' must be followed by a number");
        }
        t.value = number(t);
        t.text = std::string(1, c) + std::to_string(t.value);
      } else if (c == '@') {
        advance();
        if (i_ >= text_.size() || !ident_start(text_[i_])) throw SourceError(t.line, t.col, "'@' must be followed by a name");
        t.kind = Tok::At;
        t.text = ident();
      } else if (c == '-' && i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
        t.kind = Tok::Arrow;
        t.text = "->";
        advance();
        advance();
      } else {
        static const std::map<char, Tok> punct = {
            {'{', Tok::LBrace}, {'}', Tok::RBrace}, {'(', Tok::LParen}, {')', Tok::RParen},
            {'[', Tok::LBrack}, {']', Tok::RBrack}, {',', Tok::Comma},  {':', Tok::Colon},
            {';', Tok::Semi},   {'=', Tok::Equals}, {'<', Tok::Less},   {'>', Tok::Greater}};
        auto it = punct.find(c);
        if (it == punct.end()) {
          std::string shown = std::isprint(static_cast<unsigned char>(c))
                                  ? std::string(1, c)
                                  : hex_byte(static_cast<unsigned char>(c));
          throw SourceError(t.line, t.col, "unexpected character '" + shown + "'");
        }
        t.kind = it->second;
        t.text = std::string(1, c);
        advance();
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_space() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#' && !(hash_vars_ && i_ + 1 < text_.size() &&
                               std::isdigit(static_cast<unsigned char>(text_[i_ + 1])))) {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  // Identifiers may contain '-' when it is not the start of "->".
  std::string ident() {
    std::size_t start = i_;
    while (i_ < text_.size() &&
           (ident_char(text_[i_]) ||
            (text_[i_] == '-' && i_ + 1 < text_.size() && text_[i_ + 1] != '>' && ident_char(text_[i_ + 1])))) {
      advance();
    }
    return std::string(text_.substr(start, i_ - start));
  }

  std::uint64_t number(const Token& t) {
    std::uint64_t v = 0;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
      std::uint64_t d = static_cast<std::uint64_t>(text_[i_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) throw SourceError(t.line, t.col, "number too large");
      v = v * 10 + d;
      advance();
    }
    return v;
  }

  std::string_view text_;
  bool hash_vars_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

// ---------------------------------------------------------------------------
// Shared parser machinery

class Parser {
 public:
  Parser(std::string_view text, bool hash_vars) : toks_(Lexer(text, hash_vars).run()) {}

 protected:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(std::string_view w) const { return at(Tok::Ident) && peek().text == w; }

  Token take() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& t, const std::string& expected) const {
    throw SourceError(t.line, t.col, "unexpected " + describe(t), expected);
  }

  Token expect(Tok k, const char* what) {
    if (!at(k)) fail(peek(), what);
    return take();
  }

  Token expect_word(std::string_view w) {
    if (!at_word(w)) fail(peek(), "'" + std::string(w) + "'");
    return take();
  }

  std::uint64_t small_nat(const char* what) {
    Token t = expect(Tok::Nat, what);
    if (t.value > kMaxArity) throw SourceError(t.line, t.col, std::string(what) + " too large");
    return t.value;
  }

  void expect_end() {
    if (!at(Tok::End)) fail(peek(), "end of input");
  }

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxNesting) {
        const Token& t = p.peek();
        throw SourceError(t.line, t.col, "nesting too deep");
      }
    }
    ~DepthGuard() { --p.depth_; }
  };

  // tyexpr := "$" NAT | IDENT ("(" tyexpr ("," tyexpr)* ")")? | "(" IDENT tyexpr* ")"
  // Inside the parenthesized prefix form a bare name is always nullary.
  TypeExpr tyexpr(bool prefix_arg = false) {
    DepthGuard guard(*this);
    if (at(Tok::Dollar)) {
      Token t = take();
      if (t.value == 0) throw SourceError(t.line, t.col, "type variables are numbered from 1");
      return TypeExpr::var(t.value);
    }
    if (at(Tok::LParen)) {
      take();
      Token name = expect(Tok::Ident, "type constructor");
      std::vector<TypeExpr> args;
      while (!at(Tok::RParen)) args.push_back(tyexpr(true));
      take();
      return TypeExpr::app(name.text, std::move(args));
    }
    Token name = expect(Tok::Ident, "type expression");
    std::vector<TypeExpr> args;
    if (!prefix_arg && at(Tok::LParen)) {
      take();
      args.push_back(tyexpr());
      while (at(Tok::Comma)) {
        take();
        args.push_back(tyexpr());
      }
      expect(Tok::RParen, "',' or ')'");
    }
    return TypeExpr::app(name.text, std::move(args));
  }

  // groundty := IDENT ("(" groundty ("," groundty)* ")")?
  ObjType groundty(const TypeSignature& types) {
    DepthGuard guard(*this);
    Token name = expect(Tok::Ident, "type");
    std::vector<ObjType> children;
    if (at(Tok::LParen)) {
      take();
      children.push_back(groundty(types));
      while (at(Tok::Comma)) {
        take();
        children.push_back(groundty(types));
      }
      expect(Tok::RParen, "',' or ')'");
    }
    auto n = types.arity_of(name.text);
    if (!n) throw SourceError(name.line, name.col, "unknown type constructor " + name.text);
    if (*n != children.size()) {
      throw SourceError(name.line, name.col,
                        name.text + " expects " + std::to_string(*n) + " argument(s), got " +
                            std::to_string(children.size()));
    }
    return ObjType(name.text, std::move(children));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

// ---------------------------------------------------------------------------
// Signatures

class SignatureParser : Parser {
 public:
  explicit SignatureParser(std::string_view text) : Parser(text, false) {}

  TypedSignature run() {
    expect_word("language");
    std::string name = expect(Tok::Ident, "language name").text;
    std::vector<std::string> atoms;
    std::map<std::string, Token> where;
    if (at_word("atoms")) {
      take();
      expect(Tok::LBrace, "'{'");
      while (at(Tok::Ident)) {
        Token t = take();
        where.emplace(t.text, t);
        atoms.push_back(t.text);
      }
      expect(Tok::RBrace, "atom name or '}'");
    }
    expect_word("types");
    expect(Tok::LBrace, "'{'");
    std::vector<std::pair<std::string, std::size_t>> ctors;
    while (at(Tok::Ident)) {
      Token t = take();
      expect(Tok::Colon, "':'");
      ctors.emplace_back(t.text, small_nat("arity count"));
      where.emplace(t.text, t);
    }
    expect(Tok::RBrace, "type declaration or '}'");
    expect_word("terms");
    expect(Tok::LBrace, "'{'");
    std::vector<TermArity> terms;
    while (at(Tok::Ident)) {
      Token start = peek();
      terms.push_back(tmdecl());
      where.emplace(terms.back().name, start);
    }
    expect(Tok::RBrace, "term declaration or '}'");
    expect_end();

    TypedSignature sig(std::move(name), std::move(atoms), TypeSignature(std::move(ctors)), std::move(terms));
    ValidationReport report = validate_signature(sig);
    if (!report.ok()) {
      const Violation& v = report.violations.front();
      auto it = where.find(v.subject);
      std::size_t line = it == where.end() ? 1 : it->second.line;
      std::size_t col = it == where.end() ? 1 : it->second.col;
      throw SourceError(line, col, v.subject + ": " + v.message);
    }
    return sig;
  }

 private:
  // tmdecl := "family"? IDENT "[" NAT "]" ":" "(" (arg ("," arg)*)? ")" "->" tyexpr
  TermArity tmdecl() {
    TermArity a;
    if (at_word("family") && peek(1).kind == Tok::Ident) {
      take();
      a.family = true;
    }
    a.name = expect(Tok::Ident, "arity name").text;
    expect(Tok::LBrack, "'['");
    a.degree = small_nat("degree");
    expect(Tok::RBrack, "']'");
    expect(Tok::Colon, "':'");
    expect(Tok::LParen, "'('");
    if (!at(Tok::RParen)) {
      a.args.push_back(argspec());
      while (at(Tok::Comma)) {
        take();
        a.args.push_back(argspec());
      }
    }
    expect(Tok::RParen, "',' or ')'");
    expect(Tok::Arrow, "'->'");
    a.result = tyexpr();
    return a;
  }

  // arg := "[" tyexpr* "]" tyexpr
  ArgSpec argspec() {
    expect(Tok::LBrack, "'['");
    std::vector<TypeExpr> binders;
    while (!at(Tok::RBrack)) {
      if (at(Tok::End)) fail(peek(), "']'");
      binders.push_back(tyexpr());
    }
    take();
    return ArgSpec{std::move(binders), tyexpr()};
  }
};

// ---------------------------------------------------------------------------
// Terms

class TermParser : Parser {
 public:
  TermParser(std::string_view text, const TypedSignature& sig) : Parser(text, true), sig_(sig) {}

  ParsedTerm run() {
    expect_word("context");
    Context ctx;
    while (at(Tok::Ident)) ctx.push_back(groundty(sig_.types()));
    expect(Tok::Semi, "type or ';'");
    std::vector<std::size_t> path;
    Term t = term(path);
    expect_end();
    try {
      ObjType ty = infer(sig_, ctx, t);
      return ParsedTerm{std::move(ctx), std::move(t), std::move(ty)};
    } catch (const TypeError& e) {
      auto it = where_.find(e.path());
      const Token& at = it == where_.end() ? where_.at({}) : it->second;
      throw SourceError(at.line, at.col, std::string("type error: ") + e.what());
    }
  }

  ObjType single_type() {
    ObjType t = groundty(sig_.types());
    expect_end();
    return t;
  }

 private:
  // term := "#" NAT | "(" IDENT ("{" NAT "}")? ("[" groundty ("," groundty)* "]")? term* ")"
  Term term(std::vector<std::size_t>& path) {
    DepthGuard guard(*this);
    where_.emplace(path, peek());
    if (at(Tok::Hash)) return Term::var(take().value);
    expect(Tok::LParen, "'#' or '('");
    std::string name = expect(Tok::Ident, "arity name").text;
    std::optional<std::uint64_t> literal;
    if (at(Tok::LBrace)) {
      take();
      literal = expect(Tok::Nat, "family literal").value;
      expect(Tok::RBrace, "'}'");
    }
    std::vector<ObjType> inst;
    if (at(Tok::LBrack)) {
      take();
      inst.push_back(groundty(sig_.types()));
      while (at(Tok::Comma)) {
        take();
        inst.push_back(groundty(sig_.types()));
      }
      expect(Tok::RBrack, "',' or ']'");
    }
    std::vector<Term> args;
    while (!at(Tok::RParen)) {
      path.push_back(args.size());
      args.push_back(term(path));
      path.pop_back();
    }
    take();
    return Term::con(std::move(name), literal, std::move(inst), std::move(args));
  }

  const TypedSignature& sig_;
  std::map<std::vector<std::size_t>, Token> where_;
};

// ---------------------------------------------------------------------------
// Translations

class TranslationParser : Parser {
 public:
  explicit TranslationParser(std::string_view text) : Parser(text, true) {}

  TranslationHeader header() {
    expect_word("translation");
    TranslationHeader h;
    h.name = expect(Tok::Ident, "translation name").text;
    expect_word("from");
    h.source = expect(Tok::Ident, "source language").text;
    expect_word("to");
    h.target = expect(Tok::Ident, "target language").text;
    return h;
  }

  Translation run(const TypedSignature& source, const TypedSignature& target) {
    Token first = peek();
    TranslationHeader h = header();
    if (h.source != source.name()) throw SourceError(first.line, first.col, "translation is from " + h.source + ", not " + source.name());
    if (h.target != target.name()) throw SourceError(first.line, first.col, "translation is to " + h.target + ", not " + target.name());
    Translation x{h.name, source, target, TypeTranslation{source.types(), target.types(), {}}, {}, {}, {}};
    where_.emplace(x.name, first);

    if (at_word("macros")) {
      take();
      expect(Tok::LBrace, "'{'");
      while (at(Tok::Ident)) {
        Token name = take();
        expect(Tok::Equals, "'='");
        Template t = tmtpl();
        if (!where_.emplace(name.text, name).second) throw SourceError(name.line, name.col, "duplicate macro " + name.text);
        Term body = closed_term(x, t, name);
        if (body.size() > kMaxMacroSize) throw SourceError(name.line, name.col, "macro " + name.text + " is too large");
        x.macros.emplace_back(name.text, std::move(body));
      }
      expect(Tok::RBrace, "macro definition or '}'");
    }

    if (at_word("indexed")) {
      take();
      expect(Tok::LBrace, "'{'");
      while (at(Tok::Ident)) {
        Token name = take();
        if (!where_.emplace(name.text, name).second) throw SourceError(name.line, name.col, "duplicate macro " + name.text);
        expect(Tok::Colon, "':'");
        IndexedMacro m{name.text, tyexpr(), {}};
        expect(Tok::LBrace, "'{'");
        while (at(Tok::Ident)) {
          Token c = take();
          expect(Tok::Arrow, "'->'");
          if (!m.clauses.emplace(c.text, tmtpl()).second) throw SourceError(c.line, c.col, "duplicate clause for " + c.text);
          where_.emplace(name.text + "/" + c.text, c);
        }
        expect(Tok::RBrace, "clause or '}'");
        x.indexed.push_back(std::move(m));
      }
      expect(Tok::RBrace, "indexed macro or '}'");
    }

    expect_word("types");
    expect(Tok::LBrace, "'{'");
    while (at(Tok::Ident)) {
      Token c = take();
      expect(Tok::Arrow, "'->'");
      if (!x.type_map.templates.emplace(c.text, tyexpr()).second) throw SourceError(c.line, c.col, "duplicate template for " + c.text);
      type_where_.emplace(c.text, c);
    }
    expect(Tok::RBrace, "type template or '}'");

    expect_word("terms");
    expect(Tok::LBrace, "'{'");
    while (at(Tok::Ident)) {
      Token a = take();
      expect(Tok::Arrow, "'->'");
      if (!x.term_map.emplace(a.text, tmtpl()).second) throw SourceError(a.line, a.col, "duplicate template for " + a.text);
      where_.emplace(a.text, a);
    }
    expect(Tok::RBrace, "term template or '}'");
    expect_end();

    ValidationReport report = validate_translation(x);
    if (!report.ok()) {
      const Violation& v = report.violations.front();
      const Token* at = nullptr;
      if (auto it = where_.find(v.subject); it != where_.end()) at = &it->second;
      if (!at) {
        if (auto it = type_where_.find(v.subject); it != type_where_.end()) at = &it->second;
      }
      if (!at) at = &first;
      throw SourceError(at->line, at->col, v.subject + ": " + v.message);
    }
    return x;
  }

 private:
  // tmtpl := "?" NAT | "#" NAT | "<" IDENT ("$" NAT)? ">" | "(" "@repeat" tmtpl tmtpl ")"
  //        | "(" IDENT ("{" NAT "}")? ("[" tyexpr ("," tyexpr)* "]")? tmtpl* ")"
  Template tmtpl() {
    DepthGuard guard(*this);
    if (at(Tok::Query)) return Template::meta(take().value);
    if (at(Tok::Hash)) return Template::var(take().value);
    if (at(Tok::Less)) {
      take();
      std::string name = expect(Tok::Ident, "macro name").text;
      if (at(Tok::Dollar)) {
        Token p = take();
        if (p.value == 0) throw SourceError(p.line, p.col, "type variables are numbered from 1");
        expect(Tok::Greater, "'>'");
        return Template::indexed(std::move(name), p.value);
      }
      expect(Tok::Greater, "'$' or '>'");
      return Template::macro(std::move(name));
    }
    expect(Tok::LParen, "'?', '#', '<' or '('");
    if (at(Tok::At)) {
      Token kw = take();
      if (kw.text != "repeat") throw SourceError(kw.line, kw.col, "unknown template form @" + kw.text);
      Template step = tmtpl();
      Template base = tmtpl();
      expect(Tok::RParen, "')'");
      return Template::repeat(std::move(step), std::move(base));
    }
    std::string name = expect(Tok::Ident, "arity name").text;
    std::optional<std::uint64_t> literal;
    if (at(Tok::LBrace)) {
      take();
      literal = expect(Tok::Nat, "family literal").value;
      expect(Tok::RBrace, "'}'");
    }
    std::vector<TypeExpr> inst;
    if (at(Tok::LBrack)) {
      take();
      inst.push_back(tyexpr());
      while (at(Tok::Comma)) {
        take();
        inst.push_back(tyexpr());
      }
      expect(Tok::RBrack, "',' or ']'");
    }
    std::vector<Template> args;
    while (!at(Tok::RParen)) {
      if (at(Tok::End)) fail(peek(), "')'");
      args.push_back(tmtpl());
    }
    take();
    return Template::con(std::move(name), literal, std::move(inst), std::move(args));
  }

  // Macros are closed target terms; references to earlier macros are inlined.
  Term closed_term(const Translation& x, const Template& t, const Token& at) {
    switch (t.kind()) {
      case Template::Kind::Var:
        return Term::var(t.number());
      case Template::Kind::Macro:
        if (const Term* m = x.find_macro(t.name())) return *m;
        throw SourceError(at.line, at.col, "unknown macro " + t.name());
      case Template::Kind::Con: {
        std::vector<ObjType> inst;
        for (const auto& e : t.inst()) {
          if (min_degree(e) != 0) throw SourceError(at.line, at.col, "macro " + at.text + " has an open type");
          ValidationReport r;
          validate_type_expr(x.target.types(), e, 0, at.text, r);
          if (!r.ok()) throw SourceError(at.line, at.col, r.violations.front().message);
          inst.push_back(eval_type_expr({}, e));
        }
        std::vector<Term> args;
        for (const auto& a : t.args()) args.push_back(closed_term(x, a, at));
        return Term::con(t.name(), t.literal(), std::move(inst), std::move(args));
      }
      default:
        throw SourceError(at.line, at.col, "macro " + at.text + " may only use variables, constructors and macros");
    }
  }

  std::map<std::string, Token> where_;
  std::map<std::string, Token> type_where_;
};

// ---------------------------------------------------------------------------
// Printers

void print_canonical(const Term& t, std::string& out) {
  if (t.is_var()) {
    out += '#';
    out += std::to_string(t.index());
    return;
  }
  out += '(';
  out += t.arity();
  if (t.literal()) out += "{" + std::to_string(*t.literal()) + "}";
  if (!t.inst().empty()) {
    out += " [";
    for (std::size_t i = 0; i < t.inst().size(); ++i) {
      if (i) out += ',';
      out += to_string(t.inst()[i]);
    }
    out += ']';
  }
  for (const auto& a : t.args()) {
    out += ' ';
    print_canonical(a, out);
  }
  out += ')';
}

bool is_ulc_like(const TypedSignature& sig) {
  const TermArity* abs = sig.find_arity("abs");
  const TermArity* app = sig.find_arity("app");
  return abs && app && abs->degree == 0 && abs->args.size() == 1 && abs->args[0].binders.size() == 1 &&
         app->degree == 0 && app->args.size() == 2 && app->args[0].binders.empty() &&
         app->args[1].binders.empty();
}

void require_lambda(const Term& t) {
  if (t.is_var()) return;
  if (!t.inst().empty() || t.literal() || !((t.arity() == "abs" && t.args().size() == 1) ||
                                            (t.arity() == "app" && t.args().size() == 2))) {
    throw std::invalid_argument("paper style needs an untyped lambda term, found " + t.arity());
  }
  for (const auto& a : t.args()) require_lambda(a);
}

// `Abs` binds tighter than the left-associative `@`; an application in
// argument position is parenthesized, as is any non-variable body of `Abs`.
void print_paper(const Term& t, std::string& out);

void print_paper_atom(const Term& t, std::string& out) {
  if (t.is_var()) {
    print_paper(t, out);
  } else {
    out += '(';
    print_paper(t, out);
    out += ')';
  }
}

void print_paper(const Term& t, std::string& out) {
  if (t.is_var()) {
    out += std::to_string(t.index() + 1);
  } else if (t.arity() == "abs") {
    out += "Abs ";
    print_paper_atom(t.args()[0], out);
  } else {
    print_paper(t.args()[0], out);
    out += " @ ";
    const Term& arg = t.args()[1];
    if (!arg.is_var() && arg.arity() == "app") {
      print_paper_atom(arg, out);
    } else {
      print_paper(arg, out);
    }
  }
}

void print_template_to(const Template& t, std::string& out) {
  switch (t.kind()) {
    case Template::Kind::Var:
      out += "#" + std::to_string(t.number());
      return;
    case Template::Kind::Meta:
      out += "?" + std::to_string(t.number());
      return;
    case Template::Kind::Macro:
      out += "<" + t.name() + ">";
      return;
    case Template::Kind::Indexed:
      out += "<" + t.name() + " $" + std::to_string(t.number()) + ">";
      return;
    case Template::Kind::Repeat:
      out += "(@repeat ";
      print_template_to(t.args()[0], out);
      out += ' ';
      print_template_to(t.args()[1], out);
      out += ')';
      return;
    case Template::Kind::Con:
      break;
  }
  out += '(';
  out += t.name();
  if (t.literal()) out += "{" + std::to_string(*t.literal()) + "}";
  if (!t.inst().empty()) {
    out += " [";
    for (std::size_t i = 0; i < t.inst().size(); ++i) {
      if (i) out += ',';
      out += to_string(t.inst()[i]);
    }
    out += ']';
  }
  for (const auto& a : t.args()) {
    out += ' ';
    print_template_to(a, out);
  }
  out += ')';
}

Template term_as_template(const Term& t) {
  if (t.is_var()) return Template::var(t.index());
  std::vector<TypeExpr> inst;
  for (const auto& ty : t.inst()) inst.push_back(to_type_expr(ty));
  std::vector<Template> args;
  for (const auto& a : t.args()) args.push_back(term_as_template(a));
  return Template::con(t.arity(), t.literal(), std::move(inst), std::move(args));
}

template <typename Map, typename Names>
void print_entries(const Map& entries, const Names& order, const char* sep,
                   const std::function<std::string(const typename Map::mapped_type&)>& show,
                   const std::string& indent, std::string& out) {
  std::set<std::string> done;
  for (const auto& name : order) {
    auto it = entries.find(name);
    if (it == entries.end()) continue;
    out += indent + name + sep + show(it->second) + "\n";
    done.insert(name);
  }
  for (const auto& [name, value] : entries) {
    if (!done.count(name)) out += indent + name + sep + show(value) + "\n";
  }
}

}  // namespace

TypedSignature parse_signature(std::string_view text) { return SignatureParser(text).run(); }

ParsedTerm parse_term(std::string_view text, const TypedSignature& sig) { return TermParser(text, sig).run(); }

ObjType parse_type(std::string_view text, const TypeSignature& types) {
  TypedSignature sig("", {}, types, {});
  return TermParser(text, sig).single_type();
}

TranslationHeader parse_translation_header(std::string_view text) {
  // Only the header tokens matter; lexing the whole text still reports
  // lexical errors anywhere in the file.
  return TranslationParser(text).header();
}

Translation parse_translation(std::string_view text, const TypedSignature& source,
                              const TypedSignature& target) {
  return TranslationParser(text).run(source, target);
}

std::string print_term(const TypedSignature& sig, const Context&, const Term& term, Style style) {
  std::string out;
  if (style == Style::Paper) {
    if (!is_ulc_like(sig)) throw std::invalid_argument("paper style needs the untyped lambda calculus, not " + sig.name());
    require_lambda(term);
    print_paper(term, out);
  } else {
    print_canonical(term, out);
  }
  return out;
}

std::string print_term_file(const Context& ctx, const Term& term) {
  std::string out = "context";
  for (const auto& t : ctx) out += " " + to_string(t);
  out += " ; ";
  print_canonical(term, out);
  out += '\n';
  return out;
}

std::string print_signature(const TypedSignature& sig) {
  std::string out = "language " + sig.name() + "\n";
  if (!sig.atoms().empty()) {
    out += "atoms {";
    for (const auto& a : sig.atoms()) out += " " + a;
    out += " }\n";
  }
  out += "types {\n";
  for (const auto& [name, n] : sig.declared_types().constructors()) out += "  " + name + " : " + std::to_string(n) + "\n";
  out += "}\nterms {\n";
  for (const auto& a : sig.terms()) {
    out += "  ";
    if (a.family) out += "family ";
    out += a.name + " [" + std::to_string(a.degree) + "] : (";
    for (std::size_t j = 0; j < a.args.size(); ++j) {
      if (j) out += ", ";
      out += '[';
      for (std::size_t b = 0; b < a.args[j].binders.size(); ++b) {
        if (b) out += ' ';
        out += to_string(a.args[j].binders[b]);
      }
      out += "] " + to_string(a.args[j].body);
    }
    out += ") -> " + to_string(a.result) + "\n";
  }
  out += "}\n";
  return out;
}

std::string print_template(const Template& t) {
  std::string out;
  print_template_to(t, out);
  return out;
}

std::string print_translation(const Translation& x) {
  std::string out = "translation " + x.name + " from " + x.source.name() + " to " + x.target.name() + "\n";
  if (!x.macros.empty()) {
    out += "macros {\n";
    for (const auto& [name, term] : x.macros) out += "  " + name + " = " + print_template(term_as_template(term)) + "\n";
    out += "}\n";
  }
  std::vector<std::string> ctor_order;
  for (const auto& [name, n] : x.source.types().constructors()) ctor_order.push_back(name);
  if (!x.indexed.empty()) {
    out += "indexed {\n";
    for (const auto& m : x.indexed) {
      out += "  " + m.name + " : " + to_string(m.scheme) + " {\n";
      print_entries<std::map<std::string, Template>>(m.clauses, ctor_order, " -> ", print_template, "    ", out);
      out += "  }\n";
    }
    out += "}\n";
  }
  out += "types {\n";
  print_entries<std::map<std::string, TypeExpr>>(
      x.type_map.templates, ctor_order, " -> ", [](const TypeExpr& e) { return to_string(e); }, "  ", out);
  out += "}\nterms {\n";
  std::vector<std::string> arity_order;
  for (const auto& a : x.source.terms()) arity_order.push_back(a.name);
  print_entries<std::map<std::string, Template>>(x.term_map, arity_order, " -> ", print_template, "  ", out);
  out += "}\n";
  return out;
}

}  // namespace initrans
