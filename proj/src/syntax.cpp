#include "susp/syntax.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace susp {

namespace {

std::string position_message(const std::string& message, std::size_t line, std::size_t column) {
  std::ostringstream os;
  os << message << " at " << line << ":" << column;
  return os.str();
}

}  // namespace

ParseError::ParseError(std::string message, std::size_t line_, std::size_t column_)
    : Error(position_message(message, line_, column_)), line(line_), column(column_) {}

// ---------------------------------------------------------------------------
// Printers
// ---------------------------------------------------------------------------

namespace {

void print_susp(std::ostream& os, const Ptr& x, bool in_app_fn, bool in_app_arg) {
  switch (x->kind) {
    case Kind::Const:
    case Kind::Meta:
      os << x->name;
      break;
    case Kind::Index:
      os << "#" << x->n0;
      break;
    case Kind::Abs: {
      bool parens = in_app_fn || in_app_arg;
      if (parens) os << "(";
      os << "\\ ";
      print_susp(os, x->c0, false, false);
      if (parens) os << ")";
      break;
    }
    case Kind::App: {
      bool parens = in_app_arg;
      if (parens) os << "(";
      print_susp(os, x->c0, true, false);
      os << " ";
      print_susp(os, x->c1, false, true);
      if (parens) os << ")";
      break;
    }
    case Kind::Susp:
      os << "[";
      print_susp(os, x->c0, false, false);
      os << ", " << x->n0 << ", " << x->n1 << ", ";
      print_susp(os, x->c1, false, false);
      os << "]";
      break;
    case Kind::Nil:
      os << "nil";
      break;
    case Kind::Cons:
      os << "(";
      print_susp(os, x->c0, false, false);
      os << ", " << x->n0 << ") :: ";
      print_susp(os, x->c1, false, false);
      break;
    case Kind::Merge:
      os << "{";
      print_susp(os, x->c0, false, false);
      os << ", " << x->n0 << ", " << x->n1 << ", ";
      print_susp(os, x->c1, false, false);
      os << "}";
      break;
  }
}

}  // namespace

std::string to_string(const Ptr& x) {
  std::ostringstream os;
  print_susp(os, x, false, false);
  return os.str();
}

namespace {

void print_lu(std::ostream& os, const lu::LuPtr& x, bool in_app_fn, bool in_app_arg,
              bool in_clos_base) {
  using lu::LuKind;
  switch (x->kind) {
    case LuKind::Var:
      os << x->n << "_";
      break;
    case LuKind::Abs: {
      bool parens = in_app_fn || in_app_arg || in_clos_base;
      if (parens) os << "(";
      os << "\\ ";
      print_lu(os, x->c0, false, false, false);
      if (parens) os << ")";
      break;
    }
    case LuKind::App: {
      bool parens = in_app_arg || in_clos_base;
      if (parens) os << "(";
      print_lu(os, x->c0, true, false, false);
      os << " ";
      print_lu(os, x->c1, false, true, false);
      if (parens) os << ")";
      break;
    }
    case LuKind::Clos:
      print_lu(os, x->c0, false, false, true);
      os << "[";
      print_lu(os, x->c1, false, false, false);
      os << "]";
      break;
    case LuKind::Slash:
      print_lu(os, x->c0, false, false, true);
      os << "/";
      break;
    case LuKind::Lift:
      os << "lift(";
      print_lu(os, x->c0, false, false, false);
      os << ")";
      break;
    case LuKind::Shift:
      os << "shift";
      break;
  }
}

void print_ls(std::ostream& os, const ls::LsPtr& x, bool in_app_fn, bool in_app_arg) {
  using ls::LsKind;
  switch (x->kind) {
    case LsKind::Var:
      os << x->n;
      break;
    case LsKind::Abs: {
      bool parens = in_app_fn || in_app_arg;
      if (parens) os << "(";
      os << "\\ ";
      print_ls(os, x->c0, false, false);
      if (parens) os << ")";
      break;
    }
    case LsKind::App: {
      bool parens = in_app_arg;
      if (parens) os << "(";
      print_ls(os, x->c0, true, false);
      os << " ";
      print_ls(os, x->c1, false, true);
      if (parens) os << ")";
      break;
    }
    case LsKind::Sigma:
      os << "sig(" << x->n << ", ";
      print_ls(os, x->c0, false, false);
      os << ", ";
      print_ls(os, x->c1, false, false);
      os << ")";
      break;
    case LsKind::Phi:
      os << "phi(" << x->k << ", " << x->n << ", ";
      print_ls(os, x->c0, false, false);
      os << ")";
      break;
  }
}

// terms: closure postfix binds tightest, juxtaposition next, `\` weakest.
// substitutions: `o` binds tighter than `.`, both right associative.
void print_lsig(std::ostream& os, const lsig::LsigPtr& x, bool in_app_fn, bool in_app_arg,
                bool in_clos_base, bool in_comp);

void print_lsig_subst_operand(std::ostream& os, const lsig::LsigPtr& x, bool in_comp) {
  print_lsig(os, x, false, false, false, in_comp);
}

void print_lsig(std::ostream& os, const lsig::LsigPtr& x, bool in_app_fn, bool in_app_arg,
                bool in_clos_base, bool in_comp) {
  using lsig::LsigKind;
  if (auto n = lsig::shift_power(x); n && *n >= 2) {
    os << "^" << *n;
    return;
  }
  switch (x->kind) {
    case LsigKind::One:
      os << "1";
      break;
    case LsigKind::Abs: {
      bool parens = in_app_fn || in_app_arg || in_clos_base;
      if (parens) os << "(";
      os << "\\ ";
      print_lsig(os, x->c0, false, false, false, false);
      if (parens) os << ")";
      break;
    }
    case LsigKind::App: {
      bool parens = in_app_arg || in_clos_base;
      if (parens) os << "(";
      print_lsig(os, x->c0, true, false, false, false);
      os << " ";
      print_lsig(os, x->c1, false, true, false, false);
      if (parens) os << ")";
      break;
    }
    case LsigKind::Clos:
      print_lsig(os, x->c0, false, false, true, false);
      os << "[";
      print_lsig(os, x->c1, false, false, false, false);
      os << "]";
      break;
    case LsigKind::Id:
      os << "id";
      break;
    case LsigKind::Shift:
      os << "^";
      break;
    case LsigKind::Cons: {
      bool parens = in_comp;
      if (parens) os << "(";
      print_lsig(os, x->c0, false, true, false, false);  // term side, kept atomic-ish
      os << " . ";
      print_lsig_subst_operand(os, x->c1, false);
      if (parens) os << ")";
      break;
    }
    case LsigKind::Comp: {
      os << "(";
      print_lsig_subst_operand(os, x->c0, true);
      os << " o ";
      print_lsig_subst_operand(os, x->c1, true);
      os << ")";
      break;
    }
  }
}

}  // namespace

std::string to_string(const lu::LuPtr& x) {
  std::ostringstream os;
  print_lu(os, x, false, false, false);
  return os.str();
}

std::string to_string(const ls::LsPtr& x) {
  std::ostringstream os;
  print_ls(os, x, false, false);
  return os.str();
}

std::string to_string(const lsig::LsigPtr& x) {
  std::ostringstream os;
  print_lsig(os, x, false, false, false, false);
  return os.str();
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace {

enum class Tok : std::uint8_t {
  End,
  Number,
  Ident,    // lowercase-led
  UIdent,   // uppercase-led
  Hash,     // #
  Lambda,   // backslash
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  ColonColon,
  Slash,
  At,
  Dot,
  Caret,
  Underscore,
};

struct Token {
  Tok kind;
  std::string text;
  Nat number = 0;
  std::size_t line = 1, column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token eat() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, current_.line, current_.column);
  }

  Token expect(Tok kind, const char* what) {
    if (current_.kind != kind) fail(std::string("expected ") + what);
    return eat();
  }

  struct Mark {
    std::size_t pos, line, column;
    Token current;
  };
  Mark mark() const { return {pos_, line_, column_, current_}; }
  void rewind(const Mark& m) {
    pos_ = m.pos;
    line_ = m.line;
    column_ = m.column;
    current_ = m.current;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) bump();
    current_.line = line_;
    current_.column = column_;
    current_.text.clear();
    current_.number = 0;
    if (pos_ >= text_.size()) {
      current_.kind = Tok::End;
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Nat value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        Nat digit = static_cast<Nat>(text_[pos_] - '0');
        if (value > (std::numeric_limits<Nat>::max() - digit) / 10)
          throw ParseError("numeric literal overflow", line_, column_);
        value = value * 10 + digit;
        current_.text.push_back(text_[pos_]);
        bump();
      }
      current_.kind = Tok::Number;
      current_.number = value;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '\'')) {
        current_.text.push_back(text_[pos_]);
        bump();
      }
      current_.kind = std::isupper(static_cast<unsigned char>(c)) ? Tok::UIdent : Tok::Ident;
      return;
    }
    switch (c) {
      case '#': single(Tok::Hash); return;
      case '\\': single(Tok::Lambda); return;
      case '(': single(Tok::LParen); return;
      case ')': single(Tok::RParen); return;
      case '[': single(Tok::LBracket); return;
      case ']': single(Tok::RBracket); return;
      case '{': single(Tok::LBrace); return;
      case '}': single(Tok::RBrace); return;
      case ',': single(Tok::Comma); return;
      case '/': single(Tok::Slash); return;
      case '@': single(Tok::At); return;
      case '.': single(Tok::Dot); return;
      case '^': single(Tok::Caret); return;
      case '_': single(Tok::Underscore); return;
      case ':':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == ':') {
          current_.kind = Tok::ColonColon;
          current_.text = "::";
          bump();
          bump();
          return;
        }
        throw ParseError("stray ':'", line_, column_);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
    }
  }

  void single(Tok kind) {
    current_.kind = kind;
    current_.text = text_[pos_];
    bump();
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1, column_ = 1;
  Token current_;
};

// ---------------------------------------------------------------------------
// Suspension-expression parser
// ---------------------------------------------------------------------------

class SuspParser {
 public:
  SuspParser(const std::string& text, bool legacy) : lx_(text), legacy_(legacy) {}

  Ptr term_all() {
    Ptr t = term();
    finish();
    return t;
  }

  Ptr env_all() {
    Ptr e = env();
    finish();
    return e;
  }

  EnvItem item_all() {
    EnvItem it = item();
    finish();
    return it;
  }

 private:
  void finish() {
    if (lx_.peek().kind != Tok::End) lx_.fail("trailing input");
  }

  Ptr term() {
    if (lx_.peek().kind == Tok::Lambda) {
      lx_.eat();
      return abs(term());
    }
    Ptr t = atom();
    for (;;) {
      switch (lx_.peek().kind) {
        case Tok::Hash:
        case Tok::Ident:
        case Tok::UIdent:
        case Tok::LBracket:
        case Tok::LParen:
        case Tok::Lambda: {
          if (lx_.peek().kind == Tok::Lambda) {
            lx_.eat();
            return app(t, abs(term()));
          }
          t = app(t, atom());
          break;
        }
        default:
          return t;
      }
    }
  }

  Ptr atom() {
    const Token& tok = lx_.peek();
    switch (tok.kind) {
      case Tok::Hash: {
        lx_.eat();
        Token n = lx_.expect(Tok::Number, "index after '#'");
        if (n.number < 1) lx_.fail("de Bruijn index must be >= 1");
        return index(n.number);
      }
      case Tok::Ident: {
        if (tok.text == "nil") lx_.fail("'nil' is not a term");
        Token id = lx_.eat();
        return constant(id.text);
      }
      case Tok::UIdent: {
        Token id = lx_.eat();
        return metavar(id.text);
      }
      case Tok::LBracket: {
        lx_.eat();
        Ptr t = term();
        lx_.expect(Tok::Comma, "','");
        Nat ol = lx_.expect(Tok::Number, "old embedding level").number;
        lx_.expect(Tok::Comma, "','");
        Nat nl = lx_.expect(Tok::Number, "new embedding level").number;
        lx_.expect(Tok::Comma, "','");
        Ptr e = env();
        lx_.expect(Tok::RBracket, "']'");
        return suspend(t, ol, nl, e);
      }
      case Tok::LParen: {
        lx_.eat();
        Ptr t = term();
        lx_.expect(Tok::RParen, "')'");
        return t;
      }
      default:
        lx_.fail("expected a term");
    }
  }

  Ptr env() {
    const Token& tok = lx_.peek();
    if (tok.kind == Tok::Ident && tok.text == "nil") {
      lx_.eat();
      return nil();
    }
    if (tok.kind == Tok::LBrace) {
      lx_.eat();
      Ptr e1 = env();
      lx_.expect(Tok::Comma, "','");
      Nat nl1 = lx_.expect(Tok::Number, "nl1").number;
      lx_.expect(Tok::Comma, "','");
      Nat ol2 = lx_.expect(Tok::Number, "ol2").number;
      lx_.expect(Tok::Comma, "','");
      Ptr e2 = env();
      lx_.expect(Tok::RBrace, "'}'");
      return merge(e1, nl1, ol2, e2);
    }
    EnvItem it = item();
    lx_.expect(Tok::ColonColon, "'::'");
    return cons(it.term, it.level, env());
  }

  EnvItem item() {
    if (lx_.peek().kind == Tok::At) {
      if (!legacy_) lx_.fail("legacy '@n' items are disabled");
      lx_.eat();
      Token n = lx_.expect(Tok::Number, "dummy level");
      return {index(1), checked_add(n.number, 1)};
    }
    lx_.expect(Tok::LParen, "'('");
    Ptr t = term();
    lx_.expect(Tok::Comma, "','");
    Nat l = lx_.expect(Tok::Number, "item index").number;
    lx_.expect(Tok::RParen, "')'");
    return {t, l};
  }

  Lexer lx_;
  bool legacy_;
};

// ---------------------------------------------------------------------------
// lambda-upsilon parser
// ---------------------------------------------------------------------------

class LuParser {
 public:
  explicit LuParser(const std::string& text) : lx_(text) {}

  lu::LuPtr term_all() {
    lu::LuPtr t = term();
    finish();
    return t;
  }

  lu::LuPtr subst_all() {
    lu::LuPtr s = subst();
    finish();
    return s;
  }

 private:
  void finish() {
    if (lx_.peek().kind != Tok::End) lx_.fail("trailing input");
  }

  lu::LuPtr term() {
    if (lx_.peek().kind == Tok::Lambda) {
      lx_.eat();
      return lu::u_abs(term());
    }
    lu::LuPtr t = atom();
    for (;;) {
      Tok k = lx_.peek().kind;
      if (k == Tok::Number || k == Tok::LParen) {
        t = lu::u_app(t, atom());
      } else if (k == Tok::Lambda) {
        lx_.eat();
        return lu::u_app(t, lu::u_abs(term()));
      } else {
        return t;
      }
    }
  }

  lu::LuPtr atom() {
    const Token& tok = lx_.peek();
    lu::LuPtr t;
    if (tok.kind == Tok::Number) {
      Token n = lx_.eat();
      lx_.expect(Tok::Underscore, "'_' after index");
      if (n.number < 1) lx_.fail("index must be >= 1");
      t = lu::u_var(n.number);
    } else if (tok.kind == Tok::LParen) {
      lx_.eat();
      t = term();
      lx_.expect(Tok::RParen, "')'");
    } else {
      lx_.fail("expected a lambda-upsilon term");
    }
    while (lx_.peek().kind == Tok::LBracket) {
      lx_.eat();
      lu::LuPtr s = subst();
      lx_.expect(Tok::RBracket, "']'");
      t = lu::u_clos(t, s);
    }
    return t;
  }

  lu::LuPtr subst() {
    const Token& tok = lx_.peek();
    if (tok.kind == Tok::Ident && tok.text == "shift") {
      lx_.eat();
      return lu::u_shift();
    }
    if (tok.kind == Tok::Ident && tok.text == "lift") {
      lx_.eat();
      lx_.expect(Tok::LParen, "'('");
      lu::LuPtr s = subst();
      lx_.expect(Tok::RParen, "')'");
      return lu::u_lift(s);
    }
    lu::LuPtr t = term();
    lx_.expect(Tok::Slash, "'/'");
    return lu::u_slash(t);
  }

  Lexer lx_;
};

// ---------------------------------------------------------------------------
// lambda-s parser
// ---------------------------------------------------------------------------

class LsParser {
 public:
  explicit LsParser(const std::string& text) : lx_(text) {}

  ls::LsPtr term_all() {
    ls::LsPtr t = term();
    if (lx_.peek().kind != Tok::End) lx_.fail("trailing input");
    return t;
  }

 private:
  ls::LsPtr term() {
    if (lx_.peek().kind == Tok::Lambda) {
      lx_.eat();
      return ls::s_abs(term());
    }
    ls::LsPtr t = atom();
    for (;;) {
      Tok k = lx_.peek().kind;
      if (k == Tok::Number || k == Tok::LParen ||
          (k == Tok::Ident && (lx_.peek().text == "sig" || lx_.peek().text == "phi"))) {
        t = ls::s_app(t, atom());
      } else if (k == Tok::Lambda) {
        lx_.eat();
        return ls::s_app(t, ls::s_abs(term()));
      } else {
        return t;
      }
    }
  }

  ls::LsPtr atom() {
    const Token& tok = lx_.peek();
    if (tok.kind == Tok::Number) {
      Token n = lx_.eat();
      if (n.number < 1) lx_.fail("index must be >= 1");
      return ls::s_var(n.number);
    }
    if (tok.kind == Tok::Ident && tok.text == "sig") {
      lx_.eat();
      lx_.expect(Tok::LParen, "'('");
      Nat i = lx_.expect(Tok::Number, "superscript").number;
      lx_.expect(Tok::Comma, "','");
      ls::LsPtr a = term();
      lx_.expect(Tok::Comma, "','");
      ls::LsPtr b = term();
      lx_.expect(Tok::RParen, "')'");
      return ls::s_sigma(i, a, b);
    }
    if (tok.kind == Tok::Ident && tok.text == "phi") {
      lx_.eat();
      lx_.expect(Tok::LParen, "'('");
      Nat k = lx_.expect(Tok::Number, "subscript").number;
      lx_.expect(Tok::Comma, "','");
      Nat i = lx_.expect(Tok::Number, "superscript").number;
      lx_.expect(Tok::Comma, "','");
      ls::LsPtr a = term();
      lx_.expect(Tok::RParen, "')'");
      return ls::s_phi(k, i, a);
    }
    if (tok.kind == Tok::LParen) {
      lx_.eat();
      ls::LsPtr t = term();
      lx_.expect(Tok::RParen, "')'");
      return t;
    }
    lx_.fail("expected a lambda-s term");
  }

  Lexer lx_;
};

// ---------------------------------------------------------------------------
// lambda-sigma parser
// ---------------------------------------------------------------------------

class LsigParser {
 public:
  explicit LsigParser(const std::string& text) : lx_(text) {}

  lsig::LsigPtr term_all() {
    lsig::LsigPtr t = term();
    finish();
    return t;
  }

  lsig::LsigPtr subst_all() {
    lsig::LsigPtr s = subst();
    finish();
    return s;
  }

  lsig::LsigPtr expr_all() {
    auto m = lx_.mark();
    try {
      return term_all();
    } catch (const ParseError&) {
      lx_.rewind(m);
      return subst_all();
    }
  }

 private:
  void finish() {
    if (lx_.peek().kind != Tok::End) lx_.fail("trailing input");
  }

  lsig::LsigPtr term() {
    if (lx_.peek().kind == Tok::Lambda) {
      lx_.eat();
      return lsig::g_abs(term());
    }
    lsig::LsigPtr t = atom();
    for (;;) {
      Tok k = lx_.peek().kind;
      if (k == Tok::Number || k == Tok::LParen) {
        t = lsig::g_app(t, atom());
      } else if (k == Tok::Lambda) {
        lx_.eat();
        return lsig::g_app(t, lsig::g_abs(term()));
      } else {
        return t;
      }
    }
  }

  lsig::LsigPtr atom() {
    const Token& tok = lx_.peek();
    lsig::LsigPtr t;
    if (tok.kind == Tok::Number) {
      Token n = lx_.eat();
      if (n.number != 1) lx_.fail("the only variable literal is 1");
      t = lsig::g_one();
    } else if (tok.kind == Tok::LParen) {
      lx_.eat();
      t = term();
      lx_.expect(Tok::RParen, "')'");
    } else {
      lx_.fail("expected a lambda-sigma term");
    }
    while (lx_.peek().kind == Tok::LBracket) {
      lx_.eat();
      lsig::LsigPtr s = subst();
      lx_.expect(Tok::RBracket, "']'");
      t = lsig::g_clos(t, s);
    }
    return t;
  }

  // subst := term '.' subst | comp ;  comp := simple ['o' comp]
  lsig::LsigPtr subst() {
    auto m = lx_.mark();
    try {
      lsig::LsigPtr t = term();
      lx_.expect(Tok::Dot, "'.'");
      return lsig::g_cons(t, subst());
    } catch (const ParseError&) {
      lx_.rewind(m);
    }
    return comp();
  }

  lsig::LsigPtr comp() {
    lsig::LsigPtr s = simple();
    if (lx_.peek().kind == Tok::Ident && lx_.peek().text == "o") {
      lx_.eat();
      return lsig::g_comp(s, comp());
    }
    return s;
  }

  lsig::LsigPtr simple() {
    const Token& tok = lx_.peek();
    if (tok.kind == Tok::Ident && tok.text == "id") {
      lx_.eat();
      return lsig::g_id();
    }
    if (tok.kind == Tok::Caret) {
      lx_.eat();
      if (lx_.peek().kind == Tok::Number) {
        Token n = lx_.eat();
        return lsig::g_shift_pow(n.number);
      }
      return lsig::g_shift();
    }
    if (tok.kind == Tok::LParen) {
      lx_.eat();
      lsig::LsigPtr s = subst();
      lx_.expect(Tok::RParen, "')'");
      return s;
    }
    lx_.fail("expected a lambda-sigma substitution");
  }

  Lexer lx_;
};

}  // namespace

Ptr parse_susp_term(const std::string& text, bool legacy_dummies) {
  return SuspParser(text, legacy_dummies).term_all();
}

Ptr parse_susp_env(const std::string& text, bool legacy_dummies) {
  return SuspParser(text, legacy_dummies).env_all();
}

Ptr parse_susp_expr(const std::string& text, bool legacy_dummies) {
  try {
    return parse_susp_term(text, legacy_dummies);
  } catch (const ParseError&) {
    return parse_susp_env(text, legacy_dummies);
  }
}

EnvItem parse_susp_item(const std::string& text, bool legacy_dummies) {
  return SuspParser(text, legacy_dummies).item_all();
}

lu::LuPtr parse_lu_term(const std::string& text) { return LuParser(text).term_all(); }
lu::LuPtr parse_lu_subst(const std::string& text) { return LuParser(text).subst_all(); }
ls::LsPtr parse_ls_term(const std::string& text) { return LsParser(text).term_all(); }
lsig::LsigPtr parse_lsig_term(const std::string& text) { return LsigParser(text).term_all(); }
lsig::LsigPtr parse_lsig_subst(const std::string& text) { return LsigParser(text).subst_all(); }
lsig::LsigPtr parse_lsig_expr(const std::string& text) { return LsigParser(text).expr_all(); }

std::string trace_to_json(const Trace& trace) {
  nlohmann::json j;
  j["initial"] = to_string(trace.initial);
  j["status"] = trace.normal() ? "normal_form" : "fuel_exhausted";
  nlohmann::json steps = nlohmann::json::array();
  for (const TraceStep& s : trace.steps) {
    nlohmann::json step;
    step["rule"] = rule_name(s.rule);
    step["path"] = s.at;
    step["result"] = to_string(s.result);
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  return j.dump(2);
}

void replay_trace_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  Ptr cur = parse_susp_expr(j.at("initial").get<std::string>());
  std::size_t n = 0;
  for (const auto& step : j.at("steps")) {
    auto rule = rule_from_name(step.at("rule").get<std::string>());
    if (!rule) throw Error("replay: unknown rule " + step.at("rule").get<std::string>());
    Path at;
    for (const auto& sel : step.at("path")) at.push_back(sel.get<std::uint32_t>());
    cur = step_at(cur, at, *rule);
    Ptr expected = parse_susp_expr(step.at("result").get<std::string>());
    if (!equal(cur, expected)) {
      std::ostringstream os;
      os << "replay: step " << n << " produced " << to_string(cur) << ", trace recorded "
         << to_string(expected);
      throw Error(os.str());
    }
    ++n;
  }
}

}  // namespace susp
