#include "zjetcli/parser.hpp"

#include <set>

namespace zjetcli {

namespace {

const std::set<std::string> kCommands = {
    "jac",       "tangent", "invert", "compose",  "classify",
    "normalform", "factor",  "d",      "wedge",    "pullback",
    "homotopy",  "derham",  "potential", "rank",  "neumann",  "check"};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<Stmt> parse_script() {
    std::vector<Stmt> out;
    skip_separators();
    while (peek().kind != Tok::End) {
      out.push_back(parse_statement());
      if (peek().kind != Tok::End) expect(Tok::Newline, "end of statement");
      skip_separators();
    }
    return out;
  }

  Expr parse_single_expression() {
    skip_separators();
    Expr e = parse_expr();
    skip_separators();
    if (peek().kind != Tok::End)
      throw err("trailing input after expression", peek());
    return e;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;          // newline tokens are separators only at depth 0
  std::size_t echo_from_ = 0;

  static ScriptError err(const std::string& msg, const Token& at) {
    return ScriptError(msg, at.line, at.col);
  }

  const Token& peek() {
    std::size_t p = pos_;
    while (depth_ > 0 && toks_[p].kind == Tok::Newline) ++p;
    return toks_[p];
  }

  Token advance() {
    while (depth_ > 0 && toks_[pos_].kind == Tok::Newline) ++pos_;
    Token t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    if (t.kind == Tok::LParen || t.kind == Tok::LBracket || t.kind == Tok::LBrace)
      ++depth_;
    if (t.kind == Tok::RParen || t.kind == Tok::RBracket || t.kind == Tok::RBrace)
      --depth_;
    return t;
  }

  Token expect(Tok k, const std::string& what) {
    const Token& t = peek();
    if (t.kind != k) throw err("expected " + what, t);
    return advance();
  }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    advance();
    return true;
  }

  void skip_separators() {
    while (toks_[pos_].kind == Tok::Newline) ++pos_;
  }

  std::string ident(const std::string& what) {
    return expect(Tok::Ident, what).text;
  }

  // Canonical echo of the tokens consumed since the statement started.
  std::string echo_since(std::size_t from) {
    std::string out;
    std::string prev;
    for (std::size_t p = from; p < pos_; ++p) {
      const Token& t = toks_[p];
      if (t.kind == Tok::Newline || t.kind == Tok::End) continue;
      const std::string& s = t.text;
      bool space = !out.empty();
      if (s == ")" || s == "]" || s == "}" || s == "," || s == ";" || s == "^" ||
          s == "(" || s == "/")
        space = false;
      if (prev == "(" || prev == "[" || prev == "{" || prev == "^" || prev == "/")
        space = false;
      if (prev == "d" && s == "(") space = false;
      if ((s == "=" ) || (prev == "=")) space = false;
      if (out.empty()) space = false;
      if (space) out += ' ';
      out += s;
      prev = s;
    }
    return out;
  }

  Stmt parse_statement() {
    echo_from_ = pos_;
    const Token& head = peek();
    if (head.kind != Tok::Ident) throw err("expected a statement", head);
    Stmt s;
    s.line = head.line;
    s.col = head.col;
    if (head.text == "ring") {
      parse_ring(s);
    } else if (head.text == "let") {
      parse_let(s);
    } else if (head.text == "morphism") {
      parse_morphism(s);
    } else if (kCommands.count(head.text)) {
      parse_command(s);
    } else {
      throw err("unknown statement '" + head.text + "'", head);
    }
    s.echo = echo_since(echo_from_);
    return s;
  }

  void parse_ring(Stmt& s) {
    s.kind = Stmt::Kind::Ring;
    advance();  // ring
    s.name = ident("ring name");
    key_int("n", s.n);
    key_int("cap", s.cap);
    const Token& kw = peek();
    if (kw.kind != Tok::Ident || kw.text != "coords")
      throw err("expected 'coords'", kw);
    advance();
    expect(Tok::LBracket, "'['");
    if (!accept(Tok::RBracket)) {
      do {
        s.coords.push_back(parse_coord_decl());
      } while (accept(Tok::Comma));
      expect(Tok::RBracket, "']'");
    }
  }

  void key_int(const std::string& key, int& slot) {
    const Token& t = peek();
    if (t.kind != Tok::Ident || t.text != key)
      throw err("expected '" + key + "='", t);
    advance();
    expect(Tok::Eq, "'='");
    slot = static_cast<int>(expect(Tok::Int, "integer").value);
  }

  CoordDecl parse_coord_decl() {
    CoordDecl c;
    const Token& t = peek();
    c.line = t.line;
    c.col = t.col;
    c.name = ident("coordinate name");
    expect(Tok::Colon, "':'");
    const Token& d = peek();
    if (d.kind == Tok::Ident && d.text == "deg") {
      advance();
      expect(Tok::Eq, "'='");
      c.shorthand = true;
      c.deg_index = static_cast<int>(expect(Tok::Int, "degree index").value);
    } else {
      expect(Tok::LParen, "degree tuple");
      do {
        c.bits.push_back(static_cast<int>(expect(Tok::Int, "0 or 1").value));
      } while (accept(Tok::Comma));
      expect(Tok::RParen, "')'");
    }
    return c;
  }

  void parse_let(Stmt& s) {
    s.kind = Stmt::Kind::Let;
    advance();  // let
    s.name = ident("binding name");
    expect(Tok::Eq, "'='");
    s.expr = parse_expr();
  }

  void parse_morphism(Stmt& s) {
    s.kind = Stmt::Kind::MorphismDecl;
    advance();  // morphism
    s.name = ident("morphism name");
    expect(Tok::Colon, "':'");
    s.src_ring = ident("source ring");
    expect(Tok::Arrow, "'->'");
    s.dst_ring = ident("target ring");
    expect(Tok::LBrace, "'{'");
    while (true) {
      if (peek().kind == Tok::RBrace) break;
      std::string coord = ident("target coordinate");
      expect(Tok::Assign, "':='");
      Expr e = parse_expr();
      s.assigns.emplace_back(std::move(coord), std::move(e));
      if (!accept(Tok::Semi)) break;
    }
    expect(Tok::RBrace, "'}'");
  }

  void parse_command(Stmt& s) {
    s.kind = Stmt::Kind::Command;
    s.cmd = advance().text;
    if (s.cmd == "check") {
      const std::string what = ident("'all'");
      if (what != "all") throw err("only 'check all' is supported", peek());
      s.name_args.push_back(what);
      return;
    }
    if (s.cmd == "jac" || s.cmd == "tangent" || s.cmd == "classify" ||
        s.cmd == "rank" || s.cmd == "neumann" || s.cmd == "invert" ||
        s.cmd == "normalform" || s.cmd == "factor") {
      s.name_args.push_back(ident("name"));
    } else if (s.cmd == "compose") {
      s.name_args.push_back(ident("morphism name"));
      accept(Tok::Comma);
      s.name_args.push_back(ident("morphism name"));
    } else if (s.cmd == "d" || s.cmd == "potential") {
      s.expr_args.push_back(parse_expr());
    } else if (s.cmd == "wedge") {
      s.expr_args.push_back(parse_expr());
      expect(Tok::Comma, "',' between the factors");
      s.expr_args.push_back(parse_expr());
    } else if (s.cmd == "pullback") {
      s.name_args.push_back(ident("morphism name"));
      expect(Tok::Comma, "',' before the form");
      s.expr_args.push_back(parse_expr());
    } else if (s.cmd == "homotopy") {
      s.expr_args.push_back(parse_expr());
      const Token& t = peek();
      if (t.kind != Tok::Ident || t.text != "eta")
        throw err("expected 'eta=<coordinate>'", t);
      advance();
      expect(Tok::Eq, "'='");
      s.eta = ident("coordinate name");
    } else if (s.cmd == "derham") {
      s.name_args.push_back(ident("ring name"));
      int kmax = 0, wmax = 0;
      key_int("kmax", kmax);
      key_int("wmax", wmax);
      s.int_opts["kmax"] = kmax;
      s.int_opts["wmax"] = wmax;
    }
    // trailing result binding
    const Token& t = peek();
    if (t.kind == Tok::Ident && t.text == "as") {
      advance();
      s.bind_names.push_back(ident("binding name"));
      if (peek().kind == Tok::Comma || peek().kind == Tok::Ident) {
        accept(Tok::Comma);
        s.bind_names.push_back(ident("binding name"));
      }
    }
  }

  // expr := term (('+'|'-') term)*
  Expr parse_expr() {
    Expr e = parse_term();
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::Plus || t.kind == Tok::Minus) {
        advance();
        Expr rhs = parse_term();
        Expr node;
        node.kind = t.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
        node.line = t.line;
        node.col = t.col;
        node.kids.push_back(std::move(e));
        node.kids.push_back(std::move(rhs));
        e = std::move(node);
      } else {
        return e;
      }
    }
  }

  // term := factor (('*' factor) | ('/' INT))*
  Expr parse_term() {
    Expr e = parse_factor();
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::Star) {
        advance();
        Expr rhs = parse_factor();
        Expr node;
        node.kind = Expr::Kind::Mul;
        node.line = t.line;
        node.col = t.col;
        node.kids.push_back(std::move(e));
        node.kids.push_back(std::move(rhs));
        e = std::move(node);
      } else if (t.kind == Tok::Slash) {
        advance();
        const Token& d = expect(Tok::Int, "rational denominator");
        Expr node;
        node.kind = Expr::Kind::Div;
        node.line = t.line;
        node.col = t.col;
        node.lit = zjet::Rat(d.value);
        node.kids.push_back(std::move(e));
        e = std::move(node);
      } else {
        return e;
      }
    }
  }

  // factor := ('-'|'+') factor | primary ('^' INT)*
  Expr parse_factor() {
    const Token& t = peek();
    if (t.kind == Tok::Minus || t.kind == Tok::Plus) {
      advance();
      Expr inner = parse_factor();
      if (t.kind == Tok::Plus) return inner;
      Expr node;
      node.kind = Expr::Kind::Neg;
      node.line = t.line;
      node.col = t.col;
      node.kids.push_back(std::move(inner));
      return node;
    }
    Expr e = parse_primary();
    while (peek().kind == Tok::Caret) {
      const Token& caret = advance();
      const Token& k = expect(Tok::Int, "integer exponent");
      Expr node;
      node.kind = Expr::Kind::Pow;
      node.exponent = static_cast<int>(k.value);
      node.line = caret.line;
      node.col = caret.col;
      node.kids.push_back(std::move(e));
      e = std::move(node);
    }
    return e;
  }

  Expr parse_primary() {
    const Token& t = peek();
    Expr e;
    e.line = t.line;
    e.col = t.col;
    if (t.kind == Tok::Int) {
      advance();
      e.kind = Expr::Kind::Lit;
      e.lit = zjet::Rat(t.value);
      return e;
    }
    if (t.kind == Tok::LParen) {
      advance();
      e = parse_expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (t.kind == Tok::Ident) {
      advance();
      if (t.text == "d" && peek().kind == Tok::LParen) {
        advance();
        e.kind = Expr::Kind::Diff;
        e.name = ident("coordinate name");
        expect(Tok::RParen, "')'");
        return e;
      }
      e.kind = Expr::Kind::Name;
      e.name = t.text;
      return e;
    }
    throw err("expected an expression", t);
  }
};

}  // namespace

std::vector<Stmt> parse(const std::string& text) {
  return Parser(lex(text)).parse_script();
}

Expr parse_expression(const std::string& text) {
  return Parser(lex(text)).parse_single_expression();
}

}  // namespace zjetcli
