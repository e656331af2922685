#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zjet/rational.hpp"
#include "zjetcli/lexer.hpp"

namespace zjetcli {

/// Expression tree over rational literals, names, and differential
/// generators d(coord). Operators: + - * (wedge on forms), / by rational
/// literal, ^ by nonnegative integer, unary minus.
struct Expr {
  enum class Kind { Lit, Name, Diff, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind = Kind::Lit;
  zjet::Rat lit;          // Lit
  std::string name;       // Name, Diff
  int exponent = 0;       // Pow
  std::vector<Expr> kids;
  int line = 0, col = 0;
};

struct CoordDecl {
  std::string name;
  bool shorthand = false;       // written deg=k
  int deg_index = 0;            // k for the shorthand form
  std::vector<int> bits;        // explicit degree tuple
  int line = 0, col = 0;
};

struct Stmt {
  enum class Kind { Ring, Let, MorphismDecl, Command };
  Kind kind = Kind::Command;
  int line = 0, col = 0;
  std::string echo;  // canonical one-line rendering of the statement

  // ring
  std::string name;
  int n = 0;
  int cap = 0;
  std::vector<CoordDecl> coords;

  // let
  Expr expr;

  // morphism
  std::string src_ring, dst_ring;
  std::vector<std::pair<std::string, Expr>> assigns;

  // command
  std::string cmd;
  std::vector<std::string> name_args;
  std::vector<Expr> expr_args;
  std::map<std::string, long> int_opts;  // kmax=, wmax=
  std::string eta;                       // homotopy direction coordinate
  std::vector<std::string> bind_names;   // trailing "as ..."
};

/// Parses a whole script; throws ScriptError with position on bad syntax.
std::vector<Stmt> parse(const std::string& text);

/// Parses a single series/form expression (used for round-trip checks).
Expr parse_expression(const std::string& text);

}  // namespace zjetcli
