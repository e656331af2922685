#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace zjetcli {

/// Script-level failure (syntax, resolution, malformed arguments) with the
/// 1-based source position. Distinct from kernel errors for exit codes.
class ScriptError : public std::runtime_error {
 public:
  ScriptError(const std::string& msg, int line, int col)
      : std::runtime_error(msg), line(line), col(col) {}
  int line;
  int col;
};

enum class Tok {
  Ident,
  Int,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Colon,
  Comma,
  Semi,
  Assign,  // :=
  Arrow,   // ->
  Eq,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  Newline,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  long value = 0;  // for Int
  int line = 0;
  int col = 0;
};

/// Tokenizes a whole script. '#' starts a comment running to end of line;
/// newlines are significant (statement separators) and survive as tokens.
std::vector<Token> lex(const std::string& text);

}  // namespace zjetcli
