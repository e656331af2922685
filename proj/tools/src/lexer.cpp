#include "zjetcli/lexer.hpp"

#include <cctype>

namespace zjetcli {

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string t, long v, int l, int c) {
    out.push_back(Token{k, std::move(t), v, l, c});
  };
  while (i < text.size()) {
    const char ch = text[i];
    const int l = line, c = col;
    if (ch == '\n') {
      // collapse runs of blank lines into one separator
      if (!out.empty() && out.back().kind != Tok::Newline)
        push(Tok::Newline, "\n", 0, l, c);
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;  // the newline itself is handled above
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      const std::string num = text.substr(i, j - i);
      long v = 0;
      try {
        v = std::stol(num);
      } catch (const std::exception&) {
        throw ScriptError("integer literal out of range", l, c);
      }
      push(Tok::Int, num, v, l, c);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      push(Tok::Ident, text.substr(i, j - i), 0, l, c);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    auto two = [&](char a, char b) {
      return ch == a && i + 1 < text.size() && text[i + 1] == b;
    };
    if (two(':', '=')) {
      push(Tok::Assign, ":=", 0, l, c);
      i += 2;
      col += 2;
      continue;
    }
    if (two('-', '>')) {
      push(Tok::Arrow, "->", 0, l, c);
      i += 2;
      col += 2;
      continue;
    }
    Tok k;
    switch (ch) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '[': k = Tok::LBracket; break;
      case ']': k = Tok::RBracket; break;
      case '{': k = Tok::LBrace; break;
      case '}': k = Tok::RBrace; break;
      case ':': k = Tok::Colon; break;
      case ',': k = Tok::Comma; break;
      case ';': k = Tok::Semi; break;
      case '=': k = Tok::Eq; break;
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      default:
        throw ScriptError(std::string("unexpected character '") + ch + "'", l, c);
    }
    push(k, std::string(1, ch), 0, l, c);
    ++i;
    ++col;
  }
  if (!out.empty() && out.back().kind != Tok::Newline)
    out.push_back(Token{Tok::Newline, "\n", 0, line, col});
  out.push_back(Token{Tok::End, "", 0, line, col});
  return out;
}

}  // namespace zjetcli
