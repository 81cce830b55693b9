#pragma once

#include <cctype>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "torsionlab/dsl/ast.hpp"

namespace torsionlab::dsl {

/// Syntax error with position and the set of tokens that would have been
/// accepted there.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(SourceLoc loc, const std::string& message, std::set<std::string> expected = {})
      : std::runtime_error(render(loc, message, expected)), loc_(loc), expected_(std::move(expected)) {}

  SourceLoc loc() const noexcept { return loc_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string render(SourceLoc loc, const std::string& message, const std::set<std::string>& expected) {
    std::string s = "line " + std::to_string(loc.line) + ", column " + std::to_string(loc.column) + ": " + message;
    if (!expected.empty()) {
      s += " (expected one of:";
      for (auto& e : expected) s += " " + e;
      s += ")";
    }
    return s;
  }

  SourceLoc loc_;
  std::set<std::string> expected_;
};

enum class TokenKind { Ident, Int, Symbol, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourceLoc loc;

  std::string describe() const {
    switch (kind) {
      case TokenKind::End: return "end of input";
      case TokenKind::Int: return "integer " + text;
      default: return "'" + text + "'";
    }
  }
};

inline std::vector<Token> tokenize(const std::string& src) {
  static const std::vector<std::string> symbols = {"->", "..", "<=", ">=", "==", "!=", "[", "]", "(", ")", "{",
                                                   "}",  "<",  ">",  ",",  ";",  ":",  "+", "-", "*", "/", "^", "="};
  std::vector<Token> out;
  SourceLoc loc;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
    }
  };
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.loc = loc;
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = TokenKind::Ident;
      t.text = src.substr(i, j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = TokenKind::Int;
      t.text = src.substr(i, j - i);
    } else {
      for (auto& s : symbols) {
        if (src.compare(i, s.size(), s) == 0) {
          t.kind = TokenKind::Symbol;
          t.text = s;
          break;
        }
      }
      if (t.kind != TokenKind::Symbol)
        throw SyntaxError(loc, std::string("unexpected character '") + src[i] + "'");
    }
    advance(t.text.size());
    out.push_back(std::move(t));
  }
  Token end;
  end.loc = loc;
  out.push_back(end);
  return out;
}

}  // namespace torsionlab::dsl
