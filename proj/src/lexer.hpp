#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "epscalc/error.hpp"

// Shared token stream for the theory, sequent and model grammars.
namespace epscalc::lex {

struct Token {
  enum class Kind { Ident, Number, Punct, End };
  Kind kind;
  std::string text;
  int line, col;
};

inline std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto bump = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') bump(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump(1);
      continue;
    }
    int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      out.push_back({Token::Kind::Ident, src.substr(i, j - i), tl, tc});
      bump(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Kind::Number, src.substr(i, j - i), tl, tc});
      bump(j - i);
      continue;
    }
    auto two = [&](char a, char b) { return c == a && i + 1 < src.size() && src[i + 1] == b; };
    if (two('-', '>') || two('|', '-') || two('/', '\\') || two('\\', '/') || two(':', '=')) {
      out.push_back({Token::Kind::Punct, src.substr(i, 2), tl, tc});
      bump(2);
      continue;
    }
    if (std::string(";:,.()[]{}|=*+~").find(c) != std::string::npos) {
      out.push_back({Token::Kind::Punct, std::string(1, c), tl, tc});
      bump(1);
      continue;
    }
    throw ParseError(tl, tc, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

// Cursor over a token vector with the usual expect/accept helpers.
class Cursor {
 public:
  explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& peek2() const { return toks_[std::min(pos_ + 1, toks_.size() - 1)]; }
  Token next() { return toks_[at_end() ? pos_ : pos_++]; }
  bool at_end() const { return toks_[pos_].kind == Token::Kind::End; }

  bool at(const std::string& punct) const {
    return peek().kind == Token::Kind::Punct && peek().text == punct;
  }
  bool at_ident(const std::string& word) const {
    return peek().kind == Token::Kind::Ident && peek().text == word;
  }
  bool accept(const std::string& punct) {
    if (!at(punct)) return false;
    ++pos_;
    return true;
  }
  void expect(const std::string& punct) {
    if (!accept(punct)) fail("expected '" + punct + "'");
  }
  std::string expect_ident(const std::string& what) {
    if (peek().kind != Token::Kind::Ident) fail("expected " + what);
    return next().text;
  }
  std::size_t expect_number() {
    if (peek().kind != Token::Kind::Number) fail("expected a number");
    return std::stoull(next().text);
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.col, msg + ", got " + got);
  }

  std::size_t save() const { return pos_; }
  void restore(std::size_t p) { pos_ = p; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace epscalc::lex
