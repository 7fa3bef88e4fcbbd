#include "lexer.hpp"

#include <cctype>

namespace betaz::dsl {

DslError::DslError(std::string kind, const std::string& message, const Span& span, std::string expected)
    : Error(message + " at line " + std::to_string(span.line) + ", column " + std::to_string(span.column) +
            (expected.empty() ? "" : " (expected " + expected + ")")),
      kind_(std::move(kind)),
      span_(span),
      expected_(std::move(expected)) {}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  const auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (text[i + j] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += k;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.span = Span{line, col, i, 0};
    std::size_t len = 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i + len < text.size() && std::isdigit(static_cast<unsigned char>(text[i + len]))) ++len;
      t.kind = TokenKind::Int;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i + len < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i + len])) || text[i + len] == '_'))
        ++len;
      t.kind = TokenKind::Ident;
    } else {
      t.kind = TokenKind::Punct;
      const std::string_view two = text.substr(i, 2);
      if (two == "==" || two == ">=" || two == "<=" || two == "..") {
        len = 2;
      } else if (std::string_view("(){}[],;|&~\\+-*/^=<>").find(c) == std::string_view::npos) {
        throw DslError("syntax", std::string("unexpected character '") + c + "'", t.span);
      }
    }
    t.text = std::string(text.substr(i, len));
    t.span.length = len;
    out.push_back(std::move(t));
    advance(len);
  }
  Token end;
  end.kind = TokenKind::End;
  end.span = Span{line, col, text.size(), 0};
  out.push_back(end);
  return out;
}

std::string describe(const Token& t) {
  if (t.kind == TokenKind::End) return "end of input";
  return "'" + t.text + "'";
}

}  // namespace betaz::dsl
