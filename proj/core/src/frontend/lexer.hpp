#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "betaz/frontend.hpp"

namespace betaz::dsl {

enum class TokenKind { Int, Ident, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  Span span;
};

/// Splits DSL text into integers, identifiers and punctuation
/// ("==", ">=", "<=", ".." are single tokens). Ends with an End token.
std::vector<Token> tokenize(std::string_view text);

std::string describe(const Token& t);

}  // namespace betaz::dsl
