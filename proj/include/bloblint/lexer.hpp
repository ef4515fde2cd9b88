#pragma once

#include <string>
#include <vector>

#include "bloblint/source.hpp"

namespace bloblint {

enum class TokKind {
  Ident,   // identifiers and keywords
  Number,
  String,  // text holds the decoded value, without quotes
  Char,
  Punct,   // operators and punctuation, text holds the lexeme
  End,
};

struct Token {
  TokKind kind = TokKind::End;
  Span span;
  std::string text;
  int line = 1;
  int col = 1;

  bool is(TokKind k) const { return kind == k; }
  bool is_punct(const char* p) const { return kind == TokKind::Punct && text == p; }
  bool is_ident(const char* name) const { return kind == TokKind::Ident && text == name; }
};

// Tokenizes Java source. Comments and whitespace are skipped. Keywords come
// out as Ident tokens. Throws LexError on unterminated literals/comments or
// stray bytes.
std::vector<Token> lex(const std::string& text);

}  // namespace bloblint
