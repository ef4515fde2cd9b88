#include "bloblint/lexer.hpp"

#include <array>
#include <cctype>

#include "bloblint/errors.hpp"

namespace bloblint {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool ident_part(char c) {
  return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

// Longest-match first.
constexpr std::array<const char*, 38> kPuncts = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "==", "!=", "<=", ">=",
    "&&",   "||",  "++",  "--",  "+=",  "-=", "*=", "/=", "%=", "&=", "|=",
    "^=",   "<<",  ">>",  "(",   ")",   "{",  "}",  "[",  "]",  ";",  ",",
    ".",    "@",   "?",   ":",   "=",
};

}  // namespace

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;
  const std::size_t n = text.size();

  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };

  while (i < n) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      while (i < n && text[i] != '\n') advance(1);
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '*') {
      int start_line = line, start_col = col;
      advance(2);
      while (i + 1 < n && !(text[i] == '*' && text[i + 1] == '/')) advance(1);
      if (i + 1 >= n) throw LexError("unterminated block comment", start_line, start_col);
      advance(2);
      continue;
    }

    Token tok;
    tok.line = line;
    tok.col = col;
    tok.span.begin = i;

    if (ident_start(c)) {
      std::size_t start = i;
      while (i < n && ident_part(text[i])) advance(1);
      tok.kind = TokKind::Ident;
      tok.text = text.substr(start, i - start);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      bool hex = c == '0' && i + 1 < n && (text[i + 1] == 'x' || text[i + 1] == 'X');
      if (hex) advance(2);
      auto digit_ok = [&](char d) {
        if (d == '_') return true;
        if (hex) return std::isxdigit(static_cast<unsigned char>(d)) != 0;
        return std::isdigit(static_cast<unsigned char>(d)) != 0;
      };
      while (i < n && digit_ok(text[i])) advance(1);
      if (!hex && i < n && text[i] == '.' && i + 1 < n &&
          std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        advance(1);
        while (i < n && digit_ok(text[i])) advance(1);
      }
      if (!hex && i < n && (text[i] == 'e' || text[i] == 'E')) {
        std::size_t save = i;
        advance(1);
        if (i < n && (text[i] == '+' || text[i] == '-')) advance(1);
        if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
          while (i < n && digit_ok(text[i])) advance(1);
        } else {
          i = save;  // not an exponent; col drift is harmless mid-number
        }
      }
      if (i < n && (text[i] == 'l' || text[i] == 'L' || text[i] == 'f' ||
                    text[i] == 'F' || text[i] == 'd' || text[i] == 'D'))
        advance(1);
      tok.kind = TokKind::Number;
      tok.text = text.substr(start, i - start);
    } else if (c == '"') {
      int start_line = line, start_col = col;
      advance(1);
      std::string value;
      while (i < n && text[i] != '"') {
        if (text[i] == '\n') throw LexError("unterminated string literal", start_line, start_col);
        if (text[i] == '\\' && i + 1 < n) {
          char e = text[i + 1];
          switch (e) {
            case 'n': value += '\n'; break;
            case 't': value += '\t'; break;
            case 'r': value += '\r'; break;
            case 'b': value += '\b'; break;
            case 'f': value += '\f'; break;
            case '0': value += '\0'; break;
            default: value += e; break;
          }
          advance(2);
        } else {
          value += text[i];
          advance(1);
        }
      }
      if (i >= n) throw LexError("unterminated string literal", start_line, start_col);
      advance(1);
      tok.kind = TokKind::String;
      tok.text = std::move(value);
    } else if (c == '\'') {
      int start_line = line, start_col = col;
      advance(1);
      std::string value;
      while (i < n && text[i] != '\'') {
        if (text[i] == '\n') throw LexError("unterminated char literal", start_line, start_col);
        if (text[i] == '\\' && i + 1 < n) {
          value += text[i + 1];
          advance(2);
        } else {
          value += text[i];
          advance(1);
        }
      }
      if (i >= n) throw LexError("unterminated char literal", start_line, start_col);
      advance(1);
      tok.kind = TokKind::Char;
      tok.text = std::move(value);
    } else {
      const char* matched = nullptr;
      for (const char* p : kPuncts) {
        std::size_t len = std::char_traits<char>::length(p);
        if (i + len <= n && text.compare(i, len, p) == 0) {
          matched = p;
          break;
        }
      }
      if (!matched) {
        // single-char operators not in the multi-char table
        static const std::string singles = "+-*/%<>!~&|^";
        if (singles.find(c) == std::string::npos)
          throw LexError(std::string("unexpected character '") + c + "'", line, col);
        tok.kind = TokKind::Punct;
        tok.text = std::string(1, c);
        advance(1);
        tok.span.end = i;
        out.push_back(std::move(tok));
        continue;
      }
      tok.kind = TokKind::Punct;
      tok.text = matched;
      advance(std::char_traits<char>::length(matched));
    }
    tok.span.end = i;
    out.push_back(std::move(tok));
  }

  Token end;
  end.kind = TokKind::End;
  end.span = {n, n};
  end.line = line;
  end.col = col;
  out.push_back(std::move(end));
  return out;
}

}  // namespace bloblint
