#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "plport/bigint.hpp"
#include "plport/profile.hpp"
#include "plport/term.hpp"
#include "plport/unicode.hpp"

namespace plport {

struct ReadError : std::runtime_error {
  SourceSpan span;
  ReadError(SourceSpan s, const std::string& msg)
      : std::runtime_error(msg), span(std::move(s)) {}
};

struct LexError : ReadError {
  using ReadError::ReadError;
};

struct ParseError : ReadError {
  using ReadError::ReadError;
};

struct UnbalancedConditionalError : ParseError {
  using ParseError::ParseError;
};

enum class TokenKind {
  Atom,      // name token: identifier, symbolic, solo or quoted
  Var,
  Int,
  Float,
  Str,       // double-quoted literal (interpretation is the parser's job)
  BackStr,   // back-quoted literal
  Punct,     // ( ) [ ] { } , |
  End,       // clause-terminating .
  Eof
};

struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string text;        // name / var name / literal value / punct
  BigInt int_value;
  double float_value = 0.0;
  bool quoted = false;         // atom written as '...'
  bool layout_before = false;  // layout or comment separates it from the
                               // previous token (drives f( vs f ( and -1)
  SourceSpan span;

  bool is_punct(std::string_view p) const {
    return kind == TokenKind::Punct && text == p;
  }
  bool is_atom(std::string_view name) const {
    return kind == TokenKind::Atom && text == name;
  }
};

namespace charclass {

inline bool is_layout(char32_t c) {
  switch (c) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\v': case U'\f':
    case 0xA0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
    case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

inline bool is_symbol_char(char32_t c) {
  switch (c) {
    case U'+': case U'-': case U'*': case U'/': case U'\\': case U'^':
    case U'<': case U'>': case U'=': case U'~': case U':': case U'.':
    case U'?': case U'@': case U'#': case U'&': case U'$':
      return true;
    default:
      return false;
  }
}

inline bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

inline bool is_latin1_lower(char32_t c) {
  if (c >= U'a' && c <= U'z') return true;
  if (c == 0xAA || c == 0xB5 || c == 0xBA) return true;
  return (c >= 0xDF && c <= 0xFF && c != 0xF7);
}

inline bool is_latin1_upper(char32_t c) {
  if (c >= U'A' && c <= U'Z') return true;
  return (c >= 0xC0 && c <= 0xDE && c != 0xD7);
}

// Above U+00FF a full category lookup is out of scope; characters there
// are treated as lowercase letters, which matches how the bulk of
// non-Latin scripts behave in unquoted atoms.
inline bool is_ext_letter(char32_t c) { return c > 0xFF && !is_layout(c); }

inline bool is_alpha_lower(char32_t c) {
  return is_latin1_lower(c) || is_ext_letter(c);
}
inline bool is_alpha_upper(char32_t c) { return is_latin1_upper(c); }

inline bool is_alnum_continue(char32_t c) {
  return is_digit(c) || c == U'_' || is_alpha_lower(c) || is_alpha_upper(c);
}

}  // namespace charclass

/// Single-pass tokenizer over decoded text. One instance per input.
class Lexer {
public:
  Lexer(std::u32string text, CharPolicy policy, std::string file = "<input>")
      : text_(std::move(text)), policy_(policy), file_(std::move(file)) {}

  Token next() {
    bool layout = skip_layout_and_comments();
    Token tok;
    tok.layout_before = layout || pos_ == 0;
    mark_start();
    if (at_end()) {
      tok.kind = TokenKind::Eof;
      tok.span = span_from_start();
      return tok;
    }
    char32_t c = peek();
    if (c == U'.') {
      // end token: . followed by layout, %, or end of input
      char32_t n = peek_at(1);
      if (pos_ + 1 >= text_.size() || charclass::is_layout(n) || n == U'%') {
        advance();
        tok.kind = TokenKind::End;
        tok.text = ".";
        tok.span = span_from_start();
        return tok;
      }
    }
    if (charclass::is_digit(c)) return lex_number(tok);
    if (c == U'_' || charclass::is_alpha_upper(c)) return lex_variable(tok);
    if (charclass::is_alpha_lower(c)) {
      check_policy(c);
      return lex_identifier(tok);
    }
    if (charclass::is_symbol_char(c)) return lex_symbolic(tok);
    switch (c) {
      case U'!':
      case U';':
        advance();
        tok.kind = TokenKind::Atom;
        tok.text = utf8_encode(c);
        tok.span = span_from_start();
        return tok;
      case U'(': case U')': case U'[': case U']': case U'{': case U'}':
      case U',': case U'|':
        advance();
        tok.kind = TokenKind::Punct;
        tok.text = utf8_encode(c);
        tok.span = span_from_start();
        return tok;
      case U'\'': {
        advance();
        std::string value = lex_quoted(U'\'');
        tok.kind = TokenKind::Atom;
        tok.quoted = true;
        tok.text = std::move(value);
        tok.span = span_from_start();
        return tok;
      }
      case U'"': {
        advance();
        std::string value = lex_quoted(U'"');
        tok.kind = TokenKind::Str;
        tok.text = std::move(value);
        tok.span = span_from_start();
        return tok;
      }
      case U'`': {
        advance();
        std::string value = lex_quoted(U'`');
        tok.kind = TokenKind::BackStr;
        tok.text = std::move(value);
        tok.span = span_from_start();
        return tok;
      }
      default:
        check_policy(c);
        throw LexError(here_span(), "unexpected character '" + utf8_encode(c) +
                                        "' cannot start a token");
    }
  }

  const std::string& file() const { return file_; }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char32_t peek() const { return text_[pos_]; }
  char32_t peek_at(std::size_t k) const {
    return pos_ + k < text_.size() ? text_[pos_ + k] : 0;
  }

  void advance() {
    if (text_[pos_] == U'\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void mark_start() {
    start_line_ = line_;
    start_col_ = col_;
  }

  SourceSpan span_from_start() const {
    return {file_, start_line_, start_col_, line_, col_};
  }

  SourceSpan here_span() const { return {file_, line_, col_, line_, col_ + 1}; }

  void check_policy(char32_t c) {
    if (policy_ == CharPolicy::latin1_only && c > 0xFF)
      throw LexError(here_span(),
                     "character U+" + hex_of(c) +
                         " above U+00FF is not allowed outside quotes under "
                         "the latin1_only policy");
  }

  static std::string hex_of(char32_t c) {
    static const char* digits = "0123456789ABCDEF";
    std::string s;
    for (int shift = 28; shift >= 0; shift -= 4) {
      int d = (c >> shift) & 0xF;
      if (s.empty() && d == 0 && shift >= 16) continue;
      s.push_back(digits[d]);
    }
    while (s.size() < 4) s.insert(s.begin(), '0');
    return s;
  }

  bool skip_layout_and_comments() {
    bool any = false;
    for (;;) {
      if (at_end()) return any;
      char32_t c = peek();
      if (charclass::is_layout(c)) {
        advance();
        any = true;
        continue;
      }
      if (c == U'%') {
        while (!at_end() && peek() != U'\n') advance();
        any = true;
        continue;
      }
      if (c == U'/' && peek_at(1) == U'*') {
        mark_start();
        advance();
        advance();
        for (;;) {
          if (at_end())
            throw LexError(span_from_start(), "unterminated block comment");
          if (peek() == U'*' && peek_at(1) == U'/') {
            advance();
            advance();
            break;
          }
          advance();
        }
        any = true;
        continue;
      }
      return any;
    }
  }

  Token lex_identifier(Token tok) {
    std::u32string name;
    while (!at_end() && charclass::is_alnum_continue(peek())) {
      check_policy(peek());
      name.push_back(peek());
      advance();
    }
    tok.kind = TokenKind::Atom;
    tok.text = utf8_encode(name);
    tok.span = span_from_start();
    return tok;
  }

  Token lex_variable(Token tok) {
    std::u32string name;
    while (!at_end() && charclass::is_alnum_continue(peek())) {
      check_policy(peek());
      name.push_back(peek());
      advance();
    }
    tok.kind = TokenKind::Var;
    tok.text = utf8_encode(name);
    tok.span = span_from_start();
    return tok;
  }

  Token lex_symbolic(Token tok) {
    std::u32string name;
    while (!at_end() && charclass::is_symbol_char(peek())) {
      name.push_back(peek());
      advance();
    }
    tok.kind = TokenKind::Atom;
    tok.text = utf8_encode(name);
    tok.span = span_from_start();
    return tok;
  }

  Token lex_number(Token tok) {
    if (peek() == U'0' && peek_at(1) == U'\'') {
      advance();
      advance();
      tok.kind = TokenKind::Int;
      tok.int_value = BigInt(static_cast<long long>(lex_char_code()));
      tok.span = span_from_start();
      return tok;
    }
    if (peek() == U'0' &&
        (peek_at(1) == U'x' || peek_at(1) == U'o' || peek_at(1) == U'b')) {
      char32_t radix_char = peek_at(1);
      int base = radix_char == U'x' ? 16 : radix_char == U'o' ? 8 : 2;
      advance();
      advance();
      std::string digits = take_digits(base);
      if (digits.empty())
        throw LexError(span_from_start(), "missing digits after radix prefix");
      tok.kind = TokenKind::Int;
      tok.int_value = BigInt::parse(digits, base);
      tok.span = span_from_start();
      return tok;
    }
    std::string digits = take_digits(10);
    if (!at_end() && peek() == U'.' && charclass::is_digit(peek_at(1))) {
      advance();  // .
      std::string text = digits + "." + take_digits(10);
      if (!at_end() && (peek() == U'e' || peek() == U'E')) {
        std::size_t k = 1;
        if (peek_at(k) == U'+' || peek_at(k) == U'-') ++k;
        if (charclass::is_digit(peek_at(k))) {
          text.push_back('e');
          advance();
          if (peek() == U'+' || peek() == U'-') {
            text.push_back(static_cast<char>(peek()));
            advance();
          }
          text += take_digits(10);
        }
      }
      tok.kind = TokenKind::Float;
      tok.float_value = std::stod(text);
      tok.span = span_from_start();
      return tok;
    }
    tok.kind = TokenKind::Int;
    tok.int_value = BigInt::parse(digits, 10);
    tok.span = span_from_start();
    return tok;
  }

  std::string take_digits(int base) {
    std::string out;
    auto ok = [&](char32_t c) {
      if (base == 10 || base == 8 || base == 2) {
        return c >= U'0' && c < static_cast<char32_t>(U'0' + (base == 10 ? 10 : base));
      }
      return charclass::is_digit(c) || (c >= U'a' && c <= U'f') ||
             (c >= U'A' && c <= U'F');
    };
    while (!at_end() && ok(peek())) {
      out.push_back(static_cast<char>(peek()));
      advance();
    }
    return out;
  }

  char32_t lex_char_code() {
    if (at_end()) throw LexError(here_span(), "end of input after 0'");
    char32_t c = peek();
    if (c == U'\\') {
      advance();
      auto esc = lex_escape(U'\'');
      if (!esc)
        throw LexError(here_span(), "line continuation is not a character");
      return *esc;
    }
    if (c == U'\'') {
      advance();
      if (!at_end() && peek() == U'\'') {
        advance();
        return U'\'';
      }
      throw LexError(here_span(), "0'' must double the quote (0''')");
    }
    advance();
    return c;
  }

  // backslash already consumed; nullopt = line continuation
  std::optional<char32_t> lex_escape(char32_t quote) {
    if (at_end()) throw LexError(here_span(), "end of input in escape sequence");
    char32_t c = peek();
    switch (c) {
      case U'a': advance(); return U'\a';
      case U'b': advance(); return U'\b';
      case U'f': advance(); return U'\f';
      case U'n': advance(); return U'\n';
      case U'r': advance(); return U'\r';
      case U't': advance(); return U'\t';
      case U'v': advance(); return U'\v';
      case U'e': advance(); return 0x1B;
      case U'0': advance(); return U'\0';
      case U'\\': case U'\'': case U'"': case U'`':
        advance();
        return c;
      case U'\n':
        advance();
        return std::nullopt;
      case U'x': {
        advance();
        char32_t v = 0;
        bool any = false;
        while (!at_end() && is_hex(peek())) {
          v = v * 16 + hex_val(peek());
          any = true;
          advance();
        }
        if (!any || at_end() || peek() != U'\\')
          throw LexError(here_span(), "malformed \\x escape (expected hex digits and a closing backslash)");
        advance();
        return v;
      }
      default:
        if (c >= U'0' && c <= U'7') {
          char32_t v = 0;
          while (!at_end() && peek() >= U'0' && peek() <= U'7') {
            v = v * 8 + (peek() - U'0');
            advance();
          }
          if (at_end() || peek() != U'\\')
            throw LexError(here_span(), "malformed octal escape (missing closing backslash)");
          advance();
          return v;
        }
        throw LexError(here_span(),
                       "unknown escape sequence \\" + utf8_encode(c));
    }
    (void)quote;
  }

  static bool is_hex(char32_t c) {
    return charclass::is_digit(c) || (c >= U'a' && c <= U'f') ||
           (c >= U'A' && c <= U'F');
  }
  static int hex_val(char32_t c) {
    if (c <= U'9') return static_cast<int>(c - U'0');
    if (c <= U'F') return static_cast<int>(c - U'A' + 10);
    return static_cast<int>(c - U'a' + 10);
  }

  // opening quote already consumed
  std::string lex_quoted(char32_t quote) {
    std::u32string value;
    for (;;) {
      if (at_end())
        throw LexError(span_from_start(), "unterminated quoted token");
      char32_t c = peek();
      if (c == quote) {
        advance();
        if (!at_end() && peek() == quote) {
          value.push_back(quote);
          advance();
          continue;
        }
        return utf8_encode(value);
      }
      if (c == U'\\') {
        advance();
        if (auto esc = lex_escape(quote)) value.push_back(*esc);
        continue;
      }
      value.push_back(c);
      advance();
    }
  }

  std::u32string text_;
  CharPolicy policy_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  int start_line_ = 1, start_col_ = 1;
};

/// Whole-input tokenization, Eof excluded.
inline std::vector<Token> tokenize(std::string_view text,
                                   const DialectProfile& profile,
                                   std::string file = "<input>") {
  auto decoded = utf8_decode(text);
  std::u32string chars = decoded ? std::move(*decoded) : latin1_decode(text);
  Lexer lexer(std::move(chars), profile.nonascii_unquoted_policy, std::move(file));
  std::vector<Token> out;
  for (;;) {
    Token t = lexer.next();
    if (t.kind == TokenKind::Eof) break;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace plport
