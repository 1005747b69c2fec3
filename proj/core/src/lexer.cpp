#include "lexer.hpp"

#include <cctype>

namespace irgl::frontend {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Multi-char operators first so "<=" is not lexed as "<" "=".
const char* kPuncts2[] = {"<=", ">=", "==", "!=", "&&", "||"};
const char kPuncts1[] = "+-*/%<>=!&|.,;:()[]{}";

}  // namespace

std::vector<Token> tokenize(std::string_view src, const std::string& filename,
                            std::vector<Diagnostic>& diags) {
  std::vector<Token> toks;
  std::size_t i = 0;
  int line = 1, col = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };

  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }

    Token t;
    t.offset = i;
    t.span = SourceSpan{filename, line, col, 0};

    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      t.kind = TokKind::Ident;
      t.text.assign(src.substr(i, j - i));
      t.span.length = static_cast<int>(j - i);
      advance(j - i);
      toks.push_back(std::move(t));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      bool is_float = false;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && src[j] == '.' && j + 1 < src.size() &&
          std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        is_float = true;
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
          is_float = true;
          j = k;
          while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        }
      }
      t.kind = is_float ? TokKind::Float : TokKind::Int;
      t.text.assign(src.substr(i, j - i));
      t.span.length = static_cast<int>(j - i);
      advance(j - i);
      toks.push_back(std::move(t));
      continue;
    }
    if (c == '"') {
      // String literals only appear as printf format strings in operator
      // code; lexed whole, quotes included.
      std::size_t j = i + 1;
      while (j < src.size() && src[j] != '"') {
        if (src[j] == '\\' && j + 1 < src.size()) ++j;
        ++j;
      }
      if (j >= src.size()) {
        diags.push_back(make_error("E101", "unterminated string literal", t.span));
        advance(src.size() - i);
        continue;
      }
      t.kind = TokKind::String;  // quotes included
      t.text.assign(src.substr(i, j + 1 - i));
      t.span.length = static_cast<int>(j + 1 - i);
      advance(j + 1 - i);
      toks.push_back(std::move(t));
      continue;
    }

    bool matched = false;
    if (i + 1 < src.size()) {
      std::string two{src.substr(i, 2)};
      for (const char* p : kPuncts2) {
        if (two == p) {
          t.kind = TokKind::Punct;
          t.text = two;
          t.span.length = 2;
          advance(2);
          toks.push_back(std::move(t));
          matched = true;
          break;
        }
      }
    }
    if (matched) continue;

    if (std::string_view(kPuncts1).find(c) != std::string_view::npos) {
      t.kind = TokKind::Punct;
      t.text = std::string(1, c);
      t.span.length = 1;
      advance(1);
      toks.push_back(std::move(t));
      continue;
    }

    diags.push_back(make_error("E101", std::string("unexpected character '") + c + "'", t.span));
    advance(1);
  }

  Token end;
  end.kind = TokKind::End;
  end.offset = src.size();
  end.span = SourceSpan{filename, line, col, 0};
  toks.push_back(std::move(end));
  return toks;
}

}  // namespace irgl::frontend
