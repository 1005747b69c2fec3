#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "irgl/diag.hpp"

namespace irgl::frontend {

enum class TokKind { End, Ident, Int, Float, String, Punct };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  std::size_t offset = 0;  // byte offset of the first character
  SourceSpan span;

  bool is_ident(std::string_view s) const { return kind == TokKind::Ident && text == s; }
  bool is_punct(std::string_view s) const { return kind == TokKind::Punct && text == s; }
};

// Tokenizes the whole input. `//` comments run to end of line. On a bad
// character a diagnostic is appended and the character skipped.
std::vector<Token> tokenize(std::string_view src, const std::string& filename,
                            std::vector<Diagnostic>& diags);

}  // namespace irgl::frontend
