#pragma once

#include <optional>
#include <string>
#include <vector>

#include "irgl/ast.hpp"
#include "irgl/diag.hpp"

// The operator mini-language: the statement forms allowed inside a CBlock.
// A CBlock is straight-line code — assignments (first assignment to an
// unbound name declares it) and expression statements (builtin calls such as
// printf). The frontend parses CBlock text with this module to check
// well-formedness and derive read/write sets; the interpreter parses it again
// at load time to execute it. Codegen emits the stored text verbatim.

namespace irgl::oplang {

struct OpStmt {
  // Assignment when target is set (target is Ident, Index, or Field shaped);
  // a bare expression statement otherwise.
  std::optional<ast::Expr> target;
  ast::Expr value;
};

struct ReadsWrites {
  std::vector<std::string> reads;   // sorted, unique
  std::vector<std::string> writes;  // sorted, unique
};

// Parses CBlock text (one or more ';'-separated statements). Errors are
// reported against `origin`, the span of the enclosing CBlock.
std::vector<OpStmt> parse_code(const std::string& code, const SourceSpan& origin,
                               std::vector<Diagnostic>& diags);

// Identifier sets referenced by the statements. Builtin names (INF, printf,
// graph accessors) are excluded; array writes count the array name as written
// and the index expression's names as read.
ReadsWrites derive_reads_writes(const std::vector<OpStmt>& stmts);

std::string to_string(const OpStmt& s);

// Names with fixed meaning inside operator code.
bool is_builtin_name(const std::string& name);

}  // namespace irgl::oplang
