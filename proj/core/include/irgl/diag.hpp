#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace irgl {

// Position of a construct in a source file. Lines and columns are 1-based;
// length is the token/construct extent in characters (0 when unknown).
struct SourceSpan {
  std::string file;
  int line = 1;
  int column = 1;
  int length = 0;
};

enum class Severity { Error, Warning };

// A single compiler message. rule_id is a stable identifier ("E003", "W102")
// listed in docs/diagnostics.md; tests key off it.
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string rule_id;
  std::string message;
  SourceSpan span;
};

// Renders as "file:line:col: severity[rule_id]: message".
std::string format_diagnostic(const Diagnostic& d);
void print_diagnostics(const std::vector<Diagnostic>& ds, std::ostream& os);

inline bool has_errors(const std::vector<Diagnostic>& ds) {
  for (const auto& d : ds)
    if (d.severity == Severity::Error) return true;
  return false;
}

inline Diagnostic make_error(std::string rule, std::string msg, SourceSpan span = {}) {
  return Diagnostic{Severity::Error, std::move(rule), std::move(msg), std::move(span)};
}

inline Diagnostic make_warning(std::string rule, std::string msg, SourceSpan span = {}) {
  return Diagnostic{Severity::Warning, std::move(rule), std::move(msg), std::move(span)};
}

}  // namespace irgl
