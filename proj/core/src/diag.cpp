#include "irgl/diag.hpp"

#include <sstream>

namespace irgl {

std::string format_diagnostic(const Diagnostic& d) {
  std::ostringstream os;
  os << (d.span.file.empty() ? "<input>" : d.span.file) << ':' << d.span.line << ':'
     << d.span.column << ": " << (d.severity == Severity::Error ? "error" : "warning") << '['
     << d.rule_id << "]: " << d.message;
  return os.str();
}

void print_diagnostics(const std::vector<Diagnostic>& ds, std::ostream& os) {
  for (const auto& d : ds) os << format_diagnostic(d) << '\n';
}

}  // namespace irgl
