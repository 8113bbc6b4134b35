#pragma once

#include "orbitlie/catalog.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace orbitlie {

struct Diagnostic {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
  std::string message;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::vector<Diagnostic> diags);
  const std::vector<Diagnostic>& diagnostics() const { return diags_; }
  const std::string& source() const { return source_; }

 private:
  std::string source_;
  std::vector<Diagnostic> diags_;
};

/// "source:line:column: message"
std::string format_diagnostic(const std::string& source, const Diagnostic& d);

/// Grammar in docs/space-file.md. Throws ParseError with every diagnostic found.
CatalogEntry parse_entry(std::string_view text, const std::string& source = "<input>");
CatalogEntry parse_file(const std::string& path);

/// Canonical text; parse_entry(emit(e)) reproduces e.
std::string emit(const CatalogEntry& e);

}  // namespace orbitlie
