#pragma once

#include <string>
#include <vector>

namespace ontospec {

// 1-based source location range; line 0 means "no location".
struct SourceSpan {
  std::string file;
  int startLine = 0;
  int startCol = 0;
  int endLine = 0;
  int endCol = 0;
};

enum class Severity { Note, Warning, Error };

const char* to_string(Severity s);

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;     // stable catalog identifier, e.g. "P02", "V07"
  std::string entity;   // canonical entity name, empty when not entity-specific
  SourceSpan span;
  std::string message;
};

// "severity code entity file:line:col message"; absent fields print as "-".
std::string format_text(const Diagnostic& d);

// One JSON object with keys severity, code, entity, file, line, col, message.
std::string format_json(const Diagnostic& d);

bool has_errors(const std::vector<Diagnostic>& ds);

}  // namespace ontospec
