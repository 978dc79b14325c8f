#include "ontospec/diagnostics.hpp"

#include <sstream>

#include <json.hpp>

namespace ontospec {

const char* to_string(Severity s) {
  switch (s) {
    case Severity::Note: return "note";
    case Severity::Warning: return "warning";
    case Severity::Error: return "error";
  }
  return "error";
}

std::string format_text(const Diagnostic& d) {
  std::ostringstream out;
  out << to_string(d.severity) << ' ' << (d.code.empty() ? "-" : d.code) << ' '
      << (d.entity.empty() ? "-" : d.entity) << ' ';
  if (d.span.file.empty() && d.span.startLine == 0) {
    out << "-:-:-";
  } else {
    out << (d.span.file.empty() ? "-" : d.span.file) << ':' << d.span.startLine
        << ':' << d.span.startCol;
  }
  out << ' ' << d.message;
  return out.str();
}

std::string format_json(const Diagnostic& d) {
  nlohmann::ordered_json j;
  j["severity"] = to_string(d.severity);
  j["code"] = d.code;
  j["entity"] = d.entity;
  j["file"] = d.span.file;
  j["line"] = d.span.startLine;
  j["col"] = d.span.startCol;
  j["message"] = d.message;
  return j.dump();
}

bool has_errors(const std::vector<Diagnostic>& ds) {
  for (const auto& d : ds) {
    if (d.severity == Severity::Error) return true;
  }
  return false;
}

}  // namespace ontospec
