#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ontospec/corpus.hpp"
#include "ontospec/parser.hpp"
#include "ontospec/validator.hpp"

namespace testsupport {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string data_path(const std::string& rel) {
  return std::string(ONTOSPEC_TEST_DATA_DIR) + "/" + rel;
}

inline std::string corpus_dir() { return std::string(ONTOSPEC_CORPUS_DIR); }

// Parses one document and requires a clean parse.
inline ontospec::Ontology parse_ok(const std::string& source,
                                   const std::string& file = "test.osp") {
  auto result = ontospec::parse_document(source, file);
  if (!result.ontology) {
    std::string all;
    for (const auto& d : result.diagnostics) all += format_text(d) + "\n";
    throw std::runtime_error("parse failed:\n" + all);
  }
  return std::move(*result.ontology);
}

// Parse + resolve; throws when anything is diagnosed as an error.
inline ontospec::Ontology resolve_ok(const std::string& source,
                                     const std::string& file = "test.osp") {
  ontospec::Ontology o = parse_ok(source, file);
  auto diags = resolve_references(o);
  if (ontospec::has_errors(diags)) {
    std::string all;
    for (const auto& d : diags) all += format_text(d) + "\n";
    throw std::runtime_error("resolve failed:\n" + all);
  }
  return o;
}

inline int count_code(const std::vector<ontospec::Diagnostic>& ds,
                      const std::string& code) {
  int n = 0;
  for (const auto& d : ds) {
    if (d.code == code) ++n;
  }
  return n;
}

inline std::map<std::string, int> errors_by_code(
    const std::vector<ontospec::Diagnostic>& ds) {
  std::map<std::string, int> out;
  for (const auto& d : ds) {
    if (d.severity == ontospec::Severity::Error) ++out[d.code];
  }
  return out;
}

// The six corpus sources keyed by file name, read from the source tree.
inline std::map<std::string, std::string> corpus_sources() {
  std::map<std::string, std::string> out;
  for (const auto& name : ontospec::corpus_file_names()) {
    out[name] = read_file(corpus_dir() + "/" + name);
  }
  return out;
}

// Parse + merge + validate a set of sources (the mutation pipeline; reference
// resolution is orthogonal to the validator and would only add R-codes).
inline std::pair<std::optional<ontospec::Ontology>,
                 std::vector<ontospec::Diagnostic>>
merge_and_validate(const std::map<std::string, std::string>& sources) {
  std::vector<ontospec::ParseResult> parts;
  for (const auto& [name, text] : sources) {
    parts.push_back(ontospec::parse_document(text, name));
  }
  auto merged = ontospec::merge_documents(std::move(parts));
  std::vector<ontospec::Diagnostic> diags = std::move(merged.diagnostics);
  if (merged.ontology) {
    auto v = ontospec::validate(*merged.ontology);
    diags.insert(diags.end(), v.begin(), v.end());
  }
  return {std::move(merged.ontology), std::move(diags)};
}

struct CliResult {
  int exitCode = -1;
  std::string output;  // stdout and stderr interleaved
};

// Runs the installed CLI binary with sh-quoted arguments.
inline CliResult run_cli(const std::string& args,
                         const std::string& envPrefix = "") {
  std::string cmd = envPrefix + std::string(ONTOSPEC_CLI_PATH) + " " + args +
                    " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  CliResult r;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace testsupport
