#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ontospec/diagnostics.hpp"
#include "ontospec/model.hpp"

namespace ontospec {

struct ParseResult {
  std::optional<Ontology> ontology;  // present iff no Error was diagnosed
  std::vector<Diagnostic> diagnostics;
};

// Parses one .osp document. Recovers at the next ';' or '}' after a syntax
// error so several diagnostics can be reported in one run.
ParseResult parse_document(const std::string& source, const std::string& file);

// Merges several parsed documents into one ontology (the corpus spans six
// files). Cross-document duplicate names are reported as P06.
ParseResult merge_documents(std::vector<ParseResult> parts);

// Checks that every name mentioned in payloads, partitions and meta links
// binds to a declared entity of a legal kind/arity. Emits R01/R02; marks the
// ontology resolved when no Error was produced.
std::vector<Diagnostic> resolve_references(Ontology& o);

// Deterministic pretty-printer; parse(render(parse(s))) is structurally
// equal to parse(s).
std::string render(const Ontology& o);

}  // namespace ontospec
