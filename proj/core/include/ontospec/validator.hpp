#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ontospec/diagnostics.hpp"
#include "ontospec/model.hpp"

namespace ontospec {

struct CatalogEntry {
  std::string code;
  Severity severity = Severity::Error;
  std::string description;
};

// The published check catalog (V01..V18) plus the parser/resolver/logic/
// analysis/corpus codes, in catalog order.
const std::vector<CatalogEntry>& check_catalog();

// Runs every catalog check; diagnostics ordered by entity declaration order,
// then code. Deterministic and pure.
std::vector<Diagnostic> validate(const Ontology& o);

// Human-readable description of a diagnostic code with the rule's anchor
// (e.g. V07 cites SC4). Absent on unknown code (E01).
std::optional<std::string> explain(const std::string& code);

}  // namespace ontospec
