#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ontospec/diagnostics.hpp"
#include "ontospec/formula.hpp"
#include "ontospec/model.hpp"

namespace ontospec {

// Entity -> predicate symbol: the alias lowercased when present, else a
// lowercase hyphen-slug of the canonical name; injective over the ontology.
class PredicateNamer {
 public:
  explicit PredicateNamer(const Ontology& o);

  const std::string& symbol(std::size_t entityIndex) const;
  std::optional<std::string> symbol_for(const Ontology& o,
                                        const std::string& entityName) const;

 private:
  std::vector<std::string> symbols_;
};

std::string hyphen_slug(const std::string& canonical);

struct Expansion {
  FormulaPtr formula;             // null when unsupported
  std::string unsupportedReason;  // set when formula is null
  std::optional<Diagnostic> diagnostic;  // L01 on inline-formula failure

  bool unsupported() const { return formula == nullptr; }
};

// Instantiates the schema for one structured condition. Free-text conditions
// without an inline formula are Unsupported (a first-class outcome, not an
// error); a broken inline formula is Unsupported plus an L01 diagnostic.
Expansion expand_condition(const Entity& host, const Condition& c,
                           const Ontology& o, const PredicateNamer& names);
Expansion expand_condition(const Entity& host, const Condition& c,
                           const Ontology& o);

struct MetaExpansion {
  std::vector<FormulaPtr> formulas;
  std::vector<std::string> skipped;  // statuses/links without a schema, with reason
};

// One formula per declared status that has a definitional schema (rigidity,
// non-emptiness, cumulativity, homeomericity, atomicity variants), then the
// partition declarations (pairwise disjointness plus boxed exhaustiveness).
MetaExpansion expand_meta(const Entity& host, const Ontology& o,
                          const PredicateNamer& names);
MetaExpansion expand_meta(const Entity& host, const Ontology& o);

}  // namespace ontospec
