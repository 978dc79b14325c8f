#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ontospec/diagnostics.hpp"
#include "ontospec/model.hpp"

namespace ontospec {

struct SubsumptionEdge {
  std::size_t child = 0;
  std::size_t parent = 0;
  bool viaSld = false;
};

struct SubsumptionGraph {
  std::size_t nodeCount = 0;
  std::vector<std::vector<std::size_t>> parents;  // child -> parent indices
  std::vector<SubsumptionEdge> edges;
  std::vector<Diagnostic> notes;  // collapsed duplicate parallel edges
};

// One edge per SL/SLD condition; duplicates collapsed with a Note. Cycle
// reporting is the validator's job; the graph stores what was declared.
SubsumptionGraph build_graph(const Ontology& o);

// Transitive closure over child -> parent edges in breadth-first order with
// declaration-order tie-breaks. Absent (A01) when e lies on a cycle.
std::optional<std::vector<std::size_t>> ancestors(const SubsumptionGraph& g,
                                                  std::size_t e);
std::optional<std::vector<std::size_t>> ancestors(const SubsumptionGraph& g,
                                                  std::size_t e,
                                                  const Ontology& o,
                                                  std::vector<Diagnostic>& diags);

enum class Via { Own, InheritedDown, InheritedUp };

// Synthetic keys for meta-statuses folded into the carried-key machinery.
inline constexpr const char* kKeyIdentity = "+I";
inline constexpr const char* kKeyUnity = "+U";
inline constexpr const char* kKeyDependence = "+D";

struct CarriedEntry {
  std::string key;
  std::size_t origin = 0;            // entity the condition/status is declared on
  const Condition* condition = nullptr;  // null for synthetic status keys
  Via via = Via::Own;
  std::optional<Modality> modality;  // preserved so CP-tagged entries stay visible
};

struct CarriedSet {
  std::vector<std::vector<CarriedEntry>> perEntity;
};

// Own conditions; NMC-family / identity / unity / dependence keys of every
// ancestor (InheritedDown); SMC-side keys of every descendant (InheritedUp).
CarriedSet carried_closure(const Ontology& o, const SubsumptionGraph& g);

struct SupplyResult {
  std::optional<bool> supplies;  // absent on S01 (key not carried)
  std::optional<Diagnostic> diagnostic;
};

// Minimal-carrier tests: downward keys require no strict ancestor carrier,
// SMC-side keys no strict descendant carrier; differentia-bearing keys also
// require the host to carry the differentia as an NMC that its genus lacks.
SupplyResult supplies(const Ontology& o, const SubsumptionGraph& g,
                      std::size_t entity, const std::string& key);
SupplyResult supplies(const Ontology& o, const SubsumptionGraph& g,
                      const CarriedSet& carried, std::size_t entity,
                      const std::string& key);

enum class Definedness { Defined, Primitive };

// Defined iff the entity's own conditions include an NSMC or SLD.
Definedness derive_definedness(const Entity& e);

// Per-slot merge of own and inherited signature restrictions.
std::vector<ArgSpec> effective_signature(const Ontology& o,
                                         const SubsumptionGraph& g,
                                         std::size_t relation);

}  // namespace ontospec
