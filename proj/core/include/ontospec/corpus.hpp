#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ontospec/diagnostics.hpp"
#include "ontospec/model.hpp"
#include "ontospec/parser.hpp"

namespace ontospec {

struct CorpusStats {
  int rigidConcepts = 0;
  int nonRigidConcepts = 0;
  int binaryRelations = 0;
  int ternaryRelations = 0;
  int metaConcepts = 0;
  int metaRelations = 0;
  int partitions = 0;
  std::map<ConditionKind, int> conditionsByKind;
  std::map<char, int> axiomRefsByFamily;  // 'A' | 'D' | 'T'
};

// Resolution order for the DOLCE-OS data directory: ONTOSPEC_CORPUS env var,
// the installed share/ path next to the running executable, then the source
// tree the library was built from. Absent if none exists.
std::optional<std::string> resolve_corpus_dir();

// The six corpus files, in load order.
const std::vector<std::string>& corpus_file_names();

struct CorpusLoadResult {
  std::optional<Ontology> ontology;
  std::vector<Diagnostic> diagnostics;
};

// Verifies the MANIFEST digests (C01 on mismatch), then parses, merges and
// resolves the corpus files.
CorpusLoadResult load_corpus(const std::string& dir);
CorpusLoadResult load_corpus();  // uses resolve_corpus_dir()

CorpusStats corpus_stats(const Ontology& o);

std::string sha256_hex(const std::string& bytes);

}  // namespace ontospec
