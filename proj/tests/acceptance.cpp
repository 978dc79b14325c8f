// Acceptance gate: one TEST_CASE per release criterion, each printing a
// single PASS/FAIL line so the suite output doubles as a checklist.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "ontospec/analysis.hpp"
#include "ontospec/corpus.hpp"
#include "ontospec/expand.hpp"
#include "ontospec/formula.hpp"
#include "ontospec/parser.hpp"
#include "ontospec/validator.hpp"

#include "support/generate.hpp"
#include "support/golden.hpp"
#include "support/helpers.hpp"
#include "support/mutations.hpp"
#include "support/oracle_cases.hpp"

using namespace ontospec;
using namespace testsupport;

namespace {

void report(int number, const char* title,
            const std::vector<std::string>& failures) {
  std::printf("criterion %d (%s): %s\n", number, title,
              failures.empty() ? "PASS" : "FAIL");
  for (const auto& f : failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  for (const auto& f : failures) {
    FAIL_CHECK("criterion " << number << ": " << f);
  }
}

const Ontology& corpus() {
  static Ontology o = [] {
    auto loaded = load_corpus(corpus_dir());
    REQUIRE(loaded.ontology.has_value());
    return *loaded.ontology;
  }();
  return o;
}

std::string emit_whole_corpus(const Ontology& o) {
  std::ostringstream out;
  PredicateNamer names(o);
  for (const Entity& e : o.entities) {
    out << "; " << e.name.canonical << "\n";
    for (const Condition& c : e.conditions) {
      Expansion ex = expand_condition(e, c, o, names);
      if (ex.formula) out << emit_osf(ex.formula) << "\n";
    }
    MetaExpansion me = expand_meta(e, o, names);
    for (const FormulaPtr& f : me.formulas) out << emit_osf(f) << "\n";
  }
  return out.str();
}

}  // namespace

TEST_CASE("criterion1 corpus gate: clean load, documented warnings, <2s") {
  std::vector<std::string> failures;

  auto started = std::chrono::steady_clock::now();
  auto loaded = load_corpus(corpus_dir());
  std::vector<Diagnostic> diags = loaded.diagnostics;
  if (loaded.ontology) {
    auto extra = validate(*loaded.ontology);
    diags.insert(diags.end(), extra.begin(), extra.end());
  } else {
    failures.push_back("corpus failed to load");
  }
  double seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - started)
                       .count();

  int errors = 0, p07 = 0, v16 = 0, strays = 0;
  std::string v16Message;
  for (const Diagnostic& d : diags) {
    if (d.severity == Severity::Error) ++errors;
    if (d.severity != Severity::Warning) continue;
    if (d.code == "P07") {
      ++p07;
    } else if (d.code == "V16") {
      ++v16;
      v16Message = d.message;
    } else {
      ++strays;
      failures.push_back("unexpected warning " + d.code + ": " + d.message);
    }
  }
  if (errors != 0)
    failures.push_back("expected 0 errors, saw " + std::to_string(errors));
  if (p07 != 15)
    failures.push_back("expected 15 P07 warnings, saw " + std::to_string(p07));
  if (v16 != 1)
    failures.push_back("expected 1 V16 warning, saw " + std::to_string(v16));
  else if (!contains(v16Message, "'Dd31'"))
    failures.push_back("V16 warning does not name Dd31: " + v16Message);
  if (seconds >= 2.0)
    failures.push_back("load+validate took " + std::to_string(seconds) + "s");

  report(1, "corpus gate", failures);
}

TEST_CASE("criterion2 counts: rigidity, partitions, +O set") {
  std::vector<std::string> failures;
  const Ontology& o = corpus();
  CorpusStats stats = corpus_stats(o);

  if (stats.rigidConcepts != 37)
    failures.push_back("expected 37 rigid concepts, saw " +
                       std::to_string(stats.rigidConcepts));
  if (stats.nonRigidConcepts != 1)
    failures.push_back("expected 1 non-rigid concept, saw " +
                       std::to_string(stats.nonRigidConcepts));

  // Stated partition count. The enumerated host list that accompanies it has
  // twelve entries and the corpus declares exactly those twelve, so the
  // stated total cannot be met; the mismatch is reported, not hidden.
  if (stats.partitions != 13)
    failures.push_back("expected 13 partition declarations, saw " +
                       std::to_string(stats.partitions));

  const std::map<std::string, std::set<std::string>> expectedPartitions = {
      {"Particular", {"Abstract", "Endurant", "Perdurant", "Quality"}},
      {"Region", {"AbstractRegion", "PhysicalRegion", "TemporalRegion"}},
      {"Endurant",
       {"ArbitrarySum", "NonPhysicalEndurant", "PhysicalEndurant"}},
      {"Perdurant", {"Event", "Stative"}},
      {"Event", {"Accomplishment", "Achievement"}},
      {"Stative", {"Process", "State"}},
      {"Quality", {"AbstractQuality", "PhysicalQuality", "TemporalQuality"}},
      {"PhysicalEndurant", {"AmountOfMatter", "Feature", "PhysicalObject"}},
      {"NonPhysicalObject", {"MentalObject", "SocialObject"}},
      {"SocialObject", {"AgentiveSocialObject", "NonAgentiveSocialObject"}},
      {"AgentiveSocialObject", {"SocialAgent", "Society"}},
      {"PhysicalObject",
       {"AgentivePhysicalObject", "NonAgentivePhysicalObject"}},
  };
  std::map<std::string, std::set<std::string>> declaredPartitions;
  for (const Entity& e : o.entities)
    for (const PartitionDecl& p : e.partitions)
      declaredPartitions[e.name.canonical] =
          std::set<std::string>(p.members.begin(), p.members.end());
  for (const auto& [host, members] : expectedPartitions) {
    auto it = declaredPartitions.find(host);
    if (it == declaredPartitions.end())
      failures.push_back("missing partition on " + host);
    else if (it->second != members)
      failures.push_back("partition members differ on " + host);
  }
  for (const auto& [host, members] : declaredPartitions)
    if (!expectedPartitions.count(host))
      failures.push_back("unlisted partition on " + host);

  std::set<std::string> expectedSuppliers = {"Region", "ArbitrarySum",
                                             "AmountOfMatter",
                                             "PhysicalObject"};
  std::set<std::string> declaredSuppliers;
  for (const Entity& e : o.entities)
    if (e.statuses.suppliesIdentity) declaredSuppliers.insert(e.name.canonical);
  if (declaredSuppliers != expectedSuppliers) {
    std::string got;
    for (const auto& n : declaredSuppliers) got += n + " ";
    failures.push_back("+O set mismatch: " + got);
  }

  report(2, "counts", failures);
}

TEST_CASE("criterion3 supply oracle: supplies(+I) matches declared +O") {
  std::vector<std::string> failures;
  const Ontology& o = corpus();
  SubsumptionGraph g = build_graph(o);
  CarriedSet carried = carried_closure(o, g);

  int mismatches = 0;
  for (std::size_t i = 0; i < o.entities.size(); ++i) {
    const Entity& e = o.entities[i];
    if (e.kind != EntityKind::Concept) continue;
    SupplyResult r = supplies(o, g, carried, i, kKeyIdentity);
    bool computed = r.supplies.value_or(false);
    if (computed != e.statuses.suppliesIdentity) {
      ++mismatches;
      failures.push_back(e.name.canonical + ": supplies(+I)=" +
                         (computed ? "true" : "false") + " but +O=" +
                         (e.statuses.suppliesIdentity ? "true" : "false"));
    }
  }
  if (mismatches != 0)
    failures.push_back(std::to_string(mismatches) + " mismatch(es)");

  report(3, "supply oracle", failures);
}

TEST_CASE("criterion4 definedness oracle: hand table for all 38 concepts") {
  std::vector<std::string> failures;
  const Ontology& o = corpus();

  const std::set<std::string> defined = {"Accomplishment", "Achievement",
                                         "PhysicalQuality", "TemporalQuality",
                                         "Atom"};
  int concepts = 0;
  for (const Entity& e : o.entities) {
    if (e.kind != EntityKind::Concept) continue;
    ++concepts;
    Definedness expect = defined.count(e.name.canonical) ? Definedness::Defined
                                                    : Definedness::Primitive;
    if (derive_definedness(e) != expect)
      failures.push_back(e.name.canonical + " disagrees with the hand table");
  }
  if (concepts != 38)
    failures.push_back("expected 38 concepts, saw " +
                       std::to_string(concepts));

  auto anchor = [&](const char* name, Definedness expect) {
    const Entity* e = lookup(o, name);
    if (!e || derive_definedness(*e) != expect)
      failures.push_back(std::string("anchor failed: ") + name);
  };
  anchor("Accomplishment", Definedness::Defined);
  anchor("Perdurant", Definedness::Primitive);
  anchor("Atom", Definedness::Defined);

  report(4, "definedness oracle", failures);
}

TEST_CASE("criterion5 mutation suite: V01-V17 each fire on a single edit") {
  std::vector<std::string> failures;
  auto sources = corpus_sources();
  auto baseline = merge_and_validate(sources).second;

  int passed = 0;
  for (const Mutation& m : corpus_mutations()) {
    auto mutated = apply_mutation(sources, m);
    auto diags = merge_and_validate(mutated).second;
    bool fired = count_code(diags, m.code) > count_code(baseline, m.code);
    bool cleanErrors = true;
    if (m.code >= "V01" && m.code <= "V10") {
      for (const auto& [code, n] : errors_by_code(diags))
        if (code != m.code) cleanErrors = false;
      if (errors_by_code(diags).count(m.code) == 0) cleanErrors = false;
    }
    if (fired && cleanErrors) {
      ++passed;
    } else if (!fired) {
      failures.push_back(m.code + " did not fire on its mutation");
    } else {
      failures.push_back(m.code + " mutation raised extra error codes");
    }
  }
  if (passed != 17)
    failures.push_back(std::to_string(passed) + "/17 mutations passed");

  report(5, "mutation suite", failures);
}

TEST_CASE("criterion6 expansion goldens and byte-stable emission") {
  std::vector<std::string> failures;

  auto expected = load_expected_osf(data_path("golden/expected.osf"));
  Ontology fixture = load_golden_fixture();
  PredicateNamer names(fixture);

  for (const GoldenConditionCase& c : golden_condition_cases()) {
    const Entity* e = lookup(fixture, c.entity);
    if (!e) {
      failures.push_back(c.id + ": fixture entity missing");
      continue;
    }
    Expansion ex =
        expand_condition(*e, e->conditions[c.conditionIndex], fixture, names);
    if (!ex.formula) {
      failures.push_back(c.id + ": unsupported (" + ex.unsupportedReason + ")");
      continue;
    }
    auto it = expected.find(c.id);
    if (it == expected.end())
      failures.push_back(c.id + ": no expected block");
    else if (emit_osf(ex.formula) != it->second)
      failures.push_back(c.id + ": emitted formula differs");
  }
  for (const GoldenMetaCase& c : golden_meta_cases()) {
    const Entity* e = lookup(fixture, c.entity);
    if (!e) {
      failures.push_back(c.id + ": fixture entity missing");
      continue;
    }
    MetaExpansion me = expand_meta(*e, fixture, names);
    auto it = expected.find(c.id);
    if (it == expected.end())
      failures.push_back(c.id + ": no expected block");
    else if (c.formulaIndex >= me.formulas.size())
      failures.push_back(c.id + ": meta expansion too short");
    else if (emit_osf(me.formulas[c.formulaIndex]) != it->second)
      failures.push_back(c.id + ": emitted formula differs");
  }

  auto first = load_corpus(corpus_dir());
  auto second = load_corpus(corpus_dir());
  if (!first.ontology || !second.ontology) {
    failures.push_back("corpus reload failed");
  } else if (emit_whole_corpus(*first.ontology) !=
             emit_whole_corpus(*second.ontology)) {
    failures.push_back("corpus emission differs between runs");
  }

  report(6, "expansion goldens", failures);
}

TEST_CASE("criterion7 finite-model oracle: full agreement under domain 3") {
  std::vector<std::string> failures;
  auto started = std::chrono::steady_clock::now();

  long long interpretations = 0;
  for (const OracleCase& c : oracle_cases()) {
    OracleOutcome out = run_oracle_case(c, 3);
    interpretations += out.interpretations;
    if (out.disagreements != 0)
      failures.push_back(c.id + ": " + std::to_string(out.disagreements) +
                         " disagreement(s)");
  }
  double seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - started)
                       .count();
  if (interpretations < 500000)
    failures.push_back("suspiciously few interpretations: " +
                       std::to_string(interpretations));
  if (seconds >= 60.0)
    failures.push_back("oracle took " + std::to_string(seconds) + "s");

  report(7, "finite-model oracle", failures);
}

TEST_CASE("criterion8 round-trip: corpus and 200 generated documents") {
  std::vector<std::string> failures;

  auto fixpoint = [&](const std::string& source, const std::string& label) {
    ParseResult first = parse_document(source, label);
    if (!first.ontology) {
      failures.push_back(label + ": initial parse failed");
      return;
    }
    std::string rendered = render(*first.ontology);
    ParseResult second = parse_document(rendered, label);
    if (!second.ontology) {
      failures.push_back(label + ": reparse failed");
      return;
    }
    if (!(*first.ontology == *second.ontology)) {
      failures.push_back(label + ": ontologies differ after round-trip");
      return;
    }
    if (render(*second.ontology) != rendered)
      failures.push_back(label + ": render is not a fixpoint");
  };

  for (const auto& [name, text] : corpus_sources()) fixpoint(text, name);

  DocumentGenerator gen(0xACCE55u);
  for (int i = 0; i < 200; ++i)
    fixpoint(gen.document(i), "generated-" + std::to_string(i));

  report(8, "round-trip", failures);
}
