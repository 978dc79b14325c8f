#include <set>

#include "doctest.h"
#include "ontospec/validator.hpp"
#include "support/helpers.hpp"
#include "support/mutations.hpp"

using namespace ontospec;
using namespace testsupport;

namespace {

std::vector<Diagnostic> validate_source(const std::string& source) {
  Ontology o = parse_ok(source);
  return validate(o);
}

}  // namespace

TEST_CASE("the check catalog covers the published codes") {
  std::set<std::string> codes;
  for (const auto& row : check_catalog()) codes.insert(row.code);
  for (const char* code :
       {"P01", "P07", "R01", "R02", "L01", "L02", "A01", "A02", "S01", "C01",
        "E01", "V01", "V10", "V18"}) {
    CAPTURE(code);
    CHECK(codes.count(code) == 1);
  }
  CHECK(explain("V07").value().find("SC4") != std::string::npos);
  CHECK(explain("V04").value().find("Dd13") != std::string::npos);
  CHECK_FALSE(explain("Z99").has_value());
}

TEST_CASE("the corpus baseline is exactly the documented warning set") {
  auto [ontology, diags] = merge_and_validate(corpus_sources());
  REQUIRE(ontology.has_value());
  CHECK_FALSE(has_errors(diags));
  CHECK(count_code(diags, "P07") == 15);
  CHECK(count_code(diags, "V16") == 1);
  CHECK(count_code(diags, "V18") == 8);
  int warnings = 0;
  for (const auto& d : diags) {
    if (d.severity == Severity::Warning) ++warnings;
  }
  CHECK(warnings == 16);
  for (const auto& d : diags) {
    if (d.code == "V16") {
      CHECK(contains(d.message, "'Dd31'"));
      CHECK(contains(d.message, "2 times"));
    }
  }
}

TEST_CASE("each validator code fires on a single-edit corpus mutation") {
  const auto baseline = corpus_sources();
  auto [baseOntology, baseDiags] = merge_and_validate(baseline);
  REQUIRE(baseOntology.has_value());
  const auto baselineByCode = [&] {
    std::map<std::string, int> out;
    for (const auto& d : baseDiags) ++out[d.code];
    return out;
  }();

  for (const Mutation& m : corpus_mutations()) {
    CAPTURE(m.code);
    auto [ontology, diags] = merge_and_validate(apply_mutation(baseline, m));
    REQUIRE(ontology.has_value());

    int hits = count_code(diags, m.code);
    auto it = baselineByCode.find(m.code);
    int baselineHits = it == baselineByCode.end() ? 0 : it->second;
    CHECK_MESSAGE(hits > baselineHits, m.code << " did not fire");

    // The structural codes must be the only errors their mutation raises.
    if (m.code >= "V01" && m.code <= "V10") {
      auto errors = errors_by_code(diags);
      REQUIRE(errors.count(m.code) == 1);
      CHECK_MESSAGE(errors.size() == 1,
                    m.code << " mutation raised other errors");
    }
  }
}

TEST_CASE("V12 distinguishes asymmetric and missing inverse declarations") {
  auto mismatch = validate_source(
      "ontology \"T\"\n"
      "relation/2 a { props { [EP/IVL] inverse b; } }\n"
      "relation/2 b { props { [EP/IVL] inverse c; } }\n"
      "relation/2 c { }\n");
  bool sawError = false;
  for (const auto& d : mismatch) {
    if (d.code == "V12" && d.severity == Severity::Error) sawError = true;
  }
  CHECK(sawError);

  auto oneSided = validate_source(
      "ontology \"T\"\n"
      "relation/2 a { props { [EP/IVL] inverse b; } }\n"
      "relation/2 b { }\n");
  REQUIRE(count_code(oneSided, "V12") == 1);
  for (const auto& d : oneSided) {
    if (d.code == "V12") CHECK(d.severity == Severity::Warning);
  }

  auto symmetric = validate_source(
      "ontology \"T\"\n"
      "relation/2 a { props { [EP/IVL] inverse b; } }\n"
      "relation/2 b { props { [EP/IVL] inverse a; } }\n");
  CHECK(count_code(symmetric, "V12") == 0);
}

TEST_CASE("anti-statuses produce V18 notes") {
  auto diags = validate_source(
      "ontology \"T\"\n"
      "concept A { meta { rigidity: ~R unity: ~U } }\n");
  CHECK(count_code(diags, "V18") == 2);
  for (const auto& d : diags) {
    if (d.code == "V18") CHECK(d.severity == Severity::Note);
  }
}

TEST_CASE("diagnostics order by declaration order then code") {
  auto diags = validate_source(
      "ontology \"T\"\n"
      "concept Zeta { meta { rigidity: ~R } props { [EP/SL] isa Zeta; } }\n"
      "concept Alpha { meta { unity: ~U } }\n");
  // Zeta: V01 (self-cycle) then V18; Alpha: V18.
  REQUIRE(diags.size() >= 3);
  CHECK(diags[0].entity == "Zeta");
  CHECK(diags[0].code < diags[1].code);
  CHECK(diags[2].entity == "Alpha");
}

TEST_CASE("text and JSON diagnostic formats are stable") {
  Diagnostic d;
  d.severity = Severity::Warning;
  d.code = "V16";
  d.entity = "Region";
  d.span.file = "concepts.osp";
  d.span.startLine = 4;
  d.span.startCol = 7;
  d.message = "axiom reference 'Dd31' is cited 2 times across the ontology";
  CHECK(format_text(d) ==
        "warning V16 Region concepts.osp:4:7 axiom reference 'Dd31' is cited "
        "2 times across the ontology");
  CHECK(format_json(d) ==
        "{\"severity\":\"warning\",\"code\":\"V16\",\"entity\":\"Region\","
        "\"file\":\"concepts.osp\",\"line\":4,\"col\":7,\"message\":\"axiom "
        "reference 'Dd31' is cited 2 times across the ontology\"}");

  Diagnostic bare;
  bare.severity = Severity::Error;
  bare.code = "C01";
  bare.message = "no corpus";
  CHECK(format_text(bare) == "error C01 - -:-:- no corpus");
}
