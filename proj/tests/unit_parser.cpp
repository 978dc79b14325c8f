#include "doctest.h"
#include "ontospec/parser.hpp"
#include "support/generate.hpp"
#include "support/helpers.hpp"

using namespace ontospec;
using namespace testsupport;

namespace {

// parse -> render -> parse must land on the same structure.
void check_render_fixpoint(const std::string& source, const std::string& file) {
  auto first = parse_document(source, file);
  REQUIRE_MESSAGE(first.ontology.has_value(), "parse failed for " << file);
  const std::string rendered = render(*first.ontology);
  auto second = parse_document(rendered, file);
  REQUIRE_MESSAGE(second.ontology.has_value(), "re-parse failed for " << file);
  CHECK_MESSAGE(*first.ontology == *second.ontology,
                "render round-trip diverged for " << file);
  // Rendering the re-parse reproduces the same text, so render is a
  // canonical form.
  CHECK(render(*second.ontology) == rendered);
}

}  // namespace

TEST_CASE("a minimal document parses into the expected model") {
  auto result = parse_document(
      "ontology \"Tiny\"\n"
      "concept Endurant alias ED {\n"
      "  meta {\n"
      "    rigidity: +R\n"
      "    identity: -I\n"
      "    non-empty\n"
      "    partition(Fact, Set) ref Dd41\n"
      "    dep OD -> Perdurant ref Ad69\n"
      "  }\n"
      "  props {\n"
      "    [Ad2a', Dd14; CP/ER] some has-for-part -> Endurant, Endurant\n"
      "      gloss \"structured parts\";\n"
      "  }\n"
      "  comment {\n"
      "    CIT \"D18, p. 14\" \"Endurants are wholly present at any time.\";\n"
      "    DEF \"ED(x) =def PT(x) & ...\";\n"
      "  }\n"
      "}\n",
      "tiny.osp");
  REQUIRE(result.ontology.has_value());
  CHECK_FALSE(has_errors(result.diagnostics));
  const Ontology& o = *result.ontology;
  CHECK(o.title == "Tiny");
  REQUIRE(o.entities.size() == 1);
  const Entity& ed = o.entities[0];
  CHECK(ed.kind == EntityKind::Concept);
  CHECK(ed.name.canonical == "Endurant");
  CHECK(ed.name.alias.value() == "ED");
  CHECK(ed.statuses.rigidity == Rigidity::Rigid);
  CHECK(ed.statuses.identity.value() == false);
  CHECK(ed.statuses.nonEmpty);
  REQUIRE(ed.partitions.size() == 1);
  CHECK(ed.partitions[0].members == std::vector<std::string>{"Fact", "Set"});
  CHECK(ed.partitions[0].ref->str() == "Dd41");
  REQUIRE(ed.metaLinks.size() == 1);
  CHECK(ed.metaLinks[0].kind == DepKind::OD);
  CHECK(ed.metaLinks[0].target == "Perdurant");
  REQUIRE(ed.conditions.size() == 1);
  const Condition& c = ed.conditions[0];
  CHECK(c.modality == Modality::CP);
  CHECK(c.kind == ConditionKind::ER);
  REQUIRE(c.refs.size() == 2);
  CHECK(c.refs[0].str() == "Ad2a'");
  CHECK(c.refs[1].str() == "Dd14");
  const auto& er = std::get<ErPayload>(c.payload);
  CHECK(er.quantity == Quantity::Some);
  CHECK(er.targets.size() == 2);
  CHECK(c.gloss.value() == "structured parts");
  REQUIRE(ed.comments.size() == 2);
  CHECK(ed.comments[0].tag == CommentTag::CIT);
  CHECK(ed.comments[0].source == "D18, p. 14");
  CHECK(ed.comments[1].tag == CommentTag::DEF);
}

TEST_CASE("syntax errors are reported and recovered") {
  auto result = parse_document(
      "ontology \"T\"\n"
      "concept A {\n"
      "  props {\n"
      "    [EP/SL] isa ;\n"
      "    [EP/SL] isa B;\n"
      "  }\n"
      "}\n"
      "concept B { }\n",
      "t.osp");
  CHECK_FALSE(result.ontology.has_value());
  CHECK(count_code(result.diagnostics, "P02") >= 1);
}

TEST_CASE("unknown condition kinds and comment tags are P03 and P04") {
  auto bad = parse_document(
      "ontology \"T\"\nconcept A { props { [EP/WXYZ] isa B; } }\n", "t.osp");
  CHECK(count_code(bad.diagnostics, "P03") == 1);

  auto badTag = parse_document(
      "ontology \"T\"\nconcept A { comment { NOTE \"text\"; } }\n", "t.osp");
  CHECK(count_code(badTag.diagnostics, "P04") == 1);
}

TEST_CASE("malformed axiom references are P05") {
  auto result = parse_document(
      "ontology \"T\"\nconcept A { props { [Zq1; EP/SL] isa B; } }\n", "t.osp");
  CHECK(count_code(result.diagnostics, "P05") == 1);
}

TEST_CASE("duplicate names across documents are P06") {
  std::vector<ParseResult> parts;
  parts.push_back(parse_document(
      "ontology \"T\"\nconcept Endurant alias ED { }\n", "a.osp"));
  parts.push_back(parse_document(
      "ontology \"T\"\nconcept Happening alias ed { }\n", "b.osp"));
  auto merged = merge_documents(std::move(parts));
  CHECK(count_code(merged.diagnostics, "P06") == 1);
  CHECK_FALSE(merged.ontology.has_value());
}

TEST_CASE("alias condition labels are accepted with a P07 warning") {
  auto mil = parse_document(
      "ontology \"T\"\nrelation/2 r { props { [EP/MIL] inverse s; } }\n",
      "t.osp");
  REQUIRE(mil.ontology.has_value());
  CHECK(count_code(mil.diagnostics, "P07") == 1);
  CHECK(mil.ontology->entities[0].conditions[0].kind == ConditionKind::IVL);

  auto sig = parse_document(
      "ontology \"T\"\n"
      "relation/3 r { props { [EP/DR1 & DR2 & R3] sig(A, B, C); } }\n",
      "t.osp");
  REQUIRE(sig.ontology.has_value());
  CHECK(count_code(sig.diagnostics, "P07") == 1);
  CHECK(sig.ontology->entities[0].conditions[0].kind == ConditionKind::SIG);

  auto canonical = parse_document(
      "ontology \"T\"\n"
      "relation/2 r { props { [EP/DR & DRR] sig(A, any(B|C)); } }\n",
      "t.osp");
  REQUIRE(canonical.ontology.has_value());
  CHECK(count_code(canonical.diagnostics, "P07") == 0);
}

TEST_CASE("string escapes survive the lexer") {
  auto result = parse_document(
      "ontology \"T\"\n"
      "concept A { props { [EP/NMC] text \"a \\\"quoted\\\" back\\\\slash"
      "\\n\\tline\"; } }\n",
      "t.osp");
  REQUIRE(result.ontology.has_value());
  const auto& text =
      std::get<TextPayload>(result.ontology->entities[0].conditions[0].payload);
  CHECK(text.text == "a \"quoted\" back\\slash\n\tline");
}

TEST_CASE("reference resolution reports unresolved names and kind mismatches") {
  Ontology unresolvedCase = parse_ok(
      "ontology \"T\"\nconcept A { props { [EP/SL] isa Missing; } }\n");
  auto diags = resolve_references(unresolvedCase);
  CHECK(count_code(diags, "R01") == 1);
  CHECK_FALSE(unresolvedCase.resolved);

  Ontology arityCase = parse_ok(
      "ontology \"T\"\n"
      "concept A { props { [EP/ER] some r -> B, B; } }\n"
      "concept B { }\n"
      "relation/2 r { }\n");
  auto arityDiags = resolve_references(arityCase);
  CHECK(count_code(arityDiags, "R02") == 1);

  Ontology good = parse_ok(
      "ontology \"T\"\n"
      "concept A { props { [EP/ER] some r -> B; } }\n"
      "concept B { }\n"
      "relation/2 r { }\n");
  CHECK_FALSE(has_errors(resolve_references(good)));
  CHECK(good.resolved);
}

TEST_CASE("render round-trips every corpus file") {
  for (const auto& [name, source] : corpus_sources()) {
    check_render_fixpoint(source, name);
  }
}

TEST_CASE("render round-trips 200 generated documents") {
  DocumentGenerator gen(0x05EEDu);
  for (int i = 0; i < 200; ++i) {
    CAPTURE(i);
    check_render_fixpoint(gen.document(i), "generated.osp");
  }
}
