#include <algorithm>

#include "doctest.h"
#include "ontospec/analysis.hpp"
#include "ontospec/corpus.hpp"
#include "support/helpers.hpp"

using namespace ontospec;
using namespace testsupport;

namespace {

const char* kDiamond =
    "ontology \"T\"\n"
    "concept Top {\n"
    "  meta { identity: +I unity: +U dependence: +D }\n"
    "  props {\n"
    "    [EP/NMC] text \"applies to itself\";\n"
    "    [EP/SMC] text \"class-level remark\";\n"
    "  }\n"
    "}\n"
    "concept Left { props { [EP/SL] isa Top; } }\n"
    "concept Right { props { [EP/SL] isa Top; } }\n"
    "concept Bottom {\n"
    "  props {\n"
    "    [EP/SL] isa Left;\n"
    "    [EP/SL] isa Right;\n"
    "    [EP/NSMC] text \"an upward-visible remark\";\n"
    "  }\n"
    "}\n";

std::size_t idx(const Ontology& o, const std::string& name) {
  return lookup_index(o, name).value();
}

const CarriedEntry* find_entry(const std::vector<CarriedEntry>& entries,
                               const std::string& key) {
  for (const auto& e : entries) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("the subsumption graph records one edge per SL or SLD") {
  Ontology o = resolve_ok(kDiamond);
  SubsumptionGraph g = build_graph(o);
  CHECK(g.nodeCount == o.entities.size());
  CHECK(g.edges.size() == 4);
  CHECK(g.notes.empty());
  CHECK(g.parents[idx(o, "Bottom")].size() == 2);
}

TEST_CASE("parallel subsumption edges collapse with a note") {
  Ontology o = resolve_ok(
      "ontology \"T\"\n"
      "concept A { props { [EP/SL] isa B; [EP/SLD] isa B diff \"again\"; } }\n"
      "concept B { }\n");
  SubsumptionGraph g = build_graph(o);
  CHECK(g.edges.size() == 1);
  REQUIRE(g.notes.size() == 1);
  CHECK(g.notes[0].code == "A02");
  CHECK(g.notes[0].severity == Severity::Note);
  CHECK(g.parents[idx(o, "A")].size() == 1);
}

TEST_CASE("ancestors walk breadth-first and stop on cycles") {
  Ontology o = resolve_ok(kDiamond);
  SubsumptionGraph g = build_graph(o);
  auto up = ancestors(g, idx(o, "Bottom"));
  REQUIRE(up.has_value());
  // Direct parents first in declaration order, then the shared grandparent
  // once.
  CHECK(*up == std::vector<std::size_t>{idx(o, "Left"), idx(o, "Right"),
                                        idx(o, "Top")});

  Ontology cyc = parse_ok(
      "ontology \"T\"\n"
      "concept A { props { [EP/SL] isa B; } }\n"
      "concept B { props { [EP/SL] isa A; } }\n"
      "concept C { props { [EP/SL] isa A; } }\n");
  SubsumptionGraph cg = build_graph(cyc);
  CHECK_FALSE(ancestors(cg, idx(cyc, "A")).has_value());
  CHECK_FALSE(ancestors(cg, idx(cyc, "B")).has_value());
  // C hangs below the cycle but is not itself on one.
  CHECK(ancestors(cg, idx(cyc, "C")).has_value());

  std::vector<Diagnostic> diags;
  CHECK_FALSE(ancestors(cg, idx(cyc, "A"), cyc, diags).has_value());
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].code == "A01");
}

TEST_CASE("carried closure splits own, inherited-down and inherited-up") {
  Ontology o = resolve_ok(kDiamond);
  SubsumptionGraph g = build_graph(o);
  CarriedSet carried = carried_closure(o, g);

  const auto& top = carried.perEntity[idx(o, "Top")];
  const auto* ownNmc = find_entry(top, "nmc|applies to itself");
  REQUIRE(ownNmc != nullptr);
  CHECK(ownNmc->via == Via::Own);
  // SMC remarks stay at their level; NSMC remarks surface upward.
  CHECK(find_entry(top, "smc|class-level remark") != nullptr);
  const auto* upward = find_entry(top, "nsmc|an upward-visible remark");
  REQUIRE(upward != nullptr);
  CHECK(upward->via == Via::InheritedUp);
  CHECK(upward->origin == idx(o, "Bottom"));

  const auto& bottom = carried.perEntity[idx(o, "Bottom")];
  const auto* downNmc = find_entry(bottom, "nmc|applies to itself");
  REQUIRE(downNmc != nullptr);
  CHECK(downNmc->via == Via::InheritedDown);
  CHECK(downNmc->origin == idx(o, "Top"));
  CHECK(find_entry(bottom, "smc|class-level remark") == nullptr);
  CHECK(find_entry(bottom, kKeyIdentity) != nullptr);
  CHECK(find_entry(bottom, kKeyUnity) != nullptr);
  CHECK(find_entry(bottom, kKeyDependence) != nullptr);
}

TEST_CASE("supplies asks whether the carrier is minimal") {
  Ontology o = resolve_ok(
      "ontology \"T\"\n"
      "concept Stuff { meta { identity: +I } }\n"
      "concept Gold { meta { identity: +I } props { [EP/SL] isa Stuff; } }\n"
      "concept Coin { props { [EP/SL] isa Gold; } }\n");
  SubsumptionGraph g = build_graph(o);

  CHECK(supplies(o, g, idx(o, "Stuff"), kKeyIdentity).supplies.value());
  // Gold re-declares the criterion its ancestor already carries.
  CHECK_FALSE(supplies(o, g, idx(o, "Gold"), kKeyIdentity).supplies.value());

  SupplyResult notCarried = supplies(o, g, idx(o, "Coin"), "+U");
  CHECK_FALSE(notCarried.supplies.has_value());
  REQUIRE(notCarried.diagnostic.has_value());
  CHECK(notCarried.diagnostic->code == "S01");
}

TEST_CASE("differentia-bearing keys require the host to add the differentia") {
  const char* base =
      "ontology \"T\"\n"
      "concept Event { }\n";
  // The SLD key supplies only when the host states the differentia as an NMC
  // its genus lacks.
  Ontology with = resolve_ok(
      std::string(base) +
      "concept Achievement {\n"
      "  props {\n"
      "    [EP/SLD] isa Event diff \"is atomic\";\n"
      "    [EP/NMC] text \"is atomic\";\n"
      "  }\n"
      "}\n");
  SubsumptionGraph gw = build_graph(with);
  const std::string key = condition_key(
      with.entities[lookup_index(with, "Achievement").value()].conditions[0]);
  CHECK(supplies(with, gw, lookup_index(with, "Achievement").value(), key)
            .supplies.value());

  Ontology without = resolve_ok(
      std::string(base) +
      "concept Achievement {\n"
      "  props { [EP/SLD] isa Event diff \"is atomic\"; }\n"
      "}\n");
  SubsumptionGraph go = build_graph(without);
  const std::string key2 = condition_key(
      without.entities[lookup_index(without, "Achievement").value()]
          .conditions[0]);
  CHECK_FALSE(supplies(without, go, lookup_index(without, "Achievement").value(),
                       key2)
                  .supplies.value());
}

TEST_CASE("SMC-side keys are minimal when no descendant re-carries them") {
  Ontology o = resolve_ok(
      "ontology \"T\"\n"
      "concept A { props { [EP/NSMC] text \"shared remark\"; } }\n"
      "concept B {\n"
      "  props { [EP/SL] isa A; [EP/NSMC] text \"shared remark\"; }\n"
      "}\n");
  SubsumptionGraph g = build_graph(o);
  const std::string key = "nsmc|shared remark";
  CHECK_FALSE(supplies(o, g, idx(o, "A"), key).supplies.value());
  CHECK(supplies(o, g, idx(o, "B"), key).supplies.value());
}

TEST_CASE("definedness is derived from own NSMC or SLD conditions") {
  Ontology o = resolve_ok(
      "ontology \"T\"\n"
      "concept Event { }\n"
      "concept Achievement {\n"
      "  props { [EP/SLD] isa Event diff \"is atomic\"; }\n"
      "}\n"
      "concept Union { props { [EP/NSMC] text \"sum of the others\"; } }\n"
      "concept Process { props { [EP/SL] isa Event; } }\n");
  CHECK(derive_definedness(*lookup(o, "Achievement")) == Definedness::Defined);
  CHECK(derive_definedness(*lookup(o, "Union")) == Definedness::Defined);
  CHECK(derive_definedness(*lookup(o, "Process")) == Definedness::Primitive);
  CHECK(derive_definedness(*lookup(o, "Event")) == Definedness::Primitive);
}

TEST_CASE("effective signatures merge down the relation hierarchy") {
  Ontology o = resolve_ok(
      "ontology \"T\"\n"
      "concept A { }\n"
      "concept B { }\n"
      "concept C { }\n"
      "relation/2 base { props { [EP/DR & DRR] sig(A, any(B|C)); } }\n"
      "relation/2 narrow {\n"
      "  props { [EP/SL] isa base; [EP/RR] sig(*, B); } \n"
      "}\n"
      "relation/2 plain { props { [EP/SL] isa base; } }\n");
  SubsumptionGraph g = build_graph(o);

  auto narrow = effective_signature(o, g, idx(o, "narrow"));
  REQUIRE(narrow.size() == 2);
  CHECK(narrow[0].mode == ArgSpec::Mode::One);
  CHECK(narrow[0].targets == std::vector<std::string>{"A"});
  CHECK(narrow[1].mode == ArgSpec::Mode::One);
  CHECK(narrow[1].targets == std::vector<std::string>{"B"});

  auto plain = effective_signature(o, g, idx(o, "plain"));
  CHECK(plain[0].mode == ArgSpec::Mode::One);
  CHECK(plain[1].mode == ArgSpec::Mode::AnyOf);
}

TEST_CASE("corpus spot checks for identity supply") {
  auto loaded = load_corpus(corpus_dir());
  REQUIRE(loaded.ontology.has_value());
  const Ontology& o = *loaded.ontology;
  SubsumptionGraph g = build_graph(o);

  CHECK(supplies(o, g, idx(o, "Region"), kKeyIdentity).supplies.value());
  CHECK_FALSE(
      supplies(o, g, idx(o, "AbstractRegion"), kKeyIdentity).supplies.value());
  CHECK(supplies(o, g, idx(o, "AmountOfMatter"), kKeyIdentity).supplies.value());
  CHECK(supplies(o, g, idx(o, "PhysicalObject"), kKeyIdentity).supplies.value());
  CHECK(supplies(o, g, idx(o, "ArbitrarySum"), kKeyIdentity).supplies.value());
}
