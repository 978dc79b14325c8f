// Pipeline benchmarks over the shipped DOLCE-OS corpus: parse, merge,
// resolve, validate, analysis closure and full formula emission.

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ontospec/analysis.hpp"
#include "ontospec/corpus.hpp"
#include "ontospec/expand.hpp"
#include "ontospec/formula.hpp"
#include "ontospec/parser.hpp"
#include "ontospec/validator.hpp"

using namespace ontospec;

namespace {

std::vector<std::pair<std::string, std::string>> corpus_texts() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const std::string& name : corpus_file_names()) {
    std::ifstream in(std::string(ONTOSPEC_BENCH_CORPUS_DIR) + "/" + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    out.emplace_back(name, buf.str());
  }
  return out;
}

Ontology resolved_corpus() {
  std::vector<ParseResult> parts;
  for (const auto& [name, text] : corpus_texts())
    parts.push_back(parse_document(text, name));
  ParseResult merged = merge_documents(std::move(parts));
  resolve_references(*merged.ontology);
  return *merged.ontology;
}

void parse_corpus(benchmark::State& state) {
  auto texts = corpus_texts();
  for (auto _ : state) {
    for (const auto& [name, text] : texts)
      benchmark::DoNotOptimize(parse_document(text, name));
  }
}
BENCHMARK(parse_corpus);

void merge_and_resolve(benchmark::State& state) {
  auto texts = corpus_texts();
  for (auto _ : state) {
    std::vector<ParseResult> parts;
    for (const auto& [name, text] : texts)
      parts.push_back(parse_document(text, name));
    ParseResult merged = merge_documents(std::move(parts));
    benchmark::DoNotOptimize(resolve_references(*merged.ontology));
  }
}
BENCHMARK(merge_and_resolve);

void validate_corpus(benchmark::State& state) {
  Ontology o = resolved_corpus();
  for (auto _ : state) benchmark::DoNotOptimize(validate(o));
}
BENCHMARK(validate_corpus);

void closure_and_supplies(benchmark::State& state) {
  Ontology o = resolved_corpus();
  for (auto _ : state) {
    SubsumptionGraph g = build_graph(o);
    CarriedSet carried = carried_closure(o, g);
    for (std::size_t i = 0; i < o.entities.size(); ++i)
      if (o.entities[i].kind == EntityKind::Concept)
        benchmark::DoNotOptimize(supplies(o, g, carried, i, kKeyIdentity));
  }
}
BENCHMARK(closure_and_supplies);

void emit_corpus(benchmark::State& state) {
  Ontology o = resolved_corpus();
  PredicateNamer names(o);
  for (auto _ : state) {
    std::size_t bytes = 0;
    for (const Entity& e : o.entities) {
      for (const Condition& c : e.conditions) {
        Expansion ex = expand_condition(e, c, o, names);
        if (ex.formula) bytes += emit_osf(ex.formula).size();
      }
      for (const FormulaPtr& f : expand_meta(e, o, names).formulas)
        bytes += emit_osf(f).size();
    }
    benchmark::DoNotOptimize(bytes);
  }
}
BENCHMARK(emit_corpus);

void render_corpus(benchmark::State& state) {
  Ontology o = resolved_corpus();
  for (auto _ : state) benchmark::DoNotOptimize(render(o));
}
BENCHMARK(render_corpus);

}  // namespace

BENCHMARK_MAIN();
