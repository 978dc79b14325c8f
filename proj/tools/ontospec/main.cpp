#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "ontospec/analysis.hpp"
#include "ontospec/corpus.hpp"
#include "ontospec/diagnostics.hpp"
#include "ontospec/expand.hpp"
#include "ontospec/formula.hpp"
#include "ontospec/model.hpp"
#include "ontospec/parser.hpp"
#include "ontospec/validator.hpp"

namespace fs = std::filesystem;
using namespace ontospec;

namespace {

struct Inputs {
  std::optional<Ontology> ontology;
  std::vector<Diagnostic> diagnostics;
  bool ioError = false;
  std::string ioMessage;
};

// Explicit files are parsed, merged and resolved; with no files the
// installed corpus is loaded (ONTOSPEC_CORPUS overrides its location).
Inputs load_inputs(const std::vector<std::string>& files) {
  Inputs in;
  if (files.empty()) {
    auto dir = resolve_corpus_dir();
    if (!dir) {
      in.ioError = true;
      in.ioMessage =
          "no input files and no corpus directory found; "
          "pass .osp files or set ONTOSPEC_CORPUS";
      return in;
    }
    CorpusLoadResult r = load_corpus(*dir);
    in.ontology = std::move(r.ontology);
    in.diagnostics = std::move(r.diagnostics);
    return in;
  }
  std::vector<ParseResult> parts;
  for (const std::string& f : files) {
    std::ifstream stream(f, std::ios::binary);
    if (!stream) {
      in.ioError = true;
      in.ioMessage = "cannot read '" + f + "'";
      return in;
    }
    std::ostringstream buf;
    buf << stream.rdbuf();
    parts.push_back(parse_document(buf.str(), f));
  }
  ParseResult merged = merge_documents(std::move(parts));
  in.diagnostics = std::move(merged.diagnostics);
  if (merged.ontology) {
    std::vector<Diagnostic> res = resolve_references(*merged.ontology);
    in.diagnostics.insert(in.diagnostics.end(), res.begin(), res.end());
    in.ontology = std::move(merged.ontology);
  }
  return in;
}

void print_to(std::ostream& out, const std::vector<Diagnostic>& diags,
              const std::string& format) {
  for (const Diagnostic& d : diags) {
    out << (format == "json" ? format_json(d) : format_text(d)) << "\n";
  }
}

// The corpus ships with a documented warning set: the printed-label P07
// aliases and the duplicate Dd31 axiom reference. Under --strict these do
// not fail the run unless --no-corpus-baseline is given.
bool baseline_exempt(const Diagnostic& d) {
  if (d.code == "P07") return true;
  if (d.code == "V16" && d.message.find("'Dd31'") != std::string::npos) {
    return true;
  }
  return false;
}

int cmd_check(const std::vector<std::string>& files, bool strict,
              const std::string& format, bool noBaseline) {
  Inputs in = load_inputs(files);
  if (in.ioError) {
    std::cerr << "ontospec: " << in.ioMessage << "\n";
    return 2;
  }
  std::vector<Diagnostic> diags = std::move(in.diagnostics);
  if (in.ontology) {
    std::vector<Diagnostic> v = validate(*in.ontology);
    diags.insert(diags.end(), v.begin(), v.end());
  }
  int errors = 0;
  int warnings = 0;
  int notes = 0;
  bool strictFailure = false;
  for (const Diagnostic& d : diags) {
    std::cout << (format == "json" ? format_json(d) : format_text(d)) << "\n";
    switch (d.severity) {
      case Severity::Error:
        ++errors;
        break;
      case Severity::Warning:
        ++warnings;
        if (strict && (noBaseline || !baseline_exempt(d))) {
          strictFailure = true;
        }
        break;
      case Severity::Note:
        ++notes;
        break;
    }
  }
  if (format != "json") {
    std::cout << errors << " error(s), " << warnings << " warning(s), "
              << notes << " note(s)\n";
  }
  return errors > 0 || strictFailure ? 1 : 0;
}

int cmd_emit(const std::vector<std::string>& files, const std::string& outDir) {
  Inputs in = load_inputs(files);
  if (in.ioError) {
    std::cerr << "ontospec: " << in.ioMessage << "\n";
    return 2;
  }
  std::vector<Diagnostic> diags = std::move(in.diagnostics);
  if (in.ontology) {
    std::vector<Diagnostic> v = validate(*in.ontology);
    diags.insert(diags.end(), v.begin(), v.end());
  }
  if (!in.ontology || has_errors(diags)) {
    print_to(std::cerr, diags, "text");
    return 1;
  }
  const Ontology& o = *in.ontology;
  PredicateNamer names(o);

  // One .osf per source file, entities in declaration order.
  std::vector<std::pair<std::string, std::vector<std::size_t>>> groups;
  std::map<std::string, std::size_t> groupOf;
  for (std::size_t i = 0; i < o.entities.size(); ++i) {
    const std::string& file = o.entities[i].span.file;
    auto found = groupOf.find(file);
    if (found == groupOf.end()) {
      found = groupOf.emplace(file, groups.size()).first;
      groups.push_back({file, {}});
    }
    groups[found->second].second.push_back(i);
  }

  std::error_code ec;
  fs::create_directories(outDir, ec);
  for (const auto& [file, members] : groups) {
    fs::path target = fs::path(outDir) / (fs::path(file).stem().string() + ".osf");
    std::ofstream out(target, std::ios::binary);
    if (!out) {
      std::cerr << "ontospec: cannot write '" << target.string() << "'\n";
      return 2;
    }
    const std::string shortName = fs::path(file).filename().string();
    out << "; emitted from " << shortName << "\n";
    for (std::size_t i : members) {
      const Entity& e = o.entities[i];
      out << "\n; entity " << e.name.canonical << "\n";
      int emitted = 0;
      int unsupported = 0;
      for (const Condition& c : e.conditions) {
        Expansion x = expand_condition(e, c, o, names);
        if (x.formula) {
          out << "; src: " << shortName << ":" << c.span.startLine << "\n";
          out << emit_osf(x.formula) << "\n";
          ++emitted;
        } else {
          out << "; skip: " << shortName << ":" << c.span.startLine << " "
              << x.unsupportedReason << "\n";
          ++unsupported;
        }
      }
      MetaExpansion meta = expand_meta(e, o, names);
      for (const FormulaPtr& f : meta.formulas) {
        out << "; src: " << shortName << ":" << e.span.startLine
            << " meta\n";
        out << emit_osf(f) << "\n";
        ++emitted;
      }
      std::cout << e.name.canonical << ": " << emitted << " formulas, "
                << unsupported << " unsupported\n";
    }
    if (!out) {
      std::cerr << "ontospec: failed while writing '" << target.string()
                << "'\n";
      return 2;
    }
  }
  return 0;
}

int cmd_stats(const std::vector<std::string>& files) {
  Inputs in = load_inputs(files);
  if (in.ioError) {
    std::cerr << "ontospec: " << in.ioMessage << "\n";
    return 2;
  }
  if (!in.ontology) {
    print_to(std::cerr, in.diagnostics, "text");
    return 1;
  }
  const Ontology& o = *in.ontology;
  CorpusStats s = corpus_stats(o);
  auto row = [](const char* label, long long value) {
    std::cout << std::left << std::setw(22) << label << value << "\n";
  };
  row("entities", static_cast<long long>(o.entities.size()));
  row("rigid concepts", s.rigidConcepts);
  row("non-rigid concepts", s.nonRigidConcepts);
  row("binary relations", s.binaryRelations);
  row("ternary relations", s.ternaryRelations);
  row("meta-concepts", s.metaConcepts);
  row("meta-relations", s.metaRelations);
  row("partitions", s.partitions);
  std::cout << "conditions by kind:\n";
  for (const auto& [kind, count] : s.conditionsByKind) {
    std::cout << "  " << std::left << std::setw(6) << to_string(kind) << count
              << "\n";
  }
  std::cout << "axiom refs by family:\n";
  for (const auto& [family, count] : s.axiomRefsByFamily) {
    std::cout << "  " << family << "     " << count << "\n";
  }
  return 0;
}

int cmd_graph(const std::vector<std::string>& files,
              const std::string& dotPath) {
  Inputs in = load_inputs(files);
  if (in.ioError) {
    std::cerr << "ontospec: " << in.ioMessage << "\n";
    return 2;
  }
  if (!in.ontology || has_errors(in.diagnostics)) {
    print_to(std::cerr, in.diagnostics, "text");
    return 1;
  }
  const Ontology& o = *in.ontology;
  SubsumptionGraph g = build_graph(o);
  std::ostringstream dot;
  dot << "digraph ontospec {\n";
  for (const SubsumptionEdge& edge : g.edges) {
    dot << "  \"" << o.entities[edge.child].name.canonical << "\" -> \""
        << o.entities[edge.parent].name.canonical << "\"";
    if (edge.viaSld) dot << " [label=\"diff\"]";
    dot << ";\n";
  }
  dot << "}\n";
  if (dotPath.empty()) {
    std::cout << dot.str();
  } else {
    std::ofstream out(dotPath, std::ios::binary);
    if (!out) {
      std::cerr << "ontospec: cannot write '" << dotPath << "'\n";
      return 2;
    }
    out << dot.str();
  }
  return 0;
}

int cmd_supplies(const std::string& entityName,
                 const std::vector<std::string>& files) {
  Inputs in = load_inputs(files);
  if (in.ioError) {
    std::cerr << "ontospec: " << in.ioMessage << "\n";
    return 2;
  }
  if (!in.ontology) {
    print_to(std::cerr, in.diagnostics, "text");
    return 1;
  }
  const Ontology& o = *in.ontology;
  auto idx = lookup_index(o, entityName);
  if (!idx) {
    std::cerr << "ontospec: unknown entity '" << entityName << "'\n";
    return 2;
  }
  SubsumptionGraph g = build_graph(o);
  CarriedSet carried = carried_closure(o, g);
  std::cout << "carried keys for " << o.entities[*idx].name.canonical << ":\n";
  std::set<std::string> seen;
  for (const CarriedEntry& entry : carried.perEntity[*idx]) {
    if (!seen.insert(entry.key).second) continue;
    SupplyResult r = supplies(o, g, carried, *idx, entry.key);
    const char* via = entry.via == Via::Own             ? "Own"
                      : entry.via == Via::InheritedDown ? "InheritedDown"
                                                        : "InheritedUp";
    std::string key = entry.key;
    if (key.size() > 60) key = key.substr(0, 57) + "...";
    std::cout << "  " << std::left << std::setw(15) << via << std::setw(10)
              << (r.supplies && *r.supplies ? "supplies" : "carries") << key;
    if (entry.origin != *idx) {
      std::cout << "  (from " << o.entities[entry.origin].name.canonical
                << ")";
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_explain(const std::string& code) {
  auto text = explain(code);
  if (!text) {
    std::cerr << "ontospec: unknown diagnostic code '" << code << "'\n";
    return 2;
  }
  std::cout << *text << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"OntoSpec toolchain for semi-informal ontologies"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  bool strict = false;
  bool noBaseline = false;
  std::string format = "text";
  std::string outDir = ".";
  std::string dotPath;
  std::string entityName;
  std::string code;

  CLI::App* check =
      app.add_subcommand("check", "Parse, resolve and validate documents");
  check->add_option("files", files,
                    "Input .osp files (default: installed corpus)");
  check->add_flag("--strict", strict,
                  "Fail on warnings beyond the corpus baseline");
  check->add_option("--format", format, "Diagnostic format")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_flag("--no-corpus-baseline", noBaseline,
                  "Drop the corpus warning exemptions under --strict");

  CLI::App* emit =
      app.add_subcommand("emit", "Expand conditions to .osf formula files");
  emit->add_option("files", files,
                   "Input .osp files (default: installed corpus)");
  emit->add_option("--out", outDir, "Output directory (default: .)");

  CLI::App* stats =
      app.add_subcommand("stats", "Print ontology statistics");
  stats->add_option("files", files,
                    "Input .osp files (default: installed corpus)");

  CLI::App* graph =
      app.add_subcommand("graph", "Export the subsumption graph as DOT");
  graph->add_option("files", files,
                    "Input .osp files (default: installed corpus)");
  graph->add_option("--dot", dotPath, "Write DOT here instead of stdout");

  CLI::App* supplies = app.add_subcommand(
      "supplies", "List carried keys and supply status for an entity");
  supplies->add_option("entity", entityName, "Entity name or alias")
      ->required();
  supplies->add_option("files", files,
                       "Input .osp files (default: installed corpus)");

  CLI::App* explainCmd =
      app.add_subcommand("explain", "Describe a diagnostic code");
  explainCmd->add_option("code", code, "Diagnostic code, e.g. V07")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (check->parsed()) return cmd_check(files, strict, format, noBaseline);
  if (emit->parsed()) return cmd_emit(files, outDir);
  if (stats->parsed()) return cmd_stats(files);
  if (graph->parsed()) return cmd_graph(files, dotPath);
  if (supplies->parsed()) return cmd_supplies(entityName, files);
  if (explainCmd->parsed()) return cmd_explain(code);
  return 2;
}
