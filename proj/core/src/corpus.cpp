#include "ontospec/corpus.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ontospec/parser.hpp"

#ifndef ONTOSPEC_SOURCE_CORPUS_DIR
#define ONTOSPEC_SOURCE_CORPUS_DIR ""
#endif

namespace ontospec {

namespace fs = std::filesystem;

namespace {

bool has_corpus(const fs::path& dir) {
  std::error_code ec;
  return fs::is_regular_file(dir / "MANIFEST", ec);
}

fs::path executable_dir() {
  std::error_code ec;
  fs::path exe = fs::read_symlink("/proc/self/exe", ec);
  if (ec) return {};
  return exe.parent_path();
}

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Diagnostic corpus_error(const std::string& file, const std::string& message) {
  Diagnostic d;
  d.severity = Severity::Error;
  d.code = "C01";
  d.span.file = file;
  d.message = message;
  return d;
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

std::optional<std::string> resolve_corpus_dir() {
  if (const char* env = std::getenv("ONTOSPEC_CORPUS")) {
    if (*env && has_corpus(env)) return std::string(env);
  }
  fs::path exe = executable_dir();
  if (!exe.empty()) {
    for (const char* rel :
         {"../share/ontospec/corpus/dolce-os", "share/ontospec/corpus/dolce-os"}) {
      fs::path candidate = exe / rel;
      if (has_corpus(candidate)) {
        return fs::weakly_canonical(candidate).string();
      }
    }
  }
  std::string source = ONTOSPEC_SOURCE_CORPUS_DIR;
  if (!source.empty() && has_corpus(source)) return source;
  return std::nullopt;
}

const std::vector<std::string>& corpus_file_names() {
  static const std::vector<std::string> kFiles = {
      "concepts.osp",          "atom.osp",
      "binary-relations.osp",  "ternary-relations.osp",
      "meta-concepts.osp",     "meta-relations.osp"};
  return kFiles;
}

CorpusLoadResult load_corpus(const std::string& dir) {
  CorpusLoadResult result;
  fs::path root = dir;

  std::map<std::string, std::string> expected;
  bool sound = true;
  if (auto manifest = read_file(root / "MANIFEST")) {
    std::istringstream lines(*manifest);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty() || line[0] == '#') continue;
      auto gap = line.find("  ");
      if (gap == std::string::npos || gap != 64) {
        result.diagnostics.push_back(
            corpus_error("MANIFEST", "malformed digest line: " + line));
        sound = false;
        continue;
      }
      expected[line.substr(gap + 2)] = line.substr(0, gap);
    }
  } else {
    result.diagnostics.push_back(
        corpus_error("MANIFEST", "corpus manifest is missing under " + dir));
    return result;
  }

  std::vector<ParseResult> parts;
  for (const std::string& name : corpus_file_names()) {
    auto bytes = read_file(root / name);
    if (!bytes) {
      result.diagnostics.push_back(
          corpus_error(name, "corpus file is missing under " + dir));
      sound = false;
      continue;
    }
    auto want = expected.find(name);
    if (want == expected.end()) {
      result.diagnostics.push_back(
          corpus_error(name, "corpus file has no MANIFEST entry"));
      sound = false;
    } else if (sha256_hex(*bytes) != want->second) {
      result.diagnostics.push_back(
          corpus_error(name, "corpus file digest does not match MANIFEST"));
      sound = false;
    }
    parts.push_back(parse_document(*bytes, name));
  }
  if (!sound) {
    for (ParseResult& part : parts) {
      result.diagnostics.insert(result.diagnostics.end(),
                                part.diagnostics.begin(),
                                part.diagnostics.end());
    }
    return result;
  }

  ParseResult merged = merge_documents(parts);
  result.diagnostics.insert(result.diagnostics.end(),
                            merged.diagnostics.begin(),
                            merged.diagnostics.end());
  if (!merged.ontology) return result;

  std::vector<Diagnostic> resolution = resolve_references(*merged.ontology);
  result.diagnostics.insert(result.diagnostics.end(), resolution.begin(),
                            resolution.end());
  result.ontology = std::move(merged.ontology);
  return result;
}

CorpusLoadResult load_corpus() {
  auto dir = resolve_corpus_dir();
  if (!dir) {
    CorpusLoadResult result;
    result.diagnostics.push_back(corpus_error(
        "MANIFEST",
        "no corpus directory found; set ONTOSPEC_CORPUS or install the data"));
    return result;
  }
  return load_corpus(*dir);
}

CorpusStats corpus_stats(const Ontology& o) {
  CorpusStats s;
  for (const Entity& e : o.entities) {
    switch (e.kind) {
      case EntityKind::Concept:
        if (e.statuses.rigidity && *e.statuses.rigidity == Rigidity::Rigid) {
          ++s.rigidConcepts;
        } else {
          ++s.nonRigidConcepts;
        }
        break;
      case EntityKind::Relation:
        if (e.arity == 2) ++s.binaryRelations;
        if (e.arity == 3) ++s.ternaryRelations;
        break;
      case EntityKind::MetaConcept: ++s.metaConcepts; break;
      case EntityKind::MetaRelation: ++s.metaRelations; break;
    }
    s.partitions += static_cast<int>(e.partitions.size());
    for (const Condition& c : e.conditions) {
      ++s.conditionsByKind[c.kind];
      for (const AxiomRef& r : c.refs) ++s.axiomRefsByFamily[r.family];
    }
    for (const auto& r : {e.statuses.cumulativeRef, e.statuses.homeomerousRef,
                          e.statuses.atomicRef}) {
      if (r) ++s.axiomRefsByFamily[r->family];
    }
    for (const PartitionDecl& part : e.partitions) {
      if (part.ref) ++s.axiomRefsByFamily[part.ref->family];
    }
    for (const MetaLink& link : e.metaLinks) {
      if (link.ref) ++s.axiomRefsByFamily[link.ref->family];
    }
  }
  return s;
}

}  // namespace ontospec
