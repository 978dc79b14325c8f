#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ontospec/expand.hpp"
#include "ontospec/parser.hpp"
#include "support/helpers.hpp"

namespace testsupport {

// expected.osf holds "; <id>" header lines, each followed by one formula.
inline std::map<std::string, std::string> load_expected_osf(
    const std::string& path) {
  std::map<std::string, std::string> out;
  std::istringstream in(read_file(path));
  std::string line;
  std::string id;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("; ", 0) == 0) {
      id = line.substr(2);
    } else if (!id.empty()) {
      out[id] = line;
      id.clear();
    }
  }
  return out;
}

struct GoldenConditionCase {
  std::string id;
  std::string entity;
  std::size_t conditionIndex;
};

struct GoldenMetaCase {
  std::string id;
  std::string entity;
  std::size_t formulaIndex;
};

inline const std::vector<GoldenConditionCase>& golden_condition_cases() {
  static const std::vector<GoldenConditionCase> cases = {
      {"nmc", "Person", 0},          {"sl", "Person", 1},
      {"er-some", "Person", 2},      {"er-one", "Person", 3},
      {"er-ternary-some", "Person", 4}, {"er-ternary-one", "Person", 5},
      {"vr-binary", "Person", 6},    {"vr-ternary", "Person", 7},
      {"evr", "Person", 8},          {"cr", "Person", 9},
      {"icl", "Person", 10},         {"smc", "Person", 11},
      {"nsmc", "Person", 12},        {"nsic", "Person", 13},
      {"nic", "Person", 14},         {"sic", "Person", 15},
      {"uc", "Person", 16},          {"edc", "Person", 17},
      {"sld", "Cyborg", 0},          {"sig-binary", "loves", 0},
      {"il", "loves", 1},            {"ivl", "loves", 2},
      {"sig-ternary", "gives", 0},
  };
  return cases;
}

inline const std::vector<GoldenMetaCase>& golden_meta_cases() {
  static const std::vector<GoldenMetaCase> cases = {
      {"meta-rg", "Block", 0},
      {"meta-nep", "Crowd", 0},
      {"meta-cm", "Stuff", 0},
      {"meta-pt-disjoint", "Whole", 0},
      {"meta-pt-exhaustive", "Whole", 1},
  };
  return cases;
}

inline ontospec::Ontology load_golden_fixture() {
  return resolve_ok(read_file(data_path("golden/fixture.osp")), "fixture.osp");
}

}  // namespace testsupport
