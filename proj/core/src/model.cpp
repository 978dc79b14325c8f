#include "ontospec/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ontospec {

const char* to_string(EntityKind k) {
  switch (k) {
    case EntityKind::Concept: return "concept";
    case EntityKind::Relation: return "relation";
    case EntityKind::MetaConcept: return "metaconcept";
    case EntityKind::MetaRelation: return "metarelation";
  }
  return "concept";
}

const char* to_string(Modality m) {
  return m == Modality::EP ? "EP" : "CP";
}

const char* to_string(ConditionKind k) {
  switch (k) {
    case ConditionKind::NMC: return "NMC";
    case ConditionKind::SL: return "SL";
    case ConditionKind::ER: return "ER";
    case ConditionKind::VR: return "VR";
    case ConditionKind::EVR: return "EVR";
    case ConditionKind::CR: return "CR";
    case ConditionKind::ICL: return "ICL";
    case ConditionKind::SMC: return "SMC";
    case ConditionKind::NSMC: return "NSMC";
    case ConditionKind::SLD: return "SLD";
    case ConditionKind::NSIC: return "NSIC";
    case ConditionKind::NIC: return "NIC";
    case ConditionKind::SIC: return "SIC";
    case ConditionKind::UC: return "UC";
    case ConditionKind::EDC: return "EDC";
    case ConditionKind::SIG: return "SIG";
    case ConditionKind::IL: return "IL";
    case ConditionKind::IVL: return "IVL";
  }
  return "NMC";
}

std::string AxiomRef::str() const {
  std::ostringstream out;
  out << family << 'd' << number << letters;
  for (int i = 0; i < primes; ++i) out << '\'';
  return out.str();
}

std::optional<AxiomRef> parse_axiom_ref(const std::string& text) {
  if (text.size() < 3) return std::nullopt;
  AxiomRef ref;
  ref.family = text[0];
  if (ref.family != 'A' && ref.family != 'D' && ref.family != 'T') {
    return std::nullopt;
  }
  if (text[1] != 'd') return std::nullopt;
  std::size_t i = 2;
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
    return std::nullopt;
  }
  long number = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    number = number * 10 + (text[i] - '0');
    if (number > 1000000) return std::nullopt;
    ++i;
  }
  ref.number = static_cast<int>(number);
  while (i < text.size() && text[i] >= 'a' && text[i] <= 'z') {
    ref.letters.push_back(text[i]);
    ++i;
  }
  while (i < text.size() && text[i] == '\'') {
    ++ref.primes;
    ++i;
  }
  if (i != text.size()) return std::nullopt;
  return ref;
}

const char* to_string(DepKind k) {
  switch (k) {
    case DepKind::SD: return "SD";
    case DepKind::OSD: return "OSD";
    case DepKind::MSD: return "MSD";
    case DepKind::GD: return "GD";
    case DepKind::OGD: return "OGD";
    case DepKind::MGD: return "MGD";
    case DepKind::D: return "D";
    case DepKind::OD: return "OD";
    case DepKind::SD_s: return "SD_s";
    case DepKind::OSD_s: return "OSD_s";
    case DepKind::MSD_s: return "MSD_s";
    case DepKind::GD_s: return "GD_s";
    case DepKind::OGD_s: return "OGD_s";
    case DepKind::MGD_s: return "MGD_s";
    case DepKind::PGD_s: return "PGD_s";
    case DepKind::P1GD_s: return "P1GD_s";
    case DepKind::SK: return "SK";
    case DepKind::OSK: return "OSK";
    case DepKind::MSK: return "MSK";
    case DepKind::GK: return "GK";
    case DepKind::OGK: return "OGK";
    case DepKind::MGK: return "MGK";
    case DepKind::K: return "K";
  }
  return "D";
}

std::optional<DepKind> dep_kind_from(const std::string& text) {
  static const DepKind all[] = {
      DepKind::SD,    DepKind::OSD,   DepKind::MSD,   DepKind::GD,
      DepKind::OGD,   DepKind::MGD,   DepKind::D,     DepKind::OD,
      DepKind::SD_s,  DepKind::OSD_s, DepKind::MSD_s, DepKind::GD_s,
      DepKind::OGD_s, DepKind::MGD_s, DepKind::PGD_s, DepKind::P1GD_s,
      DepKind::SK,    DepKind::OSK,   DepKind::MSK,   DepKind::GK,
      DepKind::OGK,   DepKind::MGK,   DepKind::K,
  };
  const std::string needle = lower(text);
  for (DepKind k : all) {
    if (lower(to_string(k)) == needle) return k;
  }
  return std::nullopt;
}

const char* to_string(CommentTag t) {
  switch (t) {
    case CommentTag::SA: return "SA";
    case CommentTag::EX: return "EX";
    case CommentTag::CEX: return "CEX";
    case CommentTag::CIT: return "CIT";
    case CommentTag::DIV: return "DIV";
    case CommentTag::DEF: return "DEF";
  }
  return "SA";
}

bool Condition::operator==(const Condition& other) const {
  return modality == other.modality && kind == other.kind &&
         refs == other.refs && payload == other.payload &&
         gloss == other.gloss;
}

bool payload_matches_kind(ConditionKind kind, const ConditionPayload& p) {
  switch (kind) {
    case ConditionKind::SL:
      return std::holds_alternative<SlPayload>(p);
    case ConditionKind::SLD:
      return std::holds_alternative<SldPayload>(p);
    case ConditionKind::ER:
      return std::holds_alternative<ErPayload>(p);
    case ConditionKind::VR:
      return std::holds_alternative<VrPayload>(p);
    case ConditionKind::EVR:
      return std::holds_alternative<EvrPayload>(p);
    case ConditionKind::CR:
      return std::holds_alternative<CrPayload>(p);
    case ConditionKind::ICL:
    case ConditionKind::IL:
      return std::holds_alternative<IclPayload>(p);
    case ConditionKind::SIG:
      return std::holds_alternative<SigPayload>(p);
    case ConditionKind::IVL:
      return std::holds_alternative<IvlPayload>(p);
    case ConditionKind::NSIC:
    case ConditionKind::NIC:
    case ConditionKind::SIC:
    case ConditionKind::UC:
      return std::holds_alternative<CriterionPayload>(p);
    case ConditionKind::EDC:
      return std::holds_alternative<EdcPayload>(p);
    case ConditionKind::NMC:
    case ConditionKind::SMC:
    case ConditionKind::NSMC:
      return std::holds_alternative<TextPayload>(p);
  }
  return false;
}

bool MetaLink::operator==(const MetaLink& other) const {
  return kind == other.kind && target == other.target && ref == other.ref;
}

bool PartitionDecl::operator==(const PartitionDecl& other) const {
  return members == other.members && ref == other.ref;
}

bool CommentItem::operator==(const CommentItem& other) const {
  return tag == other.tag && source == other.source && text == other.text;
}

int Entity::effective_arity() const {
  switch (kind) {
    case EntityKind::Concept:
    case EntityKind::MetaConcept:
      return 1;
    case EntityKind::Relation:
      return arity;
    case EntityKind::MetaRelation:
      return 2;
  }
  return 1;
}

bool Entity::operator==(const Entity& other) const {
  return kind == other.kind && arity == other.arity && name == other.name &&
         statuses == other.statuses && partitions == other.partitions &&
         metaLinks == other.metaLinks && conditions == other.conditions &&
         comments == other.comments;
}

void Ontology::rebuild_index() {
  index.clear();
  for (std::size_t i = 0; i < entities.size(); ++i) {
    index.emplace(lower(entities[i].name.canonical), i);
    if (entities[i].name.alias) {
      index.emplace(lower(*entities[i].name.alias), i);
    }
  }
}

bool Ontology::operator==(const Ontology& other) const {
  return title == other.title && entities == other.entities;
}

const Entity* lookup(const Ontology& o, const std::string& name) {
  auto idx = lookup_index(o, name);
  return idx ? &o.entities[*idx] : nullptr;
}

std::optional<std::size_t> lookup_index(const Ontology& o,
                                        const std::string& name) {
  auto it = o.index.find(lower(name));
  if (it == o.index.end()) return std::nullopt;
  return it->second;
}

std::string lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::string normalize_text(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  bool pendingSpace = false;
  for (unsigned char c : s) {
    if (std::isspace(c)) {
      pendingSpace = !out.empty();
      continue;
    }
    if (pendingSpace) {
      out.push_back(' ');
      pendingSpace = false;
    }
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

namespace {

std::string arg_spec_key(const ArgSpec& a) {
  switch (a.mode) {
    case ArgSpec::Mode::Unrestricted:
      return "*";
    case ArgSpec::Mode::Text:
      return "text(" + normalize_text(a.text) + ")";
    case ArgSpec::Mode::One:
      return "one(" + lower(a.targets.empty() ? "" : a.targets.front()) + ")";
    case ArgSpec::Mode::AnyOf:
    case ArgSpec::Mode::AllOf: {
      std::vector<std::string> names;
      names.reserve(a.targets.size());
      for (const auto& t : a.targets) names.push_back(lower(t));
      std::sort(names.begin(), names.end());
      std::string joined;
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) joined += ',';
        joined += names[i];
      }
      return (a.mode == ArgSpec::Mode::AnyOf ? "any(" : "all(") + joined + ")";
    }
  }
  return "*";
}

}  // namespace

std::string condition_key(const Condition& c) {
  std::ostringstream key;
  key << lower(to_string(c.kind));
  auto add = [&key](const std::string& part) { key << '|' << part; };

  if (const auto* sl = std::get_if<SlPayload>(&c.payload)) {
    add(lower(sl->target));
  } else if (const auto* sld = std::get_if<SldPayload>(&c.payload)) {
    add(lower(sld->target));
    add(normalize_text(sld->differentia));
  } else if (const auto* er = std::get_if<ErPayload>(&c.payload)) {
    add(er->quantity == Quantity::Some ? "some" : "exactly-one");
    add(lower(er->relation));
    for (const auto& t : er->targets) add(lower(t));
  } else if (const auto* vr = std::get_if<VrPayload>(&c.payload)) {
    add(lower(vr->relation));
    add(lower(vr->target));
  } else if (const auto* evr = std::get_if<EvrPayload>(&c.payload)) {
    add(lower(evr->relation));
    add(normalize_text(evr->targetText));
  } else if (const auto* cr = std::get_if<CrPayload>(&c.payload)) {
    add(lower(cr->relation));
    add(lower(cr->constant));
  } else if (const auto* icl = std::get_if<IclPayload>(&c.payload)) {
    add(lower(icl->target));
  } else if (const auto* sig = std::get_if<SigPayload>(&c.payload)) {
    for (const auto& a : sig->args) add(arg_spec_key(a));
  } else if (const auto* ivl = std::get_if<IvlPayload>(&c.payload)) {
    add(lower(ivl->target));
  } else if (const auto* crit = std::get_if<CriterionPayload>(&c.payload)) {
    if (crit->relation) {
      add("rel:" + lower(*crit->relation));
    } else {
      add("text:" + normalize_text(crit->text));
    }
  } else if (const auto* edc = std::get_if<EdcPayload>(&c.payload)) {
    add(lower(edc->target));
  } else if (const auto* text = std::get_if<TextPayload>(&c.payload)) {
    add(normalize_text(text->text));
  }
  return key.str();
}

}  // namespace ontospec
