#include "ontospec/analysis.hpp"

#include <algorithm>
#include <set>

namespace ontospec {

namespace {

const std::string* sl_target(const Condition& c) {
  if (c.kind == ConditionKind::SL) return &std::get<SlPayload>(c.payload).target;
  if (c.kind == ConditionKind::SLD) {
    return &std::get<SldPayload>(c.payload).target;
  }
  return nullptr;
}

}  // namespace

SubsumptionGraph build_graph(const Ontology& o) {
  SubsumptionGraph g;
  g.nodeCount = o.entities.size();
  g.parents.resize(g.nodeCount);
  for (std::size_t child = 0; child < o.entities.size(); ++child) {
    const Entity& e = o.entities[child];
    for (const Condition& c : e.conditions) {
      const std::string* target = sl_target(c);
      if (!target) continue;
      auto parent = lookup_index(o, *target);
      if (!parent) continue;
      bool dup = false;
      for (const SubsumptionEdge& edge : g.edges) {
        if (edge.child == child && edge.parent == *parent) {
          dup = true;
          break;
        }
      }
      if (dup) {
        Diagnostic d;
        d.severity = Severity::Note;
        d.code = "A02";
        d.entity = e.name.canonical;
        d.span = c.span;
        d.message = "parallel subsumption edge to '" + *target + "' collapsed";
        g.notes.push_back(d);
        continue;
      }
      g.edges.push_back({child, *parent, c.kind == ConditionKind::SLD});
      g.parents[child].push_back(*parent);
    }
  }
  return g;
}

std::optional<std::vector<std::size_t>> ancestors(const SubsumptionGraph& g,
                                                  std::size_t e) {
  std::vector<std::size_t> order;
  std::set<std::size_t> seen;
  std::vector<std::size_t> layer = {e};
  while (!layer.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t node : layer) {
      for (std::size_t parent : g.parents[node]) {
        if (parent == e) return std::nullopt;  // cycle back to the start
        if (seen.insert(parent).second) next.push_back(parent);
      }
    }
    std::sort(next.begin(), next.end());
    for (std::size_t node : next) order.push_back(node);
    layer = std::move(next);
  }
  return order;
}

std::optional<std::vector<std::size_t>> ancestors(const SubsumptionGraph& g,
                                                  std::size_t e,
                                                  const Ontology& o,
                                                  std::vector<Diagnostic>& diags) {
  auto result = ancestors(g, e);
  if (!result) {
    Diagnostic d;
    d.code = "A01";
    d.entity = o.entities[e].name.canonical;
    d.span = o.entities[e].span;
    d.message = "subsumption cycle involving '" +
                o.entities[e].name.canonical + "'";
    diags.push_back(d);
  }
  return result;
}

namespace {

bool inherits_down(ConditionKind k) {
  switch (k) {
    case ConditionKind::SMC:
      return false;
    default:
      return true;
  }
}

bool inherits_up(ConditionKind k) {
  switch (k) {
    case ConditionKind::SMC:
    case ConditionKind::NSMC:
    case ConditionKind::SLD:
    case ConditionKind::IVL:
      return true;
    default:
      return false;
  }
}

void append_own(const Ontology& o, std::size_t idx,
                std::vector<CarriedEntry>& out) {
  const Entity& e = o.entities[idx];
  for (const Condition& c : e.conditions) {
    out.push_back({condition_key(c), idx, &c, Via::Own, c.modality});
  }
  if (e.statuses.identity && *e.statuses.identity) {
    out.push_back({kKeyIdentity, idx, nullptr, Via::Own, std::nullopt});
  }
  if (e.statuses.unity && *e.statuses.unity == Unity::Unity) {
    out.push_back({kKeyUnity, idx, nullptr, Via::Own, std::nullopt});
  }
  if (e.statuses.dependence && *e.statuses.dependence) {
    out.push_back({kKeyDependence, idx, nullptr, Via::Own, std::nullopt});
  }
}

}  // namespace

CarriedSet carried_closure(const Ontology& o, const SubsumptionGraph& g) {
  CarriedSet set;
  set.perEntity.resize(o.entities.size());

  std::vector<std::optional<std::vector<std::size_t>>> ups(o.entities.size());
  for (std::size_t i = 0; i < o.entities.size(); ++i) ups[i] = ancestors(g, i);

  std::vector<std::vector<std::size_t>> descendants(o.entities.size());
  for (std::size_t i = 0; i < o.entities.size(); ++i) {
    if (!ups[i]) continue;
    for (std::size_t a : *ups[i]) descendants[a].push_back(i);
  }

  for (std::size_t i = 0; i < o.entities.size(); ++i) {
    auto& out = set.perEntity[i];
    append_own(o, i, out);

    if (ups[i]) {
      for (std::size_t a : *ups[i]) {
        const Entity& anc = o.entities[a];
        for (const Condition& c : anc.conditions) {
          if (!inherits_down(c.kind)) continue;
          out.push_back({condition_key(c), a, &c, Via::InheritedDown,
                         c.modality});
        }
        if (anc.statuses.identity && *anc.statuses.identity) {
          out.push_back({kKeyIdentity, a, nullptr, Via::InheritedDown,
                         std::nullopt});
        }
        if (anc.statuses.unity && *anc.statuses.unity == Unity::Unity) {
          out.push_back({kKeyUnity, a, nullptr, Via::InheritedDown,
                         std::nullopt});
        }
        if (anc.statuses.dependence && *anc.statuses.dependence) {
          out.push_back({kKeyDependence, a, nullptr, Via::InheritedDown,
                         std::nullopt});
        }
      }
    }
    for (std::size_t d : descendants[i]) {
      const Entity& desc = o.entities[d];
      for (const Condition& c : desc.conditions) {
        if (!inherits_up(c.kind)) continue;
        out.push_back({condition_key(c), d, &c, Via::InheritedUp, c.modality});
      }
    }
  }
  return set;
}

namespace {

bool carries(const std::vector<CarriedEntry>& entries, const std::string& key) {
  for (const CarriedEntry& e : entries) {
    if (e.key == key) return true;
  }
  return false;
}

const CarriedEntry* find_entry(const std::vector<CarriedEntry>& entries,
                               const std::string& key) {
  for (const CarriedEntry& e : entries) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

bool has_nmc_with_text(const CarriedSet& carried, std::size_t entity,
                       const std::string& normalized) {
  return carries(carried.perEntity[entity], "nmc|" + normalized);
}

}  // namespace

SupplyResult supplies(const Ontology& o, const SubsumptionGraph& g,
                      const CarriedSet& carried, std::size_t entity,
                      const std::string& key) {
  SupplyResult result;
  const auto& entries = carried.perEntity[entity];
  const CarriedEntry* entry = find_entry(entries, key);
  if (!entry) {
    Diagnostic d;
    d.code = "S01";
    d.entity = o.entities[entity].name.canonical;
    d.span = o.entities[entity].span;
    d.message = "'" + o.entities[entity].name.canonical +
                "' does not carry the key '" + key + "'";
    result.diagnostic = d;
    return result;
  }

  auto ups = ancestors(g, entity);

  if (key.rfind("smc|", 0) == 0 || key.rfind("nsmc|", 0) == 0) {
    // A sufficient condition is supplied by the most specific carrier.
    for (std::size_t other = 0; other < o.entities.size(); ++other) {
      if (other == entity) continue;
      auto otherUps = ancestors(g, other);
      if (!otherUps) continue;
      bool descendant = std::find(otherUps->begin(), otherUps->end(), entity) !=
                        otherUps->end();
      if (descendant && carries(carried.perEntity[other], key)) {
        result.supplies = false;
        return result;
      }
    }
    result.supplies = true;
    return result;
  }

  if (key.rfind("sld|", 0) == 0) {
    // Supplied where the differentia genuinely separates the host from its
    // genus: the host states it, the genus does not, and no more specific
    // entity restates the whole definition.
    const Condition* c = entry->condition;
    if (!c || c->kind != ConditionKind::SLD) {
      result.supplies = false;
      return result;
    }
    const auto& p = std::get<SldPayload>(c->payload);
    const std::string diffKey = normalize_text(p.differentia);
    for (std::size_t other = 0; other < o.entities.size(); ++other) {
      if (other == entity) continue;
      auto otherUps = ancestors(g, other);
      if (!otherUps) continue;
      bool descendant = std::find(otherUps->begin(), otherUps->end(), entity) !=
                        otherUps->end();
      if (descendant && carries(carried.perEntity[other], key)) {
        result.supplies = false;
        return result;
      }
    }
    if (!has_nmc_with_text(carried, entity, diffKey)) {
      result.supplies = false;
      return result;
    }
    auto genus = lookup_index(o, p.target);
    if (genus && has_nmc_with_text(carried, *genus, diffKey)) {
      result.supplies = false;
      return result;
    }
    result.supplies = true;
    return result;
  }

  // Downward-inherited keys are supplied by the least specific carrier.
  if (ups) {
    for (std::size_t a : *ups) {
      if (carries(carried.perEntity[a], key)) {
        result.supplies = false;
        return result;
      }
    }
  }
  result.supplies = true;
  return result;
}

SupplyResult supplies(const Ontology& o, const SubsumptionGraph& g,
                      std::size_t entity, const std::string& key) {
  CarriedSet carried = carried_closure(o, g);
  return supplies(o, g, carried, entity, key);
}

Definedness derive_definedness(const Entity& e) {
  for (const Condition& c : e.conditions) {
    if (c.kind == ConditionKind::NSMC || c.kind == ConditionKind::SLD) {
      return Definedness::Defined;
    }
  }
  return Definedness::Primitive;
}

namespace {

std::vector<std::string> canonical_targets(const Ontology& o,
                                           const ArgSpec& spec) {
  std::set<std::string> names;
  for (const auto& t : spec.targets) {
    const Entity* e = lookup(o, t);
    names.insert(e ? e->name.canonical : t);
  }
  return {names.begin(), names.end()};
}

ArgSpec merge_slot(const Ontology& o, const std::vector<ArgSpec>& specs) {
  std::vector<const ArgSpec*> textSpecs;
  std::vector<const ArgSpec*> conjunctive;  // One or AllOf
  std::vector<const ArgSpec*> disjunctive;  // AnyOf
  for (const ArgSpec& s : specs) {
    switch (s.mode) {
      case ArgSpec::Mode::Unrestricted: break;
      case ArgSpec::Mode::Text: textSpecs.push_back(&s); break;
      case ArgSpec::Mode::One:
      case ArgSpec::Mode::AllOf: conjunctive.push_back(&s); break;
      case ArgSpec::Mode::AnyOf: disjunctive.push_back(&s); break;
    }
  }
  ArgSpec out;
  if (!conjunctive.empty()) {
    std::set<std::string> all;
    for (const ArgSpec* s : conjunctive) {
      for (const auto& t : canonical_targets(o, *s)) all.insert(t);
    }
    out.targets.assign(all.begin(), all.end());
    out.mode = out.targets.size() == 1 ? ArgSpec::Mode::One : ArgSpec::Mode::AllOf;
    return out;
  }
  if (!disjunctive.empty()) {
    std::vector<std::string> common = canonical_targets(o, *disjunctive[0]);
    std::set<std::string> all(common.begin(), common.end());
    for (std::size_t i = 1; i < disjunctive.size(); ++i) {
      auto next = canonical_targets(o, *disjunctive[i]);
      std::set<std::string> nextSet(next.begin(), next.end());
      std::vector<std::string> kept;
      for (const auto& t : common) {
        if (nextSet.count(t)) kept.push_back(t);
      }
      common = std::move(kept);
      for (const auto& t : next) all.insert(t);
    }
    if (!common.empty()) {
      out.targets = common;
      out.mode = common.size() == 1 ? ArgSpec::Mode::One : ArgSpec::Mode::AnyOf;
    } else {
      out.targets.assign(all.begin(), all.end());
      out.mode = ArgSpec::Mode::AnyOf;
    }
    return out;
  }
  if (!textSpecs.empty()) {
    out.mode = ArgSpec::Mode::Text;
    out.text = textSpecs.front()->text;
    return out;
  }
  out.mode = ArgSpec::Mode::Unrestricted;
  return out;
}

}  // namespace

std::vector<ArgSpec> effective_signature(const Ontology& o,
                                         const SubsumptionGraph& g,
                                         std::size_t relation) {
  const Entity& rel = o.entities[relation];
  const std::size_t arity = static_cast<std::size_t>(rel.effective_arity());
  std::vector<std::vector<ArgSpec>> slots(arity);

  auto add_sigs = [&](const Entity& e) {
    for (const Condition& c : e.conditions) {
      if (c.kind != ConditionKind::SIG) continue;
      const auto& p = std::get<SigPayload>(c.payload);
      for (std::size_t i = 0; i < p.args.size() && i < arity; ++i) {
        slots[i].push_back(p.args[i]);
      }
    }
  };

  add_sigs(rel);
  if (auto ups = ancestors(g, relation)) {
    for (std::size_t a : *ups) add_sigs(o.entities[a]);
  }

  std::vector<ArgSpec> out;
  out.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) out.push_back(merge_slot(o, slots[i]));
  return out;
}

}  // namespace ontospec
