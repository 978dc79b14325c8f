#include "ontospec/validator.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ontospec/analysis.hpp"

namespace ontospec {

namespace {

struct CatalogRow {
  const char* code;
  Severity severity;
  const char* description;
  const char* anchor;
};

const CatalogRow kCatalog[] = {
    {"P01", Severity::Error, "lexical error", "document grammar"},
    {"P02", Severity::Error, "syntax error", "document grammar"},
    {"P03", Severity::Error, "unknown condition kind", "document grammar"},
    {"P04", Severity::Error, "unknown comment tag", "document grammar"},
    {"P05", Severity::Error, "malformed axiom reference", "document grammar"},
    {"P06", Severity::Error, "duplicate entity name or alias",
     "document grammar"},
    {"P07", Severity::Warning,
     "condition label read through the compatibility table", "label table"},
    {"R01", Severity::Error, "unresolved reference", "reference resolution"},
    {"R02", Severity::Error, "reference kind or arity mismatch",
     "reference resolution"},
    {"L01", Severity::Error, "inline formula does not parse",
     "formula language"},
    {"L02", Severity::Warning,
     "schema prerequisites missing, condition left unexpanded",
     "formula language"},
    {"A01", Severity::Error, "subsumption cycle", "subsumption analysis"},
    {"A02", Severity::Note, "parallel subsumption edge collapsed",
     "subsumption analysis"},
    {"S01", Severity::Error, "supply query for a key the entity does not carry",
     "supply derivation"},
    {"C01", Severity::Error, "corpus file digest mismatch", "corpus integrity"},
    {"E01", Severity::Error, "unknown diagnostic code", "diagnostics catalog"},
    {"V01", Severity::Error, "the subsumption graph has a cycle",
     "acyclicity invariant"},
    {"V02", Severity::Error,
     "a subsumption target has the wrong kind or arity", "subsumption typing"},
    {"V03", Severity::Error,
     "an entity carries an incompatibility with itself or an ancestor",
     "incompatibility consistency"},
    {"V04", Severity::Error, "ill-formed partition declaration", "Dd13"},
    {"V05", Severity::Error,
     "an entity descends from two members of one partition", "Dd13"},
    {"V06", Severity::Error,
     "an anti-unity concept subsumes a concept carrying unity", "SC3"},
    {"V07", Severity::Error,
     "an anti-rigid concept subsumes a rigid concept", "SC4"},
    {"V08", Severity::Error,
     "a concept drops the identity criterion of an ancestor", "SC1"},
    {"V09", Severity::Error,
     "a concept drops the dependence status of an ancestor", "SC1"},
    {"V10", Severity::Error,
     "identity supply is declared without identity and rigidity",
     "+O entails +I and +R"},
    {"V11", Severity::Warning,
     "declared definedness disagrees with the derived one",
     "definedness derivation"},
    {"V12", Severity::Error, "inverse declarations disagree",
     "inverse symmetry"},
    {"V13", Severity::Warning,
     "the effective signature disagrees with the inverse's",
     "inverse signature compatibility"},
    {"V14", Severity::Error,
     "a stuff-property status is declared outside the perdurants",
     "stuff properties"},
    {"V15", Severity::Warning,
     "identity supply is declared but not derivable", "supply derivation"},
    {"V16", Severity::Warning, "duplicate axiom reference across the ontology",
     "reference hygiene"},
    {"V17", Severity::Warning,
     "multiple identity criteria of the same strength", "criterion multiplicity"},
    {"V18", Severity::Note,
     "an anti-status entails the corresponding negative status",
     "status entailments"},
};

class Validator {
 public:
  explicit Validator(const Ontology& o) : o_(o), g_(build_graph(o)) {
    ups_.resize(o_.entities.size());
    for (std::size_t i = 0; i < o_.entities.size(); ++i) {
      ups_[i] = ancestors(g_, i);
    }
    carried_ = carried_closure(o_, g_);
  }

  std::vector<Diagnostic> run() {
    for (std::size_t i = 0; i < o_.entities.size(); ++i) {
      const Entity& e = o_.entities[i];
      v01(i, e);
      v02(i, e);
      v03(i, e);
      v04(i, e);
      v06_v07_v08_v09(i, e);
      v10(i, e);
      v11(i, e);
      v12(i, e);
      v13(i, e);
      v14(i, e);
      v15(i, e);
      v17(i, e);
      v18(i, e);
    }
    v05();
    v16();

    std::stable_sort(items_.begin(), items_.end(),
                     [](const Item& a, const Item& b) {
                       if (a.entity != b.entity) return a.entity < b.entity;
                       return a.diag.code < b.diag.code;
                     });
    std::vector<Diagnostic> out;
    out.reserve(items_.size());
    for (Item& item : items_) out.push_back(std::move(item.diag));
    return out;
  }

 private:
  struct Item {
    std::size_t entity;
    Diagnostic diag;
  };

  void add(std::size_t entityIdx, Severity sev, const char* code,
           const SourceSpan& span, std::string message) {
    Diagnostic d;
    d.severity = sev;
    d.code = code;
    d.entity = o_.entities[entityIdx].name.canonical;
    d.span = span;
    d.message = std::move(message);
    items_.push_back({entityIdx, std::move(d)});
  }

  bool descends_or_self(std::size_t e, std::size_t target) const {
    if (e == target) return true;
    if (!ups_[e]) return false;
    return std::find(ups_[e]->begin(), ups_[e]->end(), target) != ups_[e]->end();
  }

  void v01(std::size_t i, const Entity& e) {
    if (!ups_[i]) {
      add(i, Severity::Error, "V01", e.span,
          "subsumption cycle involving '" + e.name.canonical + "'");
    }
  }

  void v02(std::size_t i, const Entity& e) {
    for (const Condition& c : e.conditions) {
      const std::string* target = nullptr;
      if (c.kind == ConditionKind::SL) {
        target = &std::get<SlPayload>(c.payload).target;
      } else if (c.kind == ConditionKind::SLD) {
        target = &std::get<SldPayload>(c.payload).target;
      }
      if (!target) continue;
      const Entity* t = lookup(o_, *target);
      if (!t) continue;
      if (t->kind != e.kind) {
        add(i, Severity::Error, "V02", c.span,
            "'" + e.name.canonical + "' is subsumed by '" + *target +
                "', which has a different entity kind");
      } else if (e.kind == EntityKind::Relation && t->arity != e.arity) {
        add(i, Severity::Error, "V02", c.span,
            "'" + e.name.canonical + "' is subsumed by '" + *target +
                "', which has a different arity");
      }
    }
  }

  void v03(std::size_t i, const Entity& e) {
    if (!ups_[i]) return;
    for (const CarriedEntry& entry : carried_.perEntity[i]) {
      if (!entry.condition) continue;
      if (entry.via == Via::InheritedUp) continue;
      const Condition& c = *entry.condition;
      if (c.kind != ConditionKind::ICL && c.kind != ConditionKind::IL) continue;
      const auto& p = std::get<IclPayload>(c.payload);
      auto t = lookup_index(o_, p.target);
      if (!t) continue;
      if (*t == i) {
        add(i, Severity::Error, "V03", c.span,
            "'" + e.name.canonical + "' carries an incompatibility with itself");
      } else if (descends_or_self(i, *t)) {
        add(i, Severity::Error, "V03", c.span,
            "'" + e.name.canonical +
                "' carries an incompatibility with its ancestor '" +
                o_.entities[*t].name.canonical + "'");
      }
    }
  }

  void v04(std::size_t i, const Entity& e) {
    for (const PartitionDecl& part : e.partitions) {
      std::set<std::string> seen;
      for (const std::string& member : part.members) {
        if (!seen.insert(lower(member)).second) {
          add(i, Severity::Error, "V04", part.span,
              "partition member '" + member + "' is listed twice");
          continue;
        }
        auto m = lookup_index(o_, member);
        if (!m) {
          add(i, Severity::Error, "V04", part.span,
              "partition member '" + member + "' is unresolved");
          continue;
        }
        if (*m == i) {
          add(i, Severity::Error, "V04", part.span,
              "partition member '" + member +
                  "' equals the partitioned concept");
          continue;
        }
        if (!ups_[*m] || !descends_or_self(*m, i)) {
          add(i, Severity::Error, "V04", part.span,
              "partition member '" + member + "' is not a descendant of '" +
                  e.name.canonical + "'");
        }
      }
    }
  }

  void v05() {
    for (std::size_t hi = 0; hi < o_.entities.size(); ++hi) {
      for (const PartitionDecl& part : o_.entities[hi].partitions) {
        std::vector<std::size_t> members;
        for (const std::string& name : part.members) {
          auto m = lookup_index(o_, name);
          if (m && std::find(members.begin(), members.end(), *m) == members.end()) {
            members.push_back(*m);
          }
        }
        if (members.size() < 2) continue;
        for (std::size_t e = 0; e < o_.entities.size(); ++e) {
          std::vector<std::size_t> hits;
          for (std::size_t m : members) {
            if (descends_or_self(e, m)) hits.push_back(m);
          }
          if (hits.size() >= 2) {
            add(e, Severity::Error, "V05", o_.entities[e].span,
                "'" + o_.entities[e].name.canonical + "' falls under '" +
                    o_.entities[hits[0]].name.canonical + "' and '" +
                    o_.entities[hits[1]].name.canonical +
                    "', two members of the partition on '" +
                    o_.entities[hi].name.canonical + "'");
          }
        }
      }
    }
  }

  void v06_v07_v08_v09(std::size_t i, const Entity& e) {
    // i plays the ancestor role for the subsumption constraints.
    for (std::size_t d = 0; d < o_.entities.size(); ++d) {
      if (d == i || !descends_or_self(d, i)) continue;
      const Entity& desc = o_.entities[d];
      if (e.statuses.unity == Unity::AntiUnity &&
          desc.statuses.unity == Unity::Unity) {
        add(i, Severity::Error, "V06", e.span,
            "anti-unity '" + e.name.canonical + "' subsumes '" +
                desc.name.canonical + "', which carries unity");
      }
      if (e.statuses.rigidity == Rigidity::AntiRigid &&
          desc.statuses.rigidity == Rigidity::Rigid) {
        add(i, Severity::Error, "V07", e.span,
            "anti-rigid '" + e.name.canonical + "' subsumes rigid '" +
                desc.name.canonical + "'");
      }
      if (e.statuses.identity && *e.statuses.identity &&
          desc.statuses.identity && !*desc.statuses.identity) {
        add(d, Severity::Error, "V08", desc.span,
            "'" + desc.name.canonical +
                "' drops the identity criterion of its ancestor '" +
                e.name.canonical + "'");
      }
      if (e.statuses.dependence && *e.statuses.dependence &&
          desc.statuses.dependence && !*desc.statuses.dependence) {
        add(d, Severity::Error, "V09", desc.span,
            "'" + desc.name.canonical +
                "' drops the dependence status of its ancestor '" +
                e.name.canonical + "'");
      }
    }
  }

  bool carries_key(std::size_t i, const std::string& key) const {
    for (const CarriedEntry& entry : carried_.perEntity[i]) {
      if (entry.key == key && entry.via != Via::InheritedUp) return true;
    }
    return false;
  }

  void v10(std::size_t i, const Entity& e) {
    if (!e.statuses.suppliesIdentity) return;
    const bool identity = carries_key(i, kKeyIdentity);
    const bool rigid = e.statuses.rigidity == Rigidity::Rigid;
    if (!identity || !rigid) {
      add(i, Severity::Error, "V10", e.span,
          "'" + e.name.canonical +
              "' declares identity supply but lacks " +
              (!identity ? "an identity criterion" : "rigidity"));
    }
  }

  void v11(std::size_t i, const Entity& e) {
    if (!e.statuses.defined) return;
    const bool derived = derive_definedness(e) == Definedness::Defined;
    if (*e.statuses.defined != derived) {
      add(i, Severity::Warning, "V11", e.span,
          "'" + e.name.canonical + "' is declared " +
              (*e.statuses.defined ? "defined" : "primitive") +
              " but derives as " + (derived ? "defined" : "primitive"));
    }
  }

  const Condition* own_ivl(const Entity& e) const {
    for (const Condition& c : e.conditions) {
      if (c.kind == ConditionKind::IVL) return &c;
    }
    return nullptr;
  }

  void v12(std::size_t i, const Entity& e) {
    for (const Condition& c : e.conditions) {
      if (c.kind != ConditionKind::IVL) continue;
      const auto& p = std::get<IvlPayload>(c.payload);
      auto s = lookup_index(o_, p.target);
      if (!s || *s == i) continue;
      const Entity& inverse = o_.entities[*s];
      bool pointsBack = false;
      bool declaresAny = false;
      for (const Condition& ic : inverse.conditions) {
        if (ic.kind != ConditionKind::IVL) continue;
        declaresAny = true;
        auto back = lookup_index(o_, std::get<IvlPayload>(ic.payload).target);
        if (back && *back == i) pointsBack = true;
      }
      if (pointsBack) continue;
      if (declaresAny) {
        add(i, Severity::Error, "V12", c.span,
            "'" + e.name.canonical + "' declares inverse '" +
                inverse.name.canonical +
                "', which declares a different inverse");
      } else {
        add(i, Severity::Warning, "V12", c.span,
            "'" + e.name.canonical + "' declares inverse '" +
                inverse.name.canonical +
                "', which does not declare an inverse back");
      }
    }
  }

  static std::string spec_key(const ArgSpec& a) {
    switch (a.mode) {
      case ArgSpec::Mode::Unrestricted: return "*";
      case ArgSpec::Mode::Text: return "text";
      default: break;
    }
    std::vector<std::string> names;
    for (const auto& t : a.targets) names.push_back(lower(t));
    std::sort(names.begin(), names.end());
    std::string out = a.mode == ArgSpec::Mode::AnyOf ? "any:" : "all:";
    for (const auto& n : names) out += n + ",";
    return out;
  }

  void v13(std::size_t i, const Entity& e) {
    if (e.kind != EntityKind::Relation || e.arity != 2) return;
    const Condition* c = own_ivl(e);
    if (!c) return;
    auto s = lookup_index(o_, std::get<IvlPayload>(c->payload).target);
    if (!s || *s == i) return;
    const Entity& inverse = o_.entities[*s];
    if (inverse.kind != EntityKind::Relation || inverse.arity != 2) return;

    auto mine = effective_signature(o_, g_, i);
    auto theirs = effective_signature(o_, g_, *s);
    const std::string a = spec_key(mine[0]);
    const std::string b = spec_key(theirs[1]);
    if (a == "text" || b == "text") return;
    if (a != b) {
      add(i, Severity::Warning, "V13", c->span,
          "the effective first argument of '" + e.name.canonical +
              "' differs from the second argument of its inverse '" +
              inverse.name.canonical + "'");
    }
  }

  void v14(std::size_t i, const Entity& e) {
    const MetaStatuses& m = e.statuses;
    if (!m.cumulative && !m.homeomerous && !m.atomic && !m.stronglyNonEmpty) {
      return;
    }
    auto pd = lookup_index(o_, "PD");
    if (pd && descends_or_self(i, *pd)) return;
    add(i, Severity::Error, "V14", e.span,
        "'" + e.name.canonical +
            "' declares a stuff-property status but is not a perdurant concept");
  }

  void v15(std::size_t i, const Entity& e) {
    if (!e.statuses.suppliesIdentity) return;
    SupplyResult r = supplies(o_, g_, carried_, i, kKeyIdentity);
    if (r.supplies && !*r.supplies) {
      add(i, Severity::Warning, "V15", e.span,
          "'" + e.name.canonical +
              "' declares identity supply but the criterion is already "
              "carried by an ancestor");
    }
  }

  void v16() {
    // ref string -> (citation count, first citing entity)
    std::map<std::string, std::pair<int, std::size_t>> counts;
    auto tally = [&](const AxiomRef& r, std::size_t i) {
      auto [it, fresh] = counts.try_emplace(r.str(), 0, i);
      ++it->second.first;
      if (!fresh) it->second.second = std::min(it->second.second, i);
    };
    for (std::size_t i = 0; i < o_.entities.size(); ++i) {
      const Entity& e = o_.entities[i];
      for (const Condition& c : e.conditions) {
        for (const AxiomRef& r : c.refs) tally(r, i);
      }
      for (const auto& r :
           {e.statuses.cumulativeRef, e.statuses.homeomerousRef,
            e.statuses.atomicRef}) {
        if (r) tally(*r, i);
      }
      for (const PartitionDecl& part : e.partitions) {
        if (part.ref) tally(*part.ref, i);
      }
      for (const MetaLink& link : e.metaLinks) {
        if (link.ref) tally(*link.ref, i);
      }
    }
    for (const auto& [ref, hit] : counts) {
      if (hit.first > 1) {
        std::size_t i = hit.second;
        add(i, Severity::Warning, "V16", o_.entities[i].span,
            "axiom reference '" + ref + "' is cited " +
                std::to_string(hit.first) + " times across the ontology");
      }
    }
  }

  void v17(std::size_t i, const Entity& e) {
    int counts[4] = {0, 0, 0, 0};
    for (const Condition& c : e.conditions) {
      switch (c.kind) {
        case ConditionKind::NSIC: ++counts[0]; break;
        case ConditionKind::NIC: ++counts[1]; break;
        case ConditionKind::SIC: ++counts[2]; break;
        case ConditionKind::UC: ++counts[3]; break;
        default: break;
      }
    }
    static const char* kNames[] = {"NSIC", "NIC", "SIC", "UC"};
    for (int k = 0; k < 4; ++k) {
      if (counts[k] > 1) {
        add(i, Severity::Warning, "V17", e.span,
            "'" + e.name.canonical + "' declares " + std::to_string(counts[k]) +
                " " + kNames[k] + " criteria");
      }
    }
  }

  void v18(std::size_t i, const Entity& e) {
    if (e.statuses.unity == Unity::AntiUnity) {
      add(i, Severity::Note, "V18", e.span,
          "anti-unity on '" + e.name.canonical +
              "' entails the negative unity status");
    }
    if (e.statuses.rigidity == Rigidity::AntiRigid) {
      add(i, Severity::Note, "V18", e.span,
          "anti-rigidity on '" + e.name.canonical +
              "' entails the negative rigidity status");
    }
  }

  const Ontology& o_;
  SubsumptionGraph g_;
  std::vector<std::optional<std::vector<std::size_t>>> ups_;
  CarriedSet carried_;
  std::vector<Item> items_;
};

}  // namespace

const std::vector<CatalogEntry>& check_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> rows;
    for (const CatalogRow& row : kCatalog) {
      rows.push_back({row.code, row.severity, row.description});
    }
    return rows;
  }();
  return catalog;
}

std::vector<Diagnostic> validate(const Ontology& o) {
  return Validator(o).run();
}

std::optional<std::string> explain(const std::string& code) {
  for (const CatalogRow& row : kCatalog) {
    if (code == row.code) {
      return std::string(row.code) + " " + to_string(row.severity) + ": " +
             row.description + " (" + row.anchor + ")";
    }
  }
  return std::nullopt;
}

}  // namespace ontospec
