#include "ontospec/parser.hpp"

namespace ontospec {

namespace {

bool concept_like(EntityKind k) {
  return k == EntityKind::Concept || k == EntityKind::MetaConcept;
}

class Resolver {
 public:
  explicit Resolver(Ontology& o) : o_(o) {}

  std::vector<Diagnostic> run() {
    for (const Entity& e : o_.entities) resolve_entity(e);
    if (!has_errors(diags_)) o_.resolved = true;
    return std::move(diags_);
  }

 private:
  void diag(const char* code, const Entity& host, const SourceSpan& span,
            std::string message) {
    Diagnostic d;
    d.code = code;
    d.entity = host.name.canonical;
    d.span = span;
    d.message = std::move(message);
    diags_.push_back(d);
  }

  const Entity* find(const Entity& host, const SourceSpan& span,
                     const std::string& name) {
    const Entity* target = lookup(o_, name);
    if (!target) {
      diag("R01", host, span, "unresolved reference '" + name + "'");
    }
    return target;
  }

  void resolve_entity(const Entity& e) {
    for (const Condition& c : e.conditions) resolve_condition(e, c);
    for (const PartitionDecl& part : e.partitions) {
      if (!concept_like(e.kind)) {
        diag("R02", e, part.span, "partitions are only legal on concepts");
        continue;
      }
      for (const std::string& member : part.members) {
        const Entity* m = find(e, part.span, member);
        if (m && m->kind != e.kind) {
          diag("R02", e, part.span,
               "partition member '" + member + "' is not a " +
                   (e.kind == EntityKind::Concept ? "concept" : "metaconcept"));
        }
      }
    }
    for (const MetaLink& link : e.metaLinks) {
      const Entity* t = find(e, link.span, link.target);
      if (t && !concept_like(t->kind)) {
        diag("R02", e, link.span,
             "dependence link target '" + link.target + "' is not a concept");
      }
    }
  }

  void require_concept_host(const Entity& host, const Condition& c) {
    if (!concept_like(host.kind)) {
      diag("R02", host, c.span,
           std::string(to_string(c.kind)) +
               " conditions are only legal on concepts");
    }
  }

  const Entity* relation_ref(const Entity& host, const Condition& c,
                             const std::string& name, int minArity) {
    const Entity* r = find(host, c.span, name);
    if (!r) return nullptr;
    if (r->kind != EntityKind::Relation) {
      diag("R02", host, c.span, "'" + name + "' is not a relation");
      return nullptr;
    }
    if (r->arity < minArity) {
      diag("R02", host, c.span,
           "relation '" + name + "' has arity " + std::to_string(r->arity) +
               ", expected at least " + std::to_string(minArity));
      return nullptr;
    }
    return r;
  }

  void resolve_condition(const Entity& host, const Condition& c) {
    switch (c.kind) {
      case ConditionKind::NMC:
      case ConditionKind::SMC:
      case ConditionKind::NSMC:
        break;

      case ConditionKind::SL: {
        const auto& p = std::get<SlPayload>(c.payload);
        const Entity* t = find(host, c.span, p.target);
        if (!t) break;
        if (t->kind != host.kind) {
          diag("R02", host, c.span,
               "subsumption target '" + p.target +
                   "' has a different entity kind than the host");
        } else if (host.kind == EntityKind::Relation && t->arity != host.arity) {
          diag("R02", host, c.span,
               "subsumption target '" + p.target + "' has arity " +
                   std::to_string(t->arity) + ", host has " +
                   std::to_string(host.arity));
        }
        break;
      }

      case ConditionKind::SLD: {
        const auto& p = std::get<SldPayload>(c.payload);
        const Entity* t = find(host, c.span, p.target);
        if (!t) break;
        if (t->kind != host.kind) {
          diag("R02", host, c.span,
               "subsumption target '" + p.target +
                   "' has a different entity kind than the host");
        } else if (host.kind == EntityKind::Relation && t->arity != host.arity) {
          diag("R02", host, c.span,
               "subsumption target '" + p.target + "' has arity " +
                   std::to_string(t->arity) + ", host has " +
                   std::to_string(host.arity));
        }
        break;
      }

      case ConditionKind::ER: {
        require_concept_host(host, c);
        const auto& p = std::get<ErPayload>(c.payload);
        const Entity* r = relation_ref(host, c, p.relation, 2);
        if (r && r->arity != static_cast<int>(p.targets.size()) + 1) {
          diag("R02", host, c.span,
               "relation '" + p.relation + "' has arity " +
                   std::to_string(r->arity) + ", which does not fit " +
                   std::to_string(p.targets.size()) + " target(s)");
        }
        if (r && r->arity > 3) {
          diag("R02", host, c.span,
               "existence conditions support only binary and ternary relations");
        }
        for (const std::string& name : p.targets) {
          const Entity* t = find(host, c.span, name);
          if (t && !concept_like(t->kind)) {
            diag("R02", host, c.span, "'" + name + "' is not a concept");
          }
        }
        break;
      }

      case ConditionKind::VR: {
        require_concept_host(host, c);
        const auto& p = std::get<VrPayload>(c.payload);
        relation_ref(host, c, p.relation, 2);
        const Entity* t = find(host, c.span, p.target);
        if (t && !concept_like(t->kind)) {
          diag("R02", host, c.span, "'" + p.target + "' is not a concept");
        }
        break;
      }

      case ConditionKind::EVR: {
        require_concept_host(host, c);
        const auto& p = std::get<EvrPayload>(c.payload);
        relation_ref(host, c, p.relation, 2);
        break;
      }

      case ConditionKind::CR: {
        require_concept_host(host, c);
        const auto& p = std::get<CrPayload>(c.payload);
        const Entity* r = relation_ref(host, c, p.relation, 2);
        if (r && r->arity != 2) {
          diag("R02", host, c.span,
               "constant conditions need a binary relation, '" + p.relation +
                   "' has arity " + std::to_string(r->arity));
        }
        break;
      }

      case ConditionKind::ICL: {
        require_concept_host(host, c);
        const auto& p = std::get<IclPayload>(c.payload);
        const Entity* t = find(host, c.span, p.target);
        if (t && t->kind != host.kind) {
          diag("R02", host, c.span,
               "incompatibility target '" + p.target +
                   "' has a different entity kind than the host");
        }
        break;
      }

      case ConditionKind::NSIC:
      case ConditionKind::NIC:
      case ConditionKind::SIC:
      case ConditionKind::UC: {
        if (host.kind != EntityKind::Concept) {
          diag("R02", host, c.span,
               std::string(to_string(c.kind)) +
                   " conditions are only legal on concepts");
          break;
        }
        const auto& p = std::get<CriterionPayload>(c.payload);
        if (p.relation) {
          const Entity* r = relation_ref(host, c, *p.relation, 2);
          if (r && r->arity != 2) {
            diag("R02", host, c.span,
                 "criterion relation '" + *p.relation + "' must be binary");
          }
        }
        break;
      }

      case ConditionKind::EDC: {
        if (host.kind != EntityKind::Concept) {
          diag("R02", host, c.span,
               "external dependence conditions are only legal on concepts");
          break;
        }
        const auto& p = std::get<EdcPayload>(c.payload);
        const Entity* t = find(host, c.span, p.target);
        if (t && t->kind != EntityKind::Concept) {
          diag("R02", host, c.span, "'" + p.target + "' is not a concept");
        }
        break;
      }

      case ConditionKind::SIG: {
        if (host.kind != EntityKind::Relation) {
          diag("R02", host, c.span,
               "signature conditions are only legal on relations");
          break;
        }
        const auto& p = std::get<SigPayload>(c.payload);
        if (static_cast<int>(p.args.size()) != host.arity) {
          diag("R02", host, c.span,
               "signature lists " + std::to_string(p.args.size()) +
                   " arguments, relation arity is " + std::to_string(host.arity));
        }
        for (const ArgSpec& a : p.args) {
          for (const std::string& name : a.targets) {
            const Entity* t = find(host, c.span, name);
            if (t && !concept_like(t->kind)) {
              diag("R02", host, c.span, "'" + name + "' is not a concept");
            }
          }
        }
        break;
      }

      case ConditionKind::IL: {
        if (host.kind != EntityKind::Relation) {
          diag("R02", host, c.span,
               "relation incompatibility is only legal on relations");
          break;
        }
        const auto& p = std::get<IclPayload>(c.payload);
        const Entity* t = find(host, c.span, p.target);
        if (t && (t->kind != EntityKind::Relation || t->arity != host.arity)) {
          diag("R02", host, c.span,
               "incompatible relation '" + p.target +
                   "' must be a relation of the same arity");
        }
        if (host.arity != 2) {
          diag("R02", host, c.span,
               "relation incompatibility is only supported for binary relations");
        }
        break;
      }

      case ConditionKind::IVL: {
        if (host.kind != EntityKind::Relation || host.arity != 2) {
          diag("R02", host, c.span,
               "inverse links are only legal on binary relations");
          break;
        }
        const auto& p = std::get<IvlPayload>(c.payload);
        const Entity* t = find(host, c.span, p.target);
        if (t && (t->kind != EntityKind::Relation || t->arity != 2)) {
          diag("R02", host, c.span,
               "inverse '" + p.target + "' must be a binary relation");
        }
        break;
      }
    }
  }

  Ontology& o_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

std::vector<Diagnostic> resolve_references(Ontology& o) {
  return Resolver(o).run();
}

}  // namespace ontospec
