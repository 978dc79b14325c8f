#include "ontospec/expand.hpp"

#include <cctype>

namespace ontospec {

namespace {

const char* kVarNames[] = {"x", "y", "z", "w", "t", "s"};

std::string var_name(std::size_t i) {
  if (i < 6) return kVarNames[i];
  return "x" + std::to_string(i - 5);
}

std::vector<std::string> var_list(std::size_t n) {
  std::vector<std::string> vars;
  vars.reserve(n);
  for (std::size_t i = 0; i < n; ++i) vars.push_back(var_name(i));
  return vars;
}

std::vector<Term> var_terms(const std::vector<std::string>& vars) {
  std::vector<Term> terms;
  terms.reserve(vars.size());
  for (const auto& v : vars) terms.push_back(Term::var(v));
  return terms;
}

FormulaPtr pred1(const std::string& symbol, const std::string& v) {
  return Formula::mk_pred(symbol, {Term::var(v)});
}

FormulaPtr pred2(const std::string& symbol, const std::string& a,
                 const std::string& b) {
  return Formula::mk_pred(symbol, {Term::var(a), Term::var(b)});
}

FormulaPtr pred3(const std::string& symbol, const std::string& a,
                 const std::string& b, const std::string& c) {
  return Formula::mk_pred(symbol,
                          {Term::var(a), Term::var(b), Term::var(c)});
}

}  // namespace

std::string hyphen_slug(const std::string& canonical) {
  std::string out;
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(canonical[i]);
    if (std::isupper(c) && i > 0) {
      unsigned char prev = static_cast<unsigned char>(canonical[i - 1]);
      bool nextLower = i + 1 < canonical.size() &&
                       std::islower(static_cast<unsigned char>(canonical[i + 1]));
      if (std::islower(prev) || std::isdigit(prev) ||
          (std::isupper(prev) && nextLower)) {
        out.push_back('-');
      }
    }
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

PredicateNamer::PredicateNamer(const Ontology& o) {
  std::map<std::string, int> used;
  symbols_.reserve(o.entities.size());
  for (const Entity& e : o.entities) {
    std::string sym =
        e.name.alias ? lower(*e.name.alias) : hyphen_slug(e.name.canonical);
    int& count = used[sym];
    ++count;
    if (count > 1) sym += "-" + std::to_string(count);
    symbols_.push_back(std::move(sym));
  }
}

const std::string& PredicateNamer::symbol(std::size_t entityIndex) const {
  return symbols_.at(entityIndex);
}

std::optional<std::string> PredicateNamer::symbol_for(
    const Ontology& o, const std::string& entityName) const {
  auto idx = lookup_index(o, entityName);
  if (!idx) return std::nullopt;
  return symbols_.at(*idx);
}

namespace {

class Expander {
 public:
  Expander(const Entity& host, const Ontology& o, const PredicateNamer& names)
      : host_(host), o_(o), names_(names) {}

  Expansion condition(const Condition& c) {
    c_ = &c;
    switch (c.kind) {
      case ConditionKind::NMC:
      case ConditionKind::SMC:
      case ConditionKind::NSMC:
        return inline_formula(std::get<TextPayload>(c.payload));
      case ConditionKind::SL: return sl(std::get<SlPayload>(c.payload));
      case ConditionKind::SLD: return sld(std::get<SldPayload>(c.payload));
      case ConditionKind::ER: return er(std::get<ErPayload>(c.payload));
      case ConditionKind::VR: return vr(std::get<VrPayload>(c.payload));
      case ConditionKind::EVR: return evr(std::get<EvrPayload>(c.payload));
      case ConditionKind::CR: return cr(std::get<CrPayload>(c.payload));
      case ConditionKind::ICL:
      case ConditionKind::IL:
        return icl(std::get<IclPayload>(c.payload));
      case ConditionKind::NSIC:
      case ConditionKind::NIC:
      case ConditionKind::SIC:
        return identity_criterion(std::get<CriterionPayload>(c.payload), c.kind);
      case ConditionKind::UC:
        return unity_criterion(std::get<CriterionPayload>(c.payload));
      case ConditionKind::EDC: return edc(std::get<EdcPayload>(c.payload));
      case ConditionKind::SIG: return sig(std::get<SigPayload>(c.payload));
      case ConditionKind::IVL: return ivl(std::get<IvlPayload>(c.payload));
    }
    return unsupported("unhandled condition kind");
  }

 private:
  Expansion ok(FormulaPtr f) {
    Expansion e;
    e.formula = std::move(f);
    return e;
  }

  Expansion unsupported(std::string reason) {
    Expansion e;
    e.unsupportedReason = std::move(reason);
    return e;
  }

  Expansion prereq_missing(std::string reason) {
    Expansion e = unsupported(reason);
    Diagnostic d;
    d.severity = Severity::Warning;
    d.code = "L02";
    d.entity = host_.name.canonical;
    d.span = c_->span;
    d.message = e.unsupportedReason;
    e.diagnostic = d;
    return e;
  }

  const std::string& host_symbol() {
    auto idx = lookup_index(o_, host_.name.canonical);
    return names_.symbol(*idx);
  }

  std::optional<std::string> symbol_of(const std::string& name) {
    return names_.symbol_for(o_, name);
  }

  const Entity* binary_relation(const std::string& name) {
    const Entity* e = lookup(o_, name);
    if (e && e->kind == EntityKind::Relation && e->arity == 2) return e;
    return nullptr;
  }

  const Entity* ternary_parthood() {
    for (const char* name : {"P", "P-t"}) {
      const Entity* e = lookup(o_, name);
      if (e && e->kind == EntityKind::Relation && e->arity == 3) return e;
    }
    return nullptr;
  }

  // Universal closure over the host's own argument places.
  FormulaPtr host_atom(const std::vector<std::string>& vars) {
    return Formula::mk_pred(host_symbol(), var_terms(vars));
  }

  Expansion inline_formula(const TextPayload& p) {
    if (!p.formula) {
      return unsupported("free-text condition without an inline formula");
    }
    OsfParseResult r = parse_osf(*p.formula);
    if (!r.formula) {
      Expansion e = unsupported("inline formula does not parse: " + r.error);
      Diagnostic d;
      d.severity = Severity::Error;
      d.code = "L01";
      d.entity = host_.name.canonical;
      d.span = c_->span;
      d.message = e.unsupportedReason;
      e.diagnostic = d;
      return e;
    }
    return ok(r.formula);
  }

  Expansion sl(const SlPayload& p) {
    auto target = symbol_of(p.target);
    if (!target) return unsupported("unresolved target '" + p.target + "'");
    const std::size_t n = static_cast<std::size_t>(host_.effective_arity());
    auto vars = var_list(n);
    return ok(Formula::mk_forall(
        vars, Formula::mk_imp(host_atom(vars),
                              Formula::mk_pred(*target, var_terms(vars)))));
  }

  std::string sld_symbol(const SldPayload& p) {
    if (p.diffPredicate) return lower(*p.diffPredicate);
    int ordinal = 0;
    for (const Condition& c : host_.conditions) {
      if (c.kind != ConditionKind::SLD) continue;
      ++ordinal;
      if (&c == c_) break;
    }
    return "diff_" + hyphen_slug(host_.name.canonical) + "_" +
           std::to_string(ordinal);
  }

  Expansion sld(const SldPayload& p) {
    auto target = symbol_of(p.target);
    if (!target) return unsupported("unresolved target '" + p.target + "'");
    const std::size_t n = static_cast<std::size_t>(host_.effective_arity());
    auto vars = var_list(n);
    FormulaPtr genus = Formula::mk_pred(*target, var_terms(vars));
    FormulaPtr diff = Formula::mk_pred(sld_symbol(p), var_terms(vars));
    return ok(Formula::mk_forall(
        vars, Formula::mk_iff(host_atom(vars),
                              Formula::mk_and({genus, diff}))));
  }

  Expansion er(const ErPayload& p) {
    auto rel = symbol_of(p.relation);
    if (!rel) return unsupported("unresolved relation '" + p.relation + "'");
    std::vector<std::string> targets;
    for (const auto& name : p.targets) {
      auto t = symbol_of(name);
      if (!t) return unsupported("unresolved target '" + name + "'");
      targets.push_back(*t);
    }

    FormulaPtr body;
    if (targets.size() == 1) {
      FormulaPtr exist = Formula::mk_exists(
          {"y"},
          Formula::mk_and({pred1(targets[0], "y"), pred2(*rel, "x", "y")}));
      if (p.quantity == Quantity::Some) {
        body = exist;
      } else {
        FormulaPtr unique = Formula::mk_forall(
            {"y", "z"},
            Formula::mk_imp(
                Formula::mk_and({pred1(targets[0], "y"), pred2(*rel, "x", "y"),
                                 pred1(targets[0], "z"), pred2(*rel, "x", "z")}),
                Formula::mk_eq(Term::var("y"), Term::var("z"))));
        body = Formula::mk_and({exist, unique});
      }
    } else {
      FormulaPtr exist = Formula::mk_exists(
          {"y", "z"},
          Formula::mk_and({pred1(targets[0], "y"), pred1(targets[1], "z"),
                           pred3(*rel, "x", "y", "z")}));
      if (p.quantity == Quantity::Some) {
        body = exist;
      } else {
        FormulaPtr unique = Formula::mk_forall(
            {"y", "z", "w", "t"},
            Formula::mk_imp(
                Formula::mk_and({pred1(targets[0], "y"), pred1(targets[1], "z"),
                                 pred3(*rel, "x", "y", "z"),
                                 pred1(targets[0], "w"), pred1(targets[1], "t"),
                                 pred3(*rel, "x", "w", "t")}),
                Formula::mk_and(
                    {Formula::mk_eq(Term::var("y"), Term::var("w")),
                     Formula::mk_eq(Term::var("z"), Term::var("t"))})));
        body = Formula::mk_and({exist, unique});
      }
    }
    return ok(Formula::mk_forall({"x"}, Formula::mk_imp(host_atom({"x"}), body)));
  }

  // The restricted slot is always the second one; remaining slots of an
  // n-ary relation are threaded through the outer prefix.
  Expansion value_restriction(const std::string& relation, FormulaPtr psiOfY) {
    auto rel = symbol_of(relation);
    if (!rel) return unsupported("unresolved relation '" + relation + "'");
    const Entity* r = lookup(o_, relation);
    const std::size_t arity = static_cast<std::size_t>(r->arity);

    std::vector<std::string> prefix = {"x"};
    std::vector<Term> relArgs = {Term::var("x"), Term::var("y")};
    for (std::size_t slot = 3; slot <= arity; ++slot) {
      std::string v = var_name(slot - 1);
      prefix.push_back(v);
      relArgs.push_back(Term::var(v));
    }
    FormulaPtr inner = Formula::mk_forall(
        {"y"}, Formula::mk_imp(Formula::mk_pred(*rel, relArgs),
                               std::move(psiOfY)));
    return ok(Formula::mk_forall(
        prefix, Formula::mk_imp(host_atom({"x"}), inner)));
  }

  Expansion vr(const VrPayload& p) {
    auto target = symbol_of(p.target);
    if (!target) return unsupported("unresolved target '" + p.target + "'");
    return value_restriction(p.relation, pred1(*target, "y"));
  }

  Expansion evr(const EvrPayload& p) {
    std::vector<FormulaPtr> parts;
    std::size_t start = 0;
    const std::string& text = p.targetText;
    auto add_part = [&](std::string name) -> bool {
      while (!name.empty() && name.front() == ' ') name.erase(name.begin());
      while (!name.empty() && name.back() == ' ') name.pop_back();
      auto sym = symbol_of(name);
      if (!sym) return false;
      parts.push_back(pred1(*sym, "y"));
      return true;
    };
    while (true) {
      std::size_t at = text.find(" or ", start);
      if (at == std::string::npos) break;
      if (!add_part(text.substr(start, at - start))) {
        return unsupported("value restriction text does not name known concepts");
      }
      start = at + 4;
    }
    if (!add_part(text.substr(start))) {
      return unsupported("value restriction text does not name known concepts");
    }
    return value_restriction(p.relation, disjoin(std::move(parts)));
  }

  Expansion cr(const CrPayload& p) {
    auto rel = symbol_of(p.relation);
    if (!rel) return unsupported("unresolved relation '" + p.relation + "'");
    return ok(Formula::mk_forall(
        {"x"},
        Formula::mk_imp(host_atom({"x"}),
                        Formula::mk_pred(*rel, {Term::var("x"),
                                                Term::constant(lower(p.constant))}))));
  }

  Expansion icl(const IclPayload& p) {
    auto target = symbol_of(p.target);
    if (!target) return unsupported("unresolved target '" + p.target + "'");
    const std::size_t n = static_cast<std::size_t>(host_.effective_arity());
    auto vars = var_list(n);
    return ok(Formula::mk_forall(
        vars,
        Formula::mk_imp(host_atom(vars),
                        Formula::mk_not(
                            Formula::mk_pred(*target, var_terms(vars))))));
  }

  Expansion identity_criterion(const CriterionPayload& p, ConditionKind kind) {
    if (!p.relation) return unsupported("free-text identity criterion");
    auto rel = symbol_of(*p.relation);
    if (!rel) return unsupported("unresolved relation '" + *p.relation + "'");
    FormulaPtr gamma = pred2(*rel, "x", "y");
    FormulaPtr eq = Formula::mk_eq(Term::var("x"), Term::var("y"));
    FormulaPtr link;
    switch (kind) {
      case ConditionKind::NSIC: link = Formula::mk_iff(gamma, eq); break;
      case ConditionKind::NIC: link = Formula::mk_imp(eq, gamma); break;
      default: link = Formula::mk_imp(gamma, eq); break;
    }
    return ok(Formula::mk_forall(
        {"x", "y"},
        Formula::mk_imp(Formula::mk_and({host_atom({"x"}), pred1(host_symbol(), "y")}),
                        link)));
  }

  Expansion unity_criterion(const CriterionPayload& p) {
    if (!p.relation) return unsupported("free-text unity criterion");
    auto rel = symbol_of(*p.relation);
    if (!rel) return unsupported("unresolved relation '" + *p.relation + "'");

    auto ed = symbol_of("ED");
    auto pd = symbol_of("PD");
    auto ab = symbol_of("AB");
    const Entity* p2 = binary_relation("P");
    const Entity* p3 = ternary_parthood();
    if (!ed || !pd || !ab || !p2 || !p3) {
      return prereq_missing(
          "unity criterion needs the ED, PD and AB concepts and binary and "
          "ternary parthood relations");
    }
    const std::string p2sym = *names_.symbol_for(o_, p2->name.canonical);
    const std::string p3sym = *names_.symbol_for(o_, p3->name.canonical);

    auto branch = [&](FormulaPtr partY, FormulaPtr partZ) {
      FormulaPtr pos = Formula::mk_forall(
          {"y", "z"},
          Formula::mk_imp(Formula::mk_and({partY, partZ}),
                          pred2(*rel, "y", "z")));
      return pos;
    };
    auto neg_branch = [&](FormulaPtr partY, FormulaPtr partZ) {
      return Formula::mk_forall(
          {"y", "z"},
          Formula::mk_imp(
              Formula::mk_and({Formula::mk_not(partY), Formula::mk_not(partZ)}),
              Formula::mk_not(pred2(*rel, "y", "z"))));
    };

    FormulaPtr edBranch = Formula::mk_imp(
        pred1(*ed, "x"),
        Formula::mk_and({branch(pred3(p3sym, "y", "x", "t"),
                                pred3(p3sym, "z", "x", "t")),
                         neg_branch(pred3(p3sym, "y", "x", "t"),
                                    pred3(p3sym, "z", "x", "t"))}));
    FormulaPtr pdAbBranch = Formula::mk_imp(
        Formula::mk_or({pred1(*pd, "x"), pred1(*ab, "x")}),
        Formula::mk_and({branch(pred2(p2sym, "y", "x"), pred2(p2sym, "z", "x")),
                         neg_branch(pred2(p2sym, "y", "x"),
                                    pred2(p2sym, "z", "x"))}));

    return ok(Formula::mk_forall(
        {"x", "t"},
        Formula::mk_imp(host_atom({"x"}),
                        Formula::mk_and({edBranch, pdAbBranch}))));
  }

  Expansion edc(const EdcPayload& p) {
    auto target = symbol_of(p.target);
    if (!target) return unsupported("unresolved target '" + p.target + "'");
    const Entity* p2 = binary_relation("P");
    const Entity* k2 = binary_relation("K");
    if (!p2 || !k2) {
      return prereq_missing(
          "external dependence needs binary parthood and constitution relations");
    }
    const std::string psym = *names_.symbol_for(o_, p2->name.canonical);
    const std::string ksym = *names_.symbol_for(o_, k2->name.canonical);

    FormulaPtr inner = Formula::mk_exists(
        {"y"}, Formula::mk_and({pred1(*target, "y"),
                                Formula::mk_not(pred2(psym, "y", "x")),
                                Formula::mk_not(pred2(ksym, "y", "x"))}));
    return ok(Formula::mk_forall(
        {"x"}, Formula::mk_box(Formula::mk_imp(host_atom({"x"}), inner))));
  }

  FormulaPtr spec_formula(const ArgSpec& a, const std::string& v) {
    std::vector<FormulaPtr> parts;
    for (const auto& name : a.targets) {
      auto sym = symbol_of(name);
      if (!sym) return nullptr;
      parts.push_back(pred1(*sym, v));
    }
    switch (a.mode) {
      case ArgSpec::Mode::One: return parts.front();
      case ArgSpec::Mode::AnyOf: return disjoin(std::move(parts));
      case ArgSpec::Mode::AllOf: return conjoin(std::move(parts));
      default: return nullptr;
    }
  }

  Expansion sig(const SigPayload& p) {
    const std::size_t n = static_cast<std::size_t>(host_.effective_arity());
    auto vars = var_list(n);
    FormulaPtr relAtom = host_atom(vars);
    std::vector<FormulaPtr> conjuncts;
    for (std::size_t i = 0; i < p.args.size() && i < n; ++i) {
      const ArgSpec& a = p.args[i];
      if (a.mode == ArgSpec::Mode::Unrestricted) continue;
      if (a.mode == ArgSpec::Mode::Text) {
        return unsupported("free-text argument restriction");
      }
      FormulaPtr psi = spec_formula(a, vars[i]);
      if (!psi) {
        return unsupported("unresolved concept in the argument restriction");
      }
      conjuncts.push_back(Formula::mk_imp(relAtom, psi));
    }
    if (conjuncts.empty()) {
      return unsupported("signature restricts no argument");
    }
    return ok(Formula::mk_forall(vars, conjoin(std::move(conjuncts))));
  }

  Expansion ivl(const IvlPayload& p) {
    auto target = symbol_of(p.target);
    if (!target) return unsupported("unresolved relation '" + p.target + "'");
    return ok(Formula::mk_forall(
        {"x", "y"},
        Formula::mk_iff(host_atom({"x", "y"}), pred2(*target, "y", "x"))));
  }

  const Entity& host_;
  const Ontology& o_;
  const PredicateNamer& names_;
  const Condition* c_ = nullptr;
};

}  // namespace

Expansion expand_condition(const Entity& host, const Condition& c,
                           const Ontology& o, const PredicateNamer& names) {
  return Expander(host, o, names).condition(c);
}

Expansion expand_condition(const Entity& host, const Condition& c,
                           const Ontology& o) {
  PredicateNamer names(o);
  return expand_condition(host, c, o, names);
}

}  // namespace ontospec
