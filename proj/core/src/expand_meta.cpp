#include "ontospec/expand.hpp"

namespace ontospec {

namespace {

FormulaPtr pred1(const std::string& symbol, const std::string& v) {
  return Formula::mk_pred(symbol, {Term::var(v)});
}

FormulaPtr pred2(const std::string& symbol, const std::string& a,
                 const std::string& b) {
  return Formula::mk_pred(symbol, {Term::var(a), Term::var(b)});
}

// phi(x+y), with the mereological sum coded through a ternary sum predicate.
FormulaPtr of_sum(const std::string& phi) {
  return Formula::mk_exists(
      {"z"}, Formula::mk_and(
                 {Formula::mk_pred("sum", {Term::var("z"), Term::var("x"),
                                           Term::var("y")}),
                  pred1(phi, "z")}));
}

class MetaExpander {
 public:
  MetaExpander(const Entity& host, const Ontology& o,
               const PredicateNamer& names)
      : host_(host), o_(o), names_(names) {}

  MetaExpansion run() {
    const MetaStatuses& m = host_.statuses;
    phi_ = *names_.symbol_for(o_, host_.name.canonical);

    if (m.rigidity) rigidity(*m.rigidity);
    if (m.identity) {
      skip("identity: the identity schema has a free criterion parameter");
    }
    if (m.suppliesIdentity) {
      skip("supplies-identity: supply is a derived classification");
    }
    if (m.unity) {
      skip("unity: the unity schema has a free criterion parameter");
    }
    if (m.dependence) {
      skip("dependence: the dependence schema has a free criterion parameter");
    }
    if (m.defined) {
      skip(std::string(*m.defined ? "defined" : "primitive") +
           ": definedness is a derived classification");
    }
    if (m.nonEmpty) {
      out_.formulas.push_back(
          Formula::mk_box(Formula::mk_exists({"x"}, pred1(phi_, "x"))));
    }
    if (m.stronglyNonEmpty) strongly_non_empty();
    if (m.cumulative) cumulative(*m.cumulative);
    if (m.homeomerous) homeomerous(*m.homeomerous);
    if (m.atomic) atomic(*m.atomic);
    for (const PartitionDecl& part : host_.partitions) partition(part);
    return std::move(out_);
  }

 private:
  void skip(std::string reason) { out_.skipped.push_back(std::move(reason)); }

  std::optional<std::string> symbol_of(const char* name) {
    return names_.symbol_for(o_, name);
  }

  std::optional<std::string> binary_relation(const char* name) {
    const Entity* e = lookup(o_, name);
    if (e && e->kind == EntityKind::Relation && e->arity == 2) {
      return names_.symbol_for(o_, e->name.canonical);
    }
    return std::nullopt;
  }

  void rigidity(Rigidity r) {
    FormulaPtr atom = pred1(phi_, "x");
    switch (r) {
      case Rigidity::Rigid:
        out_.formulas.push_back(Formula::mk_box(Formula::mk_forall(
            {"x"}, Formula::mk_imp(atom, Formula::mk_box(atom)))));
        break;
      case Rigidity::NonRigid:
        out_.formulas.push_back(Formula::mk_exists(
            {"x"},
            Formula::mk_and({atom, Formula::mk_not(Formula::mk_box(atom))})));
        break;
      case Rigidity::AntiRigid:
        out_.formulas.push_back(Formula::mk_forall(
            {"x"},
            Formula::mk_imp(atom, Formula::mk_not(Formula::mk_box(atom)))));
        break;
    }
  }

  // box forall x (phi(x) -> PD(x)); the stuff-property definitions all
  // constrain their bearers to perdurants first.
  std::optional<FormulaPtr> perdurant_bound() {
    auto pd = symbol_of("PD");
    if (!pd) return std::nullopt;
    return Formula::mk_box(Formula::mk_forall(
        {"x"}, Formula::mk_imp(pred1(phi_, "x"), pred1(*pd, "x"))));
  }

  void strongly_non_empty() {
    auto bound = perdurant_bound();
    auto p = binary_relation("P");
    if (!bound || !p) {
      skip("strongly-non-empty: needs the PD concept and binary parthood");
      return;
    }
    FormulaPtr witness = Formula::mk_box(Formula::mk_exists(
        {"x", "y"},
        Formula::mk_and({pred1(phi_, "x"), pred1(phi_, "y"),
                         Formula::mk_not(pred2(*p, "x", "y")),
                         Formula::mk_not(pred2(*p, "y", "x"))})));
    out_.formulas.push_back(Formula::mk_and({*bound, witness}));
  }

  void cumulative(bool positive) {
    auto bound = perdurant_bound();
    auto p = binary_relation("P");
    if (!bound || (!positive && !p)) {
      skip("cumulative: needs the PD concept and binary parthood");
      return;
    }
    FormulaPtr law;
    if (positive) {
      law = Formula::mk_box(Formula::mk_forall(
          {"x", "y"},
          Formula::mk_imp(Formula::mk_and({pred1(phi_, "x"), pred1(phi_, "y")}),
                          of_sum(phi_))));
    } else {
      law = Formula::mk_box(Formula::mk_forall(
          {"x", "y"},
          Formula::mk_imp(
              Formula::mk_and({pred1(phi_, "x"), pred1(phi_, "y"),
                               Formula::mk_not(pred2(*p, "x", "y")),
                               Formula::mk_not(pred2(*p, "y", "x"))}),
              Formula::mk_not(of_sum(phi_)))));
    }
    out_.formulas.push_back(Formula::mk_and({*bound, law}));
  }

  void homeomerous(bool positive) {
    auto bound = perdurant_bound();
    auto pt = binary_relation("P_T");
    if (!bound || !pt) {
      skip("homeomerous: needs the PD concept and the temporal part relation");
      return;
    }
    FormulaPtr law;
    if (positive) {
      law = Formula::mk_box(Formula::mk_forall(
          {"x", "y"},
          Formula::mk_imp(Formula::mk_and({pred1(phi_, "x"), pred2(*pt, "y", "x")}),
                          pred1(phi_, "y"))));
    } else {
      law = Formula::mk_box(Formula::mk_forall(
          {"x"},
          Formula::mk_imp(pred1(phi_, "x"),
                          Formula::mk_exists(
                              {"y"},
                              Formula::mk_and({pred2(*pt, "y", "x"),
                                               Formula::mk_not(pred1(phi_, "y"))})))));
    }
    out_.formulas.push_back(Formula::mk_and({*bound, law}));
  }

  void atomic(bool positive) {
    auto bound = perdurant_bound();
    auto at = symbol_of("At");
    if (!bound || !at) {
      skip("atomic-prop: needs the PD and At concepts");
      return;
    }
    FormulaPtr inner = pred1(*at, "x");
    if (!positive) inner = Formula::mk_not(inner);
    FormulaPtr law = Formula::mk_box(Formula::mk_forall(
        {"x"}, Formula::mk_imp(pred1(phi_, "x"), inner)));
    out_.formulas.push_back(Formula::mk_and({*bound, law}));
  }

  void partition(const PartitionDecl& part) {
    std::vector<std::string> members;
    for (const auto& name : part.members) {
      auto sym = names_.symbol_for(o_, name);
      if (!sym) {
        skip("partition: member '" + name + "' is unresolved");
        return;
      }
      members.push_back(*sym);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        out_.formulas.push_back(Formula::mk_box(Formula::mk_not(
            Formula::mk_exists({"x"}, Formula::mk_and({pred1(members[i], "x"),
                                                       pred1(members[j], "x")})))));
      }
    }
    std::vector<FormulaPtr> cases;
    for (const auto& m : members) cases.push_back(pred1(m, "x"));
    out_.formulas.push_back(Formula::mk_box(Formula::mk_forall(
        {"x"}, Formula::mk_iff(pred1(phi_, "x"), disjoin(std::move(cases))))));
  }

  const Entity& host_;
  const Ontology& o_;
  const PredicateNamer& names_;
  std::string phi_;
  MetaExpansion out_;
};

}  // namespace

MetaExpansion expand_meta(const Entity& host, const Ontology& o,
                          const PredicateNamer& names) {
  return MetaExpander(host, o, names).run();
}

MetaExpansion expand_meta(const Entity& host, const Ontology& o) {
  PredicateNamer names(o);
  return expand_meta(host, o, names);
}

}  // namespace ontospec
