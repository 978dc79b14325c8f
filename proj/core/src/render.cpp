#include <sstream>

#include "ontospec/parser.hpp"

namespace ontospec {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::string sig_label(const SigPayload& p) {
  std::vector<std::string> atoms;
  if (p.args.size() == 2) {
    switch (p.args[0].mode) {
      case ArgSpec::Mode::One: atoms.push_back("DR"); break;
      case ArgSpec::Mode::AnyOf: atoms.push_back("DDR"); break;
      case ArgSpec::Mode::AllOf: atoms.push_back("CDR"); break;
      case ArgSpec::Mode::Unrestricted: break;
      case ArgSpec::Mode::Text: return "SIG";
    }
    switch (p.args[1].mode) {
      case ArgSpec::Mode::One: atoms.push_back("RR"); break;
      case ArgSpec::Mode::AnyOf: atoms.push_back("DRR"); break;
      case ArgSpec::Mode::AllOf: atoms.push_back("CRR"); break;
      case ArgSpec::Mode::Unrestricted: break;
      case ArgSpec::Mode::Text: return "SIG";
    }
  } else {
    for (std::size_t i = 0; i < p.args.size(); ++i) {
      switch (p.args[i].mode) {
        case ArgSpec::Mode::One:
          atoms.push_back("VR" + std::to_string(i + 1));
          break;
        case ArgSpec::Mode::Unrestricted:
          break;
        default:
          return "SIG";
      }
    }
  }
  if (atoms.empty()) return "SIG";
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += " & ";
    out += atoms[i];
  }
  return out;
}

std::string arg_spec_text(const ArgSpec& a) {
  switch (a.mode) {
    case ArgSpec::Mode::Unrestricted: return "*";
    case ArgSpec::Mode::Text: return "text " + quoted(a.text);
    case ArgSpec::Mode::One: return a.targets.front();
    case ArgSpec::Mode::AnyOf: {
      std::string out = "any(";
      for (std::size_t i = 0; i < a.targets.size(); ++i) {
        if (i) out += "|";
        out += a.targets[i];
      }
      return out + ")";
    }
    case ArgSpec::Mode::AllOf: {
      std::string out = "all(";
      for (std::size_t i = 0; i < a.targets.size(); ++i) {
        if (i) out += "&";
        out += a.targets[i];
      }
      return out + ")";
    }
  }
  return "*";
}

std::string payload_text(const Condition& c) {
  std::ostringstream out;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SlPayload>) {
          out << "isa " << p.target;
        } else if constexpr (std::is_same_v<T, SldPayload>) {
          out << "isa " << p.target << " diff " << quoted(p.differentia);
          if (p.diffPredicate) out << " as " << *p.diffPredicate;
        } else if constexpr (std::is_same_v<T, ErPayload>) {
          out << (p.quantity == Quantity::Some ? "some" : "exactly-one") << " "
              << p.relation << " -> " << p.targets.front();
          if (p.targets.size() > 1) out << ", " << p.targets[1];
        } else if constexpr (std::is_same_v<T, VrPayload>) {
          out << "only " << p.relation << " -> " << p.target;
        } else if constexpr (std::is_same_v<T, EvrPayload>) {
          out << "only " << p.relation << " -> text " << quoted(p.targetText);
        } else if constexpr (std::is_same_v<T, CrPayload>) {
          out << "const " << p.relation << " -> " << p.constant;
        } else if constexpr (std::is_same_v<T, IclPayload>) {
          out << (c.kind == ConditionKind::IL ? "notrel " : "not ") << p.target;
        } else if constexpr (std::is_same_v<T, SigPayload>) {
          out << "sig (";
          for (std::size_t i = 0; i < p.args.size(); ++i) {
            if (i) out << ", ";
            out << arg_spec_text(p.args[i]);
          }
          out << ")";
        } else if constexpr (std::is_same_v<T, IvlPayload>) {
          out << "inverse " << p.target;
        } else if constexpr (std::is_same_v<T, CriterionPayload>) {
          out << (c.kind == ConditionKind::UC ? "unity " : "id ");
          if (p.relation) {
            out << *p.relation;
          } else {
            out << "text " << quoted(p.text);
          }
        } else if constexpr (std::is_same_v<T, EdcPayload>) {
          out << "edc " << p.target;
        } else if constexpr (std::is_same_v<T, TextPayload>) {
          out << "text " << quoted(p.text);
          if (p.formula) out << " formula " << quoted(*p.formula);
        }
      },
      c.payload);
  return out.str();
}

std::string condition_label(const Condition& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.refs.size(); ++i) {
    if (i) out += ", ";
    out += c.refs[i].str();
  }
  if (!c.refs.empty()) out += "; ";
  out += c.modality == Modality::EP ? "EP" : "CP";
  out += "/";
  if (c.kind == ConditionKind::SIG) {
    out += sig_label(std::get<SigPayload>(c.payload));
  } else {
    out += to_string(c.kind);
  }
  out += "]";
  return out;
}

void render_meta(std::ostringstream& out, const Entity& e) {
  const MetaStatuses& m = e.statuses;
  const bool anyStatus = m.rigidity || m.identity || m.suppliesIdentity ||
                         m.unity || m.dependence || m.defined || m.nonEmpty ||
                         m.stronglyNonEmpty || m.cumulative || m.homeomerous ||
                         m.atomic;
  if (!anyStatus && e.partitions.empty() && e.metaLinks.empty()) return;

  out << "  meta {\n";
  auto refTail = [&](const std::optional<AxiomRef>& r) {
    if (r) out << " ref " << r->str();
  };
  if (m.rigidity) {
    out << "    rigidity: "
        << (*m.rigidity == Rigidity::Rigid      ? "+R"
            : *m.rigidity == Rigidity::NonRigid ? "-R"
                                                : "~R")
        << "\n";
  }
  if (m.identity) out << "    identity: " << (*m.identity ? "+I" : "-I") << "\n";
  if (m.suppliesIdentity) out << "    supplies-identity\n";
  if (m.unity) {
    out << "    unity: "
        << (*m.unity == Unity::Unity     ? "+U"
            : *m.unity == Unity::NoUnity ? "-U"
                                         : "~U")
        << "\n";
  }
  if (m.dependence) {
    out << "    dependence: " << (*m.dependence ? "+D" : "-D") << "\n";
  }
  if (m.defined) out << "    " << (*m.defined ? "defined" : "primitive") << "\n";
  if (m.nonEmpty) out << "    non-empty\n";
  if (m.stronglyNonEmpty) out << "    strongly-non-empty\n";
  if (m.cumulative) {
    out << "    " << (*m.cumulative ? "cumulative" : "anti-cumulative");
    refTail(m.cumulativeRef);
    out << "\n";
  }
  if (m.homeomerous) {
    out << "    " << (*m.homeomerous ? "homeomerous" : "anti-homeomerous");
    refTail(m.homeomerousRef);
    out << "\n";
  }
  if (m.atomic) {
    out << "    " << (*m.atomic ? "atomic-prop" : "anti-atomic-prop");
    refTail(m.atomicRef);
    out << "\n";
  }
  for (const auto& part : e.partitions) {
    out << "    partition (";
    for (std::size_t i = 0; i < part.members.size(); ++i) {
      if (i) out << ", ";
      out << part.members[i];
    }
    out << ")";
    refTail(part.ref);
    out << "\n";
  }
  for (const auto& link : e.metaLinks) {
    out << "    dep " << to_string(link.kind) << " -> " << link.target;
    refTail(link.ref);
    out << "\n";
  }
  out << "  }\n";
}

}  // namespace

std::string render(const Ontology& o) {
  std::ostringstream out;
  out << "ontology " << quoted(o.title) << "\n";
  for (const auto& e : o.entities) {
    out << "\n";
    switch (e.kind) {
      case EntityKind::Concept: out << "concept"; break;
      case EntityKind::Relation: out << "relation/" << e.arity; break;
      case EntityKind::MetaConcept: out << "metaconcept"; break;
      case EntityKind::MetaRelation: out << "metarelation"; break;
    }
    out << " " << e.name.canonical;
    if (e.name.alias) out << " alias " << *e.name.alias;
    out << " {\n";
    render_meta(out, e);
    if (!e.conditions.empty()) {
      out << "  props {\n";
      for (const auto& c : e.conditions) {
        out << "    " << condition_label(c) << " " << payload_text(c);
        if (c.gloss) out << " gloss " << quoted(*c.gloss);
        out << ";\n";
      }
      out << "  }\n";
    }
    if (!e.comments.empty()) {
      out << "  comment {\n";
      for (const auto& item : e.comments) {
        out << "    " << to_string(item.tag);
        if (item.tag == CommentTag::CIT) out << " " << quoted(item.source);
        out << " " << quoted(item.text) << ";\n";
      }
      out << "  }\n";
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace ontospec
