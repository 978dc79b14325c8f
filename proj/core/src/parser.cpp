#include "ontospec/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

#include "lexer.hpp"

namespace ontospec {

namespace {

using detail::Tok;
using detail::Token;

std::optional<ConditionKind> direct_kind(const std::string& atom) {
  static const std::map<std::string, ConditionKind> kinds = {
      {"NMC", ConditionKind::NMC},   {"SL", ConditionKind::SL},
      {"ER", ConditionKind::ER},     {"VR", ConditionKind::VR},
      {"EVR", ConditionKind::EVR},   {"CR", ConditionKind::CR},
      {"ICL", ConditionKind::ICL},   {"SMC", ConditionKind::SMC},
      {"NSMC", ConditionKind::NSMC}, {"SLD", ConditionKind::SLD},
      {"NSIC", ConditionKind::NSIC}, {"NIC", ConditionKind::NIC},
      {"SIC", ConditionKind::SIC},   {"UC", ConditionKind::UC},
      {"EDC", ConditionKind::EDC},   {"SIG", ConditionKind::SIG},
      {"IL", ConditionKind::IL},     {"IVL", ConditionKind::IVL},
  };
  auto it = kinds.find(atom);
  if (it == kinds.end()) return std::nullopt;
  return it->second;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

enum class SigAtom { Canonical, Alias, No };

SigAtom classify_sig_atom(const std::string& a) {
  if (a == "DR" || a == "RR" || a == "DDR" || a == "DRR" || a == "CDR" ||
      a == "CRR") {
    return SigAtom::Canonical;
  }
  if (a.size() > 2 && a.substr(0, 2) == "VR" && all_digits(a.substr(2))) {
    return SigAtom::Canonical;
  }
  for (const char* prefix : {"DR", "CR", "R"}) {
    const std::size_t n = std::char_traits<char>::length(prefix);
    if (a.size() > n && a.compare(0, n, prefix) == 0 && all_digits(a.substr(n))) {
      return SigAtom::Alias;
    }
  }
  return SigAtom::No;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string file)
      : tokens_(std::move(tokens)), file_(std::move(file)) {}

  ParseResult run(std::vector<Diagnostic> lexDiags) {
    diags_ = std::move(lexDiags);
    Ontology o;
    if (expect_ident("ontology", "expected 'ontology' at document start")) {
      if (at(Tok::String)) {
        o.title = current().text;
        advance();
      } else {
        syntax_error("expected ontology title string");
      }
    }
    while (!at(Tok::End)) {
      std::size_t before = pos_;
      parse_entity(o);
      if (pos_ == before) advance();  // never stall
    }
    finish_duplicate_check(o);
    ParseResult result;
    result.diagnostics = std::move(diags_);
    if (!has_errors(result.diagnostics)) {
      o.rebuild_index();
      result.ontology = std::move(o);
    }
    return result;
  }

 private:
  const Token& current() const { return tokens_[pos_]; }
  const Token& peek(std::size_t ahead = 1) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  bool at(Tok t) const { return current().type == t; }
  bool at_ident(const char* text) const {
    return at(Tok::Ident) && current().text == text;
  }
  void advance() {
    if (pos_ + 1 < tokens_.size()) ++pos_;
  }

  void diag(Severity sev, const char* code, const SourceSpan& span,
            std::string message) {
    Diagnostic d;
    d.severity = sev;
    d.code = code;
    d.entity = currentEntity_;
    d.span = span;
    d.message = std::move(message);
    diags_.push_back(d);
  }

  void syntax_error(std::string message) {
    diag(Severity::Error, "P02", current().span, std::move(message));
  }

  bool expect(Tok t, const char* what) {
    if (at(t)) {
      advance();
      return true;
    }
    syntax_error(std::string("expected ") + what);
    return false;
  }

  bool expect_ident(const char* text, const char* message) {
    if (at_ident(text)) {
      advance();
      return true;
    }
    syntax_error(message);
    return false;
  }

  // Skips to the next ';' (consumed) or '}' (left for the caller).
  void sync_statement() {
    while (!at(Tok::End)) {
      if (at(Tok::Semi)) {
        advance();
        return;
      }
      if (at(Tok::RBrace)) return;
      advance();
    }
  }

  void sync_block() {
    int depth = 0;
    while (!at(Tok::End)) {
      if (at(Tok::LBrace)) ++depth;
      if (at(Tok::RBrace)) {
        if (depth == 0) {
          advance();
          return;
        }
        --depth;
      }
      advance();
    }
  }

  void register_name(const std::string& name, const SourceSpan& span) {
    auto [it, fresh] = seenNames_.emplace(lower(name), span);
    if (!fresh) {
      diag(Severity::Error, "P06", span,
           "duplicate name '" + name + "' (already declared at " +
               it->second.file + ":" + std::to_string(it->second.startLine) +
               ")");
    }
  }

  void finish_duplicate_check(const Ontology&) {}

  void parse_entity(Ontology& o) {
    Entity e;
    e.span = current().span;
    if (at_ident("concept")) {
      e.kind = EntityKind::Concept;
      advance();
    } else if (at_ident("relation")) {
      e.kind = EntityKind::Relation;
      advance();
      if (!expect(Tok::Slash, "'/' and an arity after 'relation'")) {
        sync_block();
        return;
      }
      if (!at(Tok::Int)) {
        syntax_error("expected relation arity");
        sync_block();
        return;
      }
      e.arity = std::stoi(current().text);
      advance();
      if (e.arity < 2) {
        diag(Severity::Error, "P02", e.span, "relation arity must be at least 2");
      }
    } else if (at_ident("metaconcept")) {
      e.kind = EntityKind::MetaConcept;
      advance();
    } else if (at_ident("metarelation")) {
      e.kind = EntityKind::MetaRelation;
      advance();
    } else {
      syntax_error("expected 'concept', 'relation', 'metaconcept' or 'metarelation'");
      sync_block();
      return;
    }

    if (!at(Tok::Ident)) {
      syntax_error("expected entity name");
      sync_block();
      return;
    }
    e.name.canonical = current().text;
    currentEntity_ = e.name.canonical;
    register_name(e.name.canonical, current().span);
    advance();

    if (at_ident("alias")) {
      advance();
      if (!at(Tok::Ident)) {
        syntax_error("expected alias identifier");
      } else {
        e.name.alias = current().text;
        register_name(*e.name.alias, current().span);
        advance();
      }
    }

    if (!expect(Tok::LBrace, "'{' opening the entity body")) {
      sync_block();
      currentEntity_.clear();
      return;
    }
    while (!at(Tok::RBrace) && !at(Tok::End)) {
      std::size_t before = pos_;
      if (at_ident("meta")) {
        parse_meta_block(e);
      } else if (at_ident("props")) {
        parse_props_block(e);
      } else if (at_ident("comment")) {
        parse_comment_block(e);
      } else {
        syntax_error("expected 'meta', 'props' or 'comment' block");
        sync_block();
      }
      if (pos_ == before) advance();
    }
    expect(Tok::RBrace, "'}' closing the entity body");
    o.entities.push_back(std::move(e));
    currentEntity_.clear();
  }

  std::optional<AxiomRef> parse_ref_token() {
    if (!at(Tok::Ident)) {
      diag(Severity::Error, "P05", current().span, "expected axiom reference");
      return std::nullopt;
    }
    std::string text = current().text;
    SourceSpan span = current().span;
    advance();
    while (at(Tok::Prime)) {
      text.push_back('\'');
      advance();
    }
    auto ref = parse_axiom_ref(text);
    if (!ref) {
      diag(Severity::Error, "P05", span,
           "malformed axiom reference '" + text + "'");
    }
    return ref;
  }

  std::optional<AxiomRef> parse_ref_tail() {
    if (!at_ident("ref")) return std::nullopt;
    advance();
    return parse_ref_token();
  }

  void parse_meta_block(Entity& e) {
    advance();  // meta
    if (!expect(Tok::LBrace, "'{' opening the meta block")) {
      sync_block();
      return;
    }
    while (!at(Tok::RBrace) && !at(Tok::End)) {
      std::size_t before = pos_;
      parse_meta_item(e);
      if (pos_ == before) advance();
    }
    expect(Tok::RBrace, "'}' closing the meta block");
  }

  bool expect_status(const char* item, std::initializer_list<const char*> allowed,
                     std::string& out) {
    if (!expect(Tok::Colon, "':'")) return false;
    if (!at(Tok::Status)) {
      syntax_error(std::string("expected a status value for ") + item);
      return false;
    }
    for (const char* a : allowed) {
      if (current().text == a) {
        out = current().text;
        advance();
        return true;
      }
    }
    syntax_error("invalid status '" + current().text + "' for " + item);
    advance();
    return false;
  }

  void parse_meta_item(Entity& e) {
    if (!at(Tok::Ident)) {
      syntax_error("expected a meta item");
      sync_statement();
      return;
    }
    const std::string word = current().text;
    std::string status;
    if (word == "rigidity") {
      advance();
      if (expect_status("rigidity", {"+R", "-R", "~R"}, status)) {
        e.statuses.rigidity = status == "+R"  ? Rigidity::Rigid
                              : status == "-R" ? Rigidity::NonRigid
                                               : Rigidity::AntiRigid;
      }
    } else if (word == "identity") {
      advance();
      if (expect_status("identity", {"+I", "-I"}, status)) {
        e.statuses.identity = (status == "+I");
      }
    } else if (word == "supplies-identity") {
      advance();
      e.statuses.suppliesIdentity = true;
    } else if (word == "unity") {
      advance();
      if (expect_status("unity", {"+U", "-U", "~U"}, status)) {
        e.statuses.unity = status == "+U"  ? Unity::Unity
                           : status == "-U" ? Unity::NoUnity
                                            : Unity::AntiUnity;
      }
    } else if (word == "dependence") {
      advance();
      if (expect_status("dependence", {"+D", "-D"}, status)) {
        e.statuses.dependence = (status == "+D");
      }
    } else if (word == "defined") {
      advance();
      e.statuses.defined = true;
    } else if (word == "primitive") {
      advance();
      e.statuses.defined = false;
    } else if (word == "non-empty") {
      advance();
      e.statuses.nonEmpty = true;
    } else if (word == "strongly-non-empty") {
      advance();
      e.statuses.stronglyNonEmpty = true;
    } else if (word == "cumulative" || word == "anti-cumulative") {
      advance();
      e.statuses.cumulative = (word == "cumulative");
      e.statuses.cumulativeRef = parse_ref_tail();
    } else if (word == "homeomerous" || word == "anti-homeomerous") {
      advance();
      e.statuses.homeomerous = (word == "homeomerous");
      e.statuses.homeomerousRef = parse_ref_tail();
    } else if (word == "atomic-prop" || word == "anti-atomic-prop") {
      advance();
      e.statuses.atomic = (word == "atomic-prop");
      e.statuses.atomicRef = parse_ref_tail();
    } else if (word == "partition") {
      PartitionDecl part;
      part.span = current().span;
      advance();
      if (!expect(Tok::LParen, "'(' after 'partition'")) {
        sync_statement();
        return;
      }
      while (true) {
        if (!at(Tok::Ident)) {
          syntax_error("expected a partition member name");
          break;
        }
        part.members.push_back(current().text);
        advance();
        if (at(Tok::Comma)) {
          advance();
          continue;
        }
        break;
      }
      expect(Tok::RParen, "')' closing the partition member list");
      if (part.members.size() < 2) {
        diag(Severity::Error, "P02", part.span,
             "a partition needs at least two members");
      }
      part.ref = parse_ref_tail();
      e.partitions.push_back(std::move(part));
    } else if (word == "dep") {
      MetaLink link;
      link.span = current().span;
      advance();
      if (!at(Tok::Ident)) {
        syntax_error("expected a dependence kind after 'dep'");
        sync_statement();
        return;
      }
      auto kind = dep_kind_from(current().text);
      if (!kind) {
        syntax_error("unknown dependence kind '" + current().text + "'");
        sync_statement();
        return;
      }
      link.kind = *kind;
      advance();
      if (!expect(Tok::Arrow, "'->' after the dependence kind")) {
        sync_statement();
        return;
      }
      if (!at(Tok::Ident)) {
        syntax_error("expected a dependence target name");
        sync_statement();
        return;
      }
      link.target = current().text;
      advance();
      link.ref = parse_ref_tail();
      e.metaLinks.push_back(std::move(link));
    } else {
      syntax_error("unknown meta item '" + word + "'");
      sync_statement();
    }
  }

  void parse_props_block(Entity& e) {
    advance();  // props
    if (!expect(Tok::LBrace, "'{' opening the props block")) {
      sync_block();
      return;
    }
    while (!at(Tok::RBrace) && !at(Tok::End)) {
      std::size_t before = pos_;
      parse_prop(e);
      if (pos_ == before) advance();
    }
    expect(Tok::RBrace, "'}' closing the props block");
  }

  // '[' (refs ';')? ('EP'|'CP') '/' KINDLABEL ']'
  struct Label {
    std::vector<AxiomRef> refs;
    Modality modality = Modality::EP;
    ConditionKind kind = ConditionKind::NMC;
    bool ok = false;
  };

  Label parse_label() {
    Label label;
    SourceSpan open = current().span;
    if (!expect(Tok::LBracket, "'[' opening a condition label")) return label;

    bool modalityNext =
        at(Tok::Ident) && (current().text == "EP" || current().text == "CP") &&
        peek().type == Tok::Slash;
    if (!modalityNext) {
      while (true) {
        auto ref = parse_ref_token();
        if (ref) label.refs.push_back(*ref);
        if (at(Tok::Comma)) {
          advance();
          continue;
        }
        break;
      }
      if (!expect(Tok::Semi, "';' between axiom refs and the modality")) {
        skip_to_bracket_end();
        return label;
      }
    }

    if (at(Tok::Ident) && (current().text == "EP" || current().text == "CP")) {
      label.modality = current().text == "EP" ? Modality::EP : Modality::CP;
      advance();
    } else {
      syntax_error("expected 'EP' or 'CP'");
      skip_to_bracket_end();
      return label;
    }
    if (!expect(Tok::Slash, "'/' between the modality and the condition kind")) {
      skip_to_bracket_end();
      return label;
    }

    std::vector<std::string> atoms;
    std::vector<SourceSpan> atomSpans;
    while (at(Tok::Ident)) {
      atoms.push_back(current().text);
      atomSpans.push_back(current().span);
      advance();
      if (at(Tok::Amp)) {
        advance();
        continue;
      }
      break;
    }
    if (atoms.empty()) {
      syntax_error("expected a condition kind label");
      skip_to_bracket_end();
      return label;
    }
    if (!expect(Tok::RBracket, "']' closing the condition label")) {
      skip_to_bracket_end();
      return label;
    }

    auto joined = [&atoms]() {
      std::string s;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) s += " & ";
        s += atoms[i];
      }
      return s;
    };

    if (atoms.size() == 1) {
      const std::string& a = atoms.front();
      if (auto k = direct_kind(a)) {
        label.kind = *k;
        label.ok = true;
        return label;
      }
      if (a == "MIL") {
        diag(Severity::Warning, "P07", atomSpans.front(),
             "condition label 'MIL' read as IVL");
        label.kind = ConditionKind::IVL;
        label.ok = true;
        return label;
      }
      if (a == "NC") {
        diag(Severity::Warning, "P07", atomSpans.front(),
             "condition label 'NC' read as NMC");
        label.kind = ConditionKind::NMC;
        label.ok = true;
        return label;
      }
    }

    bool anyAlias = false;
    bool allSig = true;
    for (const auto& a : atoms) {
      switch (classify_sig_atom(a)) {
        case SigAtom::Canonical: break;
        case SigAtom::Alias: anyAlias = true; break;
        case SigAtom::No: allSig = false; break;
      }
    }
    if (allSig) {
      if (anyAlias) {
        diag(Severity::Warning, "P07", open,
             "condition label '" + joined() + "' read as SIG");
      }
      label.kind = ConditionKind::SIG;
      label.ok = true;
      return label;
    }

    diag(Severity::Error, "P03", open,
         "unknown condition kind '" + joined() + "'");
    return label;
  }

  void skip_to_bracket_end() {
    while (!at(Tok::End) && !at(Tok::RBracket) && !at(Tok::Semi) &&
           !at(Tok::RBrace)) {
      advance();
    }
    if (at(Tok::RBracket)) advance();
  }

  std::optional<ArgSpec> parse_arg_spec() {
    ArgSpec spec;
    if (at(Tok::Star)) {
      advance();
      spec.mode = ArgSpec::Mode::Unrestricted;
      return spec;
    }
    if (at_ident("text")) {
      advance();
      if (!at(Tok::String)) {
        syntax_error("expected a string after 'text'");
        return std::nullopt;
      }
      spec.mode = ArgSpec::Mode::Text;
      spec.text = current().text;
      advance();
      return spec;
    }
    if ((at_ident("any") || at_ident("all")) && peek().type == Tok::LParen) {
      const bool any = current().text == "any";
      spec.mode = any ? ArgSpec::Mode::AnyOf : ArgSpec::Mode::AllOf;
      advance();
      advance();  // '('
      while (true) {
        if (!at(Tok::Ident)) {
          syntax_error("expected a concept name in the argument spec");
          return std::nullopt;
        }
        spec.targets.push_back(current().text);
        advance();
        if (any && at(Tok::Pipe)) {
          advance();
          continue;
        }
        if (!any && at(Tok::Amp)) {
          advance();
          continue;
        }
        break;
      }
      if (!expect(Tok::RParen, "')' closing the argument spec")) return std::nullopt;
      return spec;
    }
    if (at(Tok::Ident)) {
      spec.mode = ArgSpec::Mode::One;
      spec.targets.push_back(current().text);
      advance();
      return spec;
    }
    syntax_error("expected an argument spec");
    return std::nullopt;
  }

  std::optional<ConditionPayload> parse_payload() {
    if (!at(Tok::Ident)) {
      syntax_error("expected a condition payload");
      return std::nullopt;
    }
    const std::string word = current().text;

    if (word == "isa") {
      advance();
      if (!at(Tok::Ident)) {
        syntax_error("expected a target after 'isa'");
        return std::nullopt;
      }
      std::string target = current().text;
      advance();
      if (at_ident("diff")) {
        advance();
        if (!at(Tok::String)) {
          syntax_error("expected the differentia string after 'diff'");
          return std::nullopt;
        }
        SldPayload p;
        p.target = std::move(target);
        p.differentia = current().text;
        advance();
        if (at_ident("as")) {
          advance();
          if (!at(Tok::Ident)) {
            syntax_error("expected a predicate name after 'as'");
            return std::nullopt;
          }
          p.diffPredicate = current().text;
          advance();
        }
        return ConditionPayload{std::move(p)};
      }
      SlPayload p;
      p.target = std::move(target);
      return ConditionPayload{std::move(p)};
    }

    if (word == "some" || word == "exactly-one") {
      advance();
      ErPayload p;
      p.quantity = word == "some" ? Quantity::Some : Quantity::ExactlyOne;
      if (!at(Tok::Ident)) {
        syntax_error("expected a relation name");
        return std::nullopt;
      }
      p.relation = current().text;
      advance();
      if (!expect(Tok::Arrow, "'->' after the relation")) return std::nullopt;
      if (!at(Tok::Ident)) {
        syntax_error("expected a target concept");
        return std::nullopt;
      }
      p.targets.push_back(current().text);
      advance();
      if (at(Tok::Comma)) {
        advance();
        if (!at(Tok::Ident)) {
          syntax_error("expected a second target concept");
          return std::nullopt;
        }
        p.targets.push_back(current().text);
        advance();
      }
      return ConditionPayload{std::move(p)};
    }

    if (word == "only") {
      advance();
      if (!at(Tok::Ident)) {
        syntax_error("expected a relation name");
        return std::nullopt;
      }
      std::string relation = current().text;
      advance();
      if (!expect(Tok::Arrow, "'->' after the relation")) return std::nullopt;
      if (at_ident("text")) {
        advance();
        if (!at(Tok::String)) {
          syntax_error("expected a string after 'text'");
          return std::nullopt;
        }
        EvrPayload p;
        p.relation = std::move(relation);
        p.targetText = current().text;
        advance();
        return ConditionPayload{std::move(p)};
      }
      if (!at(Tok::Ident)) {
        syntax_error("expected a target concept");
        return std::nullopt;
      }
      VrPayload p;
      p.relation = std::move(relation);
      p.target = current().text;
      advance();
      return ConditionPayload{std::move(p)};
    }

    if (word == "const") {
      advance();
      CrPayload p;
      if (!at(Tok::Ident)) {
        syntax_error("expected a relation name");
        return std::nullopt;
      }
      p.relation = current().text;
      advance();
      if (!expect(Tok::Arrow, "'->' after the relation")) return std::nullopt;
      if (!at(Tok::Ident)) {
        syntax_error("expected a constant name");
        return std::nullopt;
      }
      p.constant = current().text;
      advance();
      return ConditionPayload{std::move(p)};
    }

    if (word == "not" || word == "notrel") {
      advance();
      if (!at(Tok::Ident)) {
        syntax_error("expected a target name");
        return std::nullopt;
      }
      IclPayload p;
      p.target = current().text;
      advance();
      return ConditionPayload{std::move(p)};
    }

    if (word == "sig") {
      advance();
      if (!expect(Tok::LParen, "'(' after 'sig'")) return std::nullopt;
      SigPayload p;
      while (true) {
        auto spec = parse_arg_spec();
        if (!spec) return std::nullopt;
        p.args.push_back(std::move(*spec));
        if (at(Tok::Comma)) {
          advance();
          continue;
        }
        break;
      }
      if (!expect(Tok::RParen, "')' closing the signature")) return std::nullopt;
      return ConditionPayload{std::move(p)};
    }

    if (word == "inverse") {
      advance();
      if (!at(Tok::Ident)) {
        syntax_error("expected a relation name after 'inverse'");
        return std::nullopt;
      }
      IvlPayload p;
      p.target = current().text;
      advance();
      return ConditionPayload{std::move(p)};
    }

    if (word == "id" || word == "unity") {
      advance();
      CriterionPayload p;
      if (at_ident("text")) {
        advance();
        if (!at(Tok::String)) {
          syntax_error("expected a string after 'text'");
          return std::nullopt;
        }
        p.text = current().text;
        advance();
      } else if (at(Tok::Ident)) {
        p.relation = current().text;
        advance();
      } else {
        syntax_error("expected a relation name or 'text' criterion");
        return std::nullopt;
      }
      return ConditionPayload{std::move(p)};
    }

    if (word == "edc") {
      advance();
      if (!at(Tok::Ident)) {
        syntax_error("expected a target concept after 'edc'");
        return std::nullopt;
      }
      EdcPayload p;
      p.target = current().text;
      advance();
      return ConditionPayload{std::move(p)};
    }

    if (word == "text") {
      advance();
      if (!at(Tok::String)) {
        syntax_error("expected a string after 'text'");
        return std::nullopt;
      }
      TextPayload p;
      p.text = current().text;
      advance();
      if (at_ident("formula")) {
        advance();
        if (!at(Tok::String)) {
          syntax_error("expected a string after 'formula'");
          return std::nullopt;
        }
        p.formula = current().text;
        advance();
      }
      return ConditionPayload{std::move(p)};
    }

    syntax_error("unknown payload form '" + word + "'");
    return std::nullopt;
  }

  void parse_prop(Entity& e) {
    if (!at(Tok::LBracket)) {
      syntax_error("expected '[' starting a condition");
      sync_statement();
      return;
    }
    Condition c;
    c.span = current().span;
    Label label = parse_label();
    if (!label.ok) {
      sync_statement();
      return;
    }
    c.modality = label.modality;
    c.kind = label.kind;
    c.refs = std::move(label.refs);

    SourceSpan payloadSpan = current().span;
    auto payload = parse_payload();
    if (!payload) {
      sync_statement();
      return;
    }
    c.payload = std::move(*payload);

    if (at_ident("gloss")) {
      advance();
      if (!at(Tok::String)) {
        syntax_error("expected a string after 'gloss'");
        sync_statement();
        return;
      }
      c.gloss = current().text;
      advance();
    }
    if (!expect(Tok::Semi, "';' ending the condition")) {
      sync_statement();
      return;
    }

    if (!payload_matches_kind(c.kind, c.payload)) {
      diag(Severity::Error, "P02", payloadSpan,
           std::string("payload form does not match condition kind ") +
               to_string(c.kind));
      return;
    }
    e.conditions.push_back(std::move(c));
  }

  void parse_comment_block(Entity& e) {
    advance();  // comment
    if (!expect(Tok::LBrace, "'{' opening the comment block")) {
      sync_block();
      return;
    }
    while (!at(Tok::RBrace) && !at(Tok::End)) {
      std::size_t before = pos_;
      parse_comment_item(e);
      if (pos_ == before) advance();
    }
    expect(Tok::RBrace, "'}' closing the comment block");
  }

  void parse_comment_item(Entity& e) {
    if (!at(Tok::Ident)) {
      syntax_error("expected a comment tag");
      sync_statement();
      return;
    }
    static const std::map<std::string, CommentTag> tags = {
        {"SA", CommentTag::SA},   {"EX", CommentTag::EX},
        {"CEX", CommentTag::CEX}, {"CIT", CommentTag::CIT},
        {"DIV", CommentTag::DIV}, {"DEF", CommentTag::DEF},
    };
    auto it = tags.find(current().text);
    if (it == tags.end()) {
      diag(Severity::Error, "P04", current().span,
           "unknown comment tag '" + current().text + "'");
      advance();
      sync_statement();
      return;
    }
    CommentItem item;
    item.tag = it->second;
    item.span = current().span;
    advance();
    if (item.tag == CommentTag::CIT) {
      if (!at(Tok::String)) {
        syntax_error("expected the cited source string");
        sync_statement();
        return;
      }
      item.source = current().text;
      advance();
    }
    if (!at(Tok::String)) {
      syntax_error("expected the comment text string");
      sync_statement();
      return;
    }
    item.text = current().text;
    advance();
    if (!expect(Tok::Semi, "';' ending the comment item")) {
      sync_statement();
      return;
    }
    e.comments.push_back(std::move(item));
  }

  std::vector<Token> tokens_;
  std::string file_;
  std::vector<Diagnostic> diags_;
  std::size_t pos_ = 0;
  std::string currentEntity_;
  std::map<std::string, SourceSpan> seenNames_;
};

}  // namespace

ParseResult parse_document(const std::string& source, const std::string& file) {
  std::vector<Diagnostic> lexDiags;
  auto tokens = detail::lex(source, file, lexDiags);
  return Parser(std::move(tokens), file).run(std::move(lexDiags));
}

ParseResult merge_documents(std::vector<ParseResult> parts) {
  ParseResult merged;
  Ontology o;
  bool usable = !parts.empty();
  std::map<std::string, std::string> seen;  // lowercased name -> file

  for (auto& part : parts) {
    for (auto& d : part.diagnostics) merged.diagnostics.push_back(std::move(d));
    if (!part.ontology) {
      usable = false;
      continue;
    }
    if (o.title.empty()) o.title = part.ontology->title;
    for (auto& e : part.ontology->entities) {
      auto check = [&](const std::string& name) {
        auto [it, fresh] = seen.emplace(lower(name), e.span.file);
        if (!fresh) {
          Diagnostic d;
          d.severity = Severity::Error;
          d.code = "P06";
          d.entity = e.name.canonical;
          d.span = e.span;
          d.message = "duplicate name '" + name + "' across documents (also in " +
                      it->second + ")";
          merged.diagnostics.push_back(d);
        }
      };
      check(e.name.canonical);
      if (e.name.alias) check(*e.name.alias);
      o.entities.push_back(std::move(e));
    }
  }

  if (usable && !has_errors(merged.diagnostics)) {
    o.rebuild_index();
    merged.ontology = std::move(o);
  }
  return merged;
}

}  // namespace ontospec
