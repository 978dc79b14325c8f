#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ontospec/diagnostics.hpp"

namespace ontospec {

struct EntityName {
  std::string canonical;
  std::optional<std::string> alias;
  friend bool operator==(const EntityName&, const EntityName&) = default;
};

enum class EntityKind { Concept, Relation, MetaConcept, MetaRelation };

enum class Modality { EP, CP };

enum class ConditionKind {
  NMC,
  SL,
  ER,
  VR,
  EVR,
  CR,
  ICL,
  SMC,
  NSMC,
  SLD,
  NSIC,
  NIC,
  SIC,
  UC,
  EDC,
  SIG,
  IL,
  IVL,
};

const char* to_string(EntityKind k);
const char* to_string(Modality m);
const char* to_string(ConditionKind k);

enum class Quantity { Some, ExactlyOne };

// Axiom reference such as Ad2a', Dd13, Td15b'. Serializes as
// family + 'd' + number + letters + primes.
struct AxiomRef {
  char family = 'A';  // 'A' | 'D' | 'T'
  int number = 0;
  std::string letters;  // zero or more lowercase letters
  int primes = 0;

  std::string str() const;
  friend bool operator==(const AxiomRef&, const AxiomRef&) = default;
};

// Parses "Ad2a" (primes counted separately by the lexer) or a full
// "Ad2a'" form; absent on lexical mismatch.
std::optional<AxiomRef> parse_axiom_ref(const std::string& text);

// Per-argument restriction of a relation signature.
struct ArgSpec {
  enum class Mode { Unrestricted, One, AnyOf, AllOf, Text };
  Mode mode = Mode::Unrestricted;
  std::vector<std::string> targets;  // One: exactly one; AnyOf/AllOf: 1+
  std::string text;                  // Text mode only

  friend bool operator==(const ArgSpec&, const ArgSpec&) = default;
};

struct SlPayload {
  std::string target;
  friend bool operator==(const SlPayload&, const SlPayload&) = default;
};

struct SldPayload {
  std::string target;
  std::string differentia;                  // natural-language delta
  std::optional<std::string> diffPredicate; // explicit predicate symbol
  friend bool operator==(const SldPayload&, const SldPayload&) = default;
};

struct ErPayload {
  std::string relation;
  std::vector<std::string> targets;  // 1 (binary rel) or 2 (ternary rel)
  Quantity quantity = Quantity::Some;
  friend bool operator==(const ErPayload&, const ErPayload&) = default;
};

struct VrPayload {
  std::string relation;
  std::string target;
  friend bool operator==(const VrPayload&, const VrPayload&) = default;
};

struct EvrPayload {
  std::string relation;
  std::string targetText;  // arbitrary concept description
  friend bool operator==(const EvrPayload&, const EvrPayload&) = default;
};

struct CrPayload {
  std::string relation;
  std::string constant;
  friend bool operator==(const CrPayload&, const CrPayload&) = default;
};

// ICL (concepts) and IL (relations).
struct IclPayload {
  std::string target;
  friend bool operator==(const IclPayload&, const IclPayload&) = default;
};

struct SigPayload {
  std::vector<ArgSpec> args;
  friend bool operator==(const SigPayload&, const SigPayload&) = default;
};

struct IvlPayload {
  std::string target;
  friend bool operator==(const IvlPayload&, const IvlPayload&) = default;
};

// NSIC/NIC/SIC/UC: criterion is a named binary relation or free text.
struct CriterionPayload {
  std::optional<std::string> relation;
  std::string text;
  friend bool operator==(const CriterionPayload&, const CriterionPayload&) = default;
};

struct EdcPayload {
  std::string target;
  friend bool operator==(const EdcPayload&, const EdcPayload&) = default;
};

// Free-text NMC/SMC/NSMC with an optional hand-translated inline formula.
struct TextPayload {
  std::string text;
  std::optional<std::string> formula;
  friend bool operator==(const TextPayload&, const TextPayload&) = default;
};

using ConditionPayload =
    std::variant<SlPayload, SldPayload, ErPayload, VrPayload, EvrPayload,
                 CrPayload, IclPayload, SigPayload, IvlPayload,
                 CriterionPayload, EdcPayload, TextPayload>;

struct Condition {
  Modality modality = Modality::EP;
  ConditionKind kind = ConditionKind::NMC;
  std::vector<AxiomRef> refs;
  ConditionPayload payload;
  std::optional<std::string> gloss;
  SourceSpan span;

  // Structural equality; spans are presentation data and excluded.
  bool operator==(const Condition& other) const;
};

// True when the payload alternative matches what the kind requires.
bool payload_matches_kind(ConditionKind kind, const ConditionPayload& p);

enum class Rigidity { Rigid, NonRigid, AntiRigid };  // +R / -R / ~R
enum class Unity { Unity, NoUnity, AntiUnity };      // +U / -U / ~U

struct MetaStatuses {
  std::optional<Rigidity> rigidity;
  std::optional<bool> identity;  // +I / -I
  bool suppliesIdentity = false; // +O
  std::optional<Unity> unity;
  std::optional<bool> dependence;  // +D / -D
  std::optional<bool> defined;     // defined / primitive
  bool nonEmpty = false;
  bool stronglyNonEmpty = false;
  std::optional<bool> cumulative;  // cumulative / anti-cumulative
  std::optional<AxiomRef> cumulativeRef;
  std::optional<bool> homeomerous;
  std::optional<AxiomRef> homeomerousRef;
  std::optional<bool> atomic;  // atomic-prop / anti-atomic-prop
  std::optional<AxiomRef> atomicRef;

  friend bool operator==(const MetaStatuses&, const MetaStatuses&) = default;
};

// Dependence / constitution link vocabulary (closed).
enum class DepKind {
  SD, OSD, MSD, GD, OGD, MGD, D, OD,
  SD_s, OSD_s, MSD_s, GD_s, OGD_s, MGD_s, PGD_s, P1GD_s,
  SK, OSK, MSK, GK, OGK, MGK, K,
};

const char* to_string(DepKind k);
std::optional<DepKind> dep_kind_from(const std::string& text);  // case-insensitive

struct MetaLink {
  DepKind kind = DepKind::D;
  std::string target;
  std::optional<AxiomRef> ref;
  SourceSpan span;

  bool operator==(const MetaLink& other) const;
};

struct PartitionDecl {
  std::vector<std::string> members;  // 2+ names
  std::optional<AxiomRef> ref;
  SourceSpan span;

  bool operator==(const PartitionDecl& other) const;
};

enum class CommentTag { SA, EX, CEX, CIT, DIV, DEF };

const char* to_string(CommentTag t);

struct CommentItem {
  CommentTag tag = CommentTag::SA;
  std::string source;  // CIT only: the cited work
  std::string text;
  SourceSpan span;

  bool operator==(const CommentItem& other) const;
};

struct Entity {
  EntityKind kind = EntityKind::Concept;
  int arity = 0;  // Relation only, >= 2
  EntityName name;
  MetaStatuses statuses;
  std::vector<PartitionDecl> partitions;
  std::vector<MetaLink> metaLinks;
  std::vector<Condition> conditions;
  std::vector<CommentItem> comments;
  SourceSpan span;

  // Concepts and meta-concepts are unary predicates; meta-relations are
  // property-level binary statements; relations use their declared arity.
  int effective_arity() const;

  bool operator==(const Entity& other) const;
};

struct Ontology {
  std::string title;
  std::vector<Entity> entities;
  bool resolved = false;

  // Lowercased canonical name or alias -> index into entities.
  std::map<std::string, std::size_t> index;

  void rebuild_index();

  bool operator==(const Ontology& other) const;
};

// Case-insensitive lookup over canonical names and aliases.
const Entity* lookup(const Ontology& o, const std::string& name);
std::optional<std::size_t> lookup_index(const Ontology& o, const std::string& name);

// Lowercases and collapses internal whitespace runs to single spaces.
std::string normalize_text(const std::string& s);

std::string lower(const std::string& s);

// Deterministic identity of a condition for inheritance bookkeeping:
// a pure function of (kind, payload); names lowercased, AnyOf/AllOf target
// lists sorted, free text whitespace-normalized; modality and refs excluded.
std::string condition_key(const Condition& c);

}  // namespace ontospec
