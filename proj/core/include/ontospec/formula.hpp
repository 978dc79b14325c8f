#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace ontospec {

struct Term {
  enum class Kind { Var, Const };
  Kind kind = Kind::Var;
  std::string name;

  static Term var(std::string n) { return {Kind::Var, std::move(n)}; }
  static Term constant(std::string n) { return {Kind::Const, std::move(n)}; }

  friend bool operator==(const Term&, const Term&) = default;
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable first-order formula with a boxed necessity operator.
class Formula {
 public:
  enum class Kind { Pred, Eq, Not, And, Or, Imp, Iff, Forall, Exists, Box };

  Kind kind = Kind::Pred;
  std::string pred;                // Pred
  std::vector<Term> terms;         // Pred arguments / Eq's two terms
  std::vector<FormulaPtr> kids;    // connective operands
  std::vector<std::string> vars;   // Forall/Exists binder list

  static FormulaPtr mk_pred(std::string name, std::vector<Term> args);
  static FormulaPtr mk_eq(Term a, Term b);
  static FormulaPtr mk_not(FormulaPtr f);
  static FormulaPtr mk_and(std::vector<FormulaPtr> fs);  // needs 2+
  static FormulaPtr mk_or(std::vector<FormulaPtr> fs);   // needs 2+
  static FormulaPtr mk_imp(FormulaPtr a, FormulaPtr b);
  static FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b);
  static FormulaPtr mk_forall(std::vector<std::string> vars, FormulaPtr body);
  static FormulaPtr mk_exists(std::vector<std::string> vars, FormulaPtr body);
  static FormulaPtr mk_box(FormulaPtr f);
};

// And/Or of one formula is that formula; of two or more, the connective.
FormulaPtr conjoin(std::vector<FormulaPtr> fs);
FormulaPtr disjoin(std::vector<FormulaPtr> fs);

bool equal(const FormulaPtr& a, const FormulaPtr& b);

// Canonical single-line s-expression, e.g.
// (forall (x) (imp (pred pd x) (pred pt x))).
std::string emit_osf(const FormulaPtr& f);

std::set<std::string> free_variables(const FormulaPtr& f);

struct OsfParseResult {
  FormulaPtr formula;  // null on failure
  std::string error;
};

// Parses the OSF grammar; rejects unscoped variables and short And/Or lists.
OsfParseResult parse_osf(const std::string& text);

}  // namespace ontospec
