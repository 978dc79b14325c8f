#include "ontospec/formula.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace ontospec {

namespace {

std::shared_ptr<Formula> make(Formula::Kind kind) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  return f;
}

FormulaPtr with_kids(Formula::Kind kind, std::vector<FormulaPtr> kids) {
  auto f = make(kind);
  f->kids = std::move(kids);
  return f;
}

}  // namespace

FormulaPtr Formula::mk_pred(std::string name, std::vector<Term> args) {
  auto f = make(Kind::Pred);
  f->pred = std::move(name);
  f->terms = std::move(args);
  return f;
}

FormulaPtr Formula::mk_eq(Term a, Term b) {
  auto f = make(Kind::Eq);
  f->terms = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr Formula::mk_not(FormulaPtr f) {
  return with_kids(Kind::Not, {std::move(f)});
}

FormulaPtr Formula::mk_and(std::vector<FormulaPtr> kids) {
  return with_kids(Kind::And, std::move(kids));
}

FormulaPtr Formula::mk_or(std::vector<FormulaPtr> kids) {
  return with_kids(Kind::Or, std::move(kids));
}

FormulaPtr Formula::mk_imp(FormulaPtr a, FormulaPtr b) {
  return with_kids(Kind::Imp, {std::move(a), std::move(b)});
}

FormulaPtr Formula::mk_iff(FormulaPtr a, FormulaPtr b) {
  return with_kids(Kind::Iff, {std::move(a), std::move(b)});
}

FormulaPtr Formula::mk_forall(std::vector<std::string> vars, FormulaPtr body) {
  auto f = make(Kind::Forall);
  f->vars = std::move(vars);
  f->kids = {std::move(body)};
  return f;
}

FormulaPtr Formula::mk_exists(std::vector<std::string> vars, FormulaPtr body) {
  auto f = make(Kind::Exists);
  f->vars = std::move(vars);
  f->kids = {std::move(body)};
  return f;
}

FormulaPtr Formula::mk_box(FormulaPtr f) {
  return with_kids(Kind::Box, {std::move(f)});
}

FormulaPtr conjoin(std::vector<FormulaPtr> parts) {
  if (parts.size() == 1) return parts.front();
  return Formula::mk_and(std::move(parts));
}

FormulaPtr disjoin(std::vector<FormulaPtr> parts) {
  if (parts.size() == 1) return parts.front();
  return Formula::mk_or(std::move(parts));
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->pred != b->pred || a->vars != b->vars) {
    return false;
  }
  if (a->terms.size() != b->terms.size()) return false;
  for (std::size_t i = 0; i < a->terms.size(); ++i) {
    if (!(a->terms[i] == b->terms[i])) return false;
  }
  if (a->kids.size() != b->kids.size()) return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i) {
    if (!equal(a->kids[i], b->kids[i])) return false;
  }
  return true;
}

namespace {

void emit(const FormulaPtr& f, std::ostringstream& out) {
  out << "(";
  switch (f->kind) {
    case Formula::Kind::Pred: {
      out << "pred " << f->pred;
      for (const Term& t : f->terms) {
        out << " ";
        if (t.kind == Term::Kind::Const) out << "'";
        out << t.name;
      }
      break;
    }
    case Formula::Kind::Eq: {
      out << "eq";
      for (const Term& t : f->terms) {
        out << " ";
        if (t.kind == Term::Kind::Const) out << "'";
        out << t.name;
      }
      break;
    }
    case Formula::Kind::Not:
      out << "not ";
      emit(f->kids[0], out);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      out << (f->kind == Formula::Kind::And ? "and" : "or");
      for (const auto& k : f->kids) {
        out << " ";
        emit(k, out);
      }
      break;
    case Formula::Kind::Imp:
    case Formula::Kind::Iff:
      out << (f->kind == Formula::Kind::Imp ? "imp " : "iff ");
      emit(f->kids[0], out);
      out << " ";
      emit(f->kids[1], out);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      out << (f->kind == Formula::Kind::Forall ? "forall (" : "exists (");
      for (std::size_t i = 0; i < f->vars.size(); ++i) {
        if (i) out << " ";
        out << f->vars[i];
      }
      out << ") ";
      emit(f->kids[0], out);
      break;
    }
    case Formula::Kind::Box:
      out << "box ";
      emit(f->kids[0], out);
      break;
  }
  out << ")";
}

void collect_free(const FormulaPtr& f, std::set<std::string>& bound,
                  std::set<std::string>& free) {
  switch (f->kind) {
    case Formula::Kind::Pred:
    case Formula::Kind::Eq:
      for (const Term& t : f->terms) {
        if (t.kind == Term::Kind::Var && !bound.count(t.name)) {
          free.insert(t.name);
        }
      }
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      std::vector<std::string> fresh;
      for (const auto& v : f->vars) {
        if (bound.insert(v).second) fresh.push_back(v);
      }
      collect_free(f->kids[0], bound, free);
      for (const auto& v : fresh) bound.erase(v);
      break;
    }
    default:
      for (const auto& k : f->kids) collect_free(k, bound, free);
  }
}

class OsfParser {
 public:
  explicit OsfParser(const std::string& text) : text_(text) {}

  OsfParseResult run() {
    OsfParseResult result;
    auto f = parse_formula();
    if (!error_.empty()) {
      result.error = error_;
      return result;
    }
    skip_ws();
    if (pos_ != text_.size()) {
      result.error = "trailing input after the formula";
      return result;
    }
    result.formula = f;
    return result;
  }

 private:
  void fail(std::string message) {
    if (error_.empty()) error_ = std::move(message);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string atom() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' ||
          c == '\'') {
        break;
      }
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  std::optional<Term> parse_term() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '\'') {
      ++pos_;
      std::string name = atom();
      if (name.empty()) {
        fail("expected a constant name after '");
        return std::nullopt;
      }
      return Term::constant(name);
    }
    std::string name = atom();
    if (name.empty()) return std::nullopt;
    if (!bound_.count(name)) {
      fail("unbound variable '" + name + "'");
      return std::nullopt;
    }
    return Term::var(name);
  }

  FormulaPtr parse_formula() {
    if (!eat('(')) {
      fail("expected '('");
      return nullptr;
    }
    std::string op = atom();
    FormulaPtr result;

    if (op == "forall" || op == "exists") {
      if (!eat('(')) {
        fail("expected a variable list after '" + op + "'");
        return nullptr;
      }
      std::vector<std::string> vars;
      std::vector<std::string> fresh;
      while (true) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ')') break;
        std::string v = atom();
        if (v.empty()) break;
        vars.push_back(v);
        if (bound_.insert(v).second) fresh.push_back(v);
      }
      if (!eat(')')) {
        fail("expected ')' closing the variable list");
        return nullptr;
      }
      if (vars.empty()) {
        fail("empty variable list");
        return nullptr;
      }
      FormulaPtr body = parse_formula();
      for (const auto& v : fresh) bound_.erase(v);
      if (!body) return nullptr;
      result = op == "forall" ? Formula::mk_forall(vars, body)
                              : Formula::mk_exists(vars, body);
    } else if (op == "and" || op == "or") {
      std::vector<FormulaPtr> kids;
      while (true) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] == ')') break;
        FormulaPtr k = parse_formula();
        if (!k) return nullptr;
        kids.push_back(k);
      }
      if (kids.size() < 2) {
        fail("'" + op + "' needs at least two operands");
        return nullptr;
      }
      result = op == "and" ? Formula::mk_and(std::move(kids))
                           : Formula::mk_or(std::move(kids));
    } else if (op == "not" || op == "box") {
      FormulaPtr k = parse_formula();
      if (!k) return nullptr;
      result = op == "not" ? Formula::mk_not(k) : Formula::mk_box(k);
    } else if (op == "imp" || op == "iff") {
      FormulaPtr a = parse_formula();
      if (!a) return nullptr;
      FormulaPtr b = parse_formula();
      if (!b) return nullptr;
      result = op == "imp" ? Formula::mk_imp(a, b) : Formula::mk_iff(a, b);
    } else if (op == "pred") {
      std::string name = atom();
      if (name.empty()) {
        fail("expected a predicate name");
        return nullptr;
      }
      std::vector<Term> terms;
      while (true) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] == ')') break;
        auto t = parse_term();
        if (!t) return nullptr;
        terms.push_back(*t);
      }
      if (terms.empty()) {
        fail("predicate '" + name + "' needs at least one argument");
        return nullptr;
      }
      result = Formula::mk_pred(name, std::move(terms));
    } else if (op == "eq") {
      auto a = parse_term();
      if (!a) return nullptr;
      auto b = parse_term();
      if (!b) return nullptr;
      result = Formula::mk_eq(*a, *b);
    } else {
      fail("unknown operator '" + op + "'");
      return nullptr;
    }

    if (!eat(')')) {
      fail("expected ')'");
      return nullptr;
    }
    return result;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::set<std::string> bound_;
  std::string error_;
};

}  // namespace

std::string emit_osf(const FormulaPtr& f) {
  std::ostringstream out;
  emit(f, out);
  return out.str();
}

std::set<std::string> free_variables(const FormulaPtr& f) {
  std::set<std::string> bound;
  std::set<std::string> free;
  collect_free(f, bound, free);
  return free;
}

OsfParseResult parse_osf(const std::string& text) {
  return OsfParser(text).run();
}

}  // namespace ontospec
