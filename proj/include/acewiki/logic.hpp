#pragma once

#include <string>
#include <utility>
#include <vector>

#include "acewiki/ast.hpp"
#include "acewiki/pattern.hpp"

namespace acewiki {

// ---------------------------------------------------------------------------
// Discourse representation structures

struct Term {
  enum class Kind { Constant, Variable };
  Kind kind = Kind::Variable;
  std::string name;  // proper name surface, or referent name "x1", "x2", ...

  static Term constant(std::string name) { return {Kind::Constant, std::move(name)}; }
  static Term variable(std::string name) { return {Kind::Variable, std::move(name)}; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

struct Condition;

struct Drs {
  std::vector<std::string> referents;
  std::vector<Condition> conditions;

  friend bool operator==(const Drs&, const Drs&) = default;
};

struct Condition {
  enum class Kind { Concept, Role, Negation, Implication, Disjunction };
  Kind kind = Kind::Concept;
  std::string predicate;       // concept or role name
  std::vector<Term> args;      // 1 for concepts, 2 for roles
  std::vector<Drs> boxes;      // 1 for negation, 2 for implication/disjunction

  static Condition concept_atom(std::string name, Term t);
  static Condition role(std::string name, Term subject, Term object);
  static Condition negation(Drs d);
  static Condition implication(Drs antecedent, Drs consequent);
  static Condition disjunction(Drs left, Drs right);

  friend bool operator==(const Condition&, const Condition&) = default;
};

Drs ast_to_drs(const SentenceAst& ast);

// Compact rendering, e.g. "[x1]{city(x1), landscape-element(x1)}".
std::string to_string(const Drs& drs);

// Consistent renaming of referents (used to check that classification does
// not depend on referent names).
Drs rename_referents(const Drs& drs, const std::vector<std::pair<std::string, std::string>>& mapping);

// ---------------------------------------------------------------------------
// Axioms

struct ClassExpr {
  enum class Kind { Named, Not, And, Or, Some, SomeValue, Thing };
  Kind kind = Kind::Thing;
  std::string name;                // Named: concept; Some/SomeValue: role
  std::string individual;          // SomeValue only
  std::vector<ClassExpr> operands;  // Not: 1; And/Or: 2; Some: 1

  static ClassExpr named(std::string name);
  static ClassExpr thing();
  static ClassExpr negation(ClassExpr e);
  static ClassExpr conjunction(ClassExpr a, ClassExpr b);
  static ClassExpr disjunction(ClassExpr a, ClassExpr b);
  static ClassExpr some(std::string role, ClassExpr filler);
  static ClassExpr some_value(std::string role, std::string individual);

  friend bool operator==(const ClassExpr&, const ClassExpr&) = default;
};

std::string to_string(const ClassExpr& e);

enum class AxiomKind {
  SubClassOf,
  DisjointClasses,
  ClassAssertion,
  NegativeClassAssertion,
  RoleAssertion,
  NegativeRoleAssertion,
  SubRoleOf,
  RoleDomain,
  RoleRange,
  AnonymousAssertion,
  NotOwl,
};

std::string_view to_string(AxiomKind kind);

// `classes` and `names` hold the arguments in the order of the functional
// notation:
//   SubClassOf(ce, ce)            classes = {sub, super}
//   DisjointClasses(c, c)         classes = {a, b}
//   ClassAssertion(ce, ind)       classes = {ce}, names = {ind}
//   NegativeClassAssertion(c, i)  classes = {c},  names = {ind}
//   RoleAssertion(r, a, b)        names = {r, a, b} (same for negative)
//   SubRoleOf(r, s)               names = {r, s}
//   RoleDomain/RoleRange(r, c)    classes = {c}, names = {r}
//   AnonymousAssertion(ce)        classes = {ce}
//   NotOwl                        drs = the untranslatable structure
struct Axiom {
  AxiomKind kind = AxiomKind::NotOwl;
  std::vector<ClassExpr> classes;
  std::vector<std::string> names;
  Drs drs;

  bool owl_compatible() const { return kind != AxiomKind::NotOwl; }

  friend bool operator==(const Axiom&, const Axiom&) = default;
};

// Functional notation, e.g. "SubClassOf(canal, waterbody)" or "NotOwl".
std::string to_string(const Axiom& axiom);

// Rule order (first match wins):
//   1. single ground atom                      -> ClassAssertion / RoleAssertion
//   2. negated single ground atom              -> NegativeClassAssertion / NegativeRoleAssertion
//   3. conditions about one individual         -> ClassAssertion(ce, ind)
//   4. implication over one role atom R(x,y)   -> SubRoleOf / RoleDomain / RoleRange
//   5. implication, tree-shaped on both sides  -> DisjointClasses / SubClassOf
//   6. existential, tree-shaped                -> AnonymousAssertion
//   7. anything else                           -> NotOwl
Axiom classify(const Drs& drs);

// Structural check that the axiom fits the class-expression grammar.
bool well_formed(const Axiom& axiom);

// ---------------------------------------------------------------------------
// Sentence patterns and statistics markers

SentencePattern pattern_of(const SentenceAst& ast);

struct NegImpl {
  bool has_negation = false;
  bool has_implication = false;
};

NegImpl contains_neg_or_impl(const SentenceAst& ast);

}  // namespace acewiki
