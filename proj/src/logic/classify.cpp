#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "acewiki/logic.hpp"

namespace acewiki {

ClassExpr ClassExpr::named(std::string name) { return {Kind::Named, std::move(name), {}, {}}; }
ClassExpr ClassExpr::thing() { return {Kind::Thing, {}, {}, {}}; }
ClassExpr ClassExpr::negation(ClassExpr e) { return {Kind::Not, {}, {}, {std::move(e)}}; }
ClassExpr ClassExpr::conjunction(ClassExpr a, ClassExpr b) {
  return {Kind::And, {}, {}, {std::move(a), std::move(b)}};
}
ClassExpr ClassExpr::disjunction(ClassExpr a, ClassExpr b) {
  return {Kind::Or, {}, {}, {std::move(a), std::move(b)}};
}
ClassExpr ClassExpr::some(std::string role, ClassExpr filler) {
  return {Kind::Some, std::move(role), {}, {std::move(filler)}};
}
ClassExpr ClassExpr::some_value(std::string role, std::string individual) {
  return {Kind::SomeValue, std::move(role), std::move(individual), {}};
}

std::string to_string(const ClassExpr& e) {
  switch (e.kind) {
    case ClassExpr::Kind::Named: return e.name;
    case ClassExpr::Kind::Thing: return "Thing";
    case ClassExpr::Kind::Not: return "not(" + to_string(e.operands[0]) + ")";
    case ClassExpr::Kind::And:
      return "and(" + to_string(e.operands[0]) + ", " + to_string(e.operands[1]) + ")";
    case ClassExpr::Kind::Or:
      return "or(" + to_string(e.operands[0]) + ", " + to_string(e.operands[1]) + ")";
    case ClassExpr::Kind::Some: return "some(" + e.name + ", " + to_string(e.operands[0]) + ")";
    case ClassExpr::Kind::SomeValue: return "someValue(" + e.name + ", " + e.individual + ")";
  }
  return {};
}

std::string_view to_string(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::SubClassOf: return "SubClassOf";
    case AxiomKind::DisjointClasses: return "DisjointClasses";
    case AxiomKind::ClassAssertion: return "ClassAssertion";
    case AxiomKind::NegativeClassAssertion: return "NegativeClassAssertion";
    case AxiomKind::RoleAssertion: return "RoleAssertion";
    case AxiomKind::NegativeRoleAssertion: return "NegativeRoleAssertion";
    case AxiomKind::SubRoleOf: return "SubRoleOf";
    case AxiomKind::RoleDomain: return "RoleDomain";
    case AxiomKind::RoleRange: return "RoleRange";
    case AxiomKind::AnonymousAssertion: return "AnonymousAssertion";
    case AxiomKind::NotOwl: return "NotOwl";
  }
  return "NotOwl";
}

std::string to_string(const Axiom& a) {
  std::string out(to_string(a.kind));
  if (a.kind == AxiomKind::NotOwl) return out;
  std::vector<std::string> args;
  switch (a.kind) {
    case AxiomKind::SubClassOf:
    case AxiomKind::DisjointClasses:
      args = {to_string(a.classes[0]), to_string(a.classes[1])};
      break;
    case AxiomKind::ClassAssertion:
    case AxiomKind::NegativeClassAssertion:
      args = {to_string(a.classes[0]), a.names[0]};
      break;
    case AxiomKind::RoleAssertion:
    case AxiomKind::NegativeRoleAssertion:
    case AxiomKind::SubRoleOf:
      args = a.names;
      break;
    case AxiomKind::RoleDomain:
    case AxiomKind::RoleRange:
      args = {a.names[0], to_string(a.classes[0])};
      break;
    case AxiomKind::AnonymousAssertion: args = {to_string(a.classes[0])}; break;
    case AxiomKind::NotOwl: break;
  }
  out += "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += args[i];
  }
  return out + ")";
}

namespace {

bool is_atom(const Condition& c) {
  return c.kind == Condition::Kind::Concept || c.kind == Condition::Kind::Role;
}

bool ground(const Condition& c) {
  return is_atom(c) && std::all_of(c.args.begin(), c.args.end(),
                                   [](const Term& t) { return t.kind == Term::Kind::Constant; });
}

// Terms occurring in `d` that are not bound by a referent inside it.
void free_terms(const Drs& d, std::set<std::string> bound, std::set<Term>& out) {
  bound.insert(d.referents.begin(), d.referents.end());
  for (const auto& c : d.conditions) {
    for (const auto& t : c.args) {
      if (t.kind == Term::Kind::Constant || !bound.count(t.name)) out.insert(t);
    }
    if (c.kind == Condition::Kind::Implication) {
      // referents of the antecedent are visible in the consequent
      std::set<std::string> inner = bound;
      inner.insert(c.boxes[0].referents.begin(), c.boxes[0].referents.end());
      free_terms(c.boxes[0], bound, out);
      free_terms(c.boxes[1], inner, out);
    } else {
      for (const auto& b : c.boxes) free_terms(b, bound, out);
    }
  }
}

std::set<Term> free_terms(const Drs& d) {
  std::set<Term> out;
  free_terms(d, {}, out);
  return out;
}

ClassExpr fold_and(std::vector<ClassExpr> parts) {
  if (parts.empty()) return ClassExpr::thing();
  ClassExpr acc = std::move(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) acc = ClassExpr::conjunction(std::move(acc), std::move(parts[i]));
  return acc;
}

std::optional<ClassExpr> roll(const Drs& box, const Term& focus);

// Builds the class expression describing `focus`, where the tree nodes are
// `focus` plus the referents of `box`.
std::optional<ClassExpr> roll(const Drs& box, const Term& focus) {
  std::set<Term> nodes{focus};
  for (const auto& r : box.referents) nodes.insert(Term::variable(r));

  struct Part {
    Term node;
    std::optional<ClassExpr> expr;  // empty for an edge to a child
    Term child;
    std::string role;
  };
  std::vector<Part> parts;
  std::map<Term, Term> parent;

  auto attach_sub = [&](const Drs& d) -> std::optional<Term> {
    std::set<Term> f = free_terms(d);
    std::optional<Term> found;
    for (const auto& t : f) {
      if (nodes.count(t)) {
        if (found) return std::nullopt;
        found = t;
      } else if (t.kind == Term::Kind::Variable) {
        return std::nullopt;
      }
    }
    return found;
  };

  for (const auto& c : box.conditions) {
    switch (c.kind) {
      case Condition::Kind::Concept:
        if (!nodes.count(c.args[0])) return std::nullopt;
        parts.push_back({c.args[0], ClassExpr::named(c.predicate), {}, {}});
        break;
      case Condition::Kind::Role: {
        const Term& u = c.args[0];
        const Term& v = c.args[1];
        if (!nodes.count(u)) return std::nullopt;
        if (v.kind == Term::Kind::Constant) {
          parts.push_back({u, ClassExpr::some_value(c.predicate, v.name), {}, {}});
        } else {
          if (!nodes.count(v) || v == focus || parent.count(v)) return std::nullopt;
          parent[v] = u;
          parts.push_back({u, std::nullopt, v, c.predicate});
        }
        break;
      }
      case Condition::Kind::Negation: {
        auto at = attach_sub(c.boxes[0]);
        if (!at) return std::nullopt;
        auto inner = roll(c.boxes[0], *at);
        if (!inner) return std::nullopt;
        parts.push_back({*at, ClassExpr::negation(std::move(*inner)), {}, {}});
        break;
      }
      case Condition::Kind::Disjunction: {
        auto l = attach_sub(c.boxes[0]);
        auto r = attach_sub(c.boxes[1]);
        if (!l || !r || !(*l == *r)) return std::nullopt;
        auto le = roll(c.boxes[0], *l);
        auto re = roll(c.boxes[1], *r);
        if (!le || !re) return std::nullopt;
        parts.push_back({*l, ClassExpr::disjunction(std::move(*le), std::move(*re)), {}, {}});
        break;
      }
      case Condition::Kind::Implication: return std::nullopt;
    }
  }

  // Every referent other than the focus must hang below the focus.
  for (const auto& r : box.referents) {
    Term t = Term::variable(r);
    if (t == focus) continue;
    std::set<Term> seen;
    while (!(t == focus)) {
      auto it = parent.find(t);
      if (it == parent.end() || !seen.insert(t).second) return std::nullopt;
      t = it->second;
    }
  }

  std::function<ClassExpr(const Term&)> build = [&](const Term& n) {
    std::vector<ClassExpr> conj;
    for (const auto& p : parts) {
      if (!(p.node == n)) continue;
      if (p.expr) {
        conj.push_back(*p.expr);
      } else {
        conj.push_back(ClassExpr::some(p.role, build(p.child)));
      }
    }
    return fold_and(std::move(conj));
  };
  return build(focus);
}

std::vector<Term> constants_in_order(const Drs& d) {
  std::vector<Term> out;
  std::function<void(const Drs&)> walk = [&](const Drs& b) {
    for (const auto& c : b.conditions) {
      for (const auto& t : c.args) {
        if (t.kind == Term::Kind::Constant && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
      }
      for (const auto& s : c.boxes) walk(s);
    }
  };
  walk(d);
  return out;
}

Axiom make(AxiomKind k, std::vector<ClassExpr> classes, std::vector<std::string> names) {
  Axiom a;
  a.kind = k;
  a.classes = std::move(classes);
  a.names = std::move(names);
  return a;
}

Axiom ground_assertion(const Condition& c, bool negative) {
  if (c.kind == Condition::Kind::Concept) {
    return make(negative ? AxiomKind::NegativeClassAssertion : AxiomKind::ClassAssertion,
                {ClassExpr::named(c.predicate)}, {c.args[0].name});
  }
  return make(negative ? AxiomKind::NegativeRoleAssertion : AxiomKind::RoleAssertion, {},
              {c.predicate, c.args[0].name, c.args[1].name});
}

std::optional<Axiom> role_shaped(const Drs& ante, const Drs& cons) {
  if (ante.referents.size() != 2 || ante.conditions.size() != 1) return std::nullopt;
  const Condition& r = ante.conditions[0];
  Term x = Term::variable(ante.referents[0]);
  Term y = Term::variable(ante.referents[1]);
  if (r.kind != Condition::Kind::Role || !(r.args[0] == x) || !(r.args[1] == y)) return std::nullopt;
  if (!cons.referents.empty() || cons.conditions.size() != 1) return std::nullopt;
  const Condition& c = cons.conditions[0];
  if (c.kind == Condition::Kind::Role && c.args[0] == x && c.args[1] == y) {
    return make(AxiomKind::SubRoleOf, {}, {r.predicate, c.predicate});
  }
  if (c.kind == Condition::Kind::Concept && c.args[0] == x) {
    return make(AxiomKind::RoleDomain, {ClassExpr::named(c.predicate)}, {r.predicate});
  }
  if (c.kind == Condition::Kind::Concept && c.args[0] == y) {
    return make(AxiomKind::RoleRange, {ClassExpr::named(c.predicate)}, {r.predicate});
  }
  return std::nullopt;
}

bool pure_negated_concept(const Drs& cons, const Term& x, std::string& name) {
  if (!cons.referents.empty() || cons.conditions.size() != 1) return false;
  const Condition& n = cons.conditions[0];
  if (n.kind != Condition::Kind::Negation) return false;
  const Drs& inner = n.boxes[0];
  if (!inner.referents.empty() || inner.conditions.size() != 1) return false;
  const Condition& c = inner.conditions[0];
  if (c.kind != Condition::Kind::Concept || !(c.args[0] == x)) return false;
  name = c.predicate;
  return true;
}

}  // namespace

Axiom classify(const Drs& drs) {
  const auto& conds = drs.conditions;
  if (drs.referents.empty() && conds.size() == 1 && ground(conds[0])) return ground_assertion(conds[0], false);
  if (drs.referents.empty() && conds.size() == 1 && conds[0].kind == Condition::Kind::Negation) {
    const Drs& inner = conds[0].boxes[0];
    if (inner.referents.empty() && inner.conditions.size() == 1 && ground(inner.conditions[0])) {
      return ground_assertion(inner.conditions[0], true);
    }
  }
  for (const Term& c : constants_in_order(drs)) {
    if (auto ce = roll(drs, c)) return make(AxiomKind::ClassAssertion, {std::move(*ce)}, {c.name});
  }
  if (drs.referents.empty() && conds.size() == 1 && conds[0].kind == Condition::Kind::Implication) {
    const Drs& ante = conds[0].boxes[0];
    const Drs& cons = conds[0].boxes[1];
    if (auto a = role_shaped(ante, cons)) return *a;
    for (const auto& r : ante.referents) {
      Term x = Term::variable(r);
      auto lhs = roll(ante, x);
      if (!lhs) continue;
      auto rhs = roll(cons, x);
      if (!rhs) continue;
      std::string other;
      if (lhs->kind == ClassExpr::Kind::Named && pure_negated_concept(cons, x, other)) {
        return make(AxiomKind::DisjointClasses, {std::move(*lhs), ClassExpr::named(other)}, {});
      }
      return make(AxiomKind::SubClassOf, {std::move(*lhs), std::move(*rhs)}, {});
    }
  }
  for (const auto& r : drs.referents) {
    if (auto ce = roll(drs, Term::variable(r))) return make(AxiomKind::AnonymousAssertion, {std::move(*ce)}, {});
  }
  Axiom a;
  a.drs = drs;
  return a;
}

namespace {

bool well_formed(const ClassExpr& e) {
  switch (e.kind) {
    case ClassExpr::Kind::Named: return !e.name.empty() && e.operands.empty() && e.individual.empty();
    case ClassExpr::Kind::Thing: return e.name.empty() && e.operands.empty() && e.individual.empty();
    case ClassExpr::Kind::Not: return e.operands.size() == 1 && well_formed(e.operands[0]);
    case ClassExpr::Kind::And:
    case ClassExpr::Kind::Or:
      return e.operands.size() == 2 && well_formed(e.operands[0]) && well_formed(e.operands[1]);
    case ClassExpr::Kind::Some:
      return !e.name.empty() && e.operands.size() == 1 && well_formed(e.operands[0]);
    case ClassExpr::Kind::SomeValue: return !e.name.empty() && !e.individual.empty() && e.operands.empty();
  }
  return false;
}

bool names_ok(const Axiom& a, std::size_t n) {
  return a.names.size() == n &&
         std::none_of(a.names.begin(), a.names.end(), [](const std::string& s) { return s.empty(); });
}

bool classes_ok(const Axiom& a, std::size_t n) {
  return a.classes.size() == n && std::all_of(a.classes.begin(), a.classes.end(),
                                               [](const ClassExpr& e) { return well_formed(e); });
}

bool atomic(const ClassExpr& e) { return e.kind == ClassExpr::Kind::Named; }

}  // namespace

bool well_formed(const Axiom& a) {
  switch (a.kind) {
    case AxiomKind::SubClassOf: return classes_ok(a, 2) && names_ok(a, 0);
    case AxiomKind::DisjointClasses:
      return classes_ok(a, 2) && names_ok(a, 0) && atomic(a.classes[0]) && atomic(a.classes[1]);
    case AxiomKind::ClassAssertion: return classes_ok(a, 1) && names_ok(a, 1);
    case AxiomKind::NegativeClassAssertion: return classes_ok(a, 1) && names_ok(a, 1) && atomic(a.classes[0]);
    case AxiomKind::RoleAssertion:
    case AxiomKind::NegativeRoleAssertion: return classes_ok(a, 0) && names_ok(a, 3);
    case AxiomKind::SubRoleOf: return classes_ok(a, 0) && names_ok(a, 2);
    case AxiomKind::RoleDomain:
    case AxiomKind::RoleRange: return classes_ok(a, 1) && names_ok(a, 1) && atomic(a.classes[0]);
    case AxiomKind::AnonymousAssertion: return classes_ok(a, 1) && names_ok(a, 0);
    case AxiomKind::NotOwl: return a.classes.empty() && a.names.empty();
  }
  return false;
}

}  // namespace acewiki
