#include <functional>
#include <map>
#include <stdexcept>

#include "acewiki/logic.hpp"

namespace acewiki {

Condition Condition::concept_atom(std::string name, Term t) {
  return {Kind::Concept, std::move(name), {std::move(t)}, {}};
}

Condition Condition::role(std::string name, Term subject, Term object) {
  return {Kind::Role, std::move(name), {std::move(subject), std::move(object)}, {}};
}

Condition Condition::negation(Drs d) { return {Kind::Negation, {}, {}, {std::move(d)}}; }

Condition Condition::implication(Drs antecedent, Drs consequent) {
  return {Kind::Implication, {}, {}, {std::move(antecedent), std::move(consequent)}};
}

Condition Condition::disjunction(Drs left, Drs right) {
  return {Kind::Disjunction, {}, {}, {std::move(left), std::move(right)}};
}

namespace {

class DrsBuilder {
 public:
  Drs run(const SentenceAst& ast) {
    Drs top;
    std::visit([&](const auto& s) { sentence(s, top); }, ast);
    return top;
  }

 private:
  Term fresh(Drs& box) {
    std::string name = "x" + std::to_string(++counter_);
    box.referents.push_back(name);
    return Term::variable(name);
  }

  void bind(const std::optional<Var>& v, const Term& t) {
    if (v) bound_[*v] = t;
  }

  const Term& lookup(Var v) const {
    auto it = bound_.find(v);
    if (it == bound_.end()) throw std::logic_error("unbound variable in AST");
    return it->second;
  }

  void sentence(const SimpleSentence& s, Drs& box) { simple(s, box); }

  void sentence(const NegatedSentence& s, Drs& box) {
    Drs inner;
    simple(s.inner, inner);
    box.conditions.push_back(Condition::negation(std::move(inner)));
  }

  void sentence(const Conditional& c, Drs& box) {
    Drs antecedent;
    for (const Clause& cl : c.if_clauses) clause(cl, antecedent);
    Drs consequent;
    clause(c.then_clause, consequent);
    box.conditions.push_back(Condition::implication(std::move(antecedent), std::move(consequent)));
  }

  void clause(const Clause& cl, Drs& box) {
    Term subject;
    switch (cl.subject.kind) {
      case ClauseSubject::Kind::Something:
        subject = fresh(box);
        bind(cl.subject.var, subject);
        break;
      case ClauseSubject::Kind::Indefinite:
        subject = fresh(box);
        box.conditions.push_back(Condition::concept_atom(cl.subject.noun->symbol(), subject));
        bind(cl.subject.var, subject);
        break;
      case ClauseSubject::Kind::VarRef: subject = lookup(*cl.subject.var); break;
    }
    preds(cl.predicates, subject, box);
  }

  void simple(const SimpleSentence& s, Drs& box) {
    const SubjectNp& subj = s.subject;
    switch (subj.kind) {
      case SubjectNp::Kind::ProperName:
        preds(s.predicates, Term::constant(subj.word->surface), box);
        return;
      case SubjectNp::Kind::Every:
      case SubjectNp::Kind::No: {
        Drs antecedent;
        Term x = fresh(antecedent);
        antecedent.conditions.push_back(Condition::concept_atom(subj.word->symbol(), x));
        if (subj.rel) rel(*subj.rel, x, antecedent);
        Drs consequent;
        if (subj.kind == SubjectNp::Kind::Every) {
          preds(s.predicates, x, consequent);
        } else {
          Drs negated;
          preds(s.predicates, x, negated);
          consequent.conditions.push_back(Condition::negation(std::move(negated)));
        }
        box.conditions.push_back(Condition::implication(std::move(antecedent), std::move(consequent)));
        return;
      }
      case SubjectNp::Kind::Indefinite: {
        Term x = fresh(box);
        box.conditions.push_back(Condition::concept_atom(subj.word->symbol(), x));
        if (subj.rel) rel(*subj.rel, x, box);
        preds(s.predicates, x, box);
        return;
      }
      case SubjectNp::Kind::Something: {
        Term x = fresh(box);
        bind(subj.var, x);
        preds(s.predicates, x, box);
        return;
      }
      case SubjectNp::Kind::Everything: {
        Drs antecedent;
        Term x = fresh(antecedent);
        Drs consequent;
        preds(s.predicates, x, consequent);
        box.conditions.push_back(Condition::implication(std::move(antecedent), std::move(consequent)));
        return;
      }
    }
  }

  void rel(const RelClause& r, const Term& subject, Drs& box) {
    const std::string role = r.verb.symbol();
    object_atom(r.object, box, [&](const Term& o) { return Condition::role(role, subject, o); });
  }

  // Adds the atom built by `make` for the object, introducing the object's
  // referent in `box` (or a universal for "everything").
  void object_atom(const ObjectNp& o, Drs& box, const std::function<Condition(const Term&)>& make) {
    switch (o.kind) {
      case ObjectNp::Kind::ProperName: box.conditions.push_back(make(Term::constant(o.word->surface))); return;
      case ObjectNp::Kind::Indefinite: {
        Term y = fresh(box);
        box.conditions.push_back(Condition::concept_atom(o.word->symbol(), y));
        bind(o.var, y);
        box.conditions.push_back(make(y));
        return;
      }
      case ObjectNp::Kind::Something: {
        Term y = fresh(box);
        bind(o.var, y);
        box.conditions.push_back(make(y));
        return;
      }
      case ObjectNp::Kind::Everything: {
        Drs antecedent;
        Term y = fresh(antecedent);
        Drs consequent;
        consequent.conditions.push_back(make(y));
        box.conditions.push_back(Condition::implication(std::move(antecedent), std::move(consequent)));
        return;
      }
      case ObjectNp::Kind::VarRef: box.conditions.push_back(make(lookup(*o.var))); return;
    }
  }

  // Left-associative: at each "or" everything collected so far becomes the
  // left disjunct.
  void preds(const PredicateList& list, const Term& subject, Drs& box) {
    Drs acc;
    pred(list.preds.front(), subject, acc);
    for (std::size_t i = 1; i < list.preds.size(); ++i) {
      if (list.connectives[i - 1] == Connective::And) {
        pred(list.preds[i], subject, acc);
      } else {
        Drs right;
        pred(list.preds[i], subject, right);
        Drs joined;
        joined.conditions.push_back(Condition::disjunction(std::move(acc), std::move(right)));
        acc = std::move(joined);
      }
    }
    box.referents.insert(box.referents.end(), acc.referents.begin(), acc.referents.end());
    for (auto& c : acc.conditions) box.conditions.push_back(std::move(c));
  }

  void pred(const Predicate& p, const Term& subject, Drs& box) {
    const std::string name = p.head.symbol();
    auto role_atom = [&](const Term& o) { return Condition::role(name, subject, o); };
    switch (p.kind) {
      case Predicate::Kind::IsA: box.conditions.push_back(Condition::concept_atom(name, subject)); return;
      case Predicate::Kind::IsNotA: {
        Drs inner;
        inner.conditions.push_back(Condition::concept_atom(name, subject));
        box.conditions.push_back(Condition::negation(std::move(inner)));
        return;
      }
      case Predicate::Kind::IsRoleOf:
      case Predicate::Kind::Verb: object_atom(*p.object, box, role_atom); return;
      case Predicate::Kind::IsNotRoleOf:
      case Predicate::Kind::DoesNotVerb: {
        Drs inner;
        object_atom(*p.object, inner, role_atom);
        box.conditions.push_back(Condition::negation(std::move(inner)));
        return;
      }
    }
  }

  int counter_ = 0;
  std::map<Var, Term> bound_;
};

std::string term_text(const Term& t) { return t.name; }

void append(std::string& out, const Drs& d);

void append(std::string& out, const Condition& c) {
  switch (c.kind) {
    case Condition::Kind::Concept: out += c.predicate + "(" + term_text(c.args[0]) + ")"; return;
    case Condition::Kind::Role:
      out += c.predicate + "(" + term_text(c.args[0]) + ", " + term_text(c.args[1]) + ")";
      return;
    case Condition::Kind::Negation:
      out += "NOT ";
      append(out, c.boxes[0]);
      return;
    case Condition::Kind::Implication:
      append(out, c.boxes[0]);
      out += " => ";
      append(out, c.boxes[1]);
      return;
    case Condition::Kind::Disjunction:
      append(out, c.boxes[0]);
      out += " OR ";
      append(out, c.boxes[1]);
      return;
  }
}

void append(std::string& out, const Drs& d) {
  out += "[";
  for (std::size_t i = 0; i < d.referents.size(); ++i) {
    if (i) out += ",";
    out += d.referents[i];
  }
  out += "]{";
  for (std::size_t i = 0; i < d.conditions.size(); ++i) {
    if (i) out += ", ";
    append(out, d.conditions[i]);
  }
  out += "}";
}

}  // namespace

Drs ast_to_drs(const SentenceAst& ast) { return DrsBuilder().run(ast); }

std::string to_string(const Drs& drs) {
  std::string out;
  append(out, drs);
  return out;
}

Drs rename_referents(const Drs& drs, const std::vector<std::pair<std::string, std::string>>& mapping) {
  auto rename = [&](const std::string& n) {
    for (const auto& [from, to] : mapping) {
      if (from == n) return to;
    }
    return n;
  };
  Drs out;
  for (const auto& r : drs.referents) out.referents.push_back(rename(r));
  for (const auto& c : drs.conditions) {
    Condition n = c;
    for (auto& t : n.args) {
      if (t.kind == Term::Kind::Variable) t.name = rename(t.name);
    }
    for (auto& b : n.boxes) b = rename_referents(b, mapping);
    out.conditions.push_back(std::move(n));
  }
  return out;
}

}  // namespace acewiki
