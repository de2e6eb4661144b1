#include "acewiki/logic.hpp"

namespace acewiki {

namespace {

using PK = Predicate::Kind;

const Predicate* single(const PredicateList& l) { return l.preds.size() == 1 ? &l.preds[0] : nullptr; }

bool to_name(const Predicate& p) { return p.object && p.object->kind == ObjectNp::Kind::ProperName; }

bool positive_role(const Predicate& p) { return p.kind == PK::Verb || p.kind == PK::IsRoleOf; }

SentencePattern simple_pattern(const SimpleSentence& s) {
  switch (s.subject.kind) {
    case SubjectNp::Kind::Every:
      if (!s.subject.rel) {
        const Predicate* p = single(s.predicates);
        if (p && p->kind == PK::IsA) return SentencePattern::ConceptInclusion;
      }
      return SentencePattern::Other;
    case SubjectNp::Kind::Indefinite: return SentencePattern::Existential;
    case SubjectNp::Kind::ProperName: {
      const Predicate* p = single(s.predicates);
      if (!p) return SentencePattern::Other;
      if (p->kind == PK::IsA) return SentencePattern::IndividualAssignment;
      if (p->kind == PK::IsNotA) return SentencePattern::IndividualAssignmentNegated;
      if (to_name(*p) && positive_role(*p)) return SentencePattern::RoleInstance;
      if (to_name(*p)) return SentencePattern::RoleInstanceNegated;
      return SentencePattern::Other;
    }
    default: return SentencePattern::Other;
  }
}

SentencePattern negated_pattern(const NegatedSentence& n) {
  const SimpleSentence& s = n.inner;
  if (s.subject.kind == SubjectNp::Kind::Every) return SentencePattern::ConceptInclusionNegated;
  if (s.subject.kind != SubjectNp::Kind::ProperName) return SentencePattern::Other;
  const Predicate* p = single(s.predicates);
  if (!p) return SentencePattern::Other;
  if (p->kind == PK::IsA) return SentencePattern::IndividualAssignmentNegated;
  if (positive_role(*p) && to_name(*p)) return SentencePattern::RoleInstanceNegated;
  return SentencePattern::Other;
}

bool refers_to(const std::optional<Var>& v, const ClauseSubject& s) {
  return v && s.kind == ClauseSubject::Kind::VarRef && s.var == v;
}

SentencePattern conditional_pattern(const Conditional& c) {
  if (c.if_clauses.size() != 1) return SentencePattern::Other;
  const Clause& cl = c.if_clauses[0];
  const Predicate* p = single(cl.predicates);
  if (cl.subject.kind != ClauseSubject::Kind::Something || !p || !positive_role(*p) ||
      p->object->kind != ObjectNp::Kind::Something) {
    return SentencePattern::Other;
  }
  const std::optional<Var>& v1 = cl.subject.var;
  const std::optional<Var>& v2 = p->object->var;
  const Clause& then = c.then_clause;
  const Predicate* q = single(then.predicates);
  if (!q) return SentencePattern::Other;
  if (positive_role(*q) && v1 && v2 && refers_to(v1, then.subject) && q->object->kind == ObjectNp::Kind::VarRef &&
      q->object->var == v2) {
    return SentencePattern::RoleInclusion;
  }
  if (q->kind == PK::IsA && refers_to(v1, then.subject)) return SentencePattern::DomainRestriction;
  if (q->kind == PK::IsA && refers_to(v2, then.subject)) return SentencePattern::RangeRestriction;
  return SentencePattern::Other;
}

void scan(const PredicateList& l, NegImpl& out) {
  for (const auto& p : l.preds) {
    if (p.negated()) out.has_negation = true;
  }
}

void scan(const SimpleSentence& s, NegImpl& out) {
  if (s.subject.kind == SubjectNp::Kind::No) out.has_negation = true;
  if (s.subject.kind == SubjectNp::Kind::Every || s.subject.kind == SubjectNp::Kind::No ||
      s.subject.kind == SubjectNp::Kind::Everything) {
    out.has_implication = true;
  }
  scan(s.predicates, out);
}

}  // namespace

SentencePattern pattern_of(const SentenceAst& ast) {
  if (auto* s = std::get_if<SimpleSentence>(&ast)) return simple_pattern(*s);
  if (auto* n = std::get_if<NegatedSentence>(&ast)) return negated_pattern(*n);
  return conditional_pattern(std::get<Conditional>(ast));
}

NegImpl contains_neg_or_impl(const SentenceAst& ast) {
  NegImpl out;
  if (auto* s = std::get_if<SimpleSentence>(&ast)) {
    scan(*s, out);
  } else if (auto* n = std::get_if<NegatedSentence>(&ast)) {
    out.has_negation = true;
    scan(n->inner, out);
  } else {
    const auto& c = std::get<Conditional>(ast);
    out.has_implication = true;
    for (const auto& cl : c.if_clauses) scan(cl.predicates, out);
    scan(c.then_clause.predicates, out);
  }
  return out;
}

}  // namespace acewiki
