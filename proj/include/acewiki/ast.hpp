#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "acewiki/lexicon.hpp"
#include "acewiki/token.hpp"

namespace acewiki {

// Noun phrase in object position.
struct ObjectNp {
  enum class Kind { ProperName, Indefinite, Something, Everything, VarRef };
  Kind kind = Kind::Something;
  std::optional<Word> word;  // ProperName: the name; Indefinite: the noun
  std::optional<Var> var;    // introduced (Indefinite/Something) or referenced (VarRef)

  friend bool operator==(const ObjectNp&, const ObjectNp&) = default;
};

struct Predicate {
  enum class Kind { IsA, IsNotA, IsRoleOf, IsNotRoleOf, Verb, DoesNotVerb };
  Kind kind = Kind::IsA;
  Word head;  // noun, of-construct or transitive verb
  std::optional<ObjectNp> object;  // absent for IsA / IsNotA

  bool negated() const { return kind == Kind::IsNotA || kind == Kind::IsNotRoleOf || kind == Kind::DoesNotVerb; }
  bool is_role() const { return object.has_value(); }

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

enum class Connective { And, Or };

// Left-associative, no grouping: ((p0 c0 p1) c1 p2) ...
struct PredicateList {
  std::vector<Predicate> preds;
  std::vector<Connective> connectives;  // size == preds.size() - 1

  friend bool operator==(const PredicateList&, const PredicateList&) = default;
};

struct RelClause {
  enum class Marker { Who, That };
  Marker marker = Marker::Who;
  Word verb;
  ObjectNp object;

  friend bool operator==(const RelClause&, const RelClause&) = default;
};

struct SubjectNp {
  enum class Kind { ProperName, Every, No, Indefinite, Something, Everything };
  Kind kind = Kind::Something;
  std::optional<Word> word;       // proper name or noun
  std::optional<RelClause> rel;   // Every / No / Indefinite
  std::optional<Var> var;         // Something

  friend bool operator==(const SubjectNp&, const SubjectNp&) = default;
};

struct SimpleSentence {
  SubjectNp subject;
  PredicateList predicates;

  friend bool operator==(const SimpleSentence&, const SimpleSentence&) = default;
};

struct NegatedSentence {
  SimpleSentence inner;

  friend bool operator==(const NegatedSentence&, const NegatedSentence&) = default;
};

// Subject of an if-clause or the then-clause. Then-clauses never introduce
// variables.
struct ClauseSubject {
  enum class Kind { Something, Indefinite, VarRef };
  Kind kind = Kind::Something;
  std::optional<Word> noun;
  std::optional<Var> var;

  friend bool operator==(const ClauseSubject&, const ClauseSubject&) = default;
};

struct Clause {
  ClauseSubject subject;
  PredicateList predicates;

  friend bool operator==(const Clause&, const Clause&) = default;
};

struct Conditional {
  std::vector<Clause> if_clauses;
  Clause then_clause;

  friend bool operator==(const Conditional&, const Conditional&) = default;
};

using SentenceAst = std::variant<SimpleSentence, NegatedSentence, Conditional>;

// Content words a sentence mentions, in order of first occurrence.
std::vector<Word> mentioned_words(const SentenceAst& ast);

}  // namespace acewiki
