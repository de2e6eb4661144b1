#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "acewiki/lexicon.hpp"
#include "acewiki/logic.hpp"

namespace acewiki {

enum class Position { Subject, Object };

// Forward-chaining view of the OWL-compatible axioms. Derived facts:
//   sub(C, D)       reflexive-transitive over SubClassOf with a named left side
//   subrole(r, s)   reflexive-transitive over SubRoleOf
//   rel(r, a, b)    role assertions closed under subrole
//   type(a, C)      class assertions closed under sub and domain/range firing
// Other axiom kinds are stored but inert.
class KnowledgeBase {
 public:
  // Duplicates are no-ops; NotOwl axioms are ignored.
  void assert_axiom(const Axiom& axiom);
  // Throws UnknownAxiom. Recomputes the derived state from scratch.
  void retract_axiom(const Axiom& axiom);
  bool contains(const Axiom& axiom) const;
  std::vector<Axiom> axioms() const;  // ordered by notation

  // Both include the argument itself.
  std::set<std::string> ancestors(const std::string& concept_name) const;
  std::set<std::string> superroles(const std::string& role) const;
  std::set<std::string> instances_of(const std::string& concept_name) const;
  std::set<std::string> types_of(const std::string& individual) const;
  bool holds(const std::string& role, const std::string& a, const std::string& b) const;

  // Classes a word must belong to in order to fit the given argument of
  // `role`: declared domains/ranges of the role and its superroles.
  std::set<std::string> expected_classes(const std::string& role, Position position) const;

  // Suitable candidates first, alphabetical within each partition.
  std::vector<Word> rank_individuals(const std::string& role, Position position, std::vector<Word> candidates) const;
  std::vector<Word> rank_concepts(const std::string& role, Position position, std::vector<Word> candidates) const;

  // Derived tables, one fact per line, sorted:
  //   sub C D / subrole r s / rel r a b / type a C
  std::string dump() const;

 private:
  enum class FactKind { Sub, SubRole, Rel, Type, Domain, Range };
  struct Fact {
    FactKind kind;
    std::string a, b, c;
  };

  void add_base_facts(const Axiom& axiom);
  void saturate(std::vector<Fact> work);
  void mention_concept(const std::string& c, std::vector<Fact>& work);
  void mention_role(const std::string& r, std::vector<Fact>& work);
  void mention_class(const ClassExpr& e, std::vector<Fact>& work);

  using Index = std::map<std::string, std::set<std::string>>;

  std::map<std::string, Axiom> axioms_;  // keyed by notation
  Index sub_up_, sub_down_;
  Index role_up_, role_down_;
  std::map<std::string, std::set<std::pair<std::string, std::string>>> rel_;
  Index types_, instances_;
  Index domains_, ranges_;
};

}  // namespace acewiki
