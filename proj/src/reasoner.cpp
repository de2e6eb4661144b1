#include "acewiki/reasoner.hpp"

#include <algorithm>
#include <functional>

#include "acewiki/error.hpp"

namespace acewiki {

namespace {

void named_conjuncts(const ClassExpr& e, std::vector<const ClassExpr*>& out) {
  if (e.kind == ClassExpr::Kind::And) {
    named_conjuncts(e.operands[0], out);
    named_conjuncts(e.operands[1], out);
  } else {
    out.push_back(&e);
  }
}

const std::set<std::string>& get(const std::map<std::string, std::set<std::string>>& m, const std::string& k) {
  static const std::set<std::string> empty;
  auto it = m.find(k);
  return it == m.end() ? empty : it->second;
}

}  // namespace

void KnowledgeBase::mention_concept(const std::string& c, std::vector<Fact>& work) {
  if (!sub_up_.count(c)) work.push_back({FactKind::Sub, c, c, {}});
}

void KnowledgeBase::mention_role(const std::string& r, std::vector<Fact>& work) {
  if (!role_up_.count(r)) work.push_back({FactKind::SubRole, r, r, {}});
}

void KnowledgeBase::mention_class(const ClassExpr& e, std::vector<Fact>& work) {
  if (e.kind == ClassExpr::Kind::Named) mention_concept(e.name, work);
  if (e.kind == ClassExpr::Kind::Some || e.kind == ClassExpr::Kind::SomeValue) mention_role(e.name, work);
  for (const auto& o : e.operands) mention_class(o, work);
}

void KnowledgeBase::add_base_facts(const Axiom& a) {
  std::vector<Fact> work;
  for (const auto& c : a.classes) mention_class(c, work);
  switch (a.kind) {
    case AxiomKind::SubClassOf:
      if (a.classes[0].kind == ClassExpr::Kind::Named) {
        std::vector<const ClassExpr*> rhs;
        named_conjuncts(a.classes[1], rhs);
        for (const ClassExpr* e : rhs) {
          if (e->kind == ClassExpr::Kind::Named) work.push_back({FactKind::Sub, a.classes[0].name, e->name, {}});
        }
      }
      break;
    case AxiomKind::ClassAssertion: {
      std::vector<const ClassExpr*> parts;
      named_conjuncts(a.classes[0], parts);
      for (const ClassExpr* e : parts) {
        if (e->kind == ClassExpr::Kind::Named) work.push_back({FactKind::Type, a.names[0], e->name, {}});
        if (e->kind == ClassExpr::Kind::SomeValue) work.push_back({FactKind::Rel, e->name, a.names[0], e->individual});
      }
      break;
    }
    case AxiomKind::RoleAssertion:
      mention_role(a.names[0], work);
      work.push_back({FactKind::Rel, a.names[0], a.names[1], a.names[2]});
      break;
    case AxiomKind::NegativeRoleAssertion: mention_role(a.names[0], work); break;
    case AxiomKind::SubRoleOf:
      mention_role(a.names[0], work);
      mention_role(a.names[1], work);
      work.push_back({FactKind::SubRole, a.names[0], a.names[1], {}});
      break;
    case AxiomKind::RoleDomain:
    case AxiomKind::RoleRange:
      mention_role(a.names[0], work);
      work.push_back({a.kind == AxiomKind::RoleDomain ? FactKind::Domain : FactKind::Range, a.names[0],
                      a.classes[0].name, {}});
      break;
    default: break;
  }
  saturate(std::move(work));
}

void KnowledgeBase::saturate(std::vector<Fact> work) {
  while (!work.empty()) {
    Fact f = std::move(work.back());
    work.pop_back();
    switch (f.kind) {
      case FactKind::Sub: {
        mention_concept(f.a, work);
        mention_concept(f.b, work);
        if (!sub_up_[f.a].insert(f.b).second) break;
        sub_down_[f.b].insert(f.a);
        for (const auto& x : get(sub_down_, f.a)) work.push_back({FactKind::Sub, x, f.b, {}});
        for (const auto& y : get(sub_up_, f.b)) work.push_back({FactKind::Sub, f.a, y, {}});
        for (const auto& i : get(instances_, f.a)) work.push_back({FactKind::Type, i, f.b, {}});
        break;
      }
      case FactKind::SubRole: {
        if (!role_up_[f.a].insert(f.b).second) break;
        role_down_[f.b].insert(f.a);
        if (f.a != f.b) {
          mention_role(f.a, work);
          mention_role(f.b, work);
        }
        for (const auto& q : get(role_down_, f.a)) work.push_back({FactKind::SubRole, q, f.b, {}});
        for (const auto& t : get(role_up_, f.b)) work.push_back({FactKind::SubRole, f.a, t, {}});
        auto it = rel_.find(f.a);
        if (it != rel_.end()) {
          for (const auto& [x, y] : it->second) work.push_back({FactKind::Rel, f.b, x, y});
        }
        break;
      }
      case FactKind::Rel: {
        if (!rel_[f.a].insert({f.b, f.c}).second) break;
        mention_role(f.a, work);
        for (const auto& s : get(role_up_, f.a)) work.push_back({FactKind::Rel, s, f.b, f.c});
        for (const auto& c : get(domains_, f.a)) work.push_back({FactKind::Type, f.b, c, {}});
        for (const auto& c : get(ranges_, f.a)) work.push_back({FactKind::Type, f.c, c, {}});
        break;
      }
      case FactKind::Type: {
        mention_concept(f.b, work);
        if (!types_[f.a].insert(f.b).second) break;
        instances_[f.b].insert(f.a);
        for (const auto& d : get(sub_up_, f.b)) work.push_back({FactKind::Type, f.a, d, {}});
        break;
      }
      case FactKind::Domain:
      case FactKind::Range: {
        auto& table = f.kind == FactKind::Domain ? domains_ : ranges_;
        mention_concept(f.b, work);
        if (!table[f.a].insert(f.b).second) break;
        auto it = rel_.find(f.a);
        if (it == rel_.end()) break;
        for (const auto& [x, y] : it->second) {
          work.push_back({FactKind::Type, f.kind == FactKind::Domain ? x : y, f.b, {}});
        }
        break;
      }
    }
  }
}

void KnowledgeBase::assert_axiom(const Axiom& axiom) {
  if (!axiom.owl_compatible()) return;
  auto [it, inserted] = axioms_.emplace(to_string(axiom), axiom);
  if (inserted) add_base_facts(axiom);
}

void KnowledgeBase::retract_axiom(const Axiom& axiom) {
  auto it = axioms_.find(to_string(axiom));
  if (!axiom.owl_compatible() || it == axioms_.end()) {
    throw Error(ErrorCode::UnknownAxiom, "axiom not asserted: " + to_string(axiom));
  }
  std::map<std::string, Axiom> rest = std::move(axioms_);
  rest.erase(to_string(axiom));
  *this = KnowledgeBase();
  for (const auto& [key, a] : rest) assert_axiom(a);
}

bool KnowledgeBase::contains(const Axiom& axiom) const { return axioms_.count(to_string(axiom)) > 0; }

std::vector<Axiom> KnowledgeBase::axioms() const {
  std::vector<Axiom> out;
  for (const auto& [key, a] : axioms_) out.push_back(a);
  return out;
}

std::set<std::string> KnowledgeBase::ancestors(const std::string& c) const {
  std::set<std::string> out = get(sub_up_, c);
  out.insert(c);
  return out;
}

std::set<std::string> KnowledgeBase::superroles(const std::string& r) const {
  std::set<std::string> out = get(role_up_, r);
  out.insert(r);
  return out;
}

std::set<std::string> KnowledgeBase::instances_of(const std::string& c) const { return get(instances_, c); }

std::set<std::string> KnowledgeBase::types_of(const std::string& i) const { return get(types_, i); }

bool KnowledgeBase::holds(const std::string& role, const std::string& a, const std::string& b) const {
  auto it = rel_.find(role);
  return it != rel_.end() && it->second.count({a, b}) > 0;
}

std::set<std::string> KnowledgeBase::expected_classes(const std::string& role, Position position) const {
  const Index& table = position == Position::Subject ? domains_ : ranges_;
  std::set<std::string> out;
  for (const auto& s : superroles(role)) {
    const auto& cs = get(table, s);
    out.insert(cs.begin(), cs.end());
  }
  return out;
}

namespace {

std::vector<Word> partition(std::vector<Word> candidates, const std::set<std::string>& expected,
                            const std::function<std::set<std::string>(const Word&)>& classes) {
  std::sort(candidates.begin(), candidates.end(),
            [](const Word& a, const Word& b) { return alphabetical_less(a.surface, b.surface); });
  if (expected.empty()) return candidates;
  std::stable_partition(candidates.begin(), candidates.end(), [&](const Word& w) {
    const auto cs = classes(w);
    return std::any_of(cs.begin(), cs.end(), [&](const std::string& c) { return expected.count(c) > 0; });
  });
  return candidates;
}

}  // namespace

std::vector<Word> KnowledgeBase::rank_individuals(const std::string& role, Position position,
                                                  std::vector<Word> candidates) const {
  return partition(std::move(candidates), expected_classes(role, position),
                   [&](const Word& w) { return types_of(w.surface); });
}

std::vector<Word> KnowledgeBase::rank_concepts(const std::string& role, Position position,
                                               std::vector<Word> candidates) const {
  return partition(std::move(candidates), expected_classes(role, position),
                   [&](const Word& w) { return ancestors(w.symbol()); });
}

std::string KnowledgeBase::dump() const {
  std::vector<std::string> lines;
  for (const auto& [c, ds] : sub_up_) {
    for (const auto& d : ds) lines.push_back("sub " + c + " " + d);
  }
  for (const auto& [r, ss] : role_up_) {
    for (const auto& s : ss) lines.push_back("subrole " + r + " " + s);
  }
  for (const auto& [r, pairs] : rel_) {
    for (const auto& [a, b] : pairs) lines.push_back("rel " + r + " " + a + " " + b);
  }
  for (const auto& [i, cs] : types_) {
    for (const auto& c : cs) lines.push_back("type " + i + " " + c);
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace acewiki
