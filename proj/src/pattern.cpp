#include "acewiki/pattern.hpp"

namespace acewiki {

std::string_view to_string(SentencePattern pattern) {
  switch (pattern) {
    case SentencePattern::ConceptInclusion: return "ConceptInclusion";
    case SentencePattern::ConceptInclusionNegated: return "ConceptInclusionNegated";
    case SentencePattern::IndividualAssignment: return "IndividualAssignment";
    case SentencePattern::IndividualAssignmentNegated: return "IndividualAssignmentNegated";
    case SentencePattern::RoleInstance: return "RoleInstance";
    case SentencePattern::RoleInstanceNegated: return "RoleInstanceNegated";
    case SentencePattern::RoleInclusion: return "RoleInclusion";
    case SentencePattern::DomainRestriction: return "DomainRestriction";
    case SentencePattern::RangeRestriction: return "RangeRestriction";
    case SentencePattern::Existential: return "Existential";
    case SentencePattern::Other: return "Other";
  }
  return "Other";
}

std::optional<SentencePattern> pattern_from_string(std::string_view name) {
  for (auto p : kAllPatterns) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

std::string_view to_string(Box box) {
  switch (box) {
    case Box::Hierarchy: return "hierarchy";
    case Box::Assignments: return "assignments";
    case Box::DomainRange: return "domainRange";
  }
  return "?";
}

std::optional<Box> box_of(SentencePattern pattern) {
  switch (pattern) {
    case SentencePattern::ConceptInclusion:
    case SentencePattern::RoleInclusion:
      return Box::Hierarchy;
    case SentencePattern::IndividualAssignment:
      return Box::Assignments;
    case SentencePattern::DomainRestriction:
    case SentencePattern::RangeRestriction:
      return Box::DomainRange;
    default:
      return std::nullopt;
  }
}

PatternSet box_patterns(Box box) {
  PatternSet out;
  for (auto p : kAllPatterns) {
    if (box_of(p) == box) out.insert(p);
  }
  return out;
}

}  // namespace acewiki
