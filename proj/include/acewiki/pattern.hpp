#pragma once

#include <optional>
#include <set>
#include <string_view>

namespace acewiki {

enum class SentencePattern {
  ConceptInclusion,
  ConceptInclusionNegated,
  IndividualAssignment,
  IndividualAssignmentNegated,
  RoleInstance,
  RoleInstanceNegated,
  RoleInclusion,
  DomainRestriction,
  RangeRestriction,
  Existential,
  Other,
};

inline constexpr SentencePattern kAllPatterns[] = {
    SentencePattern::ConceptInclusion,        SentencePattern::ConceptInclusionNegated,
    SentencePattern::IndividualAssignment,    SentencePattern::IndividualAssignmentNegated,
    SentencePattern::RoleInstance,            SentencePattern::RoleInstanceNegated,
    SentencePattern::RoleInclusion,           SentencePattern::DomainRestriction,
    SentencePattern::RangeRestriction,        SentencePattern::Existential,
    SentencePattern::Other};

using PatternSet = std::set<SentencePattern>;

std::string_view to_string(SentencePattern pattern);
std::optional<SentencePattern> pattern_from_string(std::string_view name);

// Article boxes fed by the box-eligible patterns.
enum class Box { Hierarchy, Assignments, DomainRange };

inline constexpr Box kAllBoxes[] = {Box::Hierarchy, Box::Assignments, Box::DomainRange};

std::string_view to_string(Box box);
// Box a pattern belongs to; nullopt for the unrestricted section.
std::optional<Box> box_of(SentencePattern pattern);
// Patterns whose sentences are edited inside the box.
PatternSet box_patterns(Box box);

}  // namespace acewiki
