#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acewiki/ast.hpp"
#include "acewiki/lexicon.hpp"
#include "acewiki/pattern.hpp"
#include "acewiki/token.hpp"

namespace acewiki {

// The controlled-English grammar. The production set is fixed; a grammar
// value only carries an optional restriction to a set of sentence patterns
// (the "reduced grammar" used inside article boxes).
class Grammar {
 public:
  Grammar() = default;

  bool restricted() const { return patterns_.has_value(); }
  const std::optional<PatternSet>& patterns() const { return patterns_; }
  bool allows(SentencePattern pattern) const { return !patterns_ || patterns_->count(pattern) > 0; }

  friend Grammar restrict(const Grammar& grammar, const PatternSet& patterns);

  // The production set in EBNF-ish notation, for documentation and debugging.
  static std::string describe();

 private:
  std::optional<PatternSet> patterns_;
};

// Throws EmptyPatternSet for an empty set. Restricting an already restricted
// grammar intersects the sets.
Grammar restrict(const Grammar& grammar, const PatternSet& patterns);

// Composite function phrases offered as single menu entries.
const std::vector<std::string>& composite_phrases();

struct Prediction {
  // One entry per category, always present, possibly empty.
  std::map<WordCategory, std::vector<Word>> category_menus;
  // Function words and composite phrases ("it is false that", "is a", ...).
  std::vector<std::string> function_menu;
  std::vector<Var> var_ref_menu;
  bool var_intro_allowed = false;
  std::vector<Var> var_intro_menu;
  bool can_finish = false;

  bool empty() const;
};

// Parses a complete sentence (ending with "."). Errors: LexicalError,
// SyntaxError(position), UnboundVariable(position).
SentenceAst parse(std::span<const Token> tokens, const Grammar& grammar, const Lexicon& lexicon);

// Continuations of a sentence prefix. Every offered entry can be completed
// to a sentence of `grammar`, and every token that starts such a completion
// is offered. Throws DeadPrefix when the prefix cannot be completed.
Prediction predict(std::span<const Token> prefix, const Grammar& grammar, const Lexicon& lexicon);

TokenList verbalize(const SentenceAst& ast);

// Number of complete derivations of `tokens` (unrestricted grammar). A
// correct grammar yields 0 or 1.
std::size_t count_derivations(std::span<const Token> tokens, const Lexicon& lexicon);

// Pattern as computed by the restriction automaton while recognizing. Used
// to cross-check the AST-based classifier in the logic module.
std::optional<SentencePattern> automaton_pattern(std::span<const Token> tokens, const Lexicon& lexicon);

}  // namespace acewiki
