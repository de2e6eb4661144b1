#pragma once

// Recognizer internals shared by parse, predict and restrict. Not installed.
//
// The recognizer keeps a set of configurations. Each configuration is a
// predictive (LL) stack of grammar symbols plus the variable-scope state of
// the words consumed so far and the state of the pattern automaton. The
// grammar has no left recursion, so expanding the leftmost nonterminal until
// a terminal is on top terminates, and the set of configurations stays tiny
// because the grammar is LL(2).

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "acewiki/lexicon.hpp"
#include "acewiki/pattern.hpp"
#include "acewiki/token.hpp"

namespace acewiki::engine {

// Function words. Index order is the menu order.
enum class Lit : std::uint8_t {
  It, Is, False, That, If, Then, Every, No, A, An, Something, Everything, Who, Not, Does, Of, And, Or, Period,
  Count
};

std::string_view lit_text(Lit lit);
std::optional<Lit> lit_from_text(std::string_view text);

// Lexical terminal classes. Nouns and of-constructs split on a/an agreement.
enum class Cls : std::uint8_t { ProperName, NounCons, NounVowel, Verb, OfCons, OfVowel, Count };

Cls class_of(const Word& word);
WordCategory category_of(Cls cls);

enum class Nt : std::uint8_t {
  Sentence, Statement, Simple, Subject, Noun, ANoun, AOf, RelOpt, Rel, VarOpt, PredList, PredRest, Pred,
  Object, Conditional, ClauseRest, Clause, ThenClause, Count
};

enum class Act : std::uint8_t { PlBegin, PlEnd, And, Or, NegBegin, NegEnd };

struct Symbol {
  enum class Kind : std::uint8_t { Lit, Cls, VarIntro, VarRef, Nt, Act };
  Kind kind;
  std::uint8_t id;

  bool terminal() const { return kind != Kind::Nt && kind != Kind::Act; }
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

// Production identifiers; the AST builder switches on them.
enum class Rule : std::uint8_t {
  Sentence,
  StatementNegated, StatementConditional, StatementSimple,
  Simple,
  SubjectProperName, SubjectEvery, SubjectNo, SubjectIndefinite, SubjectSomething, SubjectEverything,
  NounCons, NounVowel,
  ANounCons, ANounVowel,
  AOfCons, AOfVowel,
  RelNone, RelSome,
  RelWho, RelThat,
  VarNone, VarSome,
  PredList,
  RestEnd, RestAnd, RestOr,
  PredIsA, PredIsNotA, PredIsOf, PredIsNotOf, PredVerb, PredDoesNot,
  ObjectProperName, ObjectIndefinite, ObjectSomething, ObjectEverything, ObjectRef,
  Conditional,
  ClauseEnd, ClauseMore,
  ClauseSomething, ClauseIndefinite, ClauseRef,
  ThenRef, ThenSomething, ThenIndefinite,
  Count
};

struct Production {
  Rule rule;
  Nt lhs;
  std::vector<Symbol> rhs;
};

const std::vector<Production>& productions();
const Production& production(Rule rule);
std::string symbol_text(const Symbol& symbol);

// Bit set over Cls: which lexical classes have at least one word.
using ClassMask = std::uint8_t;
ClassMask available_classes(const Lexicon& lexicon);

// Variable scoping. A reference is legal only if the variable is accessible
// in the discourse-structure sense: not introduced under a negation, not in
// a disjunct, not left of an "or" of the same predicate list.
struct ScopeFrame {
  std::uint8_t local = 0;       // introduced inside this frame
  std::uint8_t pred_local = 0;  // introduced in the current predicate
  bool in_disjunct = false;
  bool negation = false;
};

struct VarState {
  std::uint8_t introduced = 0;
  std::uint8_t accessible = 0;
  std::array<ScopeFrame, 3> frames{};
  std::uint8_t depth = 0;

  void introduce(Var v);
  void apply(Act act);
  bool can_introduce(Var v) const { return !(introduced & bit(v)); }
  bool can_reference(Var v) const { return accessible & bit(v); }
  static std::uint8_t bit(Var v) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(v)); }
};

// State of the pattern automaton: a trie node, or one of the sink states.
struct PatternState {
  static constexpr int kOther = -1;
  int node = 0;                                  // >= 0: trie node, kOther: diverged
  std::optional<SentencePattern> locked;         // prefix lock reached

  friend bool operator==(const PatternState&, const PatternState&) = default;
};

// Terminal instance as seen by the automaton and the search: a function
// word, a lexical class, or a concrete variable name.
struct Step {
  enum class Kind : std::uint8_t { Lit, Cls, Var };
  Kind kind;
  std::uint8_t id;

  static Step from_token(const Token& token);
  friend bool operator==(const Step&, const Step&) = default;
};

PatternState pattern_advance(const PatternState& state, const Step& step);
SentencePattern pattern_final(const PatternState& state);
// Conservative: false only if no sentence of any pattern in `allowed` can
// pass through this state.
bool pattern_possible(const PatternState& state, const PatternSet& allowed);

// Fixed-capacity symbol stack. Repetition in the grammar is tail recursive,
// so the depth stays small; copying configurations then needs no allocation.
class SymbolStack {
 public:
  static constexpr std::size_t kCapacity = 48;

  bool empty() const { return size_ == 0; }
  std::size_t size() const { return size_; }
  const Symbol& back() const { return items_[size_ - 1]; }
  void pop_back() { --size_; }
  void push_back(Symbol s) {
    if (size_ == kCapacity) throw std::logic_error("parser stack overflow");
    items_[size_++] = s;
  }
  const Symbol* begin() const { return items_.data(); }
  const Symbol* end() const { return items_.data() + size_; }

 private:
  std::array<Symbol, kCapacity> items_{};
  std::uint8_t size_ = 0;
};

struct Config {
  SymbolStack stack;  // top is back()
  VarState vars;
  PatternState pattern;
  std::vector<Rule> derivation;  // leftmost derivation, recorded on request

  bool accepted() const { return stack.empty(); }
};

struct Options {
  ClassMask classes = 0;
  bool record = false;
  bool track_pattern = false;
};

// Expands nonterminals and runs actions until every configuration has a
// terminal on top or is accepted.
std::vector<Config> closure(std::vector<Config> configs, const Options& options);
std::vector<Config> initial(const Options& options);
// Consumes one terminal; the result is closed again.
std::vector<Config> advance(const std::vector<Config>& configs, const Step& step, const Options& options);
bool matches(const Config& config, const Step& step);

// Terminal instances some configuration can consume next (deduplicated,
// only lexical classes present in the lexicon, only legal variable names).
std::vector<Step> next_steps(const std::vector<Config>& configs, const Options& options);

// Exact check: can one of `configs` be completed to a sentence whose pattern
// is in `allowed`? Without a restriction the recognizer's own pruning already
// guarantees this for every non-empty configuration set.
class Viability {
 public:
  Viability(Options options, const std::optional<PatternSet>& allowed);
  bool viable(const std::vector<Config>& configs);
  bool accepting(const std::vector<Config>& configs) const;

 private:
  bool search(const Config& config, std::unordered_set<std::string>& visiting);
  std::string key(const Config& config) const;

  Options options_;
  std::optional<PatternSet> allowed_;
  std::unordered_set<std::string> known_viable_;
};

}  // namespace acewiki::engine
