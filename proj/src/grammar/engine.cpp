#include "grammar/engine.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <mutex>
#include <stdexcept>

namespace acewiki::engine {

namespace {

constexpr std::string_view kLitText[] = {"it",   "is",        "false",      "that", "if",   "then", "every",
                                         "no",   "a",         "an",         "something", "everything",
                                         "who",  "not",       "does",       "of",   "and",  "or",   "."};
static_assert(std::size(kLitText) == static_cast<std::size_t>(Lit::Count));

Symbol L(Lit l) { return {Symbol::Kind::Lit, static_cast<std::uint8_t>(l)}; }
Symbol C(Cls c) { return {Symbol::Kind::Cls, static_cast<std::uint8_t>(c)}; }
Symbol N(Nt n) { return {Symbol::Kind::Nt, static_cast<std::uint8_t>(n)}; }
Symbol A(Act a) { return {Symbol::Kind::Act, static_cast<std::uint8_t>(a)}; }
const Symbol kIntro{Symbol::Kind::VarIntro, 0};
const Symbol kRef{Symbol::Kind::VarRef, 0};

std::vector<Production> build_productions() {
  using R = Rule;
  std::vector<Production> p = {
      {R::Sentence, Nt::Sentence, {N(Nt::Statement), L(Lit::Period)}},

      {R::StatementNegated, Nt::Statement, {L(Lit::It), L(Lit::Is), L(Lit::False), L(Lit::That), N(Nt::Simple)}},
      {R::StatementConditional, Nt::Statement, {N(Nt::Conditional)}},
      {R::StatementSimple, Nt::Statement, {N(Nt::Simple)}},

      {R::Simple, Nt::Simple, {N(Nt::Subject), N(Nt::PredList)}},

      {R::SubjectProperName, Nt::Subject, {C(Cls::ProperName)}},
      {R::SubjectEvery, Nt::Subject, {L(Lit::Every), N(Nt::Noun), N(Nt::RelOpt)}},
      {R::SubjectNo, Nt::Subject, {L(Lit::No), N(Nt::Noun), N(Nt::RelOpt)}},
      {R::SubjectIndefinite, Nt::Subject, {N(Nt::ANoun), N(Nt::RelOpt)}},
      {R::SubjectSomething, Nt::Subject, {L(Lit::Something), N(Nt::VarOpt)}},
      {R::SubjectEverything, Nt::Subject, {L(Lit::Everything)}},

      {R::NounCons, Nt::Noun, {C(Cls::NounCons)}},
      {R::NounVowel, Nt::Noun, {C(Cls::NounVowel)}},
      {R::ANounCons, Nt::ANoun, {L(Lit::A), C(Cls::NounCons)}},
      {R::ANounVowel, Nt::ANoun, {L(Lit::An), C(Cls::NounVowel)}},
      {R::AOfCons, Nt::AOf, {L(Lit::A), C(Cls::OfCons)}},
      {R::AOfVowel, Nt::AOf, {L(Lit::An), C(Cls::OfVowel)}},

      {R::RelNone, Nt::RelOpt, {}},
      {R::RelSome, Nt::RelOpt, {N(Nt::Rel)}},
      {R::RelWho, Nt::Rel, {L(Lit::Who), C(Cls::Verb), N(Nt::Object)}},
      {R::RelThat, Nt::Rel, {L(Lit::That), C(Cls::Verb), N(Nt::Object)}},

      {R::VarNone, Nt::VarOpt, {}},
      {R::VarSome, Nt::VarOpt, {kIntro}},

      {R::PredList, Nt::PredList, {A(Act::PlBegin), N(Nt::Pred), N(Nt::PredRest), A(Act::PlEnd)}},
      {R::RestEnd, Nt::PredRest, {}},
      {R::RestAnd, Nt::PredRest, {L(Lit::And), A(Act::And), N(Nt::Pred), N(Nt::PredRest)}},
      {R::RestOr, Nt::PredRest, {L(Lit::Or), A(Act::Or), N(Nt::Pred), N(Nt::PredRest)}},

      {R::PredIsA, Nt::Pred, {L(Lit::Is), N(Nt::ANoun)}},
      {R::PredIsNotA, Nt::Pred, {L(Lit::Is), L(Lit::Not), N(Nt::ANoun)}},
      {R::PredIsOf, Nt::Pred, {L(Lit::Is), N(Nt::AOf), L(Lit::Of), N(Nt::Object)}},
      {R::PredIsNotOf, Nt::Pred,
       {L(Lit::Is), L(Lit::Not), A(Act::NegBegin), N(Nt::AOf), L(Lit::Of), N(Nt::Object), A(Act::NegEnd)}},
      {R::PredVerb, Nt::Pred, {C(Cls::Verb), N(Nt::Object)}},
      {R::PredDoesNot, Nt::Pred,
       {L(Lit::Does), L(Lit::Not), A(Act::NegBegin), C(Cls::Verb), N(Nt::Object), A(Act::NegEnd)}},

      {R::ObjectProperName, Nt::Object, {C(Cls::ProperName)}},
      {R::ObjectIndefinite, Nt::Object, {N(Nt::ANoun), N(Nt::VarOpt)}},
      {R::ObjectSomething, Nt::Object, {L(Lit::Something), N(Nt::VarOpt)}},
      {R::ObjectEverything, Nt::Object, {L(Lit::Everything)}},
      {R::ObjectRef, Nt::Object, {kRef}},

      {R::Conditional, Nt::Conditional,
       {L(Lit::If), N(Nt::Clause), N(Nt::ClauseRest), L(Lit::Then), N(Nt::ThenClause)}},
      {R::ClauseEnd, Nt::ClauseRest, {}},
      {R::ClauseMore, Nt::ClauseRest, {L(Lit::And), N(Nt::Clause), N(Nt::ClauseRest)}},
      {R::ClauseSomething, Nt::Clause, {L(Lit::Something), N(Nt::VarOpt), N(Nt::PredList)}},
      {R::ClauseIndefinite, Nt::Clause, {N(Nt::ANoun), N(Nt::VarOpt), N(Nt::PredList)}},
      {R::ClauseRef, Nt::Clause, {kRef, N(Nt::PredList)}},
      {R::ThenRef, Nt::ThenClause, {kRef, N(Nt::PredList)}},
      {R::ThenSomething, Nt::ThenClause, {L(Lit::Something), N(Nt::PredList)}},
      {R::ThenIndefinite, Nt::ThenClause, {N(Nt::ANoun), N(Nt::PredList)}},
  };
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (static_cast<std::size_t>(p[i].rule) != i) throw std::logic_error("production table out of order");
  }
  if (p.size() != static_cast<std::size_t>(Rule::Count)) throw std::logic_error("production table incomplete");
  return p;
}

// Rules grouped by left-hand side, in table order.
const std::vector<std::vector<Rule>>& rules_by_lhs() {
  static const auto table = [] {
    std::vector<std::vector<Rule>> out(static_cast<std::size_t>(Nt::Count));
    for (const auto& p : productions()) out[static_cast<std::size_t>(p.lhs)].push_back(p.rule);
    return out;
  }();
  return table;
}

// usable[mask] has one bit per rule: the rule can be expanded when exactly
// the classes in `mask` are non-empty. A rule is usable if its lexical
// classes are available and each of its nonterminals derives a word string
// without the help of variables (variables are never required, so a usable
// rule never leads into a dead end).
using RuleBits = std::bitset<static_cast<std::size_t>(Rule::Count)>;

RuleBits compute_usable(ClassMask mask) {
  const auto& prods = productions();
  std::vector<bool> productive(static_cast<std::size_t>(Nt::Count), false);
  auto symbol_ok = [&](const Symbol& s, bool vars_ok) {
    switch (s.kind) {
      case Symbol::Kind::Lit:
      case Symbol::Kind::Act: return true;
      case Symbol::Kind::Cls: return ((mask >> s.id) & 1) != 0;
      case Symbol::Kind::VarIntro:
      case Symbol::Kind::VarRef: return vars_ok;
      case Symbol::Kind::Nt: return static_cast<bool>(productive[s.id]);
    }
    return false;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : prods) {
      if (productive[static_cast<std::size_t>(p.lhs)]) continue;
      if (std::all_of(p.rhs.begin(), p.rhs.end(), [&](const Symbol& s) { return symbol_ok(s, false); })) {
        productive[static_cast<std::size_t>(p.lhs)] = true;
        changed = true;
      }
    }
  }
  RuleBits usable;
  for (const auto& p : prods) {
    if (std::all_of(p.rhs.begin(), p.rhs.end(), [&](const Symbol& s) { return symbol_ok(s, true); })) {
      usable.set(static_cast<std::size_t>(p.rule));
    }
  }
  return usable;
}

const RuleBits& usable_rules(ClassMask mask) {
  static const auto table = [] {
    std::array<RuleBits, 64> out;
    for (unsigned m = 0; m < 64; ++m) out[m] = compute_usable(static_cast<ClassMask>(m));
    return out;
  }();
  return table[mask & 63u];
}

// ---------------------------------------------------------------------------
// Pattern automaton

struct TrieNode {
  std::vector<std::pair<Step, int>> children;
  std::optional<SentencePattern> final_pattern;
  std::optional<SentencePattern> lock;
  std::uint16_t reachable = 0;  // bit per SentencePattern
};

std::uint16_t pattern_bit(SentencePattern p) { return static_cast<std::uint16_t>(1u << static_cast<unsigned>(p)); }

Step lit_step(Lit l) { return {Step::Kind::Lit, static_cast<std::uint8_t>(l)}; }
Step cls_step(Cls c) { return {Step::Kind::Cls, static_cast<std::uint8_t>(c)}; }
Step var_step(Var v) { return {Step::Kind::Var, static_cast<std::uint8_t>(v)}; }

// Expands a template written with placeholders:
//   PN TV NOUN (any noun), A-NOUN (a + consonant noun | an + vowel noun),
//   A-OF (same for of-constructs), RP (TV | is A-OF of), V1 V2 (variables).
void expand_template(const std::vector<std::string>& words, std::size_t at, Var v1, Var v2,
                     std::vector<Step>& current, std::vector<std::vector<Step>>& out) {
  if (at == words.size()) {
    out.push_back(current);
    return;
  }
  const std::string& w = words[at];
  auto with = [&](std::initializer_list<Step> steps) {
    for (const Step& s : steps) current.push_back(s);
    expand_template(words, at + 1, v1, v2, current, out);
    current.resize(current.size() - steps.size());
  };
  if (w == "PN") {
    with({cls_step(Cls::ProperName)});
  } else if (w == "TV") {
    with({cls_step(Cls::Verb)});
  } else if (w == "NOUN") {
    with({cls_step(Cls::NounCons)});
    with({cls_step(Cls::NounVowel)});
  } else if (w == "A-NOUN") {
    with({lit_step(Lit::A), cls_step(Cls::NounCons)});
    with({lit_step(Lit::An), cls_step(Cls::NounVowel)});
  } else if (w == "A-OF") {
    with({lit_step(Lit::A), cls_step(Cls::OfCons)});
    with({lit_step(Lit::An), cls_step(Cls::OfVowel)});
  } else if (w == "RP") {
    with({cls_step(Cls::Verb)});
    with({lit_step(Lit::Is), lit_step(Lit::A), cls_step(Cls::OfCons), lit_step(Lit::Of)});
    with({lit_step(Lit::Is), lit_step(Lit::An), cls_step(Cls::OfVowel), lit_step(Lit::Of)});
  } else if (w == "V1") {
    with({var_step(v1)});
  } else if (w == "V2") {
    with({var_step(v2)});
  } else {
    auto lit = lit_from_text(w);
    if (!lit) throw std::logic_error("bad pattern template word " + w);
    with({lit_step(*lit)});
  }
}

struct PatternTemplate {
  SentencePattern pattern;
  const char* text;
  bool lock;
};

const PatternTemplate kTemplates[] = {
    {SentencePattern::ConceptInclusion, "every NOUN is A-NOUN .", false},
    {SentencePattern::ConceptInclusionNegated, "it is false that every", true},
    {SentencePattern::IndividualAssignment, "PN is A-NOUN .", false},
    {SentencePattern::IndividualAssignmentNegated, "PN is not A-NOUN .", false},
    {SentencePattern::IndividualAssignmentNegated, "it is false that PN is A-NOUN .", false},
    {SentencePattern::RoleInstance, "PN RP PN .", false},
    {SentencePattern::RoleInstanceNegated, "PN does not TV PN .", false},
    {SentencePattern::RoleInstanceNegated, "PN is not A-OF of PN .", false},
    {SentencePattern::RoleInstanceNegated, "it is false that PN RP PN .", false},
    {SentencePattern::RoleInclusion, "if something V1 RP something V2 then V1 RP V2 .", false},
    {SentencePattern::DomainRestriction, "if something V1 RP something then V1 is A-NOUN .", false},
    {SentencePattern::DomainRestriction, "if something V1 RP something V2 then V1 is A-NOUN .", false},
    {SentencePattern::RangeRestriction, "if something RP something V2 then V2 is A-NOUN .", false},
    {SentencePattern::RangeRestriction, "if something V1 RP something V2 then V2 is A-NOUN .", false},
    {SentencePattern::Existential, "A-NOUN", true},
};

struct Trie {
  std::vector<TrieNode> nodes;

  int child(int node, const Step& step) const {
    for (const auto& [s, next] : nodes[static_cast<std::size_t>(node)].children) {
      if (s == step) return next;
    }
    return -1;
  }

  void insert(const std::vector<Step>& steps, SentencePattern pattern, bool lock) {
    int node = 0;
    std::vector<int> path{0};
    for (const Step& s : steps) {
      int next = child(node, s);
      if (next < 0) {
        next = static_cast<int>(nodes.size());
        nodes.emplace_back();
        nodes[static_cast<std::size_t>(node)].children.emplace_back(s, next);
      }
      node = next;
      path.push_back(node);
    }
    auto& end = nodes[static_cast<std::size_t>(node)];
    auto& slot = lock ? end.lock : end.final_pattern;
    if (slot && *slot != pattern) throw std::logic_error("overlapping pattern templates");
    slot = pattern;
    for (int n : path) nodes[static_cast<std::size_t>(n)].reachable |= pattern_bit(pattern);
  }
};

const Trie& pattern_trie() {
  static const Trie trie = [] {
    Trie t;
    t.nodes.emplace_back();
    for (const auto& tpl : kTemplates) {
      std::vector<std::string> words;
      std::string text = tpl.text, w;
      for (char ch : text + " ") {
        if (ch == ' ') {
          if (!w.empty()) words.push_back(w);
          w.clear();
        } else {
          w += ch;
        }
      }
      bool uses_vars = text.find('V') != std::string::npos;
      std::vector<std::vector<Step>> expansions;
      std::vector<Step> current;
      if (uses_vars) {
        for (Var a : kAllVars) {
          for (Var b : kAllVars) {
            if (a != b) expand_template(words, 0, a, b, current, expansions);
          }
        }
      } else {
        expand_template(words, 0, Var::X, Var::Y, current, expansions);
      }
      for (const auto& e : expansions) t.insert(e, tpl.pattern, tpl.lock);
    }
    return t;
  }();
  return trie;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view lit_text(Lit lit) { return kLitText[static_cast<std::size_t>(lit)]; }

std::optional<Lit> lit_from_text(std::string_view text) {
  for (std::size_t i = 0; i < std::size(kLitText); ++i) {
    if (kLitText[i] == text) return static_cast<Lit>(i);
  }
  return std::nullopt;
}

Cls class_of(const Word& word) {
  switch (word.category) {
    case WordCategory::ProperName: return Cls::ProperName;
    case WordCategory::Noun: return takes_an(word.surface) ? Cls::NounVowel : Cls::NounCons;
    case WordCategory::TransitiveVerb: return Cls::Verb;
    case WordCategory::OfConstruct: return takes_an(word.surface) ? Cls::OfVowel : Cls::OfCons;
  }
  return Cls::ProperName;
}

WordCategory category_of(Cls cls) {
  switch (cls) {
    case Cls::ProperName: return WordCategory::ProperName;
    case Cls::NounCons:
    case Cls::NounVowel: return WordCategory::Noun;
    case Cls::Verb: return WordCategory::TransitiveVerb;
    case Cls::OfCons:
    case Cls::OfVowel: return WordCategory::OfConstruct;
    case Cls::Count: break;
  }
  return WordCategory::Noun;
}

const std::vector<Production>& productions() {
  static const std::vector<Production> table = build_productions();
  return table;
}

const Production& production(Rule rule) { return productions()[static_cast<std::size_t>(rule)]; }

std::string symbol_text(const Symbol& s) {
  static constexpr std::string_view kNt[] = {"Sentence", "Statement", "Simple", "Subject", "Noun", "ANoun",
                                             "AOf", "RelOpt", "Rel", "VarOpt", "PredList", "PredRest", "Pred",
                                             "Object", "Conditional", "ClauseRest", "Clause", "ThenClause"};
  static constexpr std::string_view kCls[] = {"PROPERNAME", "NOUN(consonant)", "NOUN(vowel)", "TV",
                                              "OFNOUN(consonant)", "OFNOUN(vowel)"};
  switch (s.kind) {
    case Symbol::Kind::Lit: return "'" + std::string(lit_text(static_cast<Lit>(s.id))) + "'";
    case Symbol::Kind::Cls: return std::string(kCls[s.id]);
    case Symbol::Kind::VarIntro: return "VARINTRO";
    case Symbol::Kind::VarRef: return "VARREF";
    case Symbol::Kind::Nt: return std::string(kNt[s.id]);
    case Symbol::Kind::Act: return "";
  }
  return "?";
}

ClassMask available_classes(const Lexicon& lexicon) {
  ClassMask mask = 0;
  for (const Word& w : lexicon.words()) mask |= static_cast<ClassMask>(1u << static_cast<unsigned>(class_of(w)));
  return mask;
}

void VarState::introduce(Var v) {
  const auto b = bit(v);
  introduced |= b;
  accessible |= b;
  for (std::uint8_t i = 0; i < depth; ++i) {
    frames[i].local |= b;
    frames[i].pred_local |= b;
  }
}

void VarState::apply(Act act) {
  switch (act) {
    case Act::PlBegin:
    case Act::NegBegin:
      if (depth == frames.size()) throw std::logic_error("scope stack overflow");
      frames[depth] = ScopeFrame{};
      frames[depth].negation = act == Act::NegBegin;
      ++depth;
      return;
    case Act::NegEnd:
      --depth;
      accessible &= static_cast<std::uint8_t>(~frames[depth].local);
      return;
    case Act::PlEnd:
      --depth;
      if (frames[depth].in_disjunct) accessible &= static_cast<std::uint8_t>(~frames[depth].pred_local);
      return;
    case Act::And: {
      auto& f = frames[depth - 1];
      if (f.in_disjunct) {
        accessible &= static_cast<std::uint8_t>(~f.pred_local);
        f.local &= static_cast<std::uint8_t>(~f.pred_local);
        f.in_disjunct = false;
      }
      f.pred_local = 0;
      return;
    }
    case Act::Or: {
      auto& f = frames[depth - 1];
      accessible &= static_cast<std::uint8_t>(~f.local);
      f.local = 0;
      f.pred_local = 0;
      f.in_disjunct = true;
      return;
    }
  }
}

Step Step::from_token(const Token& token) {
  switch (token.kind) {
    case TokenKind::Period: return lit_step(Lit::Period);
    case TokenKind::FunctionWord: {
      auto lit = lit_from_text(token.surface);
      if (!lit) throw std::logic_error("not a function word: " + token.surface);
      return lit_step(*lit);
    }
    case TokenKind::LexWord: return cls_step(class_of(*token.word));
    case TokenKind::Variable:
    case TokenKind::VarRef: return var_step(*token.var);
  }
  throw std::logic_error("bad token kind");
}

PatternState pattern_advance(const PatternState& state, const Step& step) {
  if (state.locked || state.node == PatternState::kOther) return state;
  const Trie& trie = pattern_trie();
  int next = trie.child(state.node, step);
  if (next < 0) return PatternState{PatternState::kOther, std::nullopt};
  PatternState out{next, std::nullopt};
  if (auto lock = trie.nodes[static_cast<std::size_t>(next)].lock) out.locked = lock;
  return out;
}

SentencePattern pattern_final(const PatternState& state) {
  if (state.locked) return *state.locked;
  if (state.node == PatternState::kOther) return SentencePattern::Other;
  return pattern_trie().nodes[static_cast<std::size_t>(state.node)].final_pattern.value_or(SentencePattern::Other);
}

bool pattern_possible(const PatternState& state, const PatternSet& allowed) {
  if (state.locked) return allowed.count(*state.locked) > 0;
  if (allowed.count(SentencePattern::Other)) return true;
  if (state.node == PatternState::kOther) return false;
  const auto reachable = pattern_trie().nodes[static_cast<std::size_t>(state.node)].reachable;
  return std::any_of(allowed.begin(), allowed.end(), [&](SentencePattern p) { return reachable & pattern_bit(p); });
}

std::vector<Config> closure(std::vector<Config> work, const Options& options) {
  const RuleBits& usable = usable_rules(options.classes);
  const auto& by_lhs = rules_by_lhs();
  std::vector<Config> out;
  out.reserve(4);
  while (!work.empty()) {
    Config c = std::move(work.back());
    work.pop_back();
    while (!c.stack.empty() && c.stack.back().kind == Symbol::Kind::Act) {
      c.vars.apply(static_cast<Act>(c.stack.back().id));
      c.stack.pop_back();
    }
    if (c.stack.empty() || c.stack.back().terminal()) {
      out.push_back(std::move(c));
      continue;
    }
    const auto nt = c.stack.back().id;
    c.stack.pop_back();
    const auto& alternatives = by_lhs[nt];
    // the last usable alternative takes over `c` instead of a copy
    auto last = alternatives.rend();
    for (auto it = alternatives.rbegin(); it != alternatives.rend(); ++it) {
      if (usable.test(static_cast<std::size_t>(*it))) last = it;
    }
    for (auto it = alternatives.rbegin(); it != alternatives.rend(); ++it) {
      if (!usable.test(static_cast<std::size_t>(*it))) continue;
      Config next = it == last ? std::move(c) : c;
      const auto& rhs = production(*it).rhs;
      for (auto s = rhs.rbegin(); s != rhs.rend(); ++s) next.stack.push_back(*s);
      if (options.record) next.derivation.push_back(*it);
      work.push_back(std::move(next));
    }
  }
  return out;
}

std::vector<Config> initial(const Options& options) {
  Config start;
  start.stack.push_back(N(Nt::Sentence));
  return closure({std::move(start)}, options);
}

bool matches(const Config& c, const Step& step) {
  if (c.stack.empty()) return false;
  const Symbol& top = c.stack.back();
  switch (top.kind) {
    case Symbol::Kind::Lit: return step.kind == Step::Kind::Lit && step.id == top.id;
    case Symbol::Kind::Cls: return step.kind == Step::Kind::Cls && step.id == top.id;
    case Symbol::Kind::VarIntro: return step.kind == Step::Kind::Var && c.vars.can_introduce(static_cast<Var>(step.id));
    case Symbol::Kind::VarRef: return step.kind == Step::Kind::Var && c.vars.can_reference(static_cast<Var>(step.id));
    default: return false;
  }
}

std::vector<Config> advance(const std::vector<Config>& configs, const Step& step, const Options& options) {
  std::vector<Config> next;
  next.reserve(configs.size());
  for (const Config& c : configs) {
    if (!matches(c, step)) continue;
    Config n = c;
    const Symbol top = n.stack.back();
    n.stack.pop_back();
    if (top.kind == Symbol::Kind::VarIntro) n.vars.introduce(static_cast<Var>(step.id));
    if (options.track_pattern) n.pattern = pattern_advance(n.pattern, step);
    next.push_back(std::move(n));
  }
  return closure(std::move(next), options);
}

std::vector<Step> next_steps(const std::vector<Config>& configs, const Options& options) {
  std::vector<Step> out;
  auto add = [&](Step s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  for (const Config& c : configs) {
    if (c.stack.empty()) continue;
    const Symbol& top = c.stack.back();
    switch (top.kind) {
      case Symbol::Kind::Lit: add({Step::Kind::Lit, top.id}); break;
      case Symbol::Kind::Cls:
        if ((options.classes >> top.id) & 1) add({Step::Kind::Cls, top.id});
        break;
      case Symbol::Kind::VarIntro:
      case Symbol::Kind::VarRef:
        for (Var v : kAllVars) {
          Step s = var_step(v);
          if (matches(c, s)) add(s);
        }
        break;
      default: break;
    }
  }
  return out;
}

Viability::Viability(Options options, const std::optional<PatternSet>& allowed)
    : options_(options), allowed_(allowed) {
  options_.record = false;
  options_.track_pattern = allowed_.has_value();
}

bool Viability::accepting(const std::vector<Config>& configs) const {
  return std::any_of(configs.begin(), configs.end(), [&](const Config& c) {
    return c.accepted() && (!allowed_ || allowed_->count(pattern_final(c.pattern)));
  });
}

bool Viability::viable(const std::vector<Config>& configs) {
  if (!allowed_) return !configs.empty();
  std::unordered_set<std::string> visiting;
  for (const Config& c : configs) {
    if (search(c, visiting)) return true;
  }
  return false;
}

std::string Viability::key(const Config& c) const {
  std::string k;
  k.reserve(c.stack.size() * 2 + 20);
  for (const Symbol& s : c.stack) {
    k += static_cast<char>(s.kind);
    k += static_cast<char>(s.id);
  }
  k += '|';
  k += static_cast<char>(c.vars.introduced);
  k += static_cast<char>(c.vars.accessible);
  k += static_cast<char>(c.vars.depth);
  for (std::uint8_t i = 0; i < c.vars.depth; ++i) {
    const auto& f = c.vars.frames[i];
    k += static_cast<char>(f.local);
    k += static_cast<char>(f.pred_local);
    k += static_cast<char>((f.in_disjunct ? 1 : 0) | (f.negation ? 2 : 0));
  }
  k += '|';
  k += std::to_string(c.pattern.node);
  k += ':';
  k += c.pattern.locked ? static_cast<char>('A' + static_cast<int>(*c.pattern.locked)) : '-';
  return k;
}

bool Viability::search(const Config& c, std::unordered_set<std::string>& visiting) {
  if (allowed_ && !pattern_possible(c.pattern, *allowed_)) return false;
  if (c.accepted()) return !allowed_ || allowed_->count(pattern_final(c.pattern)) > 0;
  std::string k = key(c);
  if (known_viable_.count(k)) return true;
  if (!visiting.insert(k).second) return false;
  const std::vector<Config> single{c};
  // Cheapest continuations first: the period, then function words.
  auto steps = next_steps(single, options_);
  std::stable_sort(steps.begin(), steps.end(), [](const Step& a, const Step& b) {
    auto rank = [](const Step& s) {
      if (s.kind == Step::Kind::Lit && s.id == static_cast<std::uint8_t>(Lit::Period)) return 0;
      return s.kind == Step::Kind::Lit ? 1 : 2;
    };
    return rank(a) < rank(b);
  });
  for (const Step& s : steps) {
    for (const Config& n : advance(single, s, options_)) {
      if (search(n, visiting)) {
        known_viable_.insert(k);
        return true;
      }
    }
  }
  return false;
}

}  // namespace acewiki::engine
