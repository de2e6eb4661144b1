#include <algorithm>
#include <stdexcept>

#include "acewiki/error.hpp"
#include "acewiki/grammar.hpp"
#include "grammar/engine.hpp"

namespace acewiki {

using engine::Config;
using engine::Rule;
using engine::Step;

namespace {

// Rebuilds the AST from a leftmost derivation. Each builder consumes the
// rule chosen for its nonterminal followed by that rule's terminals, in the
// order of the production's right-hand side.
class AstBuilder {
 public:
  AstBuilder(std::span<const Rule> rules, std::span<const Token> tokens) : rules_(rules), tokens_(tokens) {}

  SentenceAst sentence() {
    expect_rule({Rule::Sentence});
    SentenceAst ast = statement();
    token();  // period
    if (ri_ != rules_.size() || ti_ != tokens_.size()) throw std::logic_error("derivation not fully consumed");
    return ast;
  }

 private:
  Rule next_rule() {
    if (ri_ >= rules_.size()) throw std::logic_error("derivation exhausted");
    return rules_[ri_++];
  }

  Rule expect_rule(std::initializer_list<Rule> allowed) {
    Rule r = next_rule();
    if (std::find(allowed.begin(), allowed.end(), r) == allowed.end()) {
      throw std::logic_error("unexpected rule in derivation");
    }
    return r;
  }

  const Token& token() {
    if (ti_ >= tokens_.size()) throw std::logic_error("tokens exhausted");
    return tokens_[ti_++];
  }

  Word word() { return *token().word; }
  Var var() { return *token().var; }

  SentenceAst statement() {
    switch (expect_rule({Rule::StatementNegated, Rule::StatementConditional, Rule::StatementSimple})) {
      case Rule::StatementNegated:
        for (int i = 0; i < 4; ++i) token();
        return NegatedSentence{simple()};
      case Rule::StatementConditional: return conditional();
      default: return simple();
    }
  }

  SimpleSentence simple() {
    expect_rule({Rule::Simple});
    SimpleSentence s;
    s.subject = subject();
    s.predicates = pred_list();
    return s;
  }

  SubjectNp subject() {
    SubjectNp s;
    switch (next_rule()) {
      case Rule::SubjectProperName:
        s.kind = SubjectNp::Kind::ProperName;
        s.word = word();
        break;
      case Rule::SubjectEvery:
      case Rule::SubjectNo: {
        s.kind = rules_[ri_ - 1] == Rule::SubjectEvery ? SubjectNp::Kind::Every : SubjectNp::Kind::No;
        token();
        expect_rule({Rule::NounCons, Rule::NounVowel});
        s.word = word();
        s.rel = rel_opt();
        break;
      }
      case Rule::SubjectIndefinite:
        s.kind = SubjectNp::Kind::Indefinite;
        s.word = a_noun();
        s.rel = rel_opt();
        break;
      case Rule::SubjectSomething:
        s.kind = SubjectNp::Kind::Something;
        token();
        s.var = var_opt();
        break;
      case Rule::SubjectEverything:
        s.kind = SubjectNp::Kind::Everything;
        token();
        break;
      default: throw std::logic_error("bad subject rule");
    }
    return s;
  }

  Word a_noun() {
    expect_rule({Rule::ANounCons, Rule::ANounVowel});
    token();
    return word();
  }

  Word a_of() {
    expect_rule({Rule::AOfCons, Rule::AOfVowel});
    token();
    return word();
  }

  std::optional<RelClause> rel_opt() {
    if (expect_rule({Rule::RelNone, Rule::RelSome}) == Rule::RelNone) return std::nullopt;
    RelClause rel;
    rel.marker = expect_rule({Rule::RelWho, Rule::RelThat}) == Rule::RelWho ? RelClause::Marker::Who
                                                                           : RelClause::Marker::That;
    token();
    rel.verb = word();
    rel.object = object();
    return rel;
  }

  std::optional<Var> var_opt() {
    if (expect_rule({Rule::VarNone, Rule::VarSome}) == Rule::VarNone) return std::nullopt;
    return var();
  }

  PredicateList pred_list() {
    expect_rule({Rule::PredList});
    PredicateList list;
    list.preds.push_back(pred());
    for (;;) {
      Rule r = expect_rule({Rule::RestEnd, Rule::RestAnd, Rule::RestOr});
      if (r == Rule::RestEnd) break;
      token();
      list.connectives.push_back(r == Rule::RestAnd ? Connective::And : Connective::Or);
      list.preds.push_back(pred());
    }
    return list;
  }

  Predicate pred() {
    Predicate p;
    switch (next_rule()) {
      case Rule::PredIsA:
        p.kind = Predicate::Kind::IsA;
        token();
        p.head = a_noun();
        break;
      case Rule::PredIsNotA:
        p.kind = Predicate::Kind::IsNotA;
        token();
        token();
        p.head = a_noun();
        break;
      case Rule::PredIsOf:
        p.kind = Predicate::Kind::IsRoleOf;
        token();
        p.head = a_of();
        token();
        p.object = object();
        break;
      case Rule::PredIsNotOf:
        p.kind = Predicate::Kind::IsNotRoleOf;
        token();
        token();
        p.head = a_of();
        token();
        p.object = object();
        break;
      case Rule::PredVerb:
        p.kind = Predicate::Kind::Verb;
        p.head = word();
        p.object = object();
        break;
      case Rule::PredDoesNot:
        p.kind = Predicate::Kind::DoesNotVerb;
        token();
        token();
        p.head = word();
        p.object = object();
        break;
      default: throw std::logic_error("bad predicate rule");
    }
    return p;
  }

  ObjectNp object() {
    ObjectNp o;
    switch (next_rule()) {
      case Rule::ObjectProperName:
        o.kind = ObjectNp::Kind::ProperName;
        o.word = word();
        break;
      case Rule::ObjectIndefinite:
        o.kind = ObjectNp::Kind::Indefinite;
        o.word = a_noun();
        o.var = var_opt();
        break;
      case Rule::ObjectSomething:
        o.kind = ObjectNp::Kind::Something;
        token();
        o.var = var_opt();
        break;
      case Rule::ObjectEverything:
        o.kind = ObjectNp::Kind::Everything;
        token();
        break;
      case Rule::ObjectRef:
        o.kind = ObjectNp::Kind::VarRef;
        o.var = var();
        break;
      default: throw std::logic_error("bad object rule");
    }
    return o;
  }

  Conditional conditional() {
    expect_rule({Rule::Conditional});
    token();  // if
    Conditional c;
    c.if_clauses.push_back(clause());
    while (expect_rule({Rule::ClauseEnd, Rule::ClauseMore}) == Rule::ClauseMore) {
      token();
      c.if_clauses.push_back(clause());
    }
    token();  // then
    switch (expect_rule({Rule::ThenRef, Rule::ThenSomething, Rule::ThenIndefinite})) {
      case Rule::ThenRef:
        c.then_clause.subject = {ClauseSubject::Kind::VarRef, std::nullopt, var()};
        break;
      case Rule::ThenSomething:
        token();
        c.then_clause.subject = {ClauseSubject::Kind::Something, std::nullopt, std::nullopt};
        break;
      default:
        c.then_clause.subject = {ClauseSubject::Kind::Indefinite, a_noun(), std::nullopt};
        break;
    }
    c.then_clause.predicates = pred_list();
    return c;
  }

  Clause clause() {
    Clause cl;
    switch (expect_rule({Rule::ClauseSomething, Rule::ClauseIndefinite, Rule::ClauseRef})) {
      case Rule::ClauseSomething:
        token();
        cl.subject = {ClauseSubject::Kind::Something, std::nullopt, var_opt()};
        break;
      case Rule::ClauseIndefinite: {
        Word noun = a_noun();
        cl.subject = {ClauseSubject::Kind::Indefinite, noun, var_opt()};
        break;
      }
      default:
        cl.subject = {ClauseSubject::Kind::VarRef, std::nullopt, var()};
        break;
    }
    cl.predicates = pred_list();
    return cl;
  }

  std::span<const Rule> rules_;
  std::span<const Token> tokens_;
  std::size_t ri_ = 0;
  std::size_t ti_ = 0;
};

std::string expected_list(const std::vector<Config>& configs) {
  std::vector<std::string> names;
  for (const Config& c : configs) {
    if (c.stack.empty()) continue;
    std::string n = engine::symbol_text(c.stack.back());
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  }
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out.empty() ? "end of input" : out;
}

[[noreturn]] void fail_at(const std::vector<Config>& configs, std::span<const Token> tokens, std::size_t i) {
  if (i >= tokens.size()) {
    throw Error(ErrorCode::SyntaxError, "incomplete sentence; expected " + expected_list(configs), i);
  }
  const Token& t = tokens[i];
  if (t.is_variable()) {
    bool referable = std::any_of(configs.begin(), configs.end(),
                                 [&](const Config& c) { return c.vars.can_reference(*t.var); });
    if (!referable) {
      throw Error(ErrorCode::UnboundVariable, "variable " + t.surface + " is not bound here", i);
    }
  }
  throw Error(ErrorCode::SyntaxError,
              "unexpected '" + t.surface + "'; expected " + expected_list(configs),
              i);
}

struct Recognition {
  std::vector<Config> accepted;
};

Recognition recognize(std::span<const Token> tokens, const Lexicon& lexicon, bool record) {
  engine::Options options{engine::available_classes(lexicon), record, true};
  auto configs = engine::initial(options);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    // Lexical check: every word must still be in this lexicon.
    if (tokens[i].kind == TokenKind::LexWord) {
      auto live = lexicon.lookup(tokens[i].surface);
      if (!live || live->category != tokens[i].word->category) {
        throw Error(ErrorCode::LexicalError, "word '" + tokens[i].surface + "' is not in the lexicon", i);
      }
    } else if (tokens[i].kind == TokenKind::FunctionWord && !engine::lit_from_text(tokens[i].surface)) {
      throw Error(ErrorCode::LexicalError, "'" + tokens[i].surface + "' is not a function word", i);
    }
    auto next = engine::advance(configs, Step::from_token(tokens[i]), options);
    if (next.empty()) fail_at(configs, tokens, i);
    configs = std::move(next);
  }
  Recognition r;
  for (auto& c : configs) {
    if (c.accepted()) r.accepted.push_back(std::move(c));
  }
  if (r.accepted.empty()) fail_at(configs, tokens, tokens.size());
  return r;
}

}  // namespace

SentenceAst parse(std::span<const Token> tokens, const Grammar& grammar, const Lexicon& lexicon) {
  Recognition r = recognize(tokens, lexicon, true);
  if (r.accepted.size() != 1) throw std::logic_error("ambiguous sentence: " + render(tokens));
  const Config& done = r.accepted.front();
  if (grammar.restricted() && !grammar.allows(engine::pattern_final(done.pattern))) {
    // Report the first token after which no sentence of the allowed patterns
    // remains reachable.
    engine::Options options{engine::available_classes(lexicon), false, true};
    engine::Viability viability(options, grammar.patterns());
    auto configs = engine::initial(options);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      configs = engine::advance(configs, Step::from_token(tokens[i]), options);
      if (!viability.viable(configs)) {
        throw Error(ErrorCode::SyntaxError,
                    "'" + tokens[i].surface + "' leaves the restricted sentence patterns", i);
      }
    }
    throw std::logic_error("restricted rejection without position");
  }
  return AstBuilder(done.derivation, tokens).sentence();
}

std::size_t count_derivations(std::span<const Token> tokens, const Lexicon& lexicon) {
  try {
    return recognize(tokens, lexicon, false).accepted.size();
  } catch (const Error&) {
    return 0;
  }
}

std::optional<SentencePattern> automaton_pattern(std::span<const Token> tokens, const Lexicon& lexicon) {
  try {
    auto r = recognize(tokens, lexicon, false);
    return engine::pattern_final(r.accepted.front().pattern);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace acewiki
