#include <doctest.h>

#include <algorithm>

#include "acewiki/error.hpp"
#include "acewiki/grammar.hpp"
#include "acewiki/logic.hpp"
#include "support/corpus.hpp"

using namespace acewiki;
using acewiki::testing::parse_text;

namespace {

const Lexicon& lex() {
  static const Lexicon l = [] {
    Lexicon x = acewiki::testing::corpus_lexicon();
    x.add_word(WordCategory::Noun, "river");
    x.add_word(WordCategory::TransitiveVerb, "borders");
    return x;
  }();
  return l;
}

Word w(std::string_view s) { return *lex().lookup(s); }

Error error_of(std::string_view text, const Grammar& g = {}) {
  try {
    parse(tokenize_text(text, lex()), g, lex());
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected a parse error for " << text);
  return Error(ErrorCode::BadRequest, "");
}

Prediction predict_text(std::string_view prefix, const Grammar& g = {}) {
  return predict(tokenize_text(prefix, lex()), g, lex());
}

bool has(const std::vector<std::string>& v, std::string_view s) { return std::find(v.begin(), v.end(), s) != v.end(); }

std::vector<std::string> names(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& x : ws) out.push_back(x.surface);
  return out;
}

}  // namespace

TEST_CASE("parse: universal") {
  SimpleSentence expected;
  expected.subject.kind = SubjectNp::Kind::Every;
  expected.subject.word = w("canal");
  expected.predicates.preds.push_back(Predicate{Predicate::Kind::IsA, w("waterbody"), std::nullopt});
  CHECK(parse_text("every canal is a waterbody .", lex()) == SentenceAst{expected});
}

TEST_CASE("parse: conditional with variables") {
  Conditional c;
  Clause ifc;
  ifc.subject = ClauseSubject{ClauseSubject::Kind::Something, std::nullopt, Var::X};
  ifc.predicates.preds.push_back(
      Predicate{Predicate::Kind::Verb, w("protects"), ObjectNp{ObjectNp::Kind::Something, std::nullopt, Var::Y}});
  c.if_clauses.push_back(ifc);
  c.then_clause.subject = ClauseSubject{ClauseSubject::Kind::VarRef, std::nullopt, Var::X};
  c.then_clause.predicates.preds.push_back(
      Predicate{Predicate::Kind::Verb, w("shelters"), ObjectNp{ObjectNp::Kind::VarRef, std::nullopt, Var::Y}});
  CHECK(parse_text("if something X protects something Y then X shelters Y .", lex()) == SentenceAst{c});
}

TEST_CASE("parse: corpus sentences are accepted with one derivation") {
  for (const auto& e : acewiki::testing::classification_corpus()) {
    CAPTURE(e.text);
    TokenList t = tokenize_text(e.text, lex());
    CHECK_NOTHROW(parse(t, Grammar{}, lex()));
    CHECK(count_derivations(t, lex()) == 1);
  }
}

TEST_CASE("parse: errors") {
  Error e = error_of("Y is a city .");
  CHECK(e.code() == ErrorCode::UnboundVariable);
  CHECK(e.position() == 0);

  e = error_of("canal every is .");
  CHECK(e.code() == ErrorCode::SyntaxError);
  CHECK(e.position() == 0);  // a noun cannot start a sentence

  e = error_of("Zurich every is .");
  CHECK(e.code() == ErrorCode::SyntaxError);
  CHECK(e.position() == 1);

  e = error_of("Zurich is a city");
  CHECK(e.code() == ErrorCode::SyntaxError);
  CHECK(e.position() == 4);

  e = error_of("every author is a author .");
  CHECK(e.code() == ErrorCode::SyntaxError);
  CHECK(e.position() == 4);

  // X is already taken
  e = error_of("something X borders something X .");
  CHECK(e.code() == ErrorCode::SyntaxError);

  // a variable inside a negation is not accessible afterwards
  e = error_of("Zurich does not borders something X and borders X .");
  CHECK(e.code() == ErrorCode::UnboundVariable);
  CHECK(e.position() == 8);
}

TEST_CASE("predict: empty prefix") {
  Prediction p = predict_text("");
  for (const char* s : {"every", "no", "a", "an", "something", "everything", "if", "it is false that"}) {
    CHECK(has(p.function_menu, s));
  }
  CHECK_FALSE(has(p.function_menu, "it"));
  CHECK_FALSE(has(p.function_menu, "is"));
  CHECK(names(p.category_menus[WordCategory::ProperName]) ==
        std::vector<std::string>{"Bob-Dylan", "Denmark", "Limmat", "Winston-Churchill", "Zurich"});
  CHECK(p.category_menus[WordCategory::Noun].empty());
  CHECK(p.category_menus.size() == 4);
  CHECK_FALSE(p.can_finish);
  CHECK(p.var_ref_menu.empty());
}

TEST_CASE("predict: object position") {
  Prediction p = predict_text("Limmat flows-through");
  CHECK_FALSE(p.category_menus[WordCategory::ProperName].empty());
  for (const char* s : {"a", "an", "something", "everything"}) CHECK(has(p.function_menu, s));
  CHECK_FALSE(p.can_finish);
}

TEST_CASE("predict: can finish") {
  CHECK(predict_text("Zurich is a city").can_finish);
  CHECK_FALSE(predict_text("Zurich is a").can_finish);
}

TEST_CASE("predict: article agreement") {
  Prediction a = predict_text("Zurich is a");
  Prediction an = predict_text("Zurich is an");
  CHECK(has(names(a.category_menus[WordCategory::Noun]), "city"));
  CHECK_FALSE(has(names(a.category_menus[WordCategory::Noun]), "author"));
  CHECK(has(names(an.category_menus[WordCategory::Noun]), "author"));
  CHECK_FALSE(has(names(an.category_menus[WordCategory::Noun]), "city"));
}

TEST_CASE("predict: variable menus") {
  Prediction p = predict_text("if something");
  CHECK(p.var_intro_allowed);
  CHECK(p.var_intro_menu == std::vector<Var>{Var::X, Var::Y, Var::Z});
  p = predict_text("if something X borders something Y then");
  CHECK(p.var_ref_menu == std::vector<Var>{Var::X, Var::Y});
  CHECK_FALSE(p.var_intro_allowed);
}

TEST_CASE("predict: dead prefix") {
  try {
    predict_text("is");
    FAIL("expected DeadPrefix");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DeadPrefix);
    CHECK(e.position() == 0);
  }
}

TEST_CASE("restrict") {
  CHECK_THROWS_AS(restrict(Grammar{}, {}), Error);
  Grammar ia = restrict(Grammar{}, {SentencePattern::IndividualAssignment});
  CHECK_NOTHROW(parse(tokenize_text("Zurich is a city .", lex()), ia, lex()));
  CHECK(error_of("every canal is a waterbody .", ia).code() == ErrorCode::SyntaxError);
  CHECK(error_of("Zurich is a city and is a river .", ia).code() == ErrorCode::SyntaxError);

  Grammar ci = restrict(Grammar{}, {SentencePattern::ConceptInclusion});
  Prediction p = predict(TokenList{}, ci, lex());
  CHECK(p.function_menu == std::vector<std::string>{"every"});
  for (const auto& [cat, menu] : p.category_menus) CHECK(menu.empty());
  p = predict(tokenize_text("every canal is", lex()), ci, lex());
  CHECK(p.function_menu == std::vector<std::string>{"a", "an"});

  // intersection when restricting twice
  Grammar both = restrict(restrict(Grammar{}, {SentencePattern::ConceptInclusion, SentencePattern::Other}),
                          {SentencePattern::Other, SentencePattern::RoleInstance});
  CHECK(both.patterns() == PatternSet{SentencePattern::Other});
}

TEST_CASE("restrict: accepted sentences match pattern_of") {
  for (const auto& e : acewiki::testing::classification_corpus()) {
    SentencePattern p = pattern_of(parse_text(e.text, lex()));
    TokenList t = tokenize_text(e.text, lex());
    CHECK(automaton_pattern(t, lex()) == p);
    for (SentencePattern q : kAllPatterns) {
      Grammar g = restrict(Grammar{}, {q});
      bool ok = true;
      try {
        parse(t, g, lex());
      } catch (const Error&) {
        ok = false;
      }
      CHECK(ok == (p == q));
    }
  }
}

TEST_CASE("verbalize") {
  SimpleSentence s;
  s.subject = SubjectNp{SubjectNp::Kind::ProperName, w("Zurich"), std::nullopt, std::nullopt};
  s.predicates.preds.push_back(Predicate{Predicate::Kind::IsA, w("city"), std::nullopt});
  CHECK(render(verbalize(s)) == "Zurich is a city .");
  std::string churchill = "it is false that Winston-Churchill is a prime-minister of Denmark .";
  CHECK(render(verbalize(parse_text(churchill, lex()))) == churchill);
  for (const auto& e : acewiki::testing::classification_corpus()) {
    SentenceAst ast = parse_text(e.text, lex());
    TokenList back = verbalize(ast);
    CHECK(render(back) == e.text);
    CHECK(parse(back, Grammar{}, lex()) == ast);
  }
}
