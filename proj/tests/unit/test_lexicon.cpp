#include <doctest.h>

#include <algorithm>

#include "acewiki/error.hpp"
#include "acewiki/lexicon.hpp"
#include "acewiki/token.hpp"

using namespace acewiki;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::BadRequest;
}

std::vector<std::string> names(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.surface);
  return out;
}

}  // namespace

TEST_CASE("add and lookup") {
  Lexicon lex;
  Word z = lex.add_word(WordCategory::ProperName, "Zurich");
  CHECK(z.category == WordCategory::ProperName);
  CHECK(z.surface == "Zurich");
  Word f = lex.add_word(WordCategory::TransitiveVerb, "flows-through");
  CHECK(f.category == WordCategory::TransitiveVerb);
  Word part = lex.add_word(WordCategory::OfConstruct, "part");
  CHECK(lex.lookup("Zurich") == z);
  CHECK(lex.lookup("part") == part);
  CHECK(part.display() == "part of");
  CHECK(part.symbol() == "part-of");
  CHECK_FALSE(lex.lookup("Atlantis"));
  CHECK_FALSE(lex.lookup("zurich"));
  CHECK(lex.find(z.id) == z);
}

TEST_CASE("add errors") {
  Lexicon lex;
  lex.add_word(WordCategory::Noun, "city");
  CHECK(code_of([&] { lex.add_word(WordCategory::Noun, "every"); }) == ErrorCode::ReservedWord);
  CHECK(code_of([&] { lex.add_word(WordCategory::Noun, "an"); }) == ErrorCode::ReservedWord);
  CHECK(code_of([&] { lex.add_word(WordCategory::ProperName, "X"); }) == ErrorCode::ReservedWord);
  CHECK(code_of([&] { lex.add_word(WordCategory::Noun, "city"); }) == ErrorCode::DuplicateSurface);
  CHECK(code_of([&] { lex.add_word(WordCategory::ProperName, "city"); }) == ErrorCode::DuplicateSurface);
  CHECK(code_of([&] { lex.add_word(WordCategory::Noun, "new york"); }) == ErrorCode::InvalidSurface);
  CHECK(code_of([&] { lex.add_word(WordCategory::Noun, ""); }) == ErrorCode::InvalidSurface);
  CHECK(code_of([&] { lex.add_word(WordCategory::Noun, "a.b"); }) == ErrorCode::InvalidSurface);
  lex.add_word(WordCategory::OfConstruct, "part");
  CHECK(code_of([&] { lex.add_word(WordCategory::TransitiveVerb, "part-of"); }) == ErrorCode::DuplicateSurface);
  CHECK(lex.size() == 2);
}

TEST_CASE("reserved words never enter the lexicon") {
  Lexicon lex;
  for (const auto& r : reserved_words()) {
    CHECK_THROWS_AS(lex.add_word(WordCategory::Noun, r), Error);
  }
  CHECK(lex.empty());
}

TEST_CASE("complete_prefix") {
  Lexicon lex;
  lex.add_word(WordCategory::ProperName, "Zurich");
  lex.add_word(WordCategory::ProperName, "Zug");
  lex.add_word(WordCategory::ProperName, "Limmat");
  lex.add_word(WordCategory::Noun, "country");
  lex.add_word(WordCategory::Noun, "city");
  CHECK(names(lex.complete_prefix("Zu", WordCategory::ProperName)) == std::vector<std::string>{"Zug", "Zurich"});
  CHECK(names(lex.complete_prefix("", WordCategory::Noun)) == std::vector<std::string>{"city", "country"});
  CHECK(lex.complete_prefix("x", WordCategory::Noun).empty());
  // monotone in the prefix
  for (std::string p : {"", "Z", "Zu", "Zur"}) {
    auto longer = lex.complete_prefix(p + "u", WordCategory::ProperName);
    auto shorter = lex.complete_prefix(p, WordCategory::ProperName);
    for (const auto& w : longer) CHECK(std::find(shorter.begin(), shorter.end(), w) != shorter.end());
  }
}

TEST_CASE("alphabetical order ignores case") {
  CHECK(alphabetical_less("apple", "Banana"));
  CHECK(alphabetical_less("Apple", "banana"));
  CHECK_FALSE(alphabetical_less("b", "A"));
}

TEST_CASE("remove_word") {
  Lexicon lex;
  Word zug = lex.add_word(WordCategory::ProperName, "Zug");
  lex.remove_word(zug.id);
  CHECK_FALSE(lex.lookup("Zug"));
  CHECK(code_of([&] { lex.remove_word(zug.id); }) == ErrorCode::UnknownWord);
  // the surface is free again and the last add wins
  Word again = lex.add_word(WordCategory::Noun, "Zug");
  CHECK(lex.lookup("Zug") == again);
}

TEST_CASE("text round trip") {
  Lexicon lex;
  lex.add_word(WordCategory::ProperName, "Zurich");
  lex.add_word(WordCategory::Noun, "city");
  lex.add_word(WordCategory::TransitiveVerb, "borders");
  lex.add_word(WordCategory::OfConstruct, "part");
  std::string text = lex.to_text();
  CHECK(text == "word pn Zurich\nword noun city\nword tv borders\nword of part\n");
  CHECK(Lexicon::from_text(text).to_text() == text);
  try {
    Lexicon::from_text("word pn A\nword bogus B\n");
    FAIL("expected FormatError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FormatError);
    CHECK(e.line() == 2);
  }
}

TEST_CASE("tokenize") {
  Lexicon lex;
  lex.add_word(WordCategory::ProperName, "Zurich");
  lex.add_word(WordCategory::Noun, "city");
  TokenList t = tokenize_text("Zurich is a city .", lex);
  REQUIRE(t.size() == 5);
  CHECK(t[0].kind == TokenKind::LexWord);
  CHECK(t[1].kind == TokenKind::FunctionWord);
  CHECK(t[4].kind == TokenKind::Period);
  CHECK(tokenize_text("X", lex)[0].kind == TokenKind::Variable);
  CHECK(render(t) == "Zurich is a city .");
  try {
    tokenize_text("Zurich is a town .", lex);
    FAIL("expected LexicalError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LexicalError);
    CHECK(e.position() == 3);
  }
}
