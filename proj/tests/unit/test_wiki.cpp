#include <doctest.h>

#include <algorithm>
#include <random>

#include "acewiki/error.hpp"
#include "acewiki/wiki.hpp"
#include "support/corpus.hpp"

using namespace acewiki;

namespace {

std::vector<std::string> w(std::string_view text) { return split_words(text); }

Wiki corpus_wiki() { return Wiki::import_text(acewiki::testing::corpus_wiki_file()); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::BadRequest;
}

std::vector<std::string> texts(const std::vector<Sentence>& ss) {
  std::vector<std::string> out;
  for (const auto& s : ss) out.push_back(s.text());
  return out;
}

}  // namespace

TEST_CASE("create sentence") {
  Wiki wiki = corpus_wiki();
  auto rev = wiki.revision();
  const Sentence& s = wiki.create_sentence(w("every canal is a waterbody ."));
  CHECK(s.pattern == SentencePattern::ConceptInclusion);
  CHECK(s.axiom.owl_compatible());
  CHECK(s.version == 1);
  CHECK(wiki.revision() == rev + 1);
  CHECK(wiki.kb().ancestors("canal").count("waterbody"));
  for (const char* word : {"canal", "waterbody"}) {
    Article a = wiki.article(word);
    CHECK(texts(a.boxes[Box::Hierarchy]) == std::vector<std::string>{"every canal is a waterbody .",
                                                                     "every canal is a waterbody ."});
  }
}

TEST_CASE("red sentences go to the unrestricted section") {
  Wiki wiki = corpus_wiki();
  Article a = wiki.article("animal");
  CHECK(texts(a.unrestricted) == std::vector<std::string>{"it is false that every animal is a mammal ."});
  CHECK_FALSE(a.unrestricted[0].axiom.owl_compatible());
  for (const auto& [box, ss] : a.boxes) CHECK(ss.empty());
}

TEST_CASE("duplicates are distinct sentences") {
  Wiki wiki;
  wiki.add_word(WordCategory::ProperName, "Zurich");
  wiki.add_word(WordCategory::Noun, "city");
  SentenceId a = wiki.create_sentence(w("Zurich is a city .")).id;
  SentenceId b = wiki.create_sentence(w("Zurich is a city .")).id;
  CHECK(a != b);
  CHECK(wiki.sentence(a).text() == wiki.sentence(b).text());
  // the shared axiom stays until the last copy goes
  wiki.delete_sentence(a, 1);
  CHECK(wiki.kb().instances_of("city").count("Zurich"));
  wiki.delete_sentence(b, 1);
  CHECK(wiki.kb().instances_of("city").empty());
}

TEST_CASE("edit sentence") {
  Wiki wiki = corpus_wiki();
  SentenceId id = 0;
  for (const auto& [sid, s] : wiki.sentences()) {
    if (s.text() == "a city is a landscape-element .") id = sid;
  }
  REQUIRE(id != 0);
  CHECK(wiki.sentence(id).pattern == SentencePattern::Existential);
  const Sentence& e = wiki.edit_sentence(id, 1, w("every city is a landscape-element ."));
  CHECK(e.pattern == SentencePattern::ConceptInclusion);
  CHECK(e.version == 2);
  CHECK(wiki.kb().ancestors("city").count("landscape-element"));

  std::string before = wiki.export_text();
  auto rev = wiki.revision();
  CHECK(code_of([&] { wiki.edit_sentence(id, 1, w("Zurich is a city .")); }) == ErrorCode::VersionConflict);
  CHECK(code_of([&] { wiki.edit_sentence(id, 2, w("Zurich is a .")); }) == ErrorCode::ParseFailed);
  CHECK(code_of([&] { wiki.edit_sentence(999, 1, w("Zurich is a city .")); }) == ErrorCode::UnknownSentence);
  CHECK(wiki.export_text() == before);
  CHECK(wiki.revision() == rev);

  // same tokens still bump the version
  CHECK(wiki.edit_sentence(id, 2, w("every city is a landscape-element .")).version == 3);
}

TEST_CASE("parse failures carry the position") {
  Wiki wiki = corpus_wiki();
  try {
    wiki.create_sentence(w("Zurich every is ."));
    FAIL("expected ParseFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseFailed);
    CHECK(e.position() == 1);
  }
}

TEST_CASE("box restriction on create") {
  Wiki wiki = corpus_wiki();
  Grammar assignments = restrict(Grammar{}, box_patterns(Box::Assignments));
  CHECK_NOTHROW(wiki.create_sentence(w("Limmat is a city ."), assignments));
  CHECK(code_of([&] { wiki.create_sentence(w("every city is a canal ."), assignments); }) == ErrorCode::ParseFailed);
}

TEST_CASE("stale revision") {
  Wiki wiki = corpus_wiki();
  auto rev = wiki.revision();
  CHECK(code_of([&] { wiki.create_sentence(w("Zurich is a city ."), {}, rev + 5); }) == ErrorCode::StaleRevision);
  CHECK_NOTHROW(wiki.create_sentence(w("Zurich is a city ."), {}, rev));
}

TEST_CASE("delete sentence") {
  Wiki wiki = corpus_wiki();
  SentenceId id = wiki.sentences().begin()->first;  // every canal is a waterbody
  CHECK(code_of([&] { wiki.delete_sentence(id, 7); }) == ErrorCode::VersionConflict);
  wiki.delete_sentence(id, 1);
  CHECK(code_of([&] { wiki.sentence(id); }) == ErrorCode::UnknownSentence);
  Article a = wiki.article("canal");
  CHECK(a.word.surface == "canal");
  for (const auto& [box, ss] : a.boxes) CHECK(ss.empty());
  CHECK(a.unrestricted.empty());
  CHECK(wiki.kb().ancestors("canal") == std::set<std::string>{"canal"});
}

TEST_CASE("words") {
  Wiki wiki = corpus_wiki();
  CHECK(code_of([&] { wiki.remove_word("city"); }) == ErrorCode::WordInUse);
  CHECK(code_of([&] { wiki.remove_word("nope"); }) == ErrorCode::UnknownWord);
  CHECK(code_of([&] { wiki.article("nope"); }) == ErrorCode::UnknownWord);
  wiki.add_word(WordCategory::ProperName, "Zug");
  wiki.add_note("Zug", "a small town");
  wiki.remove_word("Zug");
  CHECK_FALSE(wiki.lexicon().lookup("Zug"));
  CHECK(wiki.notes().empty());
}

TEST_CASE("article view") {
  Wiki wiki = corpus_wiki();
  wiki.add_note("Zurich", "largest city of Switzerland");
  Article a = wiki.article("Zurich");
  CHECK(texts(a.boxes[Box::Assignments]) == std::vector<std::string>{"Zurich is a city ."});
  CHECK(texts(a.unrestricted) == std::vector<std::string>{"Limmat flows-through Zurich ."});
  CHECK(a.comments == std::vector<std::string>{"largest city of Switzerland"});
  Article c = wiki.article("city");
  CHECK(texts(c.boxes[Box::DomainRange]) ==
        std::vector<std::string>{"if something flows-through something Y then Y is a city ."});
  // a three-word sentence shows up in all three articles
  for (const char* word : {"person", "writes", "author"}) {
    CHECK(texts(wiki.article(word).unrestricted) ==
          std::vector<std::string>{"every person who writes something is an author ."});
  }
}

TEST_CASE("export and import") {
  Wiki wiki = corpus_wiki();
  wiki.add_note("Zurich", "largest city of Switzerland");
  std::string text = wiki.export_text();
  CHECK(text.rfind("# acewiki wiki file\nword pn Zurich\n", 0) == 0);
  CHECK(text.find("sentence every canal is a waterbody .\n") != std::string::npos);
  CHECK(text.find("note Zurich largest city of Switzerland\n") != std::string::npos);
  Wiki again = Wiki::import_text(text);
  CHECK(again.export_text() == text);
  CHECK(again.kb().dump() == wiki.kb().dump());
  CHECK(Wiki::import_text("").sentences().empty());
  CHECK(Wiki().export_text() == "# acewiki wiki file\n");
}

TEST_CASE("import errors") {
  std::string bad = "word pn Zurich\nword noun city\n\n# fine\nsentence Zurich is a city .\nword pn Bern\nbogus line\n";
  try {
    Wiki::import_text(bad);
    FAIL("expected FormatError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FormatError);
    CHECK(e.line() == 7);
  }
  try {
    Wiki::import_text("word pn Zurich\nsentence Zurich is a town .\n");
    FAIL("expected UnknownWordInSentence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownWordInSentence);
    CHECK(e.line() == 2);
  }
  CHECK(code_of([] { Wiki::import_text("word pn Zurich\nsentence Zurich is .\n"); }) == ErrorCode::FormatError);
  CHECK(code_of([] { Wiki::import_text("word xx Zurich\n"); }) == ErrorCode::FormatError);
  CHECK(code_of([] { Wiki::import_text("word pn every\n"); }) == ErrorCode::FormatError);
  CHECK(code_of([] { Wiki::import_text("note Zurich hi\n"); }) == ErrorCode::FormatError);
}

TEST_CASE("stats") {
  Wiki wiki = corpus_wiki();
  StatsReport r = wiki.stats();
  CHECK(r.sentences == 11);
  CHECK(r.pattern_counts[SentencePattern::ConceptInclusion] == 1);
  CHECK(r.pattern_counts[SentencePattern::Other] == 2);
  CHECK(r.pattern_counts[SentencePattern::Existential] == 1);
  CHECK(r.pattern_counts[SentencePattern::RoleInstanceNegated] == 1);
  std::size_t sum = 0;
  for (const auto& [p, n] : r.pattern_counts) sum += n;
  CHECK(sum == 11);
  // hand count: canal, Bob-Dylan, Churchill, protects, flows-through rule,
  // animal, person, country
  CHECK(r.neg_or_impl == 8);
  CHECK(r.neg_or_impl_fraction == doctest::Approx(8.0 / 11.0));
  CHECK_FALSE(r.s);

  Annotations ann{{1, true}, {2, false}, {3, true}};
  r = wiki.stats(&ann);
  CHECK(*r.s == 11);
  CHECK(*r.s_plus == 2);
  CHECK(*r.s_minus == 9);
  CHECK(*r.ratio == doctest::Approx(2.0 / 11.0));
  Annotations unknown{{99, true}};
  CHECK(code_of([&] { wiki.stats(&unknown); }) == ErrorCode::AnnotationForUnknownSentence);
}

TEST_CASE("stats on assignment-only corpus") {
  Wiki wiki;
  wiki.add_word(WordCategory::Noun, "city");
  for (const char* pn : {"Zurich", "Bern", "Basel"}) {
    wiki.add_word(WordCategory::ProperName, pn);
    wiki.create_sentence(w(std::string(pn) + " is a city ."));
  }
  StatsReport r = wiki.stats();
  CHECK(r.pattern_counts[SentencePattern::IndividualAssignment] == 3);
  CHECK(r.neg_or_impl_fraction == 0.0);
}

TEST_CASE("annotation file") {
  Annotations a = parse_annotations("# judged\n1 true\n2 false\n\n3 true\n");
  CHECK(a == Annotations{{1, true}, {2, false}, {3, true}});
  CHECK(code_of([] { parse_annotations("1 true\n2 maybe\n"); }) == ErrorCode::FormatError);
}

TEST_CASE("ranked predict") {
  Wiki wiki;
  wiki.add_word(WordCategory::ProperName, "Limmat");
  wiki.add_word(WordCategory::ProperName, "Matterhorn");
  wiki.add_word(WordCategory::ProperName, "Zurich");
  wiki.add_word(WordCategory::Noun, "city");
  wiki.add_word(WordCategory::Noun, "mountain");
  wiki.add_word(WordCategory::Noun, "capital");
  wiki.add_word(WordCategory::TransitiveVerb, "flows-through");
  wiki.create_sentence(w("if something flows-through something Y then Y is a city ."));
  wiki.create_sentence(w("Zurich is a city ."));
  wiki.create_sentence(w("Matterhorn is a mountain ."));
  wiki.create_sentence(w("every capital is a city ."));
  auto names = [](const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& x : ws) out.push_back(x.surface);
    return out;
  };
  Prediction p = wiki.predict(w("Limmat flows-through"));
  CHECK(names(p.category_menus[WordCategory::ProperName]) ==
        std::vector<std::string>{"Zurich", "Limmat", "Matterhorn"});
  p = wiki.predict(w("Limmat flows-through a"));
  CHECK(names(p.category_menus[WordCategory::Noun]) == std::vector<std::string>{"capital", "city", "mountain"});
  // subject position is not ranked
  p = wiki.predict({});
  CHECK(names(p.category_menus[WordCategory::ProperName]) ==
        std::vector<std::string>{"Limmat", "Matterhorn", "Zurich"});
}

TEST_CASE("random operation sequences keep derived state coherent") {
  std::mt19937 rng(11);
  const auto& corpus = acewiki::testing::classification_corpus();
  for (int round = 0; round < 20; ++round) {
    Wiki wiki = Wiki::import_text(acewiki::testing::corpus_lexicon().to_text());
    for (int step = 0; step < 30; ++step) {
      std::string before = wiki.export_text();
      auto rev = wiki.revision();
      int op = static_cast<int>(rng() % 4);
      bool ok = true;
      try {
        const auto& e = corpus[rng() % corpus.size()];
        if (op == 0 || wiki.sentences().empty()) {
          wiki.create_sentence(w(e.text));
        } else {
          auto it = wiki.sentences().begin();
          std::advance(it, rng() % wiki.sentences().size());
          SentenceId id = it->first;
          std::uint64_t version = it->second.version + (rng() % 4 == 0 ? 1 : 0);
          if (op == 1) wiki.edit_sentence(id, version, w(e.text));
          if (op == 2) wiki.delete_sentence(id, version);
          if (op == 3) wiki.create_sentence(w("Zurich is ."));
        }
      } catch (const Error&) {
        ok = false;
      }
      if (ok) {
        CHECK(wiki.revision() > rev);
      } else {
        CHECK(wiki.revision() == rev);
        CHECK(wiki.export_text() == before);
      }
      KnowledgeBase fresh;
      for (const auto& [id, s] : wiki.sentences()) {
        SentenceAst ast = parse(s.tokens, Grammar{}, wiki.lexicon());
        CHECK(ast == s.ast);
        CHECK(classify(ast_to_drs(ast)) == s.axiom);
        CHECK(pattern_of(ast) == s.pattern);
        fresh.assert_axiom(s.axiom);
      }
      CHECK(fresh.dump() == wiki.kb().dump());
      CHECK(fresh.axioms() == wiki.kb().axioms());
    }
  }
}
