#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "acewiki/json.hpp"
#include "support/corpus.hpp"
#include "support/server_fixture.hpp"

using namespace acewiki;
using acewiki::testing::RunningServer;
using nlohmann::json;

namespace {

Wiki corpus_wiki() { return Wiki::import_text(acewiki::testing::corpus_wiki_file()); }

json body_of(const httplib::Result& r) { return json::parse(r->body); }

std::vector<std::string> tokens(std::string_view text) { return split_words(text); }

}  // namespace

TEST_CASE("read endpoints") {
  RunningServer s(corpus_wiki());
  auto words = s.client().Get("/words");
  REQUIRE(words);
  CHECK(words->status == 200);
  CHECK(body_of(words).size() == 22);
  CHECK(body_of(words)[0] == json{{"id", 1}, {"category", "pn"}, {"surface", "Zurich"}, {"display", "Zurich"}});
  CHECK(words->has_header("X-Wiki-Revision"));

  auto article = s.client().Get("/articles/canal");
  REQUIRE(article);
  CHECK(article->status == 200);
  json a = body_of(article);
  REQUIRE(a["boxes"]["hierarchy"].size() == 1);
  CHECK(a["boxes"]["hierarchy"][0]["owl"] == true);
  CHECK(a["boxes"]["hierarchy"][0]["triangle"] == "blue");
  CHECK(a["boxes"]["hierarchy"][0]["text"] == "every canal is a waterbody .");
  CHECK(a["header"] == json{{"category", "noun"}, {"surface", "canal"}});

  auto part = body_of(s.client().Get("/articles/part"));
  CHECK(part["header"]["surface"] == "part of");

  auto missing = s.client().Get("/articles/nope");
  CHECK(missing->status == 404);
  CHECK(body_of(missing)["code"] == "UnknownWord");

  auto sentence = s.client().Get("/sentences/2");
  CHECK(body_of(sentence)["axiom"] == "ClassAssertion(city, Zurich)");
  CHECK(s.client().Get("/sentences/99")->status == 404);
  CHECK(body_of(s.client().Get("/sentences/abc"))["code"] == "BadRequest");
  auto nowhere = s.client().Get("/nowhere");
  CHECK(nowhere->status == 404);
  CHECK(body_of(nowhere).contains("code"));
}

TEST_CASE("empty wiki") {
  RunningServer s(Wiki{});
  CHECK(body_of(s.client().Get("/words")) == json::array());
  CHECK(s.client().Get("/words")->get_header_value("X-Wiki-Revision") == "0");
}

TEST_CASE("predict endpoint") {
  Wiki wiki = corpus_wiki();
  RunningServer s(wiki);
  auto r = s.post("/predict", {{"prefix", json::array()}});
  REQUIRE(r->status == 200);
  json p = body_of(r);
  CHECK(p["canFinish"] == false);
  CHECK(p == to_json(predict(TokenList{}, Grammar{}, wiki.lexicon())));
  // pure: same request, same body
  CHECK(s.post("/predict", {{"prefix", json::array()}})->body == r->body);

  r = s.post("/predict", {{"prefix", {"is"}}});
  CHECK(r->status == 400);
  CHECK(body_of(r)["code"] == "DeadPrefix");
  CHECK(body_of(r)["position"] == 0);

  r = s.post("/predict", {{"prefix", {"Zurich", "xyz"}}});
  CHECK(r->status == 400);
  CHECK(body_of(r)["code"] == "LexicalError");
  CHECK(body_of(r)["position"] == 1);

  r = s.post("/predict", {{"prefix", json::array()}, {"restrict", {"ConceptInclusion"}}});
  CHECK(body_of(r)["functionMenu"] == json{"every"});
  CHECK(s.post("/predict", {{"prefix", json::array()}, {"restrict", json::array()}})->status == 400);
  CHECK(s.post("/predict", {{"prefix", json::array()}, {"restrict", {"Bogus"}}})->status == 400);
  CHECK(s.client().Post("/predict", "{", "application/json")->status == 400);
}

TEST_CASE("ranking through the API") {
  Wiki wiki;
  for (const char* pn : {"Limmat", "Matterhorn", "Zurich"}) wiki.add_word(WordCategory::ProperName, pn);
  for (const char* n : {"city", "mountain"}) wiki.add_word(WordCategory::Noun, n);
  wiki.add_word(WordCategory::TransitiveVerb, "flows-through");
  RunningServer s(std::move(wiki));
  for (const char* t : {"if something flows-through something Y then Y is a city .", "Zurich is a city .",
                        "Matterhorn is a mountain ."}) {
    REQUIRE(s.post("/sentences", {{"tokens", tokens(t)}})->status == 201);
  }
  json p = body_of(s.post("/predict", {{"prefix", {"Limmat", "flows-through"}}}));
  CHECK(p["categoryMenus"]["properName"] == json{"Zurich", "Limmat", "Matterhorn"});
}

TEST_CASE("mutations") {
  RunningServer s(corpus_wiki());
  auto rev = [&](const httplib::Result& r) { return std::stoull(r->get_header_value("X-Wiki-Revision")); };
  auto before = s.client().Get("/words");

  auto r = s.post("/sentences", {{"tokens", {"every", "canal", "is", "a", "waterbody", "."}}});
  CHECK(r->status == 201);
  json created = body_of(r);
  CHECK(created["pattern"] == "ConceptInclusion");
  CHECK(created["version"] == 1);
  CHECK(created["box"] == "hierarchy");
  CHECK(rev(r) == rev(before) + 1);
  std::string id = std::to_string(created["id"].get<int>());

  r = s.put("/sentences/" + id, {{"tokens", tokens("every canal is a city .")}, {"expectedVersion", 1}});
  CHECK(r->status == 200);
  CHECK(body_of(r)["version"] == 2);

  r = s.put("/sentences/" + id, {{"tokens", tokens("every canal is a city .")}, {"expectedVersion", 1}});
  CHECK(r->status == 409);
  CHECK(body_of(r)["code"] == "VersionConflict");

  r = s.post("/words", {{"category", "noun"}, {"surface", "every"}});
  CHECK(r->status == 400);
  CHECK(body_of(r)["code"] == "ReservedWord");
  r = s.post("/words", {{"category", "noun"}, {"surface", "canal"}});
  CHECK(r->status == 409);
  r = s.post("/words", {{"category", "pn"}, {"surface", "Zug"}});
  CHECK(r->status == 201);
  CHECK(body_of(r)["surface"] == "Zug");

  r = s.post("/sentences", {{"tokens", tokens("Zug is a .")}});
  CHECK(r->status == 400);
  CHECK(body_of(r)["code"] == "ParseFailed");
  CHECK(body_of(r)["position"] == 3);

  r = s.post("/sentences", {{"tokens", tokens("Zug is a city .")}, {"expectedRevision", 0}});
  CHECK(r->status == 409);
  CHECK(body_of(r)["code"] == "StaleRevision");

  r = s.post("/sentences", {{"tokens", tokens("Zug is a city .")}, {"restrict", {"ConceptInclusion"}}});
  CHECK(r->status == 400);

  CHECK(s.client().Delete("/sentences/" + id)->status == 400);
  CHECK(s.client().Delete("/sentences/" + id + "?expectedVersion=1")->status == 409);
  CHECK(s.client().Delete("/sentences/" + id + "?expectedVersion=2")->status == 200);
  CHECK(s.client().Get("/sentences/" + id)->status == 404);

  CHECK(s.client().Delete("/words/city")->status == 409);
  CHECK(s.client().Delete("/words/Zug")->status == 200);
  CHECK(s.client().Delete("/words/Zug")->status == 404);

  r = s.post("/notes", {{"word", "Zurich"}, {"text", "on the Limmat"}});
  CHECK(r->status == 201);
  json a = body_of(s.client().Get("/articles/Zurich"));
  CHECK(a["comments"] == json{{{"position", 0}, {"text", "on the Limmat"}, {"italic", true}}});
}

TEST_CASE("failed mutations leave the export unchanged") {
  RunningServer s(corpus_wiki());
  std::string before = s.export_text();
  auto rev = s.client().Get("/export")->get_header_value("X-Wiki-Revision");
  s.post("/sentences", {{"tokens", tokens("canal every is .")}});
  s.post("/sentences", {{"tokens", "not an array"}});
  s.post("/sentences", {{"tokens", tokens("Zurich is a city .")}, {"expectedRevision", 12345}});
  s.put("/sentences/1", {{"tokens", tokens("Zurich is a city .")}, {"expectedVersion", 9}});
  s.put("/sentences/1", {{"tokens", tokens("Zurich is a .")}, {"expectedVersion", 1}});
  s.client().Delete("/sentences/1?expectedVersion=3");
  s.client().Delete("/sentences/77?expectedVersion=1");
  s.client().Delete("/words/city");
  s.post("/words", {{"category", "noun"}, {"surface", "a b"}});
  s.post("/words", {{"category", "zz"}, {"surface", "ok"}});
  s.post("/notes", {{"word", "nope"}, {"text", "x"}});
  s.client().Post("/import", "word pn A\nsentence A is .\n", "text/plain");
  CHECK(s.export_text() == before);
  CHECK(s.client().Get("/export")->get_header_value("X-Wiki-Revision") == rev);
}

TEST_CASE("export, import, stats") {
  RunningServer s(Wiki{});
  std::string file = acewiki::testing::corpus_wiki_file();
  auto r = s.client().Post("/import", file, "text/plain");
  CHECK(r->status == 200);
  CHECK(body_of(r)["sentences"] == 11);
  std::string first = s.export_text();
  CHECK(s.client().Post("/import", first, "text/plain")->status == 200);
  CHECK(s.export_text() == first);

  std::string bad = "word pn A\nword noun b\n#\n\nsentence A is a b .\nword pn C\nnonsense\n";
  r = s.client().Post("/import", bad, "text/plain");
  CHECK(r->status == 400);
  CHECK(body_of(r)["code"] == "FormatError");
  CHECK(body_of(r)["line"] == 7);
  CHECK(s.export_text() == first);

  json stats = body_of(s.client().Get("/stats"));
  CHECK(stats["sentences"] == 11);
  CHECK(stats["patternCounts"]["ConceptInclusion"] == 1);
  CHECK(stats["patternCounts"]["Other"] == 2);
  CHECK(stats["negOrImpl"] == 8);
  CHECK_FALSE(stats.contains("S"));
}

TEST_CASE("write-through persistence") {
  auto dir = std::filesystem::temp_directory_path() / "acewiki_server_test";
  std::filesystem::create_directories(dir);
  auto file = dir / "wiki.txt";
  std::filesystem::remove(file);
  {
    RunningServer s(Wiki{}, file);
    s.post("/words", {{"category", "pn"}, {"surface", "Zurich"}});
    s.post("/words", {{"category", "noun"}, {"surface", "city"}});
    s.post("/sentences", {{"tokens", tokens("Zurich is a city .")}});
    std::ifstream in(file);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == s.export_text());
  }
  std::filesystem::remove_all(dir);
}
