#include "acewiki/json.hpp"

namespace acewiki {

using nlohmann::json;

std::string_view category_json_key(WordCategory c) {
  switch (c) {
    case WordCategory::ProperName: return "properName";
    case WordCategory::Noun: return "noun";
    case WordCategory::TransitiveVerb: return "transitiveVerb";
    case WordCategory::OfConstruct: return "ofConstruct";
  }
  return "noun";
}

json to_json(const Word& w) {
  return {{"id", w.id.value},
          {"category", std::string(category_code(w.category))},
          {"surface", w.surface},
          {"display", w.display()}};
}

json to_json(const Sentence& s) {
  json tokens = json::array();
  for (const auto& t : s.tokens) tokens.push_back(t.surface);
  auto box = box_of(s.pattern);
  return {{"id", s.id},
          {"version", s.version},
          {"text", s.text()},
          {"tokens", tokens},
          {"pattern", std::string(to_string(s.pattern))},
          {"box", box ? json(std::string(to_string(*box))) : json(nullptr)},
          {"axiomKind", std::string(to_string(s.axiom.kind))},
          {"axiom", to_string(s.axiom)},
          {"owl", s.axiom.owl_compatible()},
          {"triangle", s.axiom.owl_compatible() ? "blue" : "red"},
          {"italic", false}};
}

json to_json(const Article& a) {
  json boxes = json::object();
  for (const auto& [box, sentences] : a.boxes) {
    json list = json::array();
    for (const auto& s : sentences) list.push_back(to_json(s));
    boxes[std::string(to_string(box))] = list;
  }
  json unrestricted = json::array();
  for (const auto& s : a.unrestricted) unrestricted.push_back(to_json(s));
  json comments = json::array();
  for (std::size_t i = 0; i < a.comments.size(); ++i) {
    comments.push_back({{"position", i}, {"text", a.comments[i]}, {"italic", true}});
  }
  return {{"word", to_json(a.word)},
          {"header", {{"category", std::string(category_code(a.word.category))}, {"surface", a.word.display()}}},
          {"boxes", boxes},
          {"unrestricted", unrestricted},
          {"comments", comments}};
}

json to_json(const Prediction& p) {
  json menus = json::object();
  for (const auto& [cat, words] : p.category_menus) {
    json list = json::array();
    for (const auto& w : words) list.push_back(w.surface);
    menus[std::string(category_json_key(cat))] = list;
  }
  auto vars = [](const std::vector<Var>& vs) {
    json list = json::array();
    for (Var v : vs) list.push_back(std::string(var_name(v)));
    return list;
  };
  return {{"categoryMenus", menus},
          {"functionMenu", p.function_menu},
          {"varRefMenu", vars(p.var_ref_menu)},
          {"varIntroAllowed", p.var_intro_allowed},
          {"varIntroMenu", vars(p.var_intro_menu)},
          {"canFinish", p.can_finish}};
}

json to_json(const StatsReport& r) {
  json counts = json::object();
  for (const auto& [p, n] : r.pattern_counts) counts[std::string(to_string(p))] = n;
  json out = {{"sentences", r.sentences},
              {"patternCounts", counts},
              {"negOrImpl", r.neg_or_impl},
              {"negOrImplFraction", r.neg_or_impl_fraction}};
  if (r.s) {
    out["S"] = *r.s;
    out["Splus"] = *r.s_plus;
    out["Sminus"] = *r.s_minus;
    out["ratio"] = *r.ratio;
  }
  return out;
}

json to_json(const Error& e) {
  json out = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (e.position()) out["position"] = *e.position();
  if (e.line()) out["line"] = *e.line();
  return out;
}

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownWord:
    case ErrorCode::UnknownSentence: return 404;
    case ErrorCode::VersionConflict:
    case ErrorCode::DuplicateSurface:
    case ErrorCode::StaleRevision:
    case ErrorCode::WordInUse: return 409;
    case ErrorCode::StorageError: return 500;
    default: return 400;
  }
}

}  // namespace acewiki
