#pragma once

#include <json.hpp>

#include "acewiki/error.hpp"
#include "acewiki/grammar.hpp"
#include "acewiki/wiki.hpp"

// JSON renderings used by the HTTP API. Field names are documented in
// docs/api.md.
namespace acewiki {

std::string_view category_json_key(WordCategory c);  // "properName", "noun", ...

nlohmann::json to_json(const Word& w);
nlohmann::json to_json(const Sentence& s);
nlohmann::json to_json(const Article& a);
nlohmann::json to_json(const Prediction& p);
nlohmann::json to_json(const StatsReport& r);
nlohmann::json to_json(const Error& e);

// HTTP status for an error code.
int http_status(ErrorCode code);

}  // namespace acewiki
