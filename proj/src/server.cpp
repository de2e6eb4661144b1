#include "acewiki/server.hpp"

#include <httplib.h>

#include <fstream>
#include <mutex>

#include "acewiki/json.hpp"

namespace acewiki {

using nlohmann::json;

namespace {

Error bad_request(const std::string& message) { return Error(ErrorCode::BadRequest, message); }

json parse_body(const httplib::Request& req) {
  json body;
  try {
    body = json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw bad_request(std::string("invalid JSON: ") + e.what());
  }
  if (!body.is_object()) throw bad_request("request body must be a JSON object");
  return body;
}

std::vector<std::string> string_array(const json& body, const char* field, bool required) {
  std::vector<std::string> out;
  if (!body.contains(field)) {
    if (required) throw bad_request(std::string("missing field '") + field + "'");
    return out;
  }
  const json& v = body.at(field);
  if (!v.is_array()) throw bad_request(std::string("field '") + field + "' must be an array of strings");
  for (const auto& e : v) {
    if (!e.is_string()) throw bad_request(std::string("field '") + field + "' must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::string string_field(const json& body, const char* field) {
  if (!body.contains(field) || !body.at(field).is_string()) {
    throw bad_request(std::string("missing string field '") + field + "'");
  }
  return body.at(field).get<std::string>();
}

std::optional<std::uint64_t> uint_field(const json& body, const char* field, bool required) {
  if (!body.contains(field)) {
    if (required) throw bad_request(std::string("missing field '") + field + "'");
    return std::nullopt;
  }
  const json& v = body.at(field);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw bad_request(std::string("field '") + field + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

Grammar grammar_from(const json& body) {
  if (!body.contains("restrict") || body.at("restrict").is_null()) return Grammar{};
  PatternSet set;
  for (const auto& name : string_array(body, "restrict", true)) {
    auto p = pattern_from_string(name);
    if (!p) throw bad_request("unknown sentence pattern '" + name + "'");
    set.insert(*p);
  }
  return restrict(Grammar{}, set);
}

std::uint64_t parse_id(const std::string& s) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw bad_request("bad id '" + s + "'");
}

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

}  // namespace

struct ApiServer::Impl {
  httplib::Server http;
  std::optional<std::filesystem::path> wiki_file;

  mutable std::mutex state_mutex;  // guards `current`
  std::shared_ptr<const Wiki> current;
  std::mutex write_mutex;  // serializes mutations

  std::shared_ptr<const Wiki> snapshot() const {
    std::lock_guard lock(state_mutex);
    return current;
  }

  void persist(const Wiki& wiki) {
    if (!wiki_file) return;
    auto tmp = *wiki_file;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << wiki.export_text();
      if (!out) throw Error(ErrorCode::StorageError, "cannot write " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, *wiki_file, ec);
    if (ec) throw Error(ErrorCode::StorageError, "cannot replace " + wiki_file->string() + ": " + ec.message());
  }

  // Runs `f` on a private copy and publishes it only if everything succeeded.
  template <class F>
  auto mutate(F&& f) {
    std::lock_guard lock(write_mutex);
    auto next = std::make_shared<Wiki>(*snapshot());
    auto result = f(*next);
    persist(*next);
    std::lock_guard state(state_mutex);
    current = std::move(next);
    return result;
  }

  template <class F>
  void guarded(httplib::Response& res, F&& f) {
    try {
      f();
    } catch (const Error& e) {
      send_json(res, http_status(e.code()), to_json(e));
    } catch (const json::exception& e) {
      send_json(res, 400, to_json(bad_request(e.what())));
    }
    res.set_header("X-Wiki-Revision", std::to_string(snapshot()->revision()));
  }

  void routes();
};

void ApiServer::Impl::routes() {
  using httplib::Request;
  using httplib::Response;

  http.Get("/words", [this](const Request&, Response& res) {
    guarded(res, [&] {
      json out = json::array();
      for (const auto& w : snapshot()->lexicon().words()) out.push_back(to_json(w));
      send_json(res, 200, out);
    });
  });

  http.Post("/words", [this](const Request& req, Response& res) {
    guarded(res, [&] {
      json body = parse_body(req);
      std::string code = string_field(body, "category");
      auto cat = category_from_code(code);
      if (!cat) throw bad_request("unknown category '" + code + "'");
      std::string surface = string_field(body, "surface");
      Word w = mutate([&](Wiki& wiki) { return wiki.add_word(*cat, surface); });
      send_json(res, 201, to_json(w));
    });
  });

  http.Delete(R"(/words/([^/]+))", [this](const Request& req, Response& res) {
    guarded(res, [&] {
      std::string surface = req.matches[1];
      Word w = mutate([&](Wiki& wiki) {
        auto found = wiki.lexicon().lookup(surface);
        wiki.remove_word(surface);
        return *found;
      });
      send_json(res, 200, to_json(w));
    });
  });

  http.Get(R"(/articles/([^/]+))", [this](const Request& req, Response& res) {
    guarded(res, [&] { send_json(res, 200, to_json(snapshot()->article(req.matches[1].str()))); });
  });

  http.Get("/sentences", [this](const Request&, Response& res) {
    guarded(res, [&] {
      json out = json::array();
      for (const auto& [id, s] : snapshot()->sentences()) out.push_back(to_json(s));
      send_json(res, 200, out);
    });
  });

  http.Get(R"(/sentences/([^/]+))", [this](const Request& req, Response& res) {
    guarded(res, [&] { send_json(res, 200, to_json(snapshot()->sentence(parse_id(req.matches[1])))); });
  });

  http.Post("/sentences", [this](const Request& req, Response& res) {
    guarded(res, [&] {
      json body = parse_body(req);
      auto tokens = string_array(body, "tokens", true);
      Grammar g = grammar_from(body);
      auto expected = uint_field(body, "expectedRevision", false);
      Sentence s = mutate([&](Wiki& wiki) { return wiki.create_sentence(tokens, g, expected); });
      send_json(res, 201, to_json(s));
    });
  });

  http.Put(R"(/sentences/([^/]+))", [this](const Request& req, Response& res) {
    guarded(res, [&] {
      SentenceId id = parse_id(req.matches[1]);
      json body = parse_body(req);
      auto tokens = string_array(body, "tokens", true);
      auto version = *uint_field(body, "expectedVersion", true);
      Grammar g = grammar_from(body);
      Sentence s = mutate([&](Wiki& wiki) { return wiki.edit_sentence(id, version, tokens, g); });
      send_json(res, 200, to_json(s));
    });
  });

  http.Delete(R"(/sentences/([^/]+))", [this](const Request& req, Response& res) {
    guarded(res, [&] {
      SentenceId id = parse_id(req.matches[1]);
      if (!req.has_param("expectedVersion")) throw bad_request("missing query parameter 'expectedVersion'");
      std::uint64_t version = parse_id(req.get_param_value("expectedVersion"));
      mutate([&](Wiki& wiki) {
        wiki.delete_sentence(id, version);
        return 0;
      });
      send_json(res, 200, {{"deleted", id}});
    });
  });

  http.Post("/notes", [this](const Request& req, Response& res) {
    guarded(res, [&] {
      json body = parse_body(req);
      std::string word = string_field(body, "word");
      std::string text = string_field(body, "text");
      mutate([&](Wiki& wiki) {
        wiki.add_note(word, text);
        return 0;
      });
      send_json(res, 201, {{"word", word}, {"text", text}});
    });
  });

  http.Post("/predict", [this](const Request& req, Response& res) {
    guarded(res, [&] {
      json body = parse_body(req);
      auto prefix = string_array(body, "prefix", true);
      Grammar g = grammar_from(body);
      send_json(res, 200, to_json(snapshot()->predict(prefix, g)));
    });
  });

  http.Get("/export", [this](const Request&, Response& res) {
    guarded(res, [&] {
      res.status = 200;
      res.set_content(snapshot()->export_text(), "text/plain; charset=utf-8");
    });
  });

  http.Post("/import", [this](const Request& req, Response& res) {
    guarded(res, [&] {
      Wiki imported = Wiki::import_text(req.body);
      auto rev = mutate([&](Wiki& wiki) {
        wiki.replace_with(std::move(imported));
        return wiki.revision();
      });
      auto snap = snapshot();
      send_json(res, 200,
                {{"revision", rev}, {"words", snap->lexicon().size()}, {"sentences", snap->sentences().size()}});
    });
  });

  http.Get("/stats", [this](const Request&, Response& res) {
    guarded(res, [&] { send_json(res, 200, to_json(snapshot()->stats())); });
  });

  http.set_error_handler([this](const Request&, Response& res) {
    if (res.body.empty()) {
      Error e(ErrorCode::BadRequest, "no such endpoint");
      res.set_content(to_json(e).dump(), "application/json");
    }
    res.set_header("X-Wiki-Revision", std::to_string(snapshot()->revision()));
  });
}

ApiServer::ApiServer(Wiki wiki, std::optional<std::filesystem::path> wiki_file) : impl_(std::make_unique<Impl>()) {
  impl_->wiki_file = std::move(wiki_file);
  impl_->current = std::make_shared<const Wiki>(std::move(wiki));
  impl_->routes();
}

ApiServer::~ApiServer() { stop(); }

int ApiServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->http.bind_to_any_port(host);
  return impl_->http.bind_to_port(host, port) ? port : -1;
}

bool ApiServer::run() { return impl_->http.listen_after_bind(); }

void ApiServer::stop() { impl_->http.stop(); }

void ApiServer::wait_until_ready() const { impl_->http.wait_until_ready(); }

std::shared_ptr<const Wiki> ApiServer::snapshot() const { return impl_->snapshot(); }

}  // namespace acewiki
