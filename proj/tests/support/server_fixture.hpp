#pragma once

#include <httplib.h>

#include <json.hpp>
#include <thread>

#include "acewiki/server.hpp"

namespace acewiki::testing {

// Runs an ApiServer on a free localhost port for the lifetime of the object.
class RunningServer {
 public:
  explicit RunningServer(Wiki wiki, std::optional<std::filesystem::path> file = std::nullopt)
      : server_(std::move(wiki), std::move(file)) {
    port_ = server_.bind("127.0.0.1", 0);
    thread_ = std::thread([this] { server_.run(); });
    server_.wait_until_ready();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }
  ~RunningServer() {
    server_.stop();
    thread_.join();
  }

  httplib::Client& client() { return *client_; }
  ApiServer& server() { return server_; }
  int port() const { return port_; }

  httplib::Result post(const std::string& path, const nlohmann::json& body) {
    return client_->Post(path, body.dump(), "application/json");
  }
  httplib::Result put(const std::string& path, const nlohmann::json& body) {
    return client_->Put(path, body.dump(), "application/json");
  }
  std::string export_text() { return client_->Get("/export")->body; }

 private:
  ApiServer server_;
  int port_ = -1;
  std::thread thread_;
  std::unique_ptr<httplib::Client> client_;
};

}  // namespace acewiki::testing
