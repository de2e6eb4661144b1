#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "acewiki/wiki.hpp"

namespace acewiki {

// HTTP/JSON front end. Readers work on immutable snapshots; mutations are
// serialized, applied to a copy, written through to the wiki file (when
// configured) and then published.
class ApiServer {
 public:
  explicit ApiServer(Wiki wiki, std::optional<std::filesystem::path> wiki_file = std::nullopt);
  ~ApiServer();
  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  // Port 0 picks a free port. Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  // Serves until stop(). Requires a successful bind().
  bool run();
  void stop();
  void wait_until_ready() const;

  std::shared_ptr<const Wiki> snapshot() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace acewiki
