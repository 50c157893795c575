#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include "qq/service.hpp"

namespace qq::service {

/// HTTP/1.1 front end for a Service. Every request is logged to `log` as
/// one JSON line.
class HttpServer {
 public:
  HttpServer(Service& service, std::ostream* log = nullptr,
             std::optional<std::filesystem::path> web_dir = std::nullopt);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Blocks until stop().
  bool listen(const std::string& host, int port);
  /// Binds an ephemeral port and returns it; pair with listen_after_bind().
  int bind_to_any_port(const std::string& host);
  bool listen_after_bind();
  void wait_until_ready() const;
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace qq::service
