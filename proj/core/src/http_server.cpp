#include "qq/http_server.hpp"

#include <httplib.h>

#include <chrono>

namespace qq::service {

struct HttpServer::Impl {
  Impl(Service& s, std::ostream* l) : service(s), log(l) {}
  Service& service;
  std::ostream* log;
  httplib::Server server;
  std::mutex log_mutex;
};

HttpServer::HttpServer(Service& service, std::ostream* log, std::optional<std::filesystem::path> web_dir)
    : impl_(std::make_unique<Impl>(service, log)) {
  auto& srv = impl_->server;
  auto* impl = impl_.get();

  const auto dispatch = [impl](const httplib::Request& req, httplib::Response& res) {
    const auto started = std::chrono::steady_clock::now();
    Request request{req.method, req.path, req.get_header_value("Authorization"), req.body};
    const auto response = impl->service.handle(request);
    res.status = response.status;
    res.set_content(response.body.dump(), "application/json");
    if (impl->log) {
      const auto micros =
          std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - started).count();
      const codec::json line = {{"ts", utc_now()},          {"method", req.method},
                                {"path", req.path},         {"status", response.status},
                                {"duration_ms", static_cast<double>(micros) / 1000.0}};
      std::lock_guard lock(impl->log_mutex);
      *impl->log << line.dump() << std::endl;
    }
  };
  const std::string api_pattern = R"(/api(/.*)?)";
  srv.Get(api_pattern, dispatch);
  srv.Post(api_pattern, dispatch);
  if (web_dir) srv.set_mount_point("/", web_dir->string());
}

HttpServer::~HttpServer() { stop(); }

bool HttpServer::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }

int HttpServer::bind_to_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }

bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace qq::service
