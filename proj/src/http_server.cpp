#include "evc/http_server.hpp"

#include <httplib.h>

#include <iostream>

namespace evc {

HttpServer::HttpServer(SessionService& service, std::string static_dir) : server_(std::make_unique<httplib::Server>()) {
  auto dispatch = [&service](const httplib::Request& req, httplib::Response& res) {
    ServiceResponse r = service.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server_->Post("/api/session", dispatch);
  server_->Post(R"(/api/session/[^/]+/attack)", dispatch);
  server_->Get(R"(/api/session/[^/]+)", dispatch);
  server_->Delete(R"(/api/session/[^/]+)", dispatch);
  if (!static_dir.empty() && !server_->set_mount_point("/", static_dir))
    std::cerr << "evc: static directory '" << static_dir << "' not found, serving the API only\n";
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start(const std::string& host, int port) {
  int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
  if (bound < 0) return -1;
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return bound;
}

bool HttpServer::listen(const std::string& host, int port) { return server_->listen(host, port); }

void HttpServer::stop() {
  server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace evc
