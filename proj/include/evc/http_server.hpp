#pragma once

#include <memory>
#include <string>
#include <thread>

#include "evc/service.hpp"

namespace httplib {
class Server;
}

namespace evc {

/// HTTP front end for SessionService, optionally serving static files from `static_dir`.
class HttpServer {
 public:
  explicit HttpServer(SessionService& service, std::string static_dir = {});
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds and serves on a background thread. Port 0 picks a free port; returns the bound port.
  int start(const std::string& host, int port);
  /// Binds and serves on the calling thread until stop().
  bool listen(const std::string& host, int port);
  void stop();

 private:
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

}  // namespace evc
