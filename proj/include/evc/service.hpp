#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include <json.hpp>

#include "evc/defense.hpp"
#include "evc/limits.hpp"

namespace evc {

struct ServiceResponse {
  int status = 200;
  nlohmann::json body;
};

/// Transport-independent session API behind the HTTP server.
///
///   POST   /api/session              graph JSON, {"graph": ...} or {"builtin": name}
///   POST   /api/session/{id}/attack  {"edge": [u, v]}
///   GET    /api/session/{id}
///   DELETE /api/session/{id}
///
/// Sessions are independent; attacks on one session are serialized by its own mutex.
class SessionService {
 public:
  explicit SessionService(SolverLimits limits = {}) : limits_(limits) {}

  ServiceResponse handle(const std::string& method, const std::string& path, const std::string& body);

  ServiceResponse create(const std::string& body);
  ServiceResponse attack(const std::string& id, const std::string& body);
  ServiceResponse get(const std::string& id);
  ServiceResponse remove(const std::string& id);

  std::size_t session_count() const;

 private:
  struct Entry {
    explicit Entry(DefenseSession s) : session(std::move(s)) {}

    std::mutex mutex;
    DefenseSession session;
    nlohmann::json evc_bound;
    std::string verdict;
  };

  std::shared_ptr<Entry> lookup(const std::string& id) const;
  nlohmann::json state_json(const std::string& id, const Entry& e) const;

  SolverLimits limits_;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  unsigned long long next_id_ = 1;
};

}  // namespace evc
